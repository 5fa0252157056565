# Copyright 2024 The hetdist Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging
from typing import Dict, List

import numpy as np
from pydantic import BaseModel

from hetdist.dataset import Dataset
from hetdist.evaluation.folds import FoldPlan
from hetdist.metrics import HvdmNorm, MetricKind, MetricTag, prepare_metric
from hetdist.vdm import DiscretizationConfig

_log = logging.getLogger(__name__)


class AttributeDistanceReport(BaseModel):
    norm: HvdmNorm
    # mean distance per attribute over every (test, train) comparison
    per_attribute: List[float]
    avg_lin: float | None = None
    avg_nom: float | None = None
    linear_count: int
    nominal_count: int
    class_count: int
    comparisons: int


def _average(values: List[float]) -> float | None:
    return float(np.mean(values)) if values else None


def avg_attribute_distance(
    data: Dataset,
    plan: FoldPlan,
    norm: HvdmNorm = HvdmNorm.N2,
    config: DiscretizationConfig = None,
) -> AttributeDistanceReport:
    """
    Average unsquared attribute distance under hvdm: normalized_diff on linear attributes
    and the chosen normalized vdm on nominal ones, over every test/train pair of every fold.
    """
    kind = MetricKind(tag=MetricTag.HVDM, hvdm_norm=norm)
    totals = np.zeros(data.m)
    comparisons = 0
    for fold in range(plan.fold_count):
        train = data.subset(plan.train_indices(fold))
        test = data.subset(plan.test_indices(fold))
        metric = prepare_metric(train, kind, config)
        encoded = metric.encode(train.values)
        for query in test.instances:
            totals += np.sqrt(metric.contributions(metric.encode(query.values)[0], encoded)).sum(axis=0)
            comparisons += train.n

    per_attribute = (totals / comparisons).tolist() if comparisons else [0.0] * data.m
    schema = data.schema
    report = AttributeDistanceReport(
        norm=norm,
        per_attribute=per_attribute,
        avg_lin=_average([per_attribute[a] for a in schema.linear_indices]),
        avg_nom=_average([per_attribute[a] for a in schema.nominal_indices]),
        linear_count=len(schema.linear_indices),
        nominal_count=len(schema.nominal_indices),
        class_count=data.class_count,
        comparisons=comparisons,
    )
    _log.info(f"{norm.value}: avgLin={report.avg_lin}, avgNom={report.avg_nom} over {comparisons} comparisons")
    return report


def avg_attribute_distances(
    data: Dataset, plan: FoldPlan, config: DiscretizationConfig = None
) -> Dict[HvdmNorm, AttributeDistanceReport]:
    return {norm: avg_attribute_distance(data, plan, norm, config) for norm in HvdmNorm}
