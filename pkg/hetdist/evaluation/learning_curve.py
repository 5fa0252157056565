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
import math
from typing import Dict, List, Sequence

import numpy as np
from pydantic import BaseModel

from hetdist.core.exceptions import InvalidParameter
from hetdist.dataset import Dataset
from hetdist.evaluation.cross_validation import fold_accuracy, mean_accuracy, run_folds, unique_kinds
from hetdist.evaluation.folds import FoldPlan
from hetdist.metrics import MetricKind
from hetdist.vdm import DiscretizationConfig

_log = logging.getLogger(__name__)


class LearningCurve(BaseModel):
    metrics: List[str]
    percentages: List[float]
    # per metric, mean accuracy at each percentage; None where a fold had no training instance left
    accuracy: Dict[str, List[float | None]]
    seed: int


def subsample_size(train_size: int, percentage: float) -> int:
    # tolerance keeps e.g. 100% of 135 from rounding down
    return min(train_size, math.floor(train_size * percentage / 100 + 1e-9))


def nested_samples(train_indices: np.ndarray, percentages: Sequence[float], seed: int, fold: int) -> Dict[float, np.ndarray]:
    """
    Training subsample per percentage. Every sample is a prefix of one seeded permutation
    of the fold, so smaller samples are contained in larger ones; within a sample the
    fold's training order is kept.
    """
    order = np.random.default_rng([seed, fold]).permutation(len(train_indices))
    return {p: train_indices[np.sort(order[: subsample_size(len(train_indices), p)])] for p in percentages}


def learning_curve(
    data: Dataset,
    kinds: Sequence[MetricKind],
    percentages: Sequence[float],
    plan: FoldPlan,
    seed: int = 0,
    k: int = 1,
    config: DiscretizationConfig = None,
    workers: int = 1,
) -> LearningCurve:
    """
    Accuracy when each training fold is cut down to p% of its instances. Samples are
    nested: the sample for a smaller p is a subset of the one for a larger p, and the
    fold's training order is kept so 100% reproduces cross_validate exactly.
    """
    for p in percentages:
        if not 0 < p <= 100:
            raise InvalidParameter(f"percentages must be in (0, 100], got {p}")
    kinds = unique_kinds(kinds)
    names = [kind.name for kind in kinds]

    def task(fold: int) -> Dict[float, Dict[str, float] | None]:
        train_indices = plan.train_indices(fold)
        test_indices = plan.test_indices(fold)
        cells = {}
        for p, sample in nested_samples(train_indices, percentages, seed, fold).items():
            size = len(sample)
            if size == 0:
                cells[p] = None
                continue
            if size < k:
                _log.debug(f"==> Fold {fold} at {p}% keeps {size} instances, k lowered from {k}")
            cells[p] = fold_accuracy(data, sample, test_indices, kinds, min(k, size), config)
        return cells

    fold_results = run_folds(task, plan.fold_count, workers, desc="learning curve")

    accuracy = {name: [] for name in names}
    for p in percentages:
        cells = [r[p] for r in fold_results]
        for name in names:
            if any(c is None for c in cells):
                accuracy[name].append(None)
            else:
                accuracy[name].append(mean_accuracy([c[name] for c in cells]))
    return LearningCurve(metrics=names, percentages=list(percentages), accuracy=accuracy, seed=seed)
