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
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, PositiveInt

from hetdist.core.exceptions import EmptyTrainingSet, InvalidParameter
from hetdist.dataset import Dataset, Instance
from hetdist.metrics import Encoded, MetricKind, PreparedMetric, prepare_metric
from hetdist.vdm import DiscretizationConfig

_log = logging.getLogger(__name__)


class ClassifierConfig(BaseModel):
    k: PositiveInt = 1


@dataclass
class Model:
    """A fitted k-nearest-neighbor classifier. Immutable once built."""

    train: Dataset
    metric: PreparedMetric
    k: int = 1
    encoded: Encoded = field(init=False, repr=False)

    def __post_init__(self):
        if not 1 <= self.k <= self.train.n:
            raise InvalidParameter(f"k must be in [1, {self.train.n}], got {self.k}")
        # training instances recall their stored probabilities instead of recomputing them per query
        self.encoded = self.metric.encode(self.train.values)

    def nearest(self, query: Instance, count: int) -> List[Tuple[int, float]]:
        """
        The count closest training instances as (index, squared distance), ascending by
        distance with ties going to the lower training index.
        """
        if not 1 <= count <= self.train.n:
            raise InvalidParameter(f"count must be in [1, {self.train.n}], got {count}")
        distances = self.metric.distances(query, self.encoded)
        order = np.argsort(distances, kind="stable")[:count]
        return [(int(i), float(distances[i])) for i in order]

    def classify(self, query: Instance) -> int:
        """
        Majority vote over the k nearest neighbors. Among classes tied on votes the one
        owning the nearest neighbor wins.
        """
        ranked = self.nearest(query, self.k)
        neighbor_classes = [int(self.train.classes[i]) for i, _ in ranked]
        votes = np.bincount(neighbor_classes, minlength=self.train.class_count)
        tied = set(np.flatnonzero(votes == votes.max()).tolist())
        return next(c for c in neighbor_classes if c in tied)

    def classify_many(self, queries: Dataset) -> np.ndarray:
        return np.array([self.classify(q) for q in queries.instances], dtype=int)


def fit(train: Dataset, kind: MetricKind | str, config: DiscretizationConfig = None, k: int = 1) -> Model:
    if train.n == 0:
        raise EmptyTrainingSet("cannot fit on an empty training set")
    return Model(train=train, metric=prepare_metric(train, kind, config), k=k)


def nearest(model: Model, query: Instance, count: int) -> List[Tuple[int, float]]:
    return model.nearest(query, count)


def classify(model: Model, query: Instance) -> int:
    return model.classify(query)
