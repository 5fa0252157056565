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
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass
from typing import Dict, List

import numpy as np
from pydantic import BaseModel

from hetdist.core.exceptions import EmptyTrainingSet, SchemaMismatch
from hetdist.dataset import AttributeKind, AttributeStats, Dataset, Instance, Schema
from hetdist.metrics.kernels import normalized_diff, normalized_vdm, overlap, rn_diff, sigma_diff, vdm_a
from hetdist.metrics.kinds import MetricKind, MetricTag, parse_metric_name
from hetdist.vdm import DiscretizationConfig, VdmTable, WindowTable, interpolate_p, learn_p, learn_wvdm, wvdm_find_p

_log = logging.getLogger(__name__)


class StorageFootprint(BaseModel):
    """Values a prepared metric keeps in memory besides its parameters."""

    instance_values: int
    probability_values: int

    @property
    def total(self) -> int:
        return self.instance_values + self.probability_values


@dataclass
class Encoded:
    """
    Instances as a metric compares them: raw values (n, m) and, for metrics backed by
    class probabilities, one probability vector per attribute (n, m, C).
    """

    values: np.ndarray
    probs: np.ndarray | None = None

    def __getitem__(self, i) -> "Encoded":
        return Encoded(self.values[i], None if self.probs is None else self.probs[i])

    def __len__(self):
        return len(self.values)


class PreparedMetric(metaclass=ABCMeta):
    """
    A distance function bound to the statistics of one training set.

    Every distance is reported in squared-sum form: the sum over attributes of the
    squared attribute distance. Implementations register themselves by tag.
    """

    _tag: MetricTag = None
    _metrics: Dict[MetricTag, type] = {}

    def __init__(
        self,
        kind: MetricKind,
        schema: Schema,
        stats: List[AttributeStats],
        n: int,
        vdm: VdmTable = None,
        window: WindowTable = None,
    ):
        self.kind = kind
        self.schema = schema
        self.stats = stats
        self.n = n
        self.vdm = vdm
        self.window = window
        self._kinds = np.array([k.value for k in schema.kinds])
        self._nominal = self._kinds == AttributeKind.NOMINAL.value
        self._sigma = np.array([s.sigma_a for s in stats], dtype=float)
        self._range = np.array([s.range_a for s in stats], dtype=float)

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls._tag is not None:
            cls._metrics[cls._tag] = cls

    @staticmethod
    def get_metric(tag: MetricTag) -> type:
        if tag not in PreparedMetric._metrics:
            raise ValueError(f"Metric {tag} not found")
        return PreparedMetric._metrics[tag]

    @classmethod
    def prepare(cls, train: Dataset, kind: MetricKind, config: DiscretizationConfig) -> "PreparedMetric":
        return cls(kind, train.schema, train.stats, train.n)

    @property
    def m(self) -> int:
        return self.schema.m

    def encode(self, values: np.ndarray) -> Encoded:
        return Encoded(np.asarray(values, dtype=float).reshape(-1, self.m))

    @abstractmethod
    def contributions(self, x: Encoded, ys: Encoded) -> np.ndarray:
        """Squared attribute distances between one encoded instance and n others, shape (n, m)."""
        pass

    def _check(self, instance: Instance):
        if len(instance.values) != self.m:
            raise SchemaMismatch(f"instance has {len(instance.values)} values, metric expects m={self.m}")

    def attribute_distances(self, x: Instance, y: Instance) -> np.ndarray:
        self._check(x)
        self._check(y)
        return self.contributions(self.encode(x.values)[0], self.encode(y.values))[0]

    def distance(self, x: Instance, y: Instance) -> float:
        return float(self.attribute_distances(x, y).sum())

    def distances(self, x: Instance, ys: Encoded) -> np.ndarray:
        """Squared-sum distances from x to every encoded instance, shape (n,)."""
        self._check(x)
        return self.contributions(self.encode(x.values)[0], ys).sum(axis=1)

    def storage(self) -> StorageFootprint:
        return StorageFootprint(instance_values=self.n * self.m, probability_values=0)

    @staticmethod
    def _unknown(x: Encoded, ys: Encoded) -> np.ndarray:
        return np.isnan(x.values)[None, :] | np.isnan(ys.values)


class EuclideanSigma(PreparedMetric):
    """|x - y| / sigma on every attribute, nominal codes included."""

    _tag = MetricTag.EUCLIDEAN_SIGMA

    def contributions(self, x: Encoded, ys: Encoded) -> np.ndarray:
        d = sigma_diff(x.values[None, :], ys.values, self._sigma)
        return np.where(self._unknown(x, ys), 1.0, d**2)


class Heom(PreparedMetric):
    """Range-normalized difference on linear attributes, overlap on nominal ones."""

    _tag = MetricTag.HEOM

    def contributions(self, x: Encoded, ys: Encoded) -> np.ndarray:
        xs = x.values[None, :]
        d = np.where(self._nominal[None, :], overlap(xs, ys.values), rn_diff(xs, ys.values, self._range))
        return np.where(self._unknown(x, ys), 1.0, d**2)


class VdmBacked(PreparedMetric):
    """Metrics comparing per-attribute class probability vectors."""

    @classmethod
    def prepare(cls, train: Dataset, kind: MetricKind, config: DiscretizationConfig) -> "PreparedMetric":
        return cls(kind, train.schema, train.stats, train.n, vdm=learn_p(train, config))

    @abstractmethod
    def probability(self, a: int, x: float) -> np.ndarray:
        pass

    def _probability_attributes(self) -> List[int]:
        return list(range(self.m))

    def encode(self, values: np.ndarray) -> Encoded:
        encoded = super().encode(values)
        probs = np.zeros((len(encoded), self.m, self.vdm.class_count))
        for a in self._probability_attributes():
            for i, x in enumerate(encoded.values[:, a]):
                probs[i, a] = self.probability(a, x)
        encoded.probs = probs
        return encoded

    @staticmethod
    def _squared_differences(x: Encoded, ys: Encoded) -> np.ndarray:
        return vdm_a(x.probs[None, :, :], ys.probs)

    def storage(self) -> StorageFootprint:
        stored = sum(int(self.vdm[a].probs.size) for a in self._probability_attributes())
        return StorageFootprint(instance_values=self.n * self.m, probability_values=stored)


class Hvdm(VdmBacked):
    """
    Linear attributes: |x - y| / 4 sigma. Nominal attributes: normalized vdm in the
    configured variant. Unknown on either side is distance 1.
    """

    _tag = MetricTag.HVDM

    def _probability_attributes(self) -> List[int]:
        return self.schema.nominal_indices

    def probability(self, a: int, x: float) -> np.ndarray:
        return self.vdm[a].lookup(x)

    def _nominal_contributions(self, x: Encoded, ys: Encoded) -> np.ndarray:
        # squared form: N2 never takes the root
        return normalized_vdm(x.probs[None, :, :], ys.probs, self.kind.hvdm_norm, self.vdm.class_count, squared=True)

    def contributions(self, x: Encoded, ys: Encoded) -> np.ndarray:
        linear = normalized_diff(x.values[None, :], ys.values, self._sigma) ** 2
        d = np.where(self._nominal[None, :], self._nominal_contributions(x, ys), linear)
        return np.where(self._unknown(x, ys), 1.0, d)


class VdmFamily(VdmBacked):
    """
    Every attribute is compared through class probabilities; an attribute contributes
    sum_c (P_x,c - P_y,c)^2 and contributions are summed without a second square.
    Unknown values use the unknown bucket of the learned table.
    """

    def contributions(self, x: Encoded, ys: Encoded) -> np.ndarray:
        return self._squared_differences(x, ys)

    def _continuous_probability(self, a: int, x: float) -> np.ndarray:
        return self.vdm[a].lookup(x)

    def probability(self, a: int, x: float) -> np.ndarray:
        if self.vdm[a].discretized and not np.isnan(x):
            return self._continuous_probability(a, x)
        return self.vdm[a].lookup(x)


class Dvdm(VdmFamily):
    _tag = MetricTag.DVDM


class Ivdm(VdmFamily):
    _tag = MetricTag.IVDM

    def _continuous_probability(self, a: int, x: float) -> np.ndarray:
        return interpolate_p(x, self.vdm[a])


class Wvdm(VdmFamily):
    _tag = MetricTag.WVDM

    @classmethod
    def prepare(cls, train: Dataset, kind: MetricKind, config: DiscretizationConfig) -> "PreparedMetric":
        return cls(kind, train.schema, train.stats, train.n, vdm=learn_p(train, config), window=learn_wvdm(train, config))

    def _continuous_probability(self, a: int, x: float) -> np.ndarray:
        return wvdm_find_p(x, self.window[a])

    def storage(self) -> StorageFootprint:
        discrete = sum(int(self.vdm[a].probs.size) for a in range(self.m) if a not in self.window)
        # continuous attributes keep one unknown-bucket row of the vdm table besides their windows
        buckets = len(self.window) * self.vdm.class_count
        return StorageFootprint(
            instance_values=self.n * self.m,
            probability_values=discrete + buckets + self.window.stored_values,
        )


def prepare_metric(train: Dataset, kind: MetricKind | str, config: DiscretizationConfig = None) -> PreparedMetric:
    if isinstance(kind, str):
        kind = parse_metric_name(kind)
    if train.n == 0:
        raise EmptyTrainingSet("cannot prepare a metric on an empty training set")
    metric = PreparedMetric.get_metric(kind.tag).prepare(train, kind, config or DiscretizationConfig())
    _log.debug(f"==> Prepared {kind} on {train.n} instances, storage={metric.storage().total}")
    return metric


def distance(metric: PreparedMetric, x: Instance, y: Instance) -> float:
    return metric.distance(x, y)
