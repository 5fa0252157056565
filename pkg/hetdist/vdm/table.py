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
from typing import Dict, List, Tuple

import numpy as np

from hetdist.dataset import AttributeKind, AttributeStats, Dataset
from hetdist.vdm.discretize import UNKNOWN_BUCKET, DiscretizationConfig, discretize, interval_width, midpoint

_log = logging.getLogger(__name__)


def _bucket(kind: AttributeKind, x: float, stats: AttributeStats, s: int, width: float):
    if np.isnan(x):
        return UNKNOWN_BUCKET
    if kind is AttributeKind.CONTINUOUS:
        return discretize(x, stats, s, width)
    return float(x)


@dataclass
class AttributeVdm:
    """
    Class-conditional statistics of one attribute.

    Rows of counts follow keys, and one extra last row holds the unknown bucket. For
    continuous attributes the keys are the interval ids 1..s, for discrete attributes the
    distinct values seen in training.
    """

    kind: AttributeKind
    stats: AttributeStats
    s: int
    width: float
    keys: Tuple[float, ...]
    counts: np.ndarray
    totals: np.ndarray = field(init=False)
    probs: np.ndarray = field(init=False)
    _rows: Dict[float, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.totals = self.counts.sum(axis=1)
        self.probs = np.divide(
            self.counts,
            self.totals[:, None],
            out=np.zeros(self.counts.shape, dtype=float),
            where=self.totals[:, None] > 0,
        )
        self._rows = {k: i for i, k in enumerate(self.keys)}
        for a in (self.counts, self.totals, self.probs):
            a.flags.writeable = False

    @property
    def discretized(self) -> bool:
        return self.kind is AttributeKind.CONTINUOUS

    @property
    def class_count(self) -> int:
        return self.counts.shape[1]

    def bucket(self, x: float) -> float | int | None:
        """Discretized value of a raw attribute value (raw value itself for discrete attributes)."""
        return _bucket(self.kind, x, self.stats, self.s, self.width)

    def row(self, v) -> int | None:
        if v is UNKNOWN_BUCKET:
            return len(self.keys)
        return self._rows.get(v)

    def probabilities(self, v) -> np.ndarray:
        """P_{a,v,c} over all classes; values never seen in training get all zeros."""
        r = self.row(v)
        if r is None:
            return np.zeros(self.class_count)
        return self.probs[r]

    def lookup(self, x: float) -> np.ndarray:
        return self.probabilities(self.bucket(x))


@dataclass
class VdmTable:
    attributes: List[AttributeVdm]
    class_count: int

    def __getitem__(self, a: int) -> AttributeVdm:
        return self.attributes[a]

    def __len__(self):
        return len(self.attributes)

    @property
    def stored_values(self) -> int:
        return sum(int(t.probs.size) for t in self.attributes)


def learn_p(train: Dataset, config: DiscretizationConfig = None) -> VdmTable:
    config = config or DiscretizationConfig()
    C = train.class_count
    attributes = []
    for a, spec in enumerate(train.schema.attributes):
        stats = train.stats[a]
        column = train.values[:, a]
        if spec.kind is AttributeKind.CONTINUOUS:
            s = config.interval_count(C)
            width = interval_width(stats, s)
            keys = tuple(range(1, s + 1))
        else:
            width = 0.0
            keys = tuple(float(v) for v in np.unique(column[~np.isnan(column)]))
            s = len(keys)

        # the unknown bucket is the extra last row
        rows = {k: i for i, k in enumerate(keys)}
        counts = np.zeros((len(keys) + 1, C), dtype=int)
        for x, c in zip(column, train.classes):
            v = _bucket(spec.kind, x, stats, s, width)
            counts[len(keys) if v is UNKNOWN_BUCKET else rows[v], c] += 1

        attributes.append(AttributeVdm(kind=spec.kind, stats=stats, s=s, width=width, keys=keys, counts=counts))
        _log.debug(f"==> Learned P for attribute {spec.name}: s={s}, w={width:.6g}")
    return VdmTable(attributes=attributes, class_count=C)


def interpolate_p(x: float, table: AttributeVdm) -> np.ndarray:
    """
    Interpolated class probabilities p_{a,c}(x) of a continuous value, one entry per class.

    P is taken to hold at interval midpoints and is 0 at the virtual midpoints of
    intervals 0 and s + 1.
    """
    if np.isnan(x):
        return table.probabilities(UNKNOWN_BUCKET)
    if table.width == 0:
        return table.probabilities(1)

    u = discretize(x, table.stats, table.s, table.width)
    if x < midpoint(table.stats, table.width, u):
        u -= 1

    def at(interval):
        if interval < 1 or interval > table.s:
            return np.zeros(table.class_count)
        return table.probabilities(interval)

    lower, upper = at(u), at(u + 1)
    frac = (x - midpoint(table.stats, table.width, u)) / table.width
    return lower + min(max(frac, 0.0), 1.0) * (upper - lower)
