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
from dataclasses import dataclass
from typing import Dict

import numpy as np

from hetdist.dataset import Dataset
from hetdist.vdm.discretize import DiscretizationConfig, interval_width

_log = logging.getLogger(__name__)


@dataclass
class AttributeWindow:
    # distinct known training values, strictly ascending
    values: np.ndarray
    # (k, C) class probabilities of the window centred on each value
    probs: np.ndarray
    width: float
    min_a: float
    max_a: float

    @property
    def class_count(self) -> int:
        return self.probs.shape[1]

    def __len__(self):
        return len(self.values)


@dataclass
class WindowTable:
    attributes: Dict[int, AttributeWindow]
    class_count: int

    def __getitem__(self, a: int) -> AttributeWindow:
        return self.attributes[a]

    def __contains__(self, a: int) -> bool:
        return a in self.attributes

    def __len__(self):
        return len(self.attributes)

    @property
    def stored_values(self) -> int:
        return sum(int(w.probs.size + w.values.size) for w in self.attributes.values())


def _sweep(xs: np.ndarray, cs: np.ndarray, width: float, class_count: int):
    """Slide a [x - w/2, x + w/2) window over sorted values, one step per instance."""
    n = len(xs)
    half = width / 2
    counts = np.zeros(class_count, dtype=int)
    total = 0
    lo = hi = 0
    values, probs = [], []
    for i in range(n):
        x = xs[i]
        # xs[hi] <= x keeps the centre inside a zero-width window
        while hi < n and (xs[hi] < x + half or xs[hi] <= x):
            counts[cs[hi]] += 1
            total += 1
            hi += 1
        while lo < hi and xs[lo] < x - half:
            counts[cs[lo]] -= 1
            total -= 1
            lo += 1
        if i > 0 and x == xs[i - 1]:
            continue
        values.append(x)
        probs.append(counts / total)
    return np.array(values, dtype=float), np.array(probs, dtype=float).reshape(len(values), class_count)


def learn_wvdm(train: Dataset, config: DiscretizationConfig = None) -> WindowTable:
    config = config or DiscretizationConfig()
    C = train.class_count
    s = config.interval_count(C)
    attributes = {}
    for a in train.schema.continuous_indices:
        stats = train.stats[a]
        column = train.values[:, a]
        known = ~np.isnan(column)
        order = np.argsort(column[known], kind="stable")
        xs, cs = column[known][order], train.classes[known][order]

        width = interval_width(stats, s)
        values, probs = _sweep(xs, cs, width, C)
        values.flags.writeable = False
        probs.flags.writeable = False
        attributes[a] = AttributeWindow(values=values, probs=probs, width=width, min_a=stats.min_a, max_a=stats.max_a)
        _log.debug(f"==> Learned {len(values)} windows for attribute {train.schema.attributes[a].name}, w={width:.6g}")
    return WindowTable(attributes=attributes, class_count=C)


def wvdm_find_p(x: float, window: AttributeWindow) -> np.ndarray:
    """
    Windowed class probabilities of a continuous value.

    Stored values return their own vector; other values interpolate between the two
    surrounding stored values, sloping to 0 at min_a - w/2 and max_a + w/2.
    """
    k = len(window)
    C = window.class_count
    if k == 0:
        return np.zeros(C)
    if window.width == 0:
        return window.probs[0]

    i = int(np.searchsorted(window.values, x, side="left"))
    if i < k and window.values[i] == x:
        return window.probs[i]

    half = window.width / 2
    if i == 0:
        x1, p1 = window.min_a - half, np.zeros(C)
    else:
        x1, p1 = window.values[i - 1], window.probs[i - 1]
    if i == k:
        x2, p2 = window.max_a + half, np.zeros(C)
    else:
        x2, p2 = window.values[i], window.probs[i]

    frac = min(max((x - x1) / (x2 - x1), 0.0), 1.0)
    return p1 + frac * (p2 - p1)
