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

import math
from typing import Sequence, Tuple

import numpy as np
from scipy import stats

from hetdist.core.exceptions import InvalidParameter

# t reported when every fold difference is the same nonzero value
T_INFINITY = math.inf

# two-tailed critical values of Student's t, df = 1..30
# fmt: off
_T_TABLE = {
    0.90: (
        6.314, 2.920, 2.353, 2.132, 2.015, 1.943, 1.895, 1.860, 1.833, 1.812,
        1.796, 1.782, 1.771, 1.761, 1.753, 1.746, 1.740, 1.734, 1.729, 1.725,
        1.721, 1.717, 1.714, 1.711, 1.708, 1.706, 1.703, 1.701, 1.699, 1.697,
    ),
    0.95: (
        12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
        2.201, 2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
        2.080, 2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042,
    ),
    0.99: (
        63.657, 9.925, 5.841, 4.604, 4.032, 3.707, 3.499, 3.355, 3.250, 3.169,
        3.106, 3.055, 3.012, 2.977, 2.947, 2.921, 2.898, 2.878, 2.861, 2.845,
        2.831, 2.819, 2.807, 2.797, 2.787, 2.779, 2.771, 2.763, 2.756, 2.750,
    ),
}
# fmt: on

_ZERO = 1e-12


def critical_value(df: int, confidence: float = 0.90) -> float:
    if df < 1:
        raise InvalidParameter(f"degrees of freedom must be positive, got {df}")
    if not 0 < confidence < 1:
        raise InvalidParameter(f"confidence must be in (0, 1), got {confidence}")
    table = _T_TABLE.get(round(confidence, 6))
    if table is not None and df <= len(table):
        return table[df - 1]
    return float(stats.t.ppf(1 - (1 - confidence) / 2, df))


def paired_t_test(acc_a: Sequence[float], acc_b: Sequence[float], confidence: float = 0.90) -> Tuple[float, bool]:
    """
    Two-tailed paired t test on per-fold accuracies. Returns (t, significant); t is
    positive when acc_a is higher on average.
    """
    if len(acc_a) != len(acc_b):
        raise InvalidParameter(f"fold count mismatch: {len(acc_a)} vs {len(acc_b)}")
    if len(acc_a) < 2:
        raise InvalidParameter("a paired t test needs at least 2 folds")

    d = np.asarray(acc_a, dtype=float) - np.asarray(acc_b, dtype=float)
    f = len(d)
    mean = float(d.mean())
    sd = float(d.std(ddof=1))
    if sd <= _ZERO:
        if abs(mean) <= _ZERO:
            return 0.0, False
        return math.copysign(T_INFINITY, mean), True

    t = mean / (sd / math.sqrt(f))
    return t, abs(t) > critical_value(f - 1, confidence)
