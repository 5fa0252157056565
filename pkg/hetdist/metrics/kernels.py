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

import numpy as np

from hetdist.core.exceptions import InvalidParameter
from hetdist.metrics.kinds import HvdmNorm


def _out(result):
    result = np.asarray(result, dtype=float)
    return float(result) if result.ndim == 0 else result


def _degenerate_div(diff, scale):
    # zero normalizer: 0 if equal else 1
    diff = np.asarray(diff, dtype=float)
    scale = np.broadcast_to(np.asarray(scale, dtype=float), diff.shape)
    out = np.asarray(diff != 0, dtype=float)
    return np.divide(diff, scale, out=out, where=scale > 0)


def vdm_a(p_x, p_y):
    """Sum over classes of squared probability differences, the last axis being classes."""
    delta = np.asarray(p_x, dtype=float) - np.asarray(p_y, dtype=float)
    return _out((delta**2).sum(axis=-1))


def normalized_vdm(p_x, p_y, variant: HvdmNorm = HvdmNorm.N2, class_count: int = None, squared: bool = False):
    """
    N1 = sum |d|, N2 = sqrt(sum d^2), N3 = sqrt(C * sum d^2).

    squared=True returns the square of the chosen form, and for N2 skips the root
    altogether so the result is exactly vdm_a.
    """
    delta = np.asarray(p_x, dtype=float) - np.asarray(p_y, dtype=float)
    variant = HvdmNorm(variant)
    if variant is HvdmNorm.N1:
        d = np.abs(delta).sum(axis=-1)
        return _out(d**2 if squared else d)

    sq = (delta**2).sum(axis=-1)
    if variant is HvdmNorm.N3:
        sq = (class_count or delta.shape[-1]) * sq
    return _out(sq if squared else np.sqrt(sq))


def overlap(x, y):
    return _out(np.asarray(x) != np.asarray(y))


def rn_diff(x, y, range_a):
    return _out(_degenerate_div(np.abs(np.asarray(x, dtype=float) - y), range_a))


def normalized_diff(x, y, sigma_a):
    return _out(_degenerate_div(np.abs(np.asarray(x, dtype=float) - y), 4 * np.asarray(sigma_a, dtype=float)))


def sigma_diff(x, y, sigma_a):
    return _out(_degenerate_div(np.abs(np.asarray(x, dtype=float) - y), sigma_a))


def present_distance(d_squared_sum: float) -> float:
    if d_squared_sum < 0:
        raise InvalidParameter(f"distance must be non-negative, got {d_squared_sum}")
    return math.sqrt(d_squared_sum)
