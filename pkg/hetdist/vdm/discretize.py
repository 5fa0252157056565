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

from pydantic import BaseModel, PositiveInt

from hetdist.dataset import AttributeStats

# discretized value reserved for unknown inputs, treated as one more discrete value
UNKNOWN_BUCKET = None

MIN_INTERVALS = 5


class DiscretizationConfig(BaseModel):
    # absent -> max(5, C)
    s_override: PositiveInt | None = None

    def interval_count(self, class_count: int) -> int:
        if self.s_override is not None:
            return self.s_override
        return max(MIN_INTERVALS, class_count)


def interval_width(stats: AttributeStats, s: int) -> float:
    if stats.max_a == stats.min_a:
        return 0.0
    return abs(stats.max_a - stats.min_a) / s


def discretize(x: float | None, stats: AttributeStats, s: int, width: float) -> int | None:
    """
    Equal-width interval id in [1, s] of a continuous value.

    Values outside the training range clamp to the first or last interval.
    """
    if x is None or math.isnan(x):
        return UNKNOWN_BUCKET
    if width == 0:
        return 1
    if x >= stats.max_a:
        return s
    v = math.floor((x - stats.min_a) / width) + 1
    return min(max(v, 1), s)


def midpoint(stats: AttributeStats, width: float, u: int) -> float:
    # u - 0.5 locates the centre of interval u; u = 0 and u = s + 1 are virtual outer intervals
    return stats.min_a + width * (u - 0.5)
