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

from typing import Tuple

import numpy as np
from pydantic import BaseModel, Field

from hetdist.core.exceptions import InvalidParameter
from hetdist.vdm.table import VdmTable, interpolate_p
from hetdist.vdm.window import WindowTable, wvdm_find_p

LANDSCAPE_MODES = ("dvdm", "ivdm", "wvdm")
DEFAULT_GRID = 256


class ProbMapConfig(BaseModel):
    grid: int = Field(default=DEFAULT_GRID, ge=2)


def probability_landscape(
    vdm: VdmTable,
    a: int,
    mode: str = "ivdm",
    window: WindowTable = None,
    grid: int = DEFAULT_GRID,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Sample the class probabilities of continuous attribute a on a uniform grid over
    [min_a - w_a, max_a + w_a]. Returns the grid and a (grid, C) array.
    """
    if mode not in LANDSCAPE_MODES:
        raise InvalidParameter(f"probability landscape mode must be one of {LANDSCAPE_MODES}, got {mode!r}")
    if grid < 2:
        raise InvalidParameter(f"grid must hold at least 2 points, got {grid}")
    table = vdm[a]
    if not table.discretized:
        raise InvalidParameter(f"attribute {a} is not continuous")
    if mode == "wvdm" and (window is None or a not in window):
        raise InvalidParameter(f"no window table learned for attribute {a}")

    xs = np.linspace(table.stats.min_a - table.width, table.stats.max_a + table.width, grid)
    if mode == "dvdm":
        probs = [table.lookup(x) for x in xs]
    elif mode == "ivdm":
        probs = [interpolate_p(x, table) for x in xs]
    else:
        probs = [wvdm_find_p(x, window[a]) for x in xs]
    return xs, np.array(probs).reshape(grid, vdm.class_count)


def format_landscape(xs: np.ndarray, probs: np.ndarray) -> str:
    return "".join(",".join(f"{v:.6f}" for v in (x, *row)) + "\n" for x, row in zip(xs, probs))
