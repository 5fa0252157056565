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
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict

from hetdist.core.exceptions import InvalidParameter

_log = logging.getLogger(__name__)


class FoldPlan(BaseModel):
    """
    Unstratified fold assignment. assignment and permutation depend on (seed, n, fold_count) only.

    Index arrays follow the seeded permutation, not file order: a training index, and
    with it the nearest-neighbor tie break, depends on the seed.
    """

    model_config = ConfigDict(frozen=True)

    seed: int
    fold_count: int
    assignment: List[int]
    permutation: List[int]

    @property
    def n(self) -> int:
        return len(self.assignment)

    def _in_order(self, mask: np.ndarray) -> np.ndarray:
        permutation = np.asarray(self.permutation, dtype=int)
        return permutation[mask[permutation]]

    def test_indices(self, fold: int) -> np.ndarray:
        return self._in_order(np.asarray(self.assignment) == fold)

    def train_indices(self, fold: int) -> np.ndarray:
        return self._in_order(np.asarray(self.assignment) != fold)

    @property
    def sizes(self) -> List[int]:
        return np.bincount(self.assignment, minlength=self.fold_count).tolist()


def make_folds(n: int, fold_count: int = 10, seed: int = 0) -> FoldPlan:
    if fold_count < 2:
        raise InvalidParameter(f"at least 2 folds are required, got {fold_count}")
    if fold_count > n:
        raise InvalidParameter(f"cannot split {n} instances into {fold_count} folds")

    permutation = np.random.default_rng(seed).permutation(n)
    assignment = np.empty(n, dtype=int)
    assignment[permutation] = np.arange(n) % fold_count
    _log.debug(f"==> {fold_count} folds over {n} instances with seed {seed}")
    return FoldPlan(seed=seed, fold_count=fold_count, assignment=assignment.tolist(), permutation=permutation.tolist())
