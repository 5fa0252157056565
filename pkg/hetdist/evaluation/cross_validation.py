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
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Dict, List, Sequence

import numpy as np
from pydantic import BaseModel, PositiveInt
from tqdm import tqdm

from hetdist.classifier import fit
from hetdist.dataset import Dataset
from hetdist.evaluation.folds import FoldPlan
from hetdist.evaluation.ttest import paired_t_test
from hetdist.metrics import MetricKind
from hetdist.vdm import DiscretizationConfig

_log = logging.getLogger(__name__)


class EvaluationConfig(BaseModel):
    folds: PositiveInt = 10
    # folds of the average attribute distance experiment
    stats_folds: PositiveInt = 5
    seed: int = 0
    confidence: float = 0.90
    workers: PositiveInt = 1
    percentages: List[float] = [1, 5, 10, 25, 50, 75, 100]


class PairComparison(BaseModel):
    first: str
    second: str
    t: float
    significant: bool


class EvalReport(BaseModel):
    metrics: List[str]
    fold_accuracies: Dict[str, List[float]]
    mean_accuracy: Dict[str, float]
    comparisons: List[PairComparison] = []
    confidence: float = 0.90
    seed: int = 0

    def comparison(self, a: str, b: str) -> PairComparison:
        for p in self.comparisons:
            if (p.first, p.second) == (a, b):
                return p
            if (p.first, p.second) == (b, a):
                return PairComparison(first=a, second=b, t=-p.t, significant=p.significant)
        raise KeyError(f"no comparison between {a} and {b}")

    def t(self, a: str, b: str) -> float:
        return self.comparison(a, b).t

    def mark(self, metric: str, baseline: str) -> str:
        """'*' when metric is significantly above baseline, '<' when significantly below."""
        if metric == baseline or not self.comparisons:
            return ""
        p = self.comparison(metric, baseline)
        if not p.significant:
            return ""
        return "*" if p.t > 0 else "<"


def mean_accuracy(accuracies: Sequence[float]) -> float:
    return float(np.mean(accuracies))


def fold_accuracy(
    data: Dataset,
    train_indices: np.ndarray,
    test_indices: np.ndarray,
    kinds: Sequence[MetricKind],
    k: int = 1,
    config: DiscretizationConfig = None,
) -> Dict[str, float]:
    """Fit every metric on the training indices and score it on the test indices."""
    train, test = data.subset(train_indices), data.subset(test_indices)
    result = {}
    for kind in kinds:
        model = fit(train, kind, config, k=k)
        predicted = model.classify_many(test)
        result[kind.name] = float(np.mean(predicted == test.classes))
    return result


def run_folds(task: Callable[[int], Dict[str, float]], fold_count: int, workers: int = 1, desc: str = "folds"):
    """Evaluate every fold, possibly on a thread pool; results come back in fold order."""
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(tqdm(executor.map(task, range(fold_count)), total=fold_count, desc=desc, disable=None))
    return [task(f) for f in tqdm(range(fold_count), desc=desc, disable=None)]


def unique_kinds(kinds: Sequence[MetricKind]) -> List[MetricKind]:
    result = []
    for kind in kinds:
        if kind not in result:
            result.append(kind)
    return result


def build_report(fold_results: List[Dict[str, float]], names: List[str], confidence: float, seed: int) -> EvalReport:
    accuracies = {name: [r[name] for r in fold_results] for name in names}
    comparisons = []
    if len(fold_results) >= 2:
        for a, b in combinations(names, 2):
            t, significant = paired_t_test(accuracies[a], accuracies[b], confidence)
            comparisons.append(PairComparison(first=a, second=b, t=t, significant=significant))
    return EvalReport(
        metrics=names,
        fold_accuracies=accuracies,
        mean_accuracy={name: mean_accuracy(acc) for name, acc in accuracies.items()},
        comparisons=comparisons,
        confidence=confidence,
        seed=seed,
    )


def cross_validate(
    data: Dataset,
    kinds: Sequence[MetricKind],
    plan: FoldPlan,
    k: int = 1,
    config: DiscretizationConfig = None,
    confidence: float = 0.90,
    workers: int = 1,
) -> EvalReport:
    """
    Every metric sees the same splits: for each fold, fit on the complement and
    classify the fold.
    """
    kinds = unique_kinds(kinds)
    names = [kind.name for kind in kinds]
    _log.info(f"Cross validating {', '.join(names)} on {data.n} instances with {plan.fold_count} folds, k={k}")

    def task(fold: int) -> Dict[str, float]:
        return fold_accuracy(data, plan.train_indices(fold), plan.test_indices(fold), kinds, k, config)

    fold_results = run_folds(task, plan.fold_count, workers)
    report = build_report(fold_results, names, confidence, plan.seed)
    for name in names:
        _log.info(f"{name} mean accuracy {report.mean_accuracy[name]:.4f}")
    return report
