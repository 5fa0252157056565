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
import pytest
from scipy import stats

from hetdist.core.exceptions import InvalidParameter
from hetdist.dataset import AttributeKind
from hetdist.evaluation import (
    EvalReport,
    EvaluationConfig,
    PairComparison,
    avg_attribute_distance,
    avg_attribute_distances,
    critical_value,
    cross_validate,
    format_attribute_distances,
    format_learning_curve,
    format_report,
    learning_curve,
    make_folds,
    paired_t_test,
)
from hetdist.evaluation.learning_curve import nested_samples, subsample_size
from hetdist.metrics import HvdmNorm, parse_metric_names
from tests.conftest import random_dataset


def test_make_folds():
    plan = make_folds(150, 10, seed=0)
    assert plan.n == 150
    assert plan.sizes == [15] * 10

    seen = np.concatenate([plan.test_indices(f) for f in range(10)])
    assert sorted(seen.tolist()) == list(range(150))
    for f in range(10):
        assert set(plan.train_indices(f)).isdisjoint(plan.test_indices(f))
        assert len(plan.train_indices(f)) == 135


def test_make_folds_is_deterministic():
    assert make_folds(50, 5, seed=3) == make_folds(50, 5, seed=3)
    assert make_folds(50, 5, seed=3).assignment != make_folds(50, 5, seed=4).assignment


def test_make_folds_uneven():
    assert make_folds(12, 5).sizes == [3, 3, 2, 2, 2]


def test_fold_indices_follow_permutation():
    plan = make_folds(150, 10, seed=0)
    train = plan.train_indices(0)

    assert train.tolist() == [i for i in plan.permutation if plan.assignment[i] != 0]
    assert plan.test_indices(0).tolist() == [i for i in plan.permutation if plan.assignment[i] == 0]
    # seeded order, not file order
    assert train.tolist() != sorted(train.tolist())
    assert make_folds(150, 10, seed=0).train_indices(0).tolist() == train.tolist()


@pytest.mark.parametrize("n, fold_count", [(10, 1), (3, 4)])
def test_make_folds_errors(n, fold_count):
    with pytest.raises(InvalidParameter):
        make_folds(n, fold_count)


def test_critical_value():
    assert critical_value(9) == 1.833
    assert critical_value(9, 0.95) == 2.262
    assert critical_value(4, 0.99) == 4.604
    assert critical_value(60) == pytest.approx(stats.t.ppf(0.95, 60))
    assert critical_value(9, 0.80) == pytest.approx(stats.t.ppf(0.90, 9))
    with pytest.raises(InvalidParameter):
        critical_value(0)


def test_paired_t_test():
    rng = np.random.default_rng(5)
    a = rng.uniform(0.8, 0.95, size=10)
    b = a - rng.uniform(0.0, 0.04, size=10)

    t, significant = paired_t_test(a, b)
    assert t == pytest.approx(stats.ttest_rel(a, b).statistic)
    assert significant == (abs(t) > 1.833)
    assert paired_t_test(b, a)[0] == pytest.approx(-t)


def test_paired_t_test_matches_formula():
    rng = np.random.default_rng(8)
    for _ in range(100):
        folds = int(rng.integers(2, 21))
        a, b = rng.uniform(0.5, 1.0, size=folds), rng.uniform(0.5, 1.0, size=folds)
        d = a - b
        sd = math.sqrt(sum((x - d.mean()) ** 2 for x in d) / (folds - 1))
        t, significant = paired_t_test(a, b)
        assert t == pytest.approx(d.mean() / (sd / math.sqrt(folds)), rel=0, abs=1e-9)
        assert significant == (abs(t) > critical_value(folds - 1))


def test_paired_t_test_zero_variance():
    a = [0.9, 0.8, 0.85, 0.95]
    assert paired_t_test(a, a) == (0.0, False)

    t, significant = paired_t_test([x + 0.05 for x in a], a)
    assert t == math.inf
    assert significant


def test_paired_t_test_errors():
    with pytest.raises(InvalidParameter):
        paired_t_test([0.9, 0.8], [0.9])
    with pytest.raises(InvalidParameter):
        paired_t_test([0.9], [0.8])


def test_cross_validate(iris):
    kinds = parse_metric_names("euclid,ivdm")
    report = cross_validate(iris, kinds, make_folds(iris.n, 10))

    assert report.metrics == ["euclid", "ivdm"]
    assert len(report.fold_accuracies["ivdm"]) == 10
    assert all(0 <= acc <= 1 for acc in report.fold_accuracies["euclid"])
    assert report.mean_accuracy["ivdm"] == pytest.approx(np.mean(report.fold_accuracies["ivdm"]))
    assert report.mean_accuracy["ivdm"] > 0.85
    assert len(report.comparisons) == 1
    assert report.t("ivdm", "euclid") == -report.t("euclid", "ivdm")


def test_cross_validate_workers(mixed):
    kinds = parse_metric_names("heom,hvdm,wvdm")
    plan = make_folds(mixed.n, 3, seed=2)
    serial = cross_validate(mixed, kinds, plan)
    threaded = cross_validate(mixed, kinds, plan, workers=3)
    assert serial.fold_accuracies == threaded.fold_accuracies


def test_cross_validate_deduplicates_metrics(mixed):
    report = cross_validate(mixed, parse_metric_names("hvdm,heom,hvdm"), make_folds(mixed.n, 3))
    assert report.metrics == ["hvdm", "heom"]


def test_marks():
    report = EvalReport(
        metrics=["hvdm", "ivdm", "heom"],
        fold_accuracies={"hvdm": [0.9, 0.8], "ivdm": [0.95, 0.9], "heom": [0.9, 0.81]},
        mean_accuracy={"hvdm": 0.85, "ivdm": 0.925, "heom": 0.855},
        comparisons=[
            PairComparison(first="hvdm", second="ivdm", t=-3.0, significant=True),
            PairComparison(first="hvdm", second="heom", t=-0.5, significant=False),
            PairComparison(first="ivdm", second="heom", t=2.5, significant=True),
        ],
    )
    assert report.mark("ivdm", "hvdm") == "*"
    assert report.mark("hvdm", "ivdm") == "<"
    assert report.mark("heom", "hvdm") == ""
    assert report.mark("hvdm", "hvdm") == ""

    text = format_report(report, baseline="hvdm")
    assert "92.50*" in text
    assert "t vs hvdm" in text

    csv = format_report(report, baseline="hvdm", fmt="csv").splitlines()
    assert csv[0] == "metric,mean,t,significant,mark,fold_1,fold_2"
    assert csv[2].startswith("ivdm,0.925000,3.000,true,*,")


@pytest.mark.parametrize("train_size, percentage, expected", [(135, 100, 135), (135, 10, 13), (135, 1, 1), (135, 0.5, 0)])
def test_subsample_size(train_size, percentage, expected):
    assert subsample_size(train_size, percentage) == expected


def test_learning_curve_full_matches_cross_validation(iris):
    kinds = parse_metric_names("hvdm,ivdm")
    plan = make_folds(iris.n, 5, seed=1)
    curve = learning_curve(iris, kinds, [25, 100], plan, seed=1)
    report = cross_validate(iris, kinds, plan)

    assert curve.percentages == [25, 100]
    for name in ["hvdm", "ivdm"]:
        assert curve.accuracy[name][1] == report.mean_accuracy[name]
        assert 0 < curve.accuracy[name][0] <= 1


def test_learning_curve_empty_cells(mixed):
    curve = learning_curve(mixed, parse_metric_names("heom"), [1, 50], make_folds(mixed.n, 3), k=3)
    assert curve.accuracy["heom"][0] is None
    assert curve.accuracy["heom"][1] is not None
    text = format_learning_curve(curve)
    assert text.splitlines()[1].split() == ["1", "-"]


def test_learning_curve_rejects_percentages(mixed):
    with pytest.raises(InvalidParameter):
        learning_curve(mixed, parse_metric_names("heom"), [0], make_folds(mixed.n, 3))
    with pytest.raises(InvalidParameter):
        learning_curve(mixed, parse_metric_names("heom"), [120], make_folds(mixed.n, 3))


def test_avg_attribute_distance(mixed):
    plan = make_folds(mixed.n, 3)
    reports = avg_attribute_distances(mixed, plan)
    n2, n1, n3 = reports[HvdmNorm.N2], reports[HvdmNorm.N1], reports[HvdmNorm.N3]

    assert n2.comparisons == 3 * 4 * 8
    assert (n2.linear_count, n2.nominal_count, n2.class_count) == (2, 2, 2)
    # linear attributes do not depend on the normalization
    assert n1.per_attribute[:2] == n2.per_attribute[:2]
    assert n1.avg_lin == n2.avg_lin
    # color has no unknown values, so N3 is N2 scaled by sqrt(C)
    assert n3.per_attribute[2] == pytest.approx(math.sqrt(2) * n2.per_attribute[2])
    for a in (2, 3):
        assert n1.per_attribute[a] >= n2.per_attribute[a]
    assert n2.avg_nom == pytest.approx(np.mean(n2.per_attribute[2:]))

    text = format_attribute_distances(mixed.schema, reports)
    assert "avgLin" in text
    assert "#Nom" in text


def test_avg_attribute_distance_all_linear(iris):
    report = avg_attribute_distance(iris, make_folds(iris.n, 5), HvdmNorm.N2)
    assert report.avg_nom is None
    assert report.nominal_count == 0
    assert 0 < report.avg_lin < 1


def test_evaluation_config_defaults():
    conf = EvaluationConfig()
    assert (conf.folds, conf.stats_folds, conf.seed, conf.confidence) == (10, 5, 0, 0.90)
    assert conf.percentages[-1] == 100


def test_cross_validate_chance_level():
    rng = np.random.default_rng(21)
    data = random_dataset(rng, [AttributeKind.CONTINUOUS, AttributeKind.NOMINAL], n=400, class_count=2)
    report = cross_validate(data, parse_metric_names("heom,ivdm"), make_folds(data.n, 10, seed=0))
    for name in ["heom", "ivdm"]:
        assert 0.4 <= report.mean_accuracy[name] <= 0.6


def test_nested_samples():
    train = make_folds(60, 4, seed=2).train_indices(1)
    percentages = [10, 25, 50, 100]
    samples = nested_samples(train, percentages, seed=2, fold=1)

    assert [len(samples[p]) for p in percentages] == [4, 11, 22, 45]
    for small, large in zip(percentages, percentages[1:]):
        assert set(samples[small]) <= set(samples[large])
    np.testing.assert_array_equal(samples[100], train)
    positions = [train.tolist().index(i) for i in samples[25]]
    assert positions == sorted(positions)

    again = nested_samples(train, percentages, seed=2, fold=1)
    for p in percentages:
        np.testing.assert_array_equal(again[p], samples[p])
    assert set(nested_samples(train, [50], seed=3, fold=1)[50]) != set(samples[50])


def test_learning_curve_is_repeatable(mixed):
    plan = make_folds(mixed.n, 3, seed=4)
    kinds = parse_metric_names("heom,hvdm")
    first = learning_curve(mixed, kinds, [50, 100], plan, seed=4)
    assert learning_curve(mixed, kinds, [50, 100], plan, seed=4) == first


def test_learning_curve_single_instance_sample(mixed):
    plan = make_folds(mixed.n, 3)
    curve = learning_curve(mixed, parse_metric_names("heom"), [12.5], plan, seed=5, k=3)

    expected = []
    for fold in range(3):
        (only,) = nested_samples(plan.train_indices(fold), [12.5], seed=5, fold=fold)[12.5]
        test = plan.test_indices(fold)
        expected.append(np.mean(mixed.classes[test] == mixed.classes[only]))
    assert curve.accuracy["heom"][0] == pytest.approx(np.mean(expected))
