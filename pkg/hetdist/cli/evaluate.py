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
from pathlib import Path
from typing import List

import click

from hetdist.cli.context import Context
from hetdist.cli.options import ALL_METRICS, data_options, folds_option, k_option, metric_option, percent_option
from hetdist.core.exceptions import UnknownMetric
from hetdist.evaluation import (
    avg_attribute_distances,
    cross_validate,
    format_attribute_distances,
    format_learning_curve,
    format_report,
    learning_curve,
    make_folds,
)
from hetdist.metrics import MetricKind, parse_metric_name

_log = logging.getLogger(__name__)


@click.command(name="eval")
@data_options
@metric_option(default="hvdm")
@k_option
@folds_option
@click.pass_obj
def evaluate(
    ctx: Context,
    data_path: Path | None,
    schema_path: Path | None,
    kinds: List[MetricKind],
    k: int | None,
    folds: int | None,
    seed: int | None,
    s_override: int | None,
    out_path: Path | None,
    fmt: str,
):
    """Cross validated kNN accuracy of one or more metrics."""
    data = ctx.load(data_path, schema_path)
    plan = make_folds(data.n, ctx.folds(folds), ctx.seed(seed))
    evaluation = ctx.conf.evaluation
    report = cross_validate(
        data,
        kinds,
        plan,
        k=ctx.k(k),
        config=ctx.discretization(s_override),
        confidence=evaluation.confidence,
        workers=evaluation.workers,
    )
    ctx.emit(format_report(report, fmt=fmt), out_path)


@click.command
@data_options
@metric_option(default=ALL_METRICS)
@click.option("--baseline", default=None, help="Metric the others are tested against, default the first one.")
@k_option
@folds_option
@click.pass_obj
def compare(
    ctx: Context,
    data_path: Path | None,
    schema_path: Path | None,
    kinds: List[MetricKind],
    baseline: str | None,
    k: int | None,
    folds: int | None,
    seed: int | None,
    s_override: int | None,
    out_path: Path | None,
    fmt: str,
):
    """Cross validate several metrics on shared folds and run paired t-tests."""
    if baseline is None:
        baseline_kind = kinds[0]
    else:
        try:
            baseline_kind = parse_metric_name(baseline)
        except UnknownMetric as e:
            raise click.BadParameter(str(e), param_hint="--baseline") from e
    if baseline_kind not in kinds:
        kinds = [baseline_kind, *kinds]

    data = ctx.load(data_path, schema_path)
    plan = make_folds(data.n, ctx.folds(folds), ctx.seed(seed))
    evaluation = ctx.conf.evaluation
    report = cross_validate(
        data,
        kinds,
        plan,
        k=ctx.k(k),
        config=ctx.discretization(s_override),
        confidence=evaluation.confidence,
        workers=evaluation.workers,
    )
    ctx.emit(format_report(report, baseline=baseline_kind.name, fmt=fmt), out_path)


@click.command
@data_options
@metric_option(default=ALL_METRICS)
@percent_option
@k_option
@folds_option
@click.pass_obj
def curve(
    ctx: Context,
    data_path: Path | None,
    schema_path: Path | None,
    kinds: List[MetricKind],
    percentages: List[float] | None,
    k: int | None,
    folds: int | None,
    seed: int | None,
    s_override: int | None,
    out_path: Path | None,
    fmt: str,
):
    """Accuracy as a function of the share of each training fold kept."""
    data = ctx.load(data_path, schema_path)
    seed = ctx.seed(seed)
    plan = make_folds(data.n, ctx.folds(folds), seed)
    result = learning_curve(
        data,
        kinds,
        percentages or ctx.conf.evaluation.percentages,
        plan,
        seed=seed,
        k=ctx.k(k),
        config=ctx.discretization(s_override),
        workers=ctx.conf.evaluation.workers,
    )
    ctx.emit(format_learning_curve(result, fmt=fmt), out_path)


@click.command
@data_options
@folds_option
@click.pass_obj
def stats(
    ctx: Context,
    data_path: Path | None,
    schema_path: Path | None,
    folds: int | None,
    seed: int | None,
    s_override: int | None,
    out_path: Path | None,
    fmt: str,
):
    """Average linear and nominal attribute distances under each hvdm normalization."""
    data = ctx.load(data_path, schema_path)
    plan = make_folds(data.n, folds or ctx.conf.evaluation.stats_folds, ctx.seed(seed))
    reports = avg_attribute_distances(data, plan, ctx.discretization(s_override))
    ctx.emit(format_attribute_distances(data.schema, reports, fmt=fmt), out_path)
