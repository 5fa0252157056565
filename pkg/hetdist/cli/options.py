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

from pathlib import Path

import click

from hetdist.core.exceptions import UnknownMetric
from hetdist.evaluation import FORMATS
from hetdist.metrics import parse_metric_names

ALL_METRICS = "euclid,heom,hvdm,dvdm,ivdm,wvdm"


def _parse_metrics(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_metric_names(value)
    except UnknownMetric as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param) from e


def _parse_percentages(ctx, param, value):
    if value is None:
        return None
    try:
        return [float(p) for p in value.split(",") if p.strip()]
    except ValueError as e:
        raise click.BadParameter(f"expected comma separated numbers, got {value!r}", ctx=ctx, param=param) from e


def metric_option(default: str):
    return click.option(
        "--metric",
        "kinds",
        default=default,
        show_default=True,
        callback=_parse_metrics,
        help="Metric name or comma separated names: euclid, heom, hvdm, hvdm-n1, hvdm-n3, dvdm, ivdm, wvdm.",
    )


k_option = click.option("--k", type=click.IntRange(min=1), default=None, help="Neighbors voting, default 1.")
folds_option = click.option("--folds", type=click.IntRange(min=2), default=None, help="Cross validation folds.")
percent_option = click.option(
    "--percent",
    "percentages",
    default=None,
    callback=_parse_percentages,
    help="Comma separated percentages of each training fold to keep.",
)


def data_options(func):
    options = [
        click.option("--data", "data_path", type=click.Path(dir_okay=False, path_type=Path), default=None),
        click.option("--schema", "schema_path", type=click.Path(dir_okay=False, path_type=Path), default=None),
        click.option("--seed", type=int, default=None, help="Random seed, default 0."),
        click.option("--s", "s_override", type=click.IntRange(min=1), default=None, help="Discretization intervals."),
        click.option("--out", "out_path", type=click.Path(dir_okay=False, path_type=Path), default=None),
        click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True),
    ]
    for option in reversed(options):
        func = option(func)
    return func
