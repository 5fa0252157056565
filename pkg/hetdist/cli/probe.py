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
from typing import List

import click

from hetdist.cli.context import Context
from hetdist.cli.options import data_options, metric_option
from hetdist.dataset import AttributeKind, Dataset
from hetdist.metrics import MetricKind, prepare_metric, present_distance
from hetdist.vdm import LANDSCAPE_MODES, format_landscape, probability_landscape


def _single(kinds: List[MetricKind]) -> MetricKind:
    if len(kinds) != 1:
        raise click.BadParameter("exactly one metric is expected here", param_hint="--metric")
    return kinds[0]


def _instance_index(data: Dataset, index: int, hint: str) -> int:
    if not 0 <= index < data.n:
        raise click.BadParameter(f"instance {index} out of range [0, {data.n})", param_hint=hint)
    return index


def _attribute_index(data: Dataset, attr: str | None) -> int:
    continuous = data.schema.continuous_indices
    if attr is None:
        if not continuous:
            raise click.BadParameter("the dataset has no continuous attribute", param_hint="--attr")
        return continuous[0]
    names = [spec.name for spec in data.schema.attributes]
    if attr in names:
        index = names.index(attr)
    elif attr.isdigit() and int(attr) < data.m:
        index = int(attr)
    else:
        raise click.BadParameter(f"unknown attribute {attr!r}", param_hint="--attr")
    if data.schema.attributes[index].kind is not AttributeKind.CONTINUOUS:
        raise click.BadParameter(f"attribute {names[index]!r} is not continuous", param_hint="--attr")
    return index


@click.command
@data_options
@metric_option(default="hvdm")
@click.option("--from", "from_index", type=int, required=True, help="Index of the first instance.")
@click.option("--to", "to_index", type=int, required=True, help="Index of the second instance.")
@click.pass_obj
def dist(
    ctx: Context,
    data_path: Path | None,
    schema_path: Path | None,
    kinds: List[MetricKind],
    from_index: int,
    to_index: int,
    seed: int | None,
    s_override: int | None,
    out_path: Path | None,
    fmt: str,
):
    """Distance between two instances, the metric prepared on the whole dataset."""
    kind = _single(kinds)
    data = ctx.load(data_path, schema_path)
    x = data.instance(_instance_index(data, from_index, "--from"))
    y = data.instance(_instance_index(data, to_index, "--to"))
    metric = prepare_metric(data, kind, ctx.discretization(s_override))
    ctx.emit(f"{present_distance(metric.distance(x, y)):.6g}\n", out_path)


@click.command
@data_options
@metric_option(default="ivdm")
@click.option("--attr", default=None, help="Continuous attribute name or index, default the first continuous one.")
@click.option("--grid", type=click.IntRange(min=2), default=None, help="Points sampled, default 256.")
@click.pass_obj
def probmap(
    ctx: Context,
    data_path: Path | None,
    schema_path: Path | None,
    kinds: List[MetricKind],
    attr: str | None,
    grid: int | None,
    seed: int | None,
    s_override: int | None,
    out_path: Path | None,
    fmt: str,
):
    """Class probabilities of one continuous attribute sampled over its range, as CSV."""
    kind = _single(kinds)
    if kind.name not in LANDSCAPE_MODES:
        raise click.BadParameter(f"expected one of {', '.join(LANDSCAPE_MODES)}", param_hint="--metric")
    data = ctx.load(data_path, schema_path)
    a = _attribute_index(data, attr)
    metric = prepare_metric(data, kind, ctx.discretization(s_override))
    xs, probs = probability_landscape(
        metric.vdm, a, mode=kind.name, window=metric.window, grid=grid or ctx.conf.probmap.grid
    )
    ctx.emit(format_landscape(xs, probs), out_path)
