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

from typing import Dict

from hetdist.dataset import Schema
from hetdist.evaluation.attribute_distance import AttributeDistanceReport
from hetdist.evaluation.cross_validation import EvalReport
from hetdist.evaluation.learning_curve import LearningCurve
from hetdist.metrics import HvdmNorm
from hetdist.utils import format_csv, format_table, percent

TEXT = "text"
CSV = "csv"
FORMATS = (TEXT, CSV)


def _t(value: float) -> str:
    return f"{value:.3f}"


def format_report(report: EvalReport, baseline: str | None = None, fmt: str = TEXT) -> str:
    """
    Accuracy table with metrics as columns. With a baseline, means significantly above
    it carry '*' and means significantly below it carry '<'.
    """
    names = report.metrics
    if fmt == CSV:
        folds = len(report.fold_accuracies[names[0]])
        header = ["metric", "mean", "t", "significant", "mark"] + [f"fold_{i + 1}" for i in range(folds)]
        rows = []
        for name in names:
            compared = baseline is not None and name != baseline and bool(report.comparisons)
            t = _t(report.t(name, baseline)) if compared else ""
            significant = str(report.comparison(name, baseline).significant).lower() if compared else ""
            mark = report.mark(name, baseline) if baseline else ""
            accs = [f"{a:.6f}" for a in report.fold_accuracies[name]]
            rows.append([name, f"{report.mean_accuracy[name]:.6f}", t, significant, mark, *accs])
        return format_csv(header, rows)

    folds = len(report.fold_accuracies[names[0]])
    rows = [[f"fold {i + 1}"] + [percent(report.fold_accuracies[n][i]) for n in names] for i in range(folds)]
    rows.append(
        ["mean"] + [percent(report.mean_accuracy[n]) + (report.mark(n, baseline) if baseline else "") for n in names]
    )
    text = format_table(["accuracy"] + names, rows)
    if baseline is not None and report.comparisons:
        confidence = f"{100 * report.confidence:.0f}%"
        text += f"\nt vs {baseline} (two-tailed paired, {confidence}):\n"
        pairs = []
        for n in names:
            if n == baseline:
                continue
            p = report.comparison(n, baseline)
            pairs.append([n, _t(p.t), "yes" if p.significant else "no"])
        text += format_table(["metric", "t", "significant"], pairs)
    return text


def format_attribute_distances(schema: Schema, reports: Dict[HvdmNorm, AttributeDistanceReport], fmt: str = TEXT) -> str:
    norms = list(reports)
    first = reports[norms[0]]

    def value(v: float | None) -> str:
        return "-" if v is None else f"{v:.4f}"

    summary_header = ["avgLin"] + [f"{n.value} avgNom" for n in norms] + ["#Nom", "#Lin", "#C"]
    summary = [value(first.avg_lin)] + [value(reports[n].avg_nom) for n in norms]
    summary += [str(first.nominal_count), str(first.linear_count), str(first.class_count)]

    attr_header = ["attribute", "kind"] + [n.value for n in norms]
    attr_rows = [
        [spec.name, spec.kind.value] + [value(reports[n].per_attribute[a]) for n in norms]
        for a, spec in enumerate(schema.attributes)
    ]
    if fmt == CSV:
        return format_csv(summary_header, [summary]) + "\n" + format_csv(attr_header, attr_rows)
    return format_table(summary_header, [summary]) + "\n" + format_table(attr_header, attr_rows)


def format_learning_curve(curve: LearningCurve, fmt: str = TEXT) -> str:
    header = ["percent"] + curve.metrics
    if fmt == CSV:
        rows = [
            [f"{p:g}"] + ["" if curve.accuracy[n][i] is None else f"{curve.accuracy[n][i]:.6f}" for n in curve.metrics]
            for i, p in enumerate(curve.percentages)
        ]
        return format_csv(header, rows)
    rows = [[f"{p:g}"] + [percent(curve.accuracy[n][i]) for n in curve.metrics] for i, p in enumerate(curve.percentages)]
    return format_table(header, rows)
