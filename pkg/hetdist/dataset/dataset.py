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
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from hetdist.constant import UNKNOWN_TOKEN
from hetdist.core.exceptions import DataFormatError, SchemaMismatch
from hetdist.dataset.schema import AttributeKind, Schema, parse_schema

_log = logging.getLogger(__name__)


class AttributeStats(BaseModel):
    """Statistics of one attribute over the known values of a training set."""

    model_config = ConfigDict(frozen=True)

    min_a: float = 0.0
    max_a: float = 0.0
    range_a: float = 0.0
    mean: float = 0.0
    # population standard deviation
    sigma_a: float = 0.0
    observed_codes: int = 0
    known: int = 0

    @property
    def degenerate(self) -> bool:
        return self.known == 0


@dataclass(frozen=True)
class Instance:
    """
    One input vector. values holds floats: numbers for linear attributes, nominal codes
    for nominal ones, and NaN for unknown. class_index is None for unlabeled queries.
    """

    values: np.ndarray
    class_index: int | None = None

    @classmethod
    def of(cls, values: Sequence[float | None], class_index: int | None = None) -> "Instance":
        return cls(
            values=np.array([np.nan if v is None else v for v in values], dtype=float),
            class_index=class_index,
        )

    def is_known(self, a: int) -> bool:
        return not math.isnan(self.values[a])


@dataclass(frozen=True)
class Dataset:
    schema: Schema
    # (n, m) encoded attribute values, NaN = unknown
    values: np.ndarray
    classes: np.ndarray
    # per attribute: nominal code -> original text, empty for numeric attributes
    nominal_values: Tuple[Tuple[str, ...], ...]
    stats: List[AttributeStats] = field(default_factory=list)

    def __post_init__(self):
        if self.values.ndim != 2 or self.values.shape[1] != self.schema.m:
            raise SchemaMismatch(f"values of shape {self.values.shape} do not match m={self.schema.m}")
        if len(self.classes) != len(self.values):
            raise SchemaMismatch("one class index is required per instance")
        self.values.flags.writeable = False
        self.classes.flags.writeable = False
        if not self.stats:
            object.__setattr__(self, "stats", _compute_stats(self.values, self.schema))

    def __len__(self):
        return len(self.values)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def m(self) -> int:
        return self.schema.m

    @property
    def class_count(self) -> int:
        return self.schema.class_count

    def instance(self, i: int) -> Instance:
        return Instance(values=self.values[i], class_index=int(self.classes[i]))

    @property
    def instances(self) -> List[Instance]:
        return [self.instance(i) for i in range(self.n)]

    def subset(self, indices: Sequence[int]) -> "Dataset":
        """Instances in the given order; statistics are recomputed over the subset only."""
        idx = np.asarray(indices, dtype=int)
        return Dataset(
            schema=self.schema,
            values=self.values[idx].copy(),
            classes=self.classes[idx].copy(),
            nominal_values=self.nominal_values,
        )


def _compute_stats(values: np.ndarray, schema: Schema) -> List[AttributeStats]:
    result = []
    for a, spec in enumerate(schema.attributes):
        column = values[:, a]
        known = column[~np.isnan(column)]
        if known.size == 0:
            _log.warning(f"Attribute {spec.name} has no known values, statistics are degenerate")
            result.append(AttributeStats())
            continue

        lo, hi = float(known.min()), float(known.max())
        # rounding can push the mean of a constant column just outside [lo, hi]
        mean = min(max(float(known.mean()), lo), hi)
        result.append(
            AttributeStats(
                min_a=lo,
                max_a=hi,
                range_a=hi - lo,
                mean=mean,
                sigma_a=float(known.std()),
                observed_codes=len(np.unique(known)) if spec.kind is AttributeKind.NOMINAL else 0,
                known=int(known.size),
            )
        )
    return result


def compute_stats(dataset: Dataset) -> List[AttributeStats]:
    """Per-attribute statistics over the known values of dataset, in schema order."""
    return _compute_stats(dataset.values, dataset.schema)


def _parse_number(token: str, lineno: int, name: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise DataFormatError(f"line {lineno}: non-numeric value {token!r} for attribute {name}") from None
    if not math.isfinite(value):
        raise DataFormatError(f"line {lineno}: non-finite value {token!r} for attribute {name}")
    return value


def parse_data(text: str, schema: Schema) -> Dataset:
    m = schema.m
    labels = list(schema.class_labels)
    enumerated = bool(labels)
    label_index: Dict[str, int] = {label: i for i, label in enumerate(labels)}
    codes: List[Dict[str, int]] = [{} for _ in range(m)]

    rows: List[List[float]] = []
    classes: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue

        tokens = [t.strip() for t in line.split(",")]
        if len(tokens) != m + 1:
            raise DataFormatError(f"line {lineno}: expected {m + 1} columns, got {len(tokens)}")

        row = []
        for a, (spec, token) in enumerate(zip(schema.attributes, tokens)):
            if token == UNKNOWN_TOKEN:
                row.append(np.nan)
            elif spec.kind is AttributeKind.NOMINAL:
                row.append(float(codes[a].setdefault(token, len(codes[a]))))
            else:
                row.append(_parse_number(token, lineno, spec.name))

        label = tokens[-1]
        if label == UNKNOWN_TOKEN:
            raise DataFormatError(f"line {lineno}: unknown class value")
        if label not in label_index:
            if enumerated:
                raise DataFormatError(f"line {lineno}: class label {label!r} not declared in schema")
            label_index[label] = len(labels)
            labels.append(label)

        rows.append(row)
        classes.append(label_index[label])

    if len(labels) < 2:
        _log.warning(f"Dataset declares {len(labels)} class label(s), distances will carry no class information")

    dataset = Dataset(
        schema=schema.with_class_labels(labels),
        values=np.array(rows, dtype=float).reshape(len(rows), m),
        classes=np.array(classes, dtype=int),
        nominal_values=tuple(tuple(c) for c in codes),
    )
    _log.debug(f"==> Parsed {dataset.n} instances, C={dataset.class_count}")
    return dataset


def format_data(dataset: Dataset) -> str:
    """Serialize back into the data file format; parse_data on the result reproduces the dataset."""
    lines = []
    for values, c in zip(dataset.values, dataset.classes):
        tokens = []
        for a, spec in enumerate(dataset.schema.attributes):
            v = values[a]
            if math.isnan(v):
                tokens.append(UNKNOWN_TOKEN)
            elif spec.kind is AttributeKind.NOMINAL:
                tokens.append(dataset.nominal_values[a][int(v)])
            else:
                tokens.append(repr(float(v)))
        tokens.append(dataset.schema.class_labels[c])
        lines.append(",".join(tokens))
    return "".join(line + "\n" for line in lines)


def _read_text(path: Path) -> str:
    try:
        return Path(path).read_text(encoding="utf8")
    except (OSError, UnicodeDecodeError) as e:
        raise DataFormatError(f"cannot read {path}: {e}") from e


def load_dataset(data_path: Path, schema_path: Path) -> Dataset:
    schema = parse_schema(_read_text(schema_path))
    dataset = parse_data(_read_text(data_path), schema)
    _log.info(f"Loaded {dataset.n} instances with {dataset.m} attributes and {dataset.class_count} classes from {data_path}")
    return dataset
