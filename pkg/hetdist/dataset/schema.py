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
import re
from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict

from hetdist.core.exceptions import SchemaError

_log = logging.getLogger(__name__)


class AttributeKind(str, Enum):
    CONTINUOUS = "continuous"
    LINEAR_DISCRETE = "linear_discrete"
    NOMINAL = "nominal"

    @property
    def is_linear(self):
        return self is not AttributeKind.NOMINAL


# schema file keyword -> kind
KIND_KEYWORDS = {
    "continuous": AttributeKind.CONTINUOUS,
    "discrete": AttributeKind.LINEAR_DISCRETE,
    "nominal": AttributeKind.NOMINAL,
}


class AttributeSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    kind: AttributeKind


class Schema(BaseModel):
    """
    Column layout shared by a data file and every model learned from it.

    class_labels may be empty right after parse_schema when the class line does not
    enumerate them; parse_data fills them in discovery order.
    """

    model_config = ConfigDict(frozen=True)

    attributes: List[AttributeSpec]
    class_name: str
    class_labels: List[str] = []

    @property
    def m(self) -> int:
        return len(self.attributes)

    @property
    def class_count(self) -> int:
        return len(self.class_labels)

    @property
    def kinds(self) -> List[AttributeKind]:
        return [a.kind for a in self.attributes]

    @property
    def continuous_indices(self) -> List[int]:
        return [i for i, a in enumerate(self.attributes) if a.kind is AttributeKind.CONTINUOUS]

    @property
    def linear_indices(self) -> List[int]:
        return [i for i, a in enumerate(self.attributes) if a.kind.is_linear]

    @property
    def nominal_indices(self) -> List[int]:
        return [i for i, a in enumerate(self.attributes) if a.kind is AttributeKind.NOMINAL]

    def with_class_labels(self, labels: List[str]) -> "Schema":
        return self.model_copy(update={"class_labels": list(labels)})


def _split_labels(tokens: List[str]) -> List[str]:
    return [t for t in re.split(r"[,\s]+", " ".join(tokens)) if t]


def parse_schema(text: str) -> Schema:
    attributes: List[AttributeSpec] = []
    class_name = None
    class_labels: List[str] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        tokens = line.split()
        directive = tokens[0].lower()
        if directive == "attribute":
            if len(tokens) != 3:
                raise SchemaError(f"line {lineno}: expected 'attribute <name> <kind>', got {line!r}")
            name, keyword = tokens[1], tokens[2].lower()
            if keyword not in KIND_KEYWORDS:
                raise SchemaError(f"line {lineno}: unknown attribute kind {tokens[2]!r}")
            if any(a.name == name for a in attributes):
                raise SchemaError(f"line {lineno}: duplicate attribute name {name!r}")
            attributes.append(AttributeSpec(name=name, kind=KIND_KEYWORDS[keyword]))
        elif directive == "class":
            if class_name is not None:
                raise SchemaError(f"line {lineno}: class declared twice")
            if len(tokens) < 2:
                raise SchemaError(f"line {lineno}: expected 'class <name>'")
            class_name = tokens[1]
            class_labels = _split_labels(tokens[2:])
            if len(set(class_labels)) != len(class_labels):
                raise SchemaError(f"line {lineno}: duplicate class label in {class_labels}")
        else:
            raise SchemaError(f"line {lineno}: unknown directive {tokens[0]!r}")

    if class_name is None:
        raise SchemaError("missing class declaration")
    if not attributes:
        raise SchemaError("schema declares no attributes")

    schema = Schema(attributes=attributes, class_name=class_name, class_labels=class_labels)
    _log.debug(f"==> Parsed schema with m={schema.m}, kinds={[k.value for k in schema.kinds]}")
    return schema
