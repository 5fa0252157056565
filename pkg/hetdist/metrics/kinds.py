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

from enum import Enum
from typing import Any, List

from pydantic import BaseModel, ConfigDict, model_validator

from hetdist.core.exceptions import UnknownMetric


class MetricTag(str, Enum):
    EUCLIDEAN_SIGMA = "euclidean_sigma"
    HEOM = "heom"
    HVDM = "hvdm"
    DVDM = "dvdm"
    IVDM = "ivdm"
    WVDM = "wvdm"


class HvdmNorm(str, Enum):
    N1 = "N1"
    N2 = "N2"
    N3 = "N3"


class MetricKind(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: MetricTag
    # only meaningful for hvdm, pinned to N2 for every other tag
    hvdm_norm: HvdmNorm = HvdmNorm.N2

    @model_validator(mode="before")
    @classmethod
    def pin_norm(cls, data: Any) -> Any:
        if isinstance(data, dict) and MetricTag(data.get("tag")) is not MetricTag.HVDM:
            data = {**data, "hvdm_norm": HvdmNorm.N2}
        return data

    @property
    def name(self) -> str:
        for name, kind in METRIC_NAMES.items():
            if kind == self:
                return name
        return self.tag.value

    def __str__(self):
        return self.name


METRIC_NAMES = {
    "euclid": MetricKind(tag=MetricTag.EUCLIDEAN_SIGMA),
    "heom": MetricKind(tag=MetricTag.HEOM),
    "hvdm": MetricKind(tag=MetricTag.HVDM),
    "hvdm-n1": MetricKind(tag=MetricTag.HVDM, hvdm_norm=HvdmNorm.N1),
    "hvdm-n3": MetricKind(tag=MetricTag.HVDM, hvdm_norm=HvdmNorm.N3),
    "dvdm": MetricKind(tag=MetricTag.DVDM),
    "ivdm": MetricKind(tag=MetricTag.IVDM),
    "wvdm": MetricKind(tag=MetricTag.WVDM),
}


def parse_metric_name(text: str) -> MetricKind:
    key = text.strip().lower()
    if key not in METRIC_NAMES:
        raise UnknownMetric(f"unknown metric {text!r}, expected one of {', '.join(METRIC_NAMES)}")
    return METRIC_NAMES[key]


def parse_metric_names(text: str) -> List[MetricKind]:
    kinds = [parse_metric_name(t) for t in text.split(",") if t.strip()]
    if not kinds:
        raise UnknownMetric("no metric given")
    return kinds
