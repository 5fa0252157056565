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

from .kernels import normalized_diff, normalized_vdm, overlap, present_distance, rn_diff, sigma_diff, vdm_a
from .kinds import METRIC_NAMES, HvdmNorm, MetricKind, MetricTag, parse_metric_name, parse_metric_names
from .metric import Encoded, PreparedMetric, StorageFootprint, distance, prepare_metric

__all__ = [
    "MetricTag",
    "HvdmNorm",
    "MetricKind",
    "METRIC_NAMES",
    "parse_metric_name",
    "parse_metric_names",
    "vdm_a",
    "normalized_vdm",
    "overlap",
    "rn_diff",
    "normalized_diff",
    "sigma_diff",
    "present_distance",
    "Encoded",
    "PreparedMetric",
    "StorageFootprint",
    "prepare_metric",
    "distance",
]
