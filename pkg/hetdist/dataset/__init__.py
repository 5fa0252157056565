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

from .dataset import AttributeStats, Dataset, Instance, compute_stats, format_data, load_dataset, parse_data
from .schema import AttributeKind, AttributeSpec, Schema, parse_schema

__all__ = [
    "AttributeKind",
    "AttributeSpec",
    "Schema",
    "parse_schema",
    "AttributeStats",
    "Instance",
    "Dataset",
    "compute_stats",
    "parse_data",
    "format_data",
    "load_dataset",
]
