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

from .discretize import UNKNOWN_BUCKET, DiscretizationConfig, discretize, interval_width, midpoint
from .landscape import LANDSCAPE_MODES, ProbMapConfig, format_landscape, probability_landscape
from .table import AttributeVdm, VdmTable, interpolate_p, learn_p
from .window import AttributeWindow, WindowTable, learn_wvdm, wvdm_find_p

__all__ = [
    "UNKNOWN_BUCKET",
    "DiscretizationConfig",
    "interval_width",
    "discretize",
    "midpoint",
    "AttributeVdm",
    "VdmTable",
    "learn_p",
    "interpolate_p",
    "AttributeWindow",
    "WindowTable",
    "learn_wvdm",
    "wvdm_find_p",
    "LANDSCAPE_MODES",
    "ProbMapConfig",
    "probability_landscape",
    "format_landscape",
]
