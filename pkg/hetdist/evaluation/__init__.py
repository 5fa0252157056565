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

from .attribute_distance import AttributeDistanceReport, avg_attribute_distance, avg_attribute_distances
from .cross_validation import EvalReport, EvaluationConfig, PairComparison, cross_validate
from .folds import FoldPlan, make_folds
from .learning_curve import LearningCurve, learning_curve
from .report import FORMATS, format_attribute_distances, format_learning_curve, format_report
from .ttest import T_INFINITY, critical_value, paired_t_test

__all__ = [
    "FoldPlan",
    "make_folds",
    "T_INFINITY",
    "critical_value",
    "paired_t_test",
    "EvaluationConfig",
    "EvalReport",
    "PairComparison",
    "cross_validate",
    "AttributeDistanceReport",
    "avg_attribute_distance",
    "avg_attribute_distances",
    "LearningCurve",
    "learning_curve",
    "FORMATS",
    "format_report",
    "format_attribute_distances",
    "format_learning_curve",
]
