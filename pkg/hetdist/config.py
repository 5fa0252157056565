# -*- coding:utf-8 -*-
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
from io import StringIO
from pathlib import Path

from kebab import KebabSource, load_source
from pydantic import BaseModel
from strictyaml.ruamel import YAML

from hetdist.classifier import ClassifierConfig
from hetdist.constant import HETDIST_DEFAULT_CONFIG_PATH
from hetdist.evaluation import EvaluationConfig
from hetdist.vdm import DiscretizationConfig, ProbMapConfig

_log = logging.getLogger(__name__)


class AppConfig(BaseModel):
    logging: dict = {}
    discretization: DiscretizationConfig = DiscretizationConfig()
    classifier: ClassifierConfig = ClassifierConfig()
    evaluation: EvaluationConfig = EvaluationConfig()
    probmap: ProbMapConfig = ProbMapConfig()

    def as_yaml(self) -> str:
        stream = StringIO()
        YAML().dump(self.model_dump(mode="json"), stream)
        return stream.getvalue()

    def write_as_yaml(self, file_path: Path = None):
        if file_path is None:
            file_path = HETDIST_DEFAULT_CONFIG_PATH
        file_path.parent.mkdir(parents=True, exist_ok=True)
        with file_path.open("w+", encoding="utf8") as f:
            f.write(self.as_yaml())


def load_kebab_source(config_file_from_commandline: str = None) -> KebabSource:
    return load_source(
        [config_file_from_commandline or str(HETDIST_DEFAULT_CONFIG_PATH)],
        fallback_dict={},
        env_var_map={
            "HETDIST_SEED": "evaluation.seed",
            "HETDIST_FOLDS": "evaluation.folds",
            "HETDIST_WORKERS": "evaluation.workers",
            "HETDIST_K": "classifier.k",
            "HETDIST_S": "discretization.s_override",
        },
    )


def load_config(config_file_from_commandline: str = None) -> AppConfig:
    source = load_kebab_source(config_file_from_commandline)
    return source.get(expected_type=AppConfig)
