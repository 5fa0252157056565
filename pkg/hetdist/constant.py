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

from pathlib import Path

import platformdirs

__APP_NAME = "hetdist"


def __get_config_path():
    return Path(platformdirs.user_config_dir(appname=__APP_NAME), "config.yaml")


HETDIST_DEFAULT_CONFIG_PATH: Path = __get_config_path()

PACKAGE_DATA_PATH: Path = Path(__file__).parent / "data"
IRIS_DATA_PATH: Path = PACKAGE_DATA_PATH / "iris.data"
IRIS_SCHEMA_PATH: Path = PACKAGE_DATA_PATH / "iris.names"
MIXED_DATA_PATH: Path = PACKAGE_DATA_PATH / "mixed.data"
MIXED_SCHEMA_PATH: Path = PACKAGE_DATA_PATH / "mixed.names"

# marks a missing input value in data files
UNKNOWN_TOKEN = "?"

LOGGING_FORMAT = "%(asctime)s %(levelname).7s [%(filename)s:%(lineno)d | %(funcName)s] - %(message)s"
