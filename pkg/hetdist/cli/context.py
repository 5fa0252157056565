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

from dataclasses import dataclass
from pathlib import Path

import click

from hetdist.config import AppConfig
from hetdist.constant import IRIS_DATA_PATH, IRIS_SCHEMA_PATH
from hetdist.core.exceptions import HetdistException
from hetdist.dataset import Dataset, load_dataset
from hetdist.vdm import DiscretizationConfig


@dataclass
class Context:
    conf: AppConfig

    def load(self, data_path: Path | None, schema_path: Path | None) -> Dataset:
        if (data_path is None) != (schema_path is None):
            raise click.UsageError("--data and --schema must be given together")
        if data_path is None:
            data_path, schema_path = IRIS_DATA_PATH, IRIS_SCHEMA_PATH
        return load_dataset(data_path, schema_path)

    def discretization(self, s_override: int | None) -> DiscretizationConfig:
        if s_override is None:
            return self.conf.discretization
        return DiscretizationConfig(s_override=s_override)

    def seed(self, seed: int | None) -> int:
        return self.conf.evaluation.seed if seed is None else seed

    def k(self, k: int | None) -> int:
        return self.conf.classifier.k if k is None else k

    def folds(self, folds: int | None) -> int:
        return self.conf.evaluation.folds if folds is None else folds

    @staticmethod
    def emit(text: str, out_path: Path | None):
        if out_path is None:
            click.echo(text, nl=False)
            return
        try:
            out_path.write_text(text, encoding="utf8")
        except OSError as e:
            raise HetdistException(f"cannot write {out_path}: {e}") from e
