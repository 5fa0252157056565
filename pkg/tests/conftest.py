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

import numpy as np
import pytest

from hetdist.constant import IRIS_DATA_PATH, IRIS_SCHEMA_PATH, MIXED_DATA_PATH, MIXED_SCHEMA_PATH
from hetdist.dataset import AttributeKind, AttributeSpec, AttributeStats, Dataset, Schema, load_dataset
from hetdist.vdm import AttributeVdm


@pytest.fixture(scope="module")
def tmp_path(tmp_path_factory):
    yield tmp_path_factory.mktemp("pytest_temp_folder")


def pytest_addoption(parser):
    parser.addoption(
        "--integration",
        action="store_true",
        default=False,
        help="run integration tests (accuracy on bundled data)",
    )


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--integration"):
        # skip when --integration is not given in cli
        skip_integration = pytest.mark.skip(reason="need --integration option to run")
        for item in items:
            if "integration" in item.keywords:
                item.add_marker(skip_integration)


@pytest.fixture(scope="session")
def iris():
    return load_dataset(IRIS_DATA_PATH, IRIS_SCHEMA_PATH)


@pytest.fixture(scope="session")
def mixed():
    return load_dataset(MIXED_DATA_PATH, MIXED_SCHEMA_PATH)


@pytest.fixture
def sepal_length():
    """
    Sepal length of iris as a learned vdm table: range [4.3, 7.9] in 5 intervals of 0.72,
    with P(interval 1) = (.867, .100, .033) and P(interval 2) = (.485, .455, .061).
    """
    counts = np.array(
        [
            [26, 3, 1],
            [16, 15, 2],
            [5, 20, 12],
            [1, 10, 22],
            [0, 2, 13],
            [0, 0, 0],
        ]
    )
    stats = AttributeStats(min_a=4.3, max_a=7.9, range_a=3.6, mean=5.84, sigma_a=0.825, known=150)
    return AttributeVdm(
        kind=AttributeKind.CONTINUOUS,
        stats=stats,
        s=5,
        width=0.72,
        keys=(1, 2, 3, 4, 5),
        counts=counts,
    )


def random_dataset(rng: np.random.Generator, kinds, n: int, class_count: int = 3, unknown_rate: float = 0.0) -> Dataset:
    """Random dataset over the given attribute kinds; continuous values are quarter steps so duplicates occur."""
    columns = []
    for kind in kinds:
        if kind is AttributeKind.CONTINUOUS:
            columns.append(rng.integers(0, 24, size=n) / 4)
        elif kind is AttributeKind.LINEAR_DISCRETE:
            columns.append(rng.integers(0, 6, size=n).astype(float))
        else:
            columns.append(rng.integers(0, 4, size=n).astype(float))
    values = np.column_stack(columns) if columns else np.zeros((n, 0))
    if unknown_rate:
        values[rng.random(values.shape) < unknown_rate] = np.nan
    schema = Schema(
        attributes=[AttributeSpec(name=f"a{i}", kind=kind) for i, kind in enumerate(kinds)],
        class_name="class",
        class_labels=[f"c{c}" for c in range(class_count)],
    )
    nominal_values = tuple(tuple(f"v{v}" for v in range(4)) if kind is AttributeKind.NOMINAL else () for kind in kinds)
    return Dataset(
        schema=schema,
        values=values,
        classes=rng.integers(0, class_count, size=n),
        nominal_values=nominal_values,
    )
