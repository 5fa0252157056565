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

from hetdist.dataset import AttributeStats
from hetdist.metrics import vdm_a
from hetdist.vdm import UNKNOWN_BUCKET, DiscretizationConfig, discretize, interpolate_p, interval_width, learn_p, midpoint


@pytest.mark.parametrize("class_count, s_override, expected", [(2, None, 5), (3, None, 5), (7, None, 7), (3, 10, 10)])
def test_interval_count(class_count, s_override, expected):
    assert DiscretizationConfig(s_override=s_override).interval_count(class_count) == expected


def test_discretize(sepal_length):
    stats, s, width = sepal_length.stats, sepal_length.s, sepal_length.width
    assert interval_width(stats, s) == pytest.approx(0.72)
    assert discretize(5.0, stats, s, width) == 1
    assert discretize(5.1, stats, s, width) == 2
    assert discretize(5.7, stats, s, width) == 2
    assert discretize(4.3, stats, s, width) == 1
    assert discretize(7.9, stats, s, width) == 5
    # out of range values clamp to the outer intervals
    assert discretize(1.0, stats, s, width) == 1
    assert discretize(9.0, stats, s, width) == 5
    assert discretize(float("nan"), stats, s, width) is UNKNOWN_BUCKET


def test_discretize_constant_attribute():
    stats = AttributeStats(min_a=2.0, max_a=2.0, known=3)
    assert interval_width(stats, 5) == 0.0
    assert discretize(2.0, stats, 5, 0.0) == 1
    assert discretize(3.0, stats, 5, 0.0) == 1


def test_vdm_between_intervals(sepal_length):
    d = vdm_a(sepal_length.probabilities(1), sepal_length.probabilities(2))
    assert d == pytest.approx(0.273, abs=0.001)


def test_interpolate(sepal_length):
    np.testing.assert_allclose(interpolate_p(5.1, sepal_length), [0.634, 0.317, 0.050], atol=0.001)
    np.testing.assert_allclose(interpolate_p(5.0, sepal_length), [0.687, 0.268, 0.046], atol=0.001)


def test_interpolated_contribution(sepal_length):
    d = vdm_a(interpolate_p(5.1, sepal_length), interpolate_p(5.0, sepal_length))
    assert d == pytest.approx(0.005, abs=0.001)


def test_interpolate_at_midpoints(sepal_length):
    for u in range(1, 6):
        x = midpoint(sepal_length.stats, sepal_length.width, u)
        np.testing.assert_allclose(interpolate_p(x, sepal_length), sepal_length.probabilities(u), atol=1e-9)


def test_interpolate_slopes_to_zero(sepal_length):
    stats, width = sepal_length.stats, sepal_length.width
    np.testing.assert_allclose(interpolate_p(stats.min_a - width / 2, sepal_length), 0, atol=1e-9)
    np.testing.assert_allclose(interpolate_p(stats.max_a + width / 2, sepal_length), 0, atol=1e-9)
    np.testing.assert_allclose(interpolate_p(stats.max_a + 10, sepal_length), 0, atol=1e-9)
    # half way between the first midpoint and the virtual one below it
    half = interpolate_p(stats.min_a, sepal_length)
    np.testing.assert_allclose(half, sepal_length.probabilities(1) / 2, atol=1e-9)


def test_interpolate_is_continuous(sepal_length):
    xs = np.linspace(3.5, 8.7, 2001)
    values = np.array([interpolate_p(x, sepal_length) for x in xs])
    # slopes stay below 1.3 per unit and the grid step is 0.0026
    assert np.abs(np.diff(values, axis=0)).max() < 0.01


def test_interpolate_unknown(sepal_length):
    np.testing.assert_array_equal(interpolate_p(float("nan"), sepal_length), sepal_length.probabilities(UNKNOWN_BUCKET))


def test_learn_p(mixed):
    table = learn_p(mixed)
    assert len(table) == 4
    assert table.class_count == 2

    height = table[0]
    assert height.discretized
    assert height.s == 5
    assert height.keys == (1, 2, 3, 4, 5)
    # 11 known heights in the interval rows, one unknown in the last row
    assert height.counts[:-1].sum() == 11
    assert height.counts[-1].tolist() == [0, 1]

    rooms = table[1]
    assert not rooms.discretized
    assert rooms.keys == (2.0, 3.0, 4.0, 5.0, 6.0)
    assert rooms.counts[rooms.row(2.0)].tolist() == [3, 0]
    assert rooms.counts[-1].tolist() == [1, 0]

    color = table[2]
    # red, blue, green
    assert color.counts.tolist() == [[4, 0], [1, 3], [1, 3], [0, 0]]
    np.testing.assert_allclose(color.probabilities(1.0), [0.25, 0.75])
    np.testing.assert_allclose(color.lookup(0.0), [1.0, 0.0])


def test_unseen_value_has_zero_probabilities(mixed):
    rooms = learn_p(mixed)[1]
    np.testing.assert_array_equal(rooms.probabilities(9.0), [0.0, 0.0])


def test_probability_rows_sum_to_one(iris):
    table = learn_p(iris)
    for a in range(iris.m):
        totals = table[a].probs[table[a].totals > 0].sum(axis=1)
        np.testing.assert_allclose(totals, 1.0)


def test_learn_p_s_override(iris):
    table = learn_p(iris, DiscretizationConfig(s_override=10))
    assert table[0].s == 10
    assert table[0].width == pytest.approx(0.36)


def test_interpolated_probabilities_sum_to_one(iris):
    table = learn_p(iris)
    for a in range(iris.m):
        vdm = table[a]
        assert (vdm.totals[: vdm.s] > 0).all()
        lo, hi = midpoint(vdm.stats, vdm.width, 1), midpoint(vdm.stats, vdm.width, vdm.s)
        for x in np.linspace(lo, hi, 101):
            assert interpolate_p(x, vdm).sum() == pytest.approx(1.0, abs=1e-9)
