import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ivff.base import DataError, DimensionMismatch, ShapeMismatch
from ivff.number import complement, score_triple
from ivff.deviation import WeightVector
from ivff.aggregation import collapse_dms, ivffwa, ivffwg, preference_values

from conftest import assert_valid, ivffns, label_matrix, random_ivffns, random_matrix

def close(f1, f2, tol = 1e-9):
    return all(abs(a ** 3 - b ** 3) <= tol for a, b in zip(f1.grades, f2.grades))

def weights_for(n):
    return st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=n, max_size=n).map(
        lambda w: [x / sum(w) for x in w])

class TestOperators:
    def test_single_value(self, VH):
        assert close(ivffwa([VH], [1.0]), VH)
        assert close(ivffwg([VH], [1.0]), VH)

    def test_weighted_average_of_neighbours(self, VH, H):
        value = ivffwa([VH, H], [0.5, 0.5])
        assert value.grades == pytest.approx((0.757, 0.860, 0.141, 0.245), abs=1e-3)

    def test_geometric_is_dual(self, VH, H):
        expected = complement(ivffwa([complement(VH), complement(H)], [0.5, 0.5]))
        assert close(ivffwg([VH, H], [0.5, 0.5]), expected, 1e-12)

    def test_zero_weight_is_neutral(self, CH, CL, E):
        assert close(ivffwg([CL, E], [0.0, 1.0]), E)
        assert close(ivffwa([CH, E], [0.0, 1.0]), E)

    def test_length_mismatch(self, VH, H):
        with pytest.raises(DimensionMismatch):
            ivffwa([VH, H], [1.0])
        with pytest.raises(DimensionMismatch):
            ivffwg([], [])

    def test_negative_weight(self, VH, H):
        with pytest.raises(DataError):
            ivffwa([VH, H], [1.5, -0.5])

    @given(ivffns(), weights_for(3))
    def test_idempotence(self, f, w):
        assert close(ivffwa([f, f, f], w), f)
        assert close(ivffwg([f, f, f], w), f)

    @given(st.lists(ivffns(), min_size=3, max_size=3), weights_for(3))
    @settings(max_examples=200)
    def test_averaging_dominates_geometric(self, values, w):
        assert score_triple(ivffwa(values, w)).score >= score_triple(ivffwg(values, w)).score - 1e-12

    @given(st.lists(ivffns(), min_size=4, max_size=4), weights_for(4))
    def test_bounded_by_meet_and_join(self, values, w):
        # component-wise envelope spanned by meet and join of the inputs
        low = (min(v.zl for v in values), min(v.zu for v in values),
            max(v.nl for v in values), max(v.nu for v in values))
        high = (max(v.zl for v in values), max(v.zu for v in values),
            min(v.nl for v in values), min(v.nu for v in values))
        for result in (ivffwa(values, w), ivffwg(values, w)):
            cubes = [g ** 3 for g in result.grades]
            for j in (0, 1):
                assert low[j] ** 3 - 1e-12 <= cubes[j] <= high[j] ** 3 + 1e-12
            for j in (2, 3):
                assert high[j] ** 3 - 1e-12 <= cubes[j] <= low[j] ** 3 + 1e-12

    @given(st.lists(ivffns(), min_size=3, max_size=3), weights_for(3))
    def test_permutation(self, values, w):
        order = [2, 0, 1]
        shuffled = [values[i] for i in order]
        w_shuffled = [w[i] for i in order]
        assert close(ivffwa(values, w), ivffwa(shuffled, w_shuffled))
        assert close(ivffwg(values, w), ivffwg(shuffled, w_shuffled))

    def test_closure_on_random_values(self, rng):
        values = random_ivffns(rng, 100002)
        for i in range(0, len(values), 3):
            w = rng.dirichlet(np.ones(3))
            assert_valid(ivffwa(values[i:i + 3], w))
            assert_valid(ivffwg(values[i:i + 3], w))

class TestCollapse:
    def test_single_matrix_unchanged(self, rng):
        matrix = random_matrix(rng, 3, 2, 'U1')
        assert collapse_dms([matrix], [1.0]) is matrix

    def test_unanimous_cells(self, scale):
        first = label_matrix(scale, [['CH', 'H'], ['L', 'CH']], 'U1')
        second = label_matrix(scale, [['CH', 'VH'], ['E', 'CH']], 'U2')
        collective = collapse_dms([first, second], [0.6, 0.4])
        assert close(collective.cell(0, 0), scale.lookup('CH'))
        assert close(collective.cell(1, 1), scale.lookup('CH'))
        assert collective.shape == (2, 2)

    def test_shape_mismatch(self, rng):
        with pytest.raises(ShapeMismatch):
            collapse_dms([random_matrix(rng, 3, 2), random_matrix(rng, 3, 3)], [0.5, 0.5])
        with pytest.raises(ShapeMismatch):
            collapse_dms([], [])

    def test_influence_count(self, rng):
        with pytest.raises(DimensionMismatch):
            collapse_dms([random_matrix(rng, 3, 2), random_matrix(rng, 3, 2)], [1.0])

    def test_geometric_collapse(self, scale):
        first = label_matrix(scale, [['VH'], ['L']])
        second = label_matrix(scale, [['H'], ['L']])
        collective = collapse_dms([first, second], [0.5, 0.5], 'wg')
        assert close(collective.cell(0, 0), ivffwg([scale.lookup('VH'), scale.lookup('H')], [0.5, 0.5]))

class TestPreferenceValues:
    def test_one_criterion(self, scale):
        column = label_matrix(scale, [['VH'], ['L'], ['E']])
        for operator in ('wa', 'wg'):
            preferences = preference_values(column, WeightVector((1.0,)), operator)
            for value, expected in zip(preferences.values, column.column(0)):
                assert close(value, expected)

    def test_scores_attached(self, rng):
        matrix = random_matrix(rng, 4, 3)
        preferences = preference_values(matrix, WeightVector((0.2, 0.3, 0.5)))
        assert len(preferences) == 4
        for value, triple in zip(preferences.values, preferences.scores):
            assert triple == score_triple(value)

    def test_weight_count(self, rng):
        with pytest.raises(ShapeMismatch):
            preference_values(random_matrix(rng, 3, 3), WeightVector((0.5, 0.5)))

    def test_averaging_scores_higher(self, rng):
        for _ in range(20):
            matrix = random_matrix(rng, 4, 3)
            w = WeightVector.normalized(rng.uniform(0.1, 1.0, 3))
            wa = preference_values(matrix, w, 'wa')
            wg = preference_values(matrix, w, 'wg')
            for a, g in zip(wa.scores, wg.scores):
                assert a.score >= g.score - 1e-12
