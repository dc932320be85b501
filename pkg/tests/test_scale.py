import pytest

from ivff.base import DataError, UnknownLabel
from ivff.number import make_ivffn
from ivff.scale import BUILTIN_SCALE_NAME, IVFF9_ROWS, LinguisticScale, builtin_scale, lookup

class TestBuiltinScale:
    def test_nine_labels_in_order(self, scale):
        assert scale.get_labels() == ['CH', 'VH', 'H', 'SM', 'E', 'SL', 'L', 'VL', 'CL']
        assert len(scale) == 9
        assert scale.get_name() == BUILTIN_SCALE_NAME

    def test_rows_are_valid_ivffns(self):
        for label, _, grades in IVFF9_ROWS:
            assert builtin_scale().lookup(label).grades == grades

    def test_lookup(self, scale, VH):
        assert lookup(scale, 'VH') == VH

    def test_case_and_whitespace_insensitive(self, scale, VH):
        assert scale.lookup(' vh ') == VH

class TestResolve:
    def test_unknown_label(self, scale):
        with pytest.raises(UnknownLabel) as e:
            scale.lookup('XX')
        assert e.value.label == 'XX'

    def test_strict_rejects_trailing_digits(self, scale):
        with pytest.raises(UnknownLabel):
            scale.resolve('SL4', strict=True)

    def test_lenient_repairs_trailing_digits(self, scale, caplog):
        value, repaired = scale.resolve('SL4', strict=False)
        assert repaired == 'SL'
        assert value == scale.lookup('SL')
        assert 'repaired' in caplog.text

    def test_known_label_is_not_repaired(self, scale):
        assert scale.resolve('SL', strict=False)[1] is None

    def test_lenient_still_rejects_unknown_stem(self, scale):
        with pytest.raises(UnknownLabel):
            scale.resolve('XY2', strict=False)

class TestCustomScale:
    def test_inline_entries(self):
        custom = LinguisticScale([('good', make_ivffn(0.7, 0.8, 0.1, 0.2)),
            ('bad', make_ivffn(0.1, 0.2, 0.7, 0.8))], 'two-point')
        assert custom.get_labels() == ['GOOD', 'BAD']
        assert custom.lookup('Good').zl == 0.7

    def test_duplicate_label(self):
        value = make_ivffn(0.5, 0.5, 0.5, 0.5)
        with pytest.raises(DataError):
            LinguisticScale([('a', value), ('A', value)])

    def test_empty_label(self):
        with pytest.raises(DataError):
            LinguisticScale([('  ', make_ivffn(0.5, 0.5, 0.5, 0.5))])
