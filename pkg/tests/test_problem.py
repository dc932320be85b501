"""Tests for the problem file decoder"""

import copy
import json

import pytest

from ivff.base import (BadLambda, CubicConstraint, ProblemSyntaxError, ShapeMismatch,
    UnknownLabel)
from ivff.problem import parse_problem, parse_scale
from case_study import CASE_STUDY_COST_CRITERIA, case_study_document

DOCUMENT = {
    'meta': {'name': 'small'},
    'scale': 'ivff-9',
    'alternatives': ['A1', 'A2', 'A3'],
    'criteria': [{'name': 'price', 'kind': 'cost'}, 'quality'],
    'dms': [{'name': 'alice', 'lambda': 0.6}, {'name': 'bob', 'lambda': 0.4}],
    'matrices': {
        'alice': [['H', 'L', 'E'], ['VH', 'SM', 'CL']],
        'bob': [['SL', 'VL', 'CH'], [[0.5, 0.6, 0.3, 0.4], 'E', 'h']],
    },
}

@pytest.fixture
def document():
    return copy.deepcopy(DOCUMENT)

class TestDocument:
    def test_small_problem(self, document):
        problem = parse_problem(document)
        assert problem.name == 'small'
        assert problem.shape == (3, 2)
        assert problem.influence == (0.6, 0.4)
        assert problem.criterion_names() == ['price', 'quality']
        assert [c.kind for c in problem.criteria] == ['cost', None]
        assert problem.scale_name == 'ivff-9'

    def test_matrices_are_transposed(self, document, scale):
        problem = parse_problem(document)
        alice = problem.matrices[0]
        assert alice.cell(0, 1) == scale.lookup('VH')
        assert alice.column(0) == (scale.lookup('H'), scale.lookup('L'), scale.lookup('E'))

    def test_inline_grades_and_case(self, document, scale):
        bob = parse_problem(document).matrices[1]
        assert bob.cell(0, 1).grades == (0.5, 0.6, 0.3, 0.4)
        assert bob.cell(2, 1) == scale.lookup('H')

    def test_text_and_path(self, document, tmp_path):
        text = json.dumps(document)
        path = tmp_path / 'problem.json'
        path.write_text(text)
        assert parse_problem(text).shape == parse_problem(str(path)).shape == (3, 2)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            parse_problem(str(tmp_path / 'absent.json'))

class TestErrors:
    def test_missing_section(self, document):
        del document['dms']
        with pytest.raises(ProblemSyntaxError) as e:
            parse_problem(document)
        assert e.value.section == 'dms'

    def test_bad_json_reports_line(self):
        with pytest.raises(ProblemSyntaxError) as e:
            parse_problem('{\n  "alternatives": [\n  "A1",,\n]}')
        assert e.value.section == 'document'
        assert e.value.line == 3

    def test_lambda_sum(self, document):
        document['dms'][1]['lambda'] = 0.3
        with pytest.raises(BadLambda):
            parse_problem(document)

    def test_lambda_must_be_number(self, document):
        document['dms'][0]['lambda'] = 'high'
        with pytest.raises(ProblemSyntaxError):
            parse_problem(document)

    def test_row_count(self, document):
        document['matrices']['bob'].append(['E', 'E', 'E'])
        with pytest.raises(ShapeMismatch):
            parse_problem(document)

    def test_cell_count(self, document):
        document['matrices']['alice'][0].pop()
        with pytest.raises(ShapeMismatch):
            parse_problem(document)

    def test_missing_matrix(self, document):
        del document['matrices']['bob']
        with pytest.raises(ShapeMismatch):
            parse_problem(document)

    def test_matrix_for_unknown_dm(self, document):
        document['matrices']['carol'] = document['matrices']['bob']
        with pytest.raises(ProblemSyntaxError):
            parse_problem(document)

    def test_unknown_label_context(self, document):
        document['matrices']['bob'][0][2] = 'XX'
        with pytest.raises(UnknownLabel) as e:
            parse_problem(document)
        assert (e.value.label, e.value.dm, e.value.row, e.value.column) == (
            'XX', 'bob', 'price', 'A3')

    def test_inline_grades_violating_constraint(self, document):
        document['matrices']['alice'][1][0] = [0.9, 0.95, 0.8, 0.9]
        with pytest.raises(ProblemSyntaxError) as e:
            parse_problem(document)
        assert e.value.section == 'matrices'
        assert isinstance(e.value.__cause__, CubicConstraint)

    def test_unknown_kind(self, document):
        document['criteria'][0]['kind'] = 'neutral'
        with pytest.raises(ProblemSyntaxError):
            parse_problem(document)

    def test_duplicate_alternatives(self, document):
        document['alternatives'][2] = 'A1'
        with pytest.raises(ProblemSyntaxError):
            parse_problem(document)

class TestScale:
    def test_inline_table(self, document):
        document['scale'] = {'name': 'tiny', 'good': [0.7, 0.8, 0.1, 0.2],
            'bad': [0.1, 0.2, 0.7, 0.8]}
        document['matrices'] = {
            'alice': [['good', 'bad', 'good'], ['bad', 'bad', 'good']],
            'bob': [['bad', 'good', 'good'], ['good', 'good', 'bad']],
        }
        problem = parse_problem(document)
        assert problem.scale_name == 'tiny'
        assert problem.matrices[0].cell(0, 0).grades == (0.7, 0.8, 0.1, 0.2)

    def test_entries_form(self):
        scale = parse_scale({'name': 'two', 'entries': {'yes': [0.8, 0.9, 0.0, 0.1]}})
        assert scale.lookup('YES').grades == (0.8, 0.9, 0.0, 0.1)

    def test_unknown_builtin(self):
        with pytest.raises(ProblemSyntaxError):
            parse_scale('ivff-7')

    def test_bad_entry(self):
        with pytest.raises(ProblemSyntaxError):
            parse_scale({'odd': [0.1, 0.2, 0.3]})

class TestCaseStudy:
    def test_layout(self, case_problem):
        assert case_problem.shape == (5, 10)
        assert case_problem.dm_names() == ['U1', 'U2', 'U3', 'U4']
        assert case_problem.influence == (0.33, 0.28, 0.22, 0.17)
        costs = tuple(c.name for c in case_problem.criteria if c.kind == 'cost')
        assert costs == CASE_STUDY_COST_CRITERIA
        assert case_problem.reference is not None

    def test_strict_labels_reject_typo(self):
        with pytest.raises(UnknownLabel) as e:
            parse_problem(case_study_document(), strict=True)
        assert (e.value.dm, e.value.row, e.value.column) == ('U4', 'K10', 'S4')

    def test_document_is_fresh(self):
        first = case_study_document()
        first['dms'][0]['lambda'] = 1.0
        assert case_study_document()['dms'][0]['lambda'] == 0.33
