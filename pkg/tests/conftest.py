import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from ivff.number import from_grades, make_ivffn
from ivff.scale import builtin_scale
from ivff.deviation import DecisionMatrix
from ivff.pipeline import Criterion, DecisionMaker, DecisionProblem

@st.composite
def ivffns(draw):
    """Valid IVFFNs with at least one nonzero upper grade"""
    zu = draw(st.floats(min_value=0.0, max_value=1.0))
    nu_max = float(np.cbrt(1.0 - zu ** 3))
    nu = draw(st.floats(min_value=0.0, max_value=nu_max))
    zl = draw(st.floats(min_value=0.0, max_value=zu))
    nl = draw(st.floats(min_value=0.0, max_value=nu))
    if zu == 0 and nu == 0:
        nu = 0.5
    return from_grades(zl, zu, nl, nu)

def random_grades(rng, size):
    """size x 4 array of valid (zl, zu, nl, nu) rows"""
    zu = rng.uniform(0.0, 1.0, size)
    nu = rng.uniform(0.0, 1.0, size) * np.cbrt(1.0 - zu ** 3)
    zl = rng.uniform(0.0, 1.0, size) * zu
    nl = rng.uniform(0.0, 1.0, size) * nu
    return np.column_stack([zl, zu, nl, nu])

def random_ivffns(rng, size):
    return [from_grades(*row) for row in random_grades(rng, size)]

def assert_valid(f):
    """Every IVFFN invariant, checked on the stored grades"""
    zl, zu, nl, nu = f.grades
    assert 0.0 <= zl <= zu <= 1.0
    assert 0.0 <= nl <= nu <= 1.0
    assert zu ** 3 + nu ** 3 <= 1.0 + 1e-9

def random_matrix(rng, m, n, dm_id = ''):
    values = random_ivffns(rng, m * n)
    return DecisionMatrix([values[i * n:(i + 1) * n] for i in range(m)], dm_id)

def label_matrix(scale, rows, dm_id = ''):
    """Alternatives-by-criteria matrix from rows of labels"""
    return DecisionMatrix([[scale.lookup(label) for label in row] for row in rows], dm_id)

def make_problem(rows_per_dm, influence = None, kinds = None, name = 'test'):
    """DecisionProblem from per-DM alternatives-by-criteria label rows"""
    scale = builtin_scale()
    g = len(rows_per_dm)
    m = len(rows_per_dm[0])
    n = len(rows_per_dm[0][0])
    influence = influence or [1.0 / g] * g
    kinds = kinds or [None] * n
    dms = [DecisionMaker(f'U{k + 1}', influence[k]) for k in range(g)]
    matrices = [label_matrix(scale, rows, dm.name) for rows, dm in zip(rows_per_dm, dms)]
    return DecisionProblem(name, [f'S{i + 1}' for i in range(m)],
        [Criterion(f'K{j + 1}', kinds[j]) for j in range(n)], dms, matrices)

@pytest.fixture
def scale():
    return builtin_scale()

@pytest.fixture
def rng():
    return np.random.default_rng(12345)

@pytest.fixture
def VH():
    return make_ivffn(0.8, 0.9, 0.1, 0.2)

@pytest.fixture
def H():
    return make_ivffn(0.7, 0.8, 0.2, 0.3)

@pytest.fixture
def E():
    return make_ivffn(0.5, 0.5, 0.5, 0.5)

@pytest.fixture
def CH():
    return make_ivffn(0.95, 1.0, 0.0, 0.0)

@pytest.fixture
def CL():
    return make_ivffn(0.0, 0.0, 0.95, 1.0)

@pytest.fixture
def case_problem():
    from ivff.problem import parse_problem
    from case_study import case_study_document
    return parse_problem(case_study_document())
