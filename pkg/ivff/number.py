"""Interval-valued Fermatean fuzzy numbers

This module provides the IVFFN value type, its set and arithmetic
operations, the score/accuracy functions used for ranking and the
cube-based distance used by the maximizing-deviation weight models.

An IVFFN holds a membership interval [zl, zu] and a non-membership
interval [nl, nu], both inside [0, 1], with zu^3 + nu^3 <= 1.  All values
are immutable; every operation returns a new IVFFN.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .base import (EPSILON, OutOfRange, IntervalOrder, CubicConstraint,
    NegativeScalar, DegenerateValue)

def _cube_root(x):
    """Real cube root of a radicand known to be >= -EPSILON"""
    return float(np.cbrt(max(x, 0.0)))

def _grade(x):
    """Clip floating-point noise at the ends of [0, 1]"""
    return min(max(x, 0.0), 1.0)

@dataclass(frozen=True)
class UnitInterval:
    """Closed subinterval [lo, hi] of the unit interval"""
    lo: float
    hi: float

    def __post_init__(self):
        for bound in (self.lo, self.hi):
            if not math.isfinite(bound) or bound < -EPSILON or bound > 1 + EPSILON:
                raise OutOfRange(f'grade {bound} is outside [0, 1]')
        if self.lo > self.hi + EPSILON:
            raise IntervalOrder(f'interval [{self.lo}, {self.hi}] has lo > hi')

    def __str__(self):
        return f'[{self.lo:.4f}, {self.hi:.4f}]'

@dataclass(frozen=True)
class IVFFN:
    """Interval-valued Fermatean fuzzy number"""
    membership: UnitInterval
    nonmembership: UnitInterval

    def __post_init__(self):
        if self.membership.hi ** 3 + self.nonmembership.hi ** 3 > 1 + EPSILON:
            raise CubicConstraint(
                f'{self.membership.hi}^3 + {self.nonmembership.hi}^3 exceeds 1')

    @property
    def zl(self):
        return self.membership.lo

    @property
    def zu(self):
        return self.membership.hi

    @property
    def nl(self):
        return self.nonmembership.lo

    @property
    def nu(self):
        return self.nonmembership.hi

    @property
    def grades(self):
        """Grades as a (zl, zu, nl, nu) tuple"""
        return (self.zl, self.zu, self.nl, self.nu)

    def __str__(self):
        return f'({self.membership}, {self.nonmembership})'

@dataclass(frozen=True)
class ScoreTriple:
    """Score in [-1, 1], accuracy in [0, 1] and normalized score in [0, 1]"""
    score: float
    accuracy: float
    normalized: float

def from_grades(zl, zu, nl, nu):
    """Build an IVFFN from computed grades, absorbing rounding noise"""
    zl, zu, nl, nu = _grade(zl), _grade(zu), _grade(nl), _grade(nu)
    return IVFFN(UnitInterval(min(zl, zu), zu), UnitInterval(min(nl, nu), nu))

def make_ivffn(zl, zu, nl, nu):
    """Create a validated IVFFN from its four grades

    Raises OutOfRange, IntervalOrder or CubicConstraint; values are never
    clamped.  A number whose upper grades are both zero is accepted with a
    DegenerateValue warning.
    """
    value = IVFFN(UnitInterval(float(zl), float(zu)), UnitInterval(float(nl), float(nu)))
    if value.zu == 0 and value.nu == 0:
        warnings.warn(f'degenerate IVFFN {value}: upper grades are both zero', DegenerateValue)
    return value

def hesitation(f):
    """Hesitation interval [(1-zu^3-nu^3)^(1/3), (1-zl^3-nl^3)^(1/3)]"""
    lo = _cube_root(1.0 - f.zu ** 3 - f.nu ** 3)
    hi = _cube_root(1.0 - f.zl ** 3 - f.nl ** 3)
    return UnitInterval(_grade(lo), _grade(max(lo, hi)))

def score_triple(f):
    member = f.zl ** 3 + f.zu ** 3
    nonmember = f.nl ** 3 + f.nu ** 3
    score = (member - nonmember) / 2
    return ScoreTriple(score, (member + nonmember) / 2, (score + 1) / 2)

def complement(f):
    return IVFFN(f.nonmembership, f.membership)

def join(f1, f2):
    """Union: max on membership, min on non-membership"""
    return from_grades(max(f1.zl, f2.zl), max(f1.zu, f2.zu),
        min(f1.nl, f2.nl), min(f1.nu, f2.nu))

def meet(f1, f2):
    """Intersection: min on membership, max on non-membership"""
    return from_grades(min(f1.zl, f2.zl), min(f1.zu, f2.zu),
        max(f1.nl, f2.nl), max(f1.nu, f2.nu))

def _cubic_sum(a, b):
    return _cube_root(a ** 3 + b ** 3 - a ** 3 * b ** 3)

def add(f1, f2):
    return from_grades(_cubic_sum(f1.zl, f2.zl), _cubic_sum(f1.zu, f2.zu),
        f1.nl * f2.nl, f1.nu * f2.nu)

def mul(f1, f2):
    return from_grades(f1.zl * f2.zl, f1.zu * f2.zu,
        _cubic_sum(f1.nl, f2.nl), _cubic_sum(f1.nu, f2.nu))

def _cubic_scale(x, factor):
    return _cube_root(1.0 - (1.0 - x ** 3) ** factor)

def scalar_mul(factor, f):
    """factor * F"""
    if factor < 0:
        raise NegativeScalar(f'scalar {factor} is negative')
    return from_grades(_cubic_scale(f.zl, factor), _cubic_scale(f.zu, factor),
        f.nl ** factor, f.nu ** factor)

def power(f, factor):
    """F ** factor"""
    if factor < 0:
        raise NegativeScalar(f'exponent {factor} is negative')
    return from_grades(f.zl ** factor, f.zu ** factor,
        _cubic_scale(f.nl, factor), _cubic_scale(f.nu, factor))

def _cubes(f):
    """Cubed grades plus cubed hesitation bounds, in distance order"""
    theta_lo = max(1.0 - f.zu ** 3 - f.nu ** 3, 0.0)
    theta_hi = max(1.0 - f.zl ** 3 - f.nl ** 3, 0.0)
    return (f.zl ** 3, f.zu ** 3, f.nl ** 3, f.nu ** 3, theta_lo, theta_hi)

def distance(f1, f2):
    """Quarter of the summed absolute differences of the six cubed terms

    The result lies in [0, 1.5].
    """
    return sum(abs(a - b) for a, b in zip(_cubes(f1), _cubes(f2))) / 4

def sort_key(f):
    """Key putting better numbers first: score, then accuracy, then grades"""
    triple = score_triple(f)
    return (-triple.score, -triple.accuracy, -f.zl, -f.zu, f.nl, f.nu)

def compare(f1, f2):
    """Return -1 if f1 ranks ahead of f2, 1 if behind, 0 if tied"""
    k1, k2 = sort_key(f1), sort_key(f2)
    if k1 < k2:
        return -1
    if k1 > k2:
        return 1
    return 0
