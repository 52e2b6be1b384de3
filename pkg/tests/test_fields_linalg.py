from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cordrep import linalg as la
from cordrep.fields import GF, QQ, FieldError, field_from_json


def test_prime_field_arithmetic():
    F = GF(7)
    assert F.mul(3, F.inv(3)) == 1
    assert F.pow(3, -1) == F.inv(3)
    assert F(-1) == 6
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_non_prime_rejected():
    with pytest.raises(FieldError):
        GF(6)


def test_rational_json_round_trip():
    v = Fraction(-3, 4)
    assert QQ.from_json(QQ.to_json(v)) == v
    assert field_from_json({"field": "Fp", "p": 5}).p == 5
    assert field_from_json({"field": "Q"}) is not None


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_matches_sympy(rows):
    A = tuple(tuple(Fraction(v) for v in r) for r in rows)
    assert la.rank(QQ, A) == sympy.Matrix(rows).rank()


@settings(max_examples=150, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_matches_sympy(rows, p):
    from sympy.polys.matrices import DomainMatrix
    F = GF(p)
    A = tuple(tuple(F(v) for v in r) for r in rows)
    dm = DomainMatrix([[sympy.GF(p)(v) for v in r] for r in rows], (len(rows), len(rows[0])), sympy.GF(p))
    assert la.rank(F, A) == dm.rank()


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_nullspace_vectors_are_killed(rows):
    A = tuple(tuple(Fraction(v) for v in r) for r in rows)
    ns = la.nullspace(QQ, A)
    assert len(ns) + la.rank(QQ, A) == len(rows[0])
    for v in ns:
        assert all(x == 0 for x in la.matvec(QQ, A, v))


def test_inverse_and_singular():
    F = GF(5)
    A = ((1, 2), (3, 4))
    assert la.is_identity(F, la.matmul(F, A, la.inverse(F, A)))
    with pytest.raises(ZeroDivisionError):
        la.inverse(F, ((1, 2), (2, 4)))


def test_solve_columns_outside_span():
    F = GF(5)
    B = ((1, 0), (0, 0))
    with pytest.raises(ValueError):
        la.solve_columns(F, B, (0,), ((0,), (1,)))
