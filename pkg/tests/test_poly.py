import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cordrep.fields import GF, QQ
from cordrep.poly import (Context, ContextError, EvaluationError, LaurentPoly,
                          Lamv, Muv, PolyParseError, SubstitutionError, Xv,
                          evaluate, lam, mu, parse, render, substitute, x)

CTX = Context(3, 2)
SYM = {Xv(i, j): sympy.Symbol(f"x{i}{j}") for i in range(1, 4) for j in range(1, 4)}
SYM.update({Muv(c): sympy.Symbol(f"mu{c}") for c in (1, 2)})
SYM.update({Lamv(c): sympy.Symbol(f"lam{c}") for c in (1, 2)})


def to_sympy(p):
    out = sympy.Integer(0)
    for mono, c in p.items():
        t = sympy.Integer(c)
        for v, e in mono:
            t *= SYM[v] ** e
        out += t
    return sympy.expand(out)


atoms = st.one_of(
    st.builds(lambda i, j: x(i, j, CTX), st.integers(1, 3), st.integers(1, 3)),
    st.builds(lambda c, e: mu(c, CTX) ** e, st.integers(1, 2), st.integers(-2, 2)),
    st.builds(lambda c, e: lam(c, CTX) ** e, st.integers(1, 2), st.integers(-2, 2)),
    st.builds(lambda k: LaurentPoly.const(k, CTX), st.integers(-3, 3)),
)


def _combine(children):
    return st.one_of(
        st.builds(lambda a, b: a + b, children, children),
        st.builds(lambda a, b: a - b, children, children),
        st.builds(lambda a, b: a * b, children, children),
    )


polys = st.recursive(atoms, _combine, max_leaves=8)


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_ring_operations_match_sympy(p, q):
    assert to_sympy(p + q) == sympy.expand(to_sympy(p) + to_sympy(q))
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))


@settings(max_examples=200, deadline=None)
@given(polys)
def test_render_parse_round_trip(p):
    assert parse(render(p), CTX) == p


@settings(max_examples=100, deadline=None)
@given(polys, st.lists(st.integers(1, 4), min_size=13, max_size=13))
def test_evaluate_matches_sympy(p, vals):
    F = GF(5)
    keys = sorted(SYM, key=str)
    asg = {k: v for k, v in zip(keys, vals)}
    want = to_sympy(p).subs({SYM[k]: sympy.Integer(v) for k, v in asg.items()})
    num, den = sympy.fraction(sympy.nsimplify(want))
    assert evaluate(p, asg, F) == int(num) * pow(int(den), -1, 5) % 5


def test_render_format():
    assert render(1 - mu(1)) == "1 - mu[1]"
    assert render(x(1, 2) * mu(1) ** -1) == "x[1][2]*mu[1]^-1"
    assert render(LaurentPoly.const(0)) == "0"
    assert render(-2 * x(1, 2)) == "-2*x[1][2]"


def test_negative_power_needs_unit():
    with pytest.raises(ValueError):
        (x(1, 2) + 1) ** -1
    assert (mu(1) * lam(2)) ** -1 == mu(1) ** -1 * lam(2) ** -1


def test_substitute_non_unit_for_laurent_variable():
    p = mu(1) ** -1
    with pytest.raises(SubstitutionError):
        substitute(p, {Muv(1): x(1, 2) + 1})
    assert substitute(x(1, 2) * mu(1) ** -1, {Xv(1, 2): mu(1)}) == 1


def test_evaluate_errors():
    F = GF(5)
    with pytest.raises(EvaluationError):
        evaluate(x(1, 2), {}, F)
    with pytest.raises(EvaluationError):
        evaluate(mu(1) ** -1, {Muv(1): 0}, F)


def test_context_mismatch():
    a = x(1, 2, Context(2, 1))
    b = x(1, 2, Context(3, 1))
    with pytest.raises(ContextError):
        a + b
    with pytest.raises(ContextError):
        x(4, 1, Context(3, 1))


def test_parse_errors():
    for bad in ["x[1][", "mu[1] +", "2 ** x[1][2]", "(mu[1]"]:
        with pytest.raises(PolyParseError):
            parse(bad)


def test_rational_evaluation():
    from fractions import Fraction
    assert evaluate(mu(1) ** -1 - 1, {Muv(1): Fraction(3)}, QQ) == Fraction(-2, 3)
