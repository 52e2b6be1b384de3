"""Rewriting framed cords to polynomials in the standard-cord variables.

A cord in loop form ``F(i; w; j)`` is the capping path back from point i to
the base point, the loop w, then the capping path out to point j.  Its
value is computed by peeling letters off w:

* ``F(i; ; j) = x_ij``, with ``x_ii = 1 - mu_{c(i)}``
* ``F(i; m_t w; j) = F(i; w; j) - x_it * F(t; w; j)``
* ``F(i; m_t^-1 w; j) = F(i; w; j) + mu_{c(t)}^-1 * x_it * F(t; w; j)``

Support lemma.  Every monomial of ``F(i; w; j)`` (with diagonals kept as
symbols) contains a variable with first index i and one with second index
j.  By induction on |w|: the base case is x_ij itself, and each rule
produces monomials of F(i; w'; j) or x_it * F(t; w'; j), which start with
an x_i. factor and, inductively, end with an x_.j factor.  Hence a cord
from i evaluates to 0 whenever the whole row i of R vanishes.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Optional

from .braid import ComponentMap, free_reduce, format_word
from .poly import Context, LaurentPoly, Muv, Xv


class CordParseError(ValueError):
    pass


@dataclass(frozen=True)
class CordExpr:
    i: int
    w: tuple
    j: int

    def __post_init__(self):
        object.__setattr__(self, "w", free_reduce(self.w))

    def __str__(self):
        return f"F({self.i}; {format_word(self.w)}; {self.j})"

    def check(self, n: int):
        if not (1 <= self.i <= n and 1 <= self.j <= n):
            raise IndexError(f"cord endpoints out of range for n={n}: {self}")
        if any(not 1 <= abs(a) <= n for a in self.w):
            raise IndexError(f"meridian index out of range for n={n}: {self}")


def parse_cord(text: str) -> CordExpr:
    m = re.fullmatch(r"\s*F\(\s*(\d+)\s*;([-+\d\s]*);\s*(\d+)\s*\)\s*", text)
    if not m:
        raise CordParseError(f"expected F(i; w; j), got {text!r}")
    try:
        w = tuple(int(t) for t in m.group(2).split())
    except ValueError as e:
        raise CordParseError(str(e)) from e
    if 0 in w:
        raise CordParseError("meridian index 0")
    return CordExpr(int(m.group(1)), w, int(m.group(3)))


class _Vars:
    """Cached single-variable polynomials for one component map."""

    def __init__(self, cm: ComponentMap, normalize: bool):
        self.cm = cm
        self.ctx = Context(cm.n, cm.r)
        self.normalize = normalize
        self._x: dict = {}
        self._muinv: dict = {}

    def x(self, i: int, j: int) -> LaurentPoly:
        key = (i, j)
        if key not in self._x:
            if i == j and self.normalize:
                p = 1 - LaurentPoly.var(Muv(self.cm(i)), self.ctx)
            else:
                p = LaurentPoly.var(Xv(i, j), self.ctx)
            self._x[key] = p
        return self._x[key]

    def muinv(self, t: int) -> LaurentPoly:
        c = self.cm(t)
        if c not in self._muinv:
            self._muinv[c] = LaurentPoly({((Muv(c), -1),): 1}, self.ctx)
        return self._muinv[c]

    def mu(self, t: int) -> LaurentPoly:
        return LaurentPoly.var(Muv(self.cm(t)), self.ctx)


def reduce(c: CordExpr, cm: ComponentMap, normalize: bool = True) -> LaurentPoly:
    """Polynomial value of the cord ``c``.

    With ``normalize=False`` the diagonal variables x_ii are kept as symbols;
    that mode only serves the support checks.
    """
    c.check(cm.n)
    V = _Vars(cm, normalize)
    w = c.w
    memo: dict = {}

    # F(pos, start) := value of F(start; w[pos:]; j)
    def F(pos: int, start: int) -> LaurentPoly:
        key = (pos, start)
        if key in memo:
            return memo[key]
        if pos == len(w):
            val = V.x(start, c.j)
        else:
            a = w[pos]
            t = abs(a)
            rest = F(pos + 1, start)
            tail = V.x(start, t) * F(pos + 1, t)
            val = rest - tail if a > 0 else rest + V.muinv(t) * tail
        memo[key] = val
        return val

    return F(0, c.i)


def oracle_reduce(c: CordExpr, cm: ComponentMap, seed: Optional[int] = None,
                  normalize: bool = True) -> LaurentPoly:
    """Same value as :func:`reduce`, by expanding a random letter each step.

    Uses ``F(i; u m_t v; j) = F(i; uv; j) - F(i; u; t) F(t; v; j)`` and
    ``F(i; u m_t^-1 v; j) = F(i; uv; j) + mu^-1 F(i; u; t) F(t; v; j)``,
    where uv is freely reduced again before recursing.
    """
    c.check(cm.n)
    rng = random.Random(seed)
    V = _Vars(cm, normalize)

    def go(i: int, w: tuple, j: int) -> LaurentPoly:
        if not w:
            return V.x(i, j)
        pos = rng.randrange(len(w))
        a = w[pos]
        t = abs(a)
        u, v = w[:pos], w[pos + 1:]
        prod = go(i, u, t) * go(t, v, j)
        base = go(i, free_reduce(u + v), j)
        return base - prod if a > 0 else base + V.muinv(t) * prod

    return go(c.i, c.w, c.j)


def first_index_support(p: LaurentPoly, i: int) -> bool:
    """Every monomial has a factor x[i][*] (diagonal kept symbolic)."""
    return all(any(v.kind == 0 and v.a == i for v, _ in m) for m, _ in p.items())


def last_index_support(p: LaurentPoly, j: int) -> bool:
    return all(any(v.kind == 0 and v.b == j for v, _ in m) for m, _ in p.items())


def evaluate_cord(c: CordExpr, cm: ComponentMap, field, x, mu) -> object:
    """Value of ``c`` at a point: ``x`` is the full n x n matrix (diagonal
    included) and ``mu`` the per-component meridian values.  Same recursion
    as :func:`reduce`, on field elements."""
    c.check(cm.n)
    F = field
    w = c.w
    muinv = {t: F.inv(mu[cm(t) - 1]) for t in set(abs(a) for a in w)}
    # column of values F(start; w[pos:]; j) for every start, built from the end
    cur = [x[s][c.j - 1] for s in range(cm.n)]
    for a in reversed(w):
        t = abs(a)
        ft = cur[t - 1]
        if a > 0:
            cur = [F.sub(cur[s], F.mul(x[s][t - 1], ft)) for s in range(cm.n)]
        else:
            cur = [F.add(cur[s], F.mul(muinv[t], F.mul(x[s][t - 1], ft))) for s in range(cm.n)]
    return cur[c.i - 1]
