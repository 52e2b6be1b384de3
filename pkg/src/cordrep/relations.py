"""Polynomial relations cutting out the augmentations of a braid closure.

Conventions.  Level 0 is the top of the braid, level l the bottom.  A
strand's capping path at the bottom, pushed up through the braid, becomes
``h_i`` followed by the top capping path of position ``top(i)``
(see :func:`cordrep.braid.capping_words`).

Closing the braid glues bottom position i to top position i.  A cord whose
endpoint sits on strand i can have that endpoint slid across the gluing
disk; read in top-level terms this gives, for every j,

    F(top(i); h_i^-1; j) = x_ij        F(j; h_i; top(i)) = x_ji

Each component carries one marked point.  It is named by a top position q
on the component and sits on the gluing segment at the bottom end of the
strand that starts at q (default: q is the component's least strand).
Sliding across it costs the framed longitude: on that segment the right
sides become ``lam^-1 mu^f x_ij`` and ``lam mu^-f x_ji``, where f corrects
the blackboard framing to the Seifert framing.  The longitude relations are the same slide carried all the way
round the component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .braid import (BraidWord, ComponentMap, capping_words, components,
                    format_braid, level_components, longitude_word,
                    word_inverse)
from .cordcalc import CordExpr, reduce
from .poly import Context, LaurentPoly, Lamv, Muv, Xv, render, substitute

SCHEMA = "cordrep.relations/1"


@dataclass(frozen=True)
class TransportMap:
    """Standard cords after one half twist, in terms of those before it.

    ``subs`` sends each off-diagonal X variable of the level below the
    letter to a polynomial in the variables of the level above; ``relabel``
    is the position swap.
    """
    n: int
    s: int
    sign: int
    subs: dict
    relabel: tuple


def _level_cm(comp_at_level: tuple, r: int) -> ComponentMap:
    return ComponentMap(len(comp_at_level), r, tuple(comp_at_level))


def half_twist_transport(s: int, sign: int, comp_at_level: tuple, r: int) -> TransportMap:
    n = len(comp_at_level)
    if not 1 <= s <= n - 1:
        raise IndexError(f"twist index {s} out of range for {n} strands")
    ctx = Context(n, r)
    cm = _level_cm(comp_at_level, r)

    def xv(i, j):
        if i == j:
            return 1 - LaurentPoly.var(Muv(cm(i)), ctx)
        return LaurentPoly.var(Xv(i, j), ctx)

    t = s + 1
    subs = {}
    if sign > 0:
        m = LaurentPoly.var(Muv(cm(s)), ctx)
        minv = m ** -1
        a, b = xv(t, s), xv(s, t)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                if i not in (s, t) and j not in (s, t):
                    img = xv(i, j)
                elif (i, j) == (s, t):
                    img = minv * a
                elif (i, j) == (t, s):
                    img = m * b
                elif j == t:
                    img = xv(i, s)
                elif j == s:
                    img = xv(i, t) - xv(i, s) * b
                elif i == t:
                    img = xv(s, j)
                else:  # i == s
                    img = xv(t, j) + minv * a * xv(s, j)
                subs[Xv(i, j)] = img
    else:
        m = LaurentPoly.var(Muv(cm(t)), ctx)
        minv = m ** -1
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                if i not in (s, t) and j not in (s, t):
                    img = xv(i, j)
                elif (i, j) == (s, t):
                    img = minv * xv(t, s)
                elif (i, j) == (t, s):
                    img = m * xv(s, t)
                elif j == s:
                    img = xv(i, t)
                elif j == t:
                    img = xv(i, s) + minv * xv(i, t) * xv(t, s)
                elif i == s:
                    img = xv(t, j)
                else:  # i == t
                    img = xv(s, j) - xv(s, t) * xv(t, j)
                subs[Xv(i, j)] = img
    relabel = tuple(t if p == s else s if p == t else p for p in range(1, n + 1))
    return TransportMap(n, s, sign, subs, relabel)


def transport_composite(b: BraidWord) -> dict:
    """Bottom-level standard cords as polynomials in top-level variables.

    Folds the half-twist transports left to right, so the result is
    S_{b_1}(S_{b_2}(... S_{b_l}(x))).
    """
    cm = components(b)
    ctx = Context(b.n, cm.r)
    levels = level_components(b)
    cur = {Xv(i, j): LaurentPoly.var(Xv(i, j), ctx)
           for i in range(1, b.n + 1) for j in range(1, b.n + 1) if i != j}
    for idx, (k, sign) in enumerate(b.pairs()):
        tm = half_twist_transport(k, sign, levels[idx], cm.r)
        cur = {v: substitute(img, cur) for v, img in tm.subs.items()}
    return cur


@dataclass(frozen=True)
class RelationSet:
    braid: BraidWord
    cm: ComponentMap
    closure: tuple
    longitude: tuple

    @property
    def ctx(self) -> Context:
        return Context(self.cm.n, self.cm.r)

    def all(self) -> list:
        return list(self.closure) + list(self.longitude)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "braid": format_braid(self.braid),
            "context": self.cm.to_json(),
            "closure": [render(p) for p in self.closure],
            "longitude": [render(p) for p in self.longitude],
        }


def _dedupe(polys) -> tuple:
    seen = set()
    out = []
    for p in polys:
        if p.is_zero() or p in seen or -p in seen:
            continue
        seen.add(p)
        out.append(p)
    return tuple(out)


def default_markers(cm: ComponentMap) -> dict:
    """Marker position of each component: its least top position."""
    return {c: cm.representative(c) for c in range(1, cm.r + 1)}


class _Closure:
    """Shared data for the relation generators."""

    def __init__(self, b: BraidWord, markers: Optional[dict] = None):
        self.b = b
        self.cm = components(b)
        self.ctx = Context(b.n, self.cm.r)
        self.cap = capping_words(b)
        self.markers = dict(default_markers(self.cm) if markers is None else markers)
        for c, q in self.markers.items():
            if self.cm(q) != c:
                raise ValueError(f"marker position {q} is not on component {c}")
        self.framing = {c: longitude_word(b, c, start=self.markers[c])
                        for c in range(1, self.cm.r + 1)}
        # bottom position whose gluing segment carries each marker
        self.marked = {self.cap.top.index(q) + 1: c for c, q in self.markers.items()}

    def x(self, i, j):
        if i == j:
            return 1 - LaurentPoly.var(Muv(self.cm(i)), self.ctx)
        return LaurentPoly.var(Xv(i, j), self.ctx)

    def factor(self, c: int, sign: int) -> LaurentPoly:
        """lam^sign * mu^(-sign*f) for component c."""
        f = self.framing[c][1]
        return (LaurentPoly.var(Lamv(c), self.ctx) ** sign) * (LaurentPoly.var(Muv(c), self.ctx) ** (-sign * f))

    def F(self, i, w, j):
        return reduce(CordExpr(i, w, j), self.cm)


def _slides(cl: _Closure, marked: bool) -> list:
    out = []
    for i in range(1, cl.b.n + 1):
        c = cl.marked.get(i)
        if bool(c) != marked:
            continue
        h = cl.cap.h[i - 1]
        top = cl.cap.top[i - 1]
        row = cl.factor(c, -1) if c else LaurentPoly.const(1, cl.ctx)
        col = cl.factor(c, 1) if c else LaurentPoly.const(1, cl.ctx)
        for j in range(1, cl.b.n + 1):
            out.append(cl.F(top, word_inverse(h), j) - row * cl.x(i, j))
            out.append(cl.F(j, h, top) - col * cl.x(j, i))
    return out


def closure_relations(b: BraidWord, markers: Optional[dict] = None) -> list:
    """Endpoint slides across the gluing disk away from the marked points."""
    return list(_dedupe(_slides(_Closure(b, markers), marked=False)))


def fixed_point_relations(b: BraidWord) -> list:
    """Phi_B(x_ij) - x_ij with bottom positions relabeled to top ones.

    Ignores framing and marked points, so lam never appears and the
    (mu, lam) projection of its solutions is all of (k*)^2r; kept only to
    document why the slide presentation above is used instead.
    """
    cl = _Closure(b)
    comp = transport_composite(b)
    top = cl.cap.top
    out = []
    for i in range(1, b.n + 1):
        for j in range(1, b.n + 1):
            if i == j:
                continue
            out.append(comp[Xv(i, j)] - cl.x(top[i - 1], top[j - 1]))
    return list(_dedupe(out))


def longitude_relations(b: BraidWord, markers: Optional[dict] = None) -> list:
    """Slides across the marked points, one strand at a time and once
    around each whole component."""
    cl = _Closure(b, markers)
    out = _slides(cl, marked=True)
    for c in range(1, cl.cm.r + 1):
        rho = cl.markers[c]
        word, _ = cl.framing[c]
        for j in range(1, b.n + 1):
            out.append(cl.F(rho, word_inverse(word), j) - cl.factor(c, -1) * cl.x(rho, j))
            out.append(cl.F(j, word, rho) - cl.factor(c, 1) * cl.x(j, rho))
    return list(_dedupe(out))


def all_relations(b: BraidWord, markers: Optional[dict] = None) -> RelationSet:
    """Closure and longitude relations; ``markers`` maps each component to
    the top position naming its marked point (default: least strand)."""
    cm = components(b)
    clo = _dedupe(closure_relations(b, markers))
    seen = set(clo)
    lon = tuple(p for p in _dedupe(longitude_relations(b, markers)) if p not in seen and -p not in seen)
    return RelationSet(b, cm, clo, lon)
