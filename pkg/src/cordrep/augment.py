"""Augmentations: field-valued solutions of a relation set.

``verify`` evaluates through :func:`cordrep.poly.evaluate`; ``enumerate_fp``
uses its own vectorized numpy evaluator, so each can catch the other's bugs.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .braid import BraidWord, ComponentMap, components
from .fields import GF, QQ, FieldError, field_from_json
from .poly import LAM, MU, X, Lamv, Muv, Xv, evaluate, render
from .cordcalc import CordExpr, evaluate_cord
from .relations import RelationSet, _Closure
from .braid import word_inverse

SCHEMA = "cordrep.augmentation/1"


class AugmentationError(ValueError):
    pass


@dataclass(frozen=True)
class Augmentation:
    field: object
    mu: tuple
    lam: tuple
    x: tuple  # n x n, diagonal included

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def r(self) -> int:
        return len(self.mu)

    def assignment(self) -> dict:
        a = {}
        for c, v in enumerate(self.mu, 1):
            a[Muv(c)] = v
        for c, v in enumerate(self.lam, 1):
            a[Lamv(c)] = v
        for i, row in enumerate(self.x, 1):
            for j, v in enumerate(row, 1):
                a[Xv(i, j)] = v
        return a

    def check(self, cm: ComponentMap):
        F = self.field
        if self.n != cm.n or self.r != cm.r:
            raise AugmentationError(
                f"augmentation has n={self.n}, r={self.r}; braid has n={cm.n}, r={cm.r}")
        for c in range(self.r):
            if F.is_zero(self.mu[c]) or F.is_zero(self.lam[c]):
                raise AugmentationError("mu and lambda values must be nonzero")
        for i in range(1, self.n + 1):
            want = F.sub(F.one(), self.mu[cm(i) - 1])
            if self.x[i - 1][i - 1] != want:
                raise AugmentationError(f"x[{i}][{i}] must equal 1 - mu[{cm(i)}]")

    def to_json(self) -> dict:
        F = self.field
        d = {"schema": SCHEMA}
        d.update(F.describe())
        d["mu"] = [F.to_json(v) for v in self.mu]
        d["lambda"] = [F.to_json(v) for v in self.lam]
        d["x"] = [[F.to_json(v) for v in row] for row in self.x]
        return d

    @classmethod
    def from_json(cls, d: dict) -> "Augmentation":
        if not isinstance(d, dict):
            raise AugmentationError("augmentation JSON must be an object")
        try:
            F = field_from_json(d)
            mu = tuple(F.from_json(v) for v in d["mu"])
            lam = tuple(F.from_json(v) for v in d["lambda"])
            x = tuple(tuple(F.from_json(v) for v in row) for row in d["x"])
        except (KeyError, TypeError) as e:
            raise AugmentationError(f"malformed augmentation JSON: {e}") from e
        except FieldError as e:
            raise AugmentationError(str(e)) from e
        if len(mu) != len(lam) or any(len(row) != len(x) for row in x):
            raise AugmentationError("inconsistent augmentation shapes")
        return cls(F, mu, lam, x)


def make_augmentation(F, cm: ComponentMap, mu, lam, offdiag: dict) -> Augmentation:
    """Fill the diagonal from mu; ``offdiag`` maps (i, j) to values (default 0)."""
    mu = tuple(F(v) for v in mu)
    lam = tuple(F(v) for v in lam)
    x = []
    for i in range(1, cm.n + 1):
        row = []
        for j in range(1, cm.n + 1):
            if i == j:
                row.append(F.sub(F.one(), mu[cm(i) - 1]))
            else:
                row.append(F(offdiag.get((i, j), 0)))
        x.append(tuple(row))
    return Augmentation(F, mu, lam, tuple(x))


def trivial_augmentation(b: BraidWord, field=QQ) -> Augmentation:
    cm = components(b)
    return make_augmentation(field, cm, [1] * cm.r, [1] * cm.r, {})


@dataclass
class VerifyReport:
    ok: bool
    violated: list

    def to_json(self) -> dict:
        return {"ok": self.ok, "violated": self.violated}


def verify(rels: RelationSet, a: Augmentation) -> VerifyReport:
    a.check(rels.cm)
    F = a.field
    asg = a.assignment()
    bad = [render(p) for p in rels.all() if not F.is_zero(evaluate(p, asg, F))]
    return VerifyReport(not bad, bad)


def verify_numeric(b: BraidWord, a: Augmentation, markers: Optional[dict] = None) -> VerifyReport:
    """The checks of :func:`verify` evaluated directly on field values,
    without building the relation polynomials (fast for long braids)."""
    cl = _Closure(b, markers)
    a.check(cl.cm)
    F = a.field
    n = b.n

    def val(i, w, j):
        return evaluate_cord(CordExpr(i, w, j), cl.cm, F, a.x, a.mu)

    def factor(c, sign):
        f = cl.framing[c][1]
        return F.mul(F.pow(a.lam[c - 1], sign), F.pow(a.mu[c - 1], -sign * f))

    bad = []
    for i in range(1, n + 1):
        c = cl.marked.get(i)
        h, top = cl.cap.h[i - 1], cl.cap.top[i - 1]
        row = factor(c, -1) if c else F.one()
        col = factor(c, 1) if c else F.one()
        for j in range(1, n + 1):
            if val(top, word_inverse(h), j) != F.mul(row, a.x[i - 1][j - 1]):
                bad.append(f"row slide at bottom {i}, column {j}")
            if val(j, h, top) != F.mul(col, a.x[j - 1][i - 1]):
                bad.append(f"column slide at bottom {i}, row {j}")
    for c in range(1, cl.cm.r + 1):
        rho = cl.markers[c]
        word, _ = cl.framing[c]
        for j in range(1, n + 1):
            if val(rho, word_inverse(word), j) != F.mul(factor(c, -1), a.x[rho - 1][j - 1]):
                bad.append(f"longitude row slide on component {c}, column {j}")
            if val(j, word, rho) != F.mul(factor(c, 1), a.x[j - 1][rho - 1]):
                bad.append(f"longitude column slide on component {c}, row {j}")
    return VerifyReport(not bad, bad)


# ------------------------------------------------------------ enumeration

@dataclass
class Enumeration:
    solutions: list
    complete: bool
    evaluated: int
    space: int


def _offdiag(n: int):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


class _Compiled:
    """Relations split into x-monomial vectors and (mu, lam) scalar parts."""

    def __init__(self, rels: RelationSet, p: int):
        self.p = p
        self.n, self.r = rels.cm.n, rels.cm.r
        self.slots = {Xv(i, j): k for k, (i, j) in enumerate(_offdiag(self.n))}
        self.polys = []
        for poly in rels.all():
            groups: dict = {}
            for mono, c in poly.items():
                xs = tuple((self.slots[v], e) for v, e in mono if v.kind == X)
                units = tuple((v.kind, v.a, e) for v, e in mono if v.kind != X)
                groups.setdefault(xs, []).append((c % p, units))
            self.polys.append(list(groups.items()))

    def scalars(self, mu, lam):
        """Per relation, the list of (x-monomial, scalar coefficient mod p)."""
        p = self.p
        vals = {MU: mu, LAM: lam}
        out = []
        for groups in self.polys:
            row = []
            for xs, parts in groups:
                s = 0
                for c, units in parts:
                    t = c
                    for kind, idx, e in units:
                        t = t * pow(vals[kind][idx - 1], e, p) % p
                    s = (s + t) % p
                if s:
                    row.append((xs, s))
            out.append(row)
        return out


def _x_grid(m: int, p: int, limit: Optional[int] = None) -> np.ndarray:
    total = p ** m
    count = total if limit is None else min(limit, total)
    idx = np.arange(count, dtype=np.int64)
    cols = []
    for k in range(m - 1, -1, -1):
        cols.append((idx // p ** k) % p)
    return np.stack(cols, axis=1) if m else np.zeros((count, 0), dtype=np.int64)


def _solve_block(comp: _Compiled, mu, lam, grid: np.ndarray) -> np.ndarray:
    """Indices of grid rows solving every relation at fixed (mu, lam)."""
    p = comp.p
    alive = np.arange(grid.shape[0])
    sub = grid
    powcache: dict = {}
    for row in comp.scalars(mu, lam):
        if not alive.size:
            break
        acc = np.zeros(alive.size, dtype=np.int64)
        for xs, s in row:
            v = np.full(alive.size, s, dtype=np.int64)
            for slot, e in xs:
                key = (slot, e)
                if key not in powcache:
                    col = sub[:, slot]
                    pw = np.ones_like(col)
                    for _ in range(e):
                        pw = pw * col % p
                    powcache[key] = pw
                v = v * powcache[key] % p
            acc = (acc + v) % p
        keep = acc == 0
        alive = alive[keep]
        sub = sub[keep]
        powcache = {k: w[keep] for k, w in powcache.items()}
    return alive


def _units(p: int, r: int):
    return list(itertools.product(range(1, p), repeat=2 * r))


def _block_job(args):
    rels, p, ml, limit = args
    comp = _Compiled(rels, p)
    m = comp.n * (comp.n - 1)
    grid = _x_grid(m, p, limit)
    r = comp.r
    mu, lam = ml[0::2][:r], ml[1::2][:r]
    return [tuple(int(v) for v in grid[k]) for k in _solve_block(comp, mu, lam, grid)]


def enumerate_fp(rels: RelationSet, p: int, fix: Optional[dict] = None,
                 budget: Optional[int] = None, jobs: int = 1) -> Enumeration:
    """All F_p augmentations, exhaustively, in lexicographic order of
    (mu_1, lam_1, ..., mu_r, lam_r, x off-diagonal in row order).

    ``fix`` may pin ``{"mu": [...], "lambda": [...]}``.  ``budget`` caps the
    number of assignments evaluated; if it runs out the result is marked
    incomplete.
    """
    F = GF(p)
    cm = rels.cm
    n, r = cm.n, cm.r
    m = n * (n - 1)
    if fix is not None:
        mus = [F(v) for v in fix["mu"]]
        lams = [F(v) for v in fix["lambda"]]
        if len(mus) != r or len(lams) != r or any(v == 0 for v in mus + lams):
            raise AugmentationError("fixed mu/lambda must be r nonzero residues")
        outer = [tuple(v for pair in zip(mus, lams) for v in pair)]
    else:
        outer = _units(p, r)
    block = p ** m
    space = block * len(outer)
    jobs_list = []
    remaining = space if budget is None else budget
    for ml in outer:
        if remaining <= 0:
            break
        take = min(block, remaining)
        jobs_list.append((ml, None if take == block else take))
        remaining -= take
    evaluated = sum(block if lim is None else lim for _, lim in jobs_list)
    args = [(rels, p, ml, lim) for ml, lim in jobs_list]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_block_job, args))
    else:
        comp = _Compiled(rels, p)
        full = _x_grid(m, p)
        results = []
        for ml, lim in jobs_list:
            grid = full if lim is None else full[:lim]
            results.append([tuple(int(v) for v in grid[k])
                            for k in _solve_block(comp, ml[0::2], ml[1::2], grid)])
    sols = []
    pairs = _offdiag(n)
    for (ml, _), xs in zip(jobs_list, results):
        for xv in xs:
            sols.append(make_augmentation(F, cm, ml[0::2], ml[1::2], dict(zip(pairs, xv))))
    return Enumeration(sols, evaluated == space, evaluated, space)


def mu_lambda_points(sols: Sequence[Augmentation]) -> list:
    """Sorted distinct (mu_1, lam_1, ..., mu_r, lam_r) projections."""
    return sorted({tuple(v for pair in zip(a.mu, a.lam) for v in pair) for a in sols})
