"""Markov moves on (braid, augmentation) pairs with explicit intertwiners.

Each move produces the target braid, the transported augmentation and a
formal matrix T sending combinations of source columns R_j to combinations
of target columns.  :func:`check_intertwiner` then confirms, in exact
arithmetic, that T descends to an isomorphism V -> V~ commuting with every
meridian.

Marked points.  The relations put each component's marked point on a
fixed gluing segment.  A conjugation drags that point along, so the cord
identities give an augmentation for the target braid with its marker in a
non-standard place.  Moving a marker along its component rescales
R -> D R D^-1 with D diagonal (``lam^-1 mu^f`` on the points it passes),
which is an isomorphism of representations; T absorbs D.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from . import linalg as la
from .augment import Augmentation, make_augmentation, verify, verify_numeric
from .braid import (BraidWord, ComponentMap, capping_words, closure_permutation, components,
                    format_braid, longitude_word)
from .poly import evaluate
from .relations import all_relations, default_markers, half_twist_transport
from .rep import act_word, build_rep

SCHEMA = "cordrep.markov/1"


class MoveError(ValueError):
    pass


@dataclass
class MoveRecord:
    kind: str
    source: BraidWord
    target: BraidWord
    source_aug: Augmentation
    target_aug: Augmentation
    T: tuple  # (n_target x n_source) formal matrix
    meridians: dict  # source strand t -> word in target meridians
    s: Optional[int] = None
    checks: dict = field(default_factory=dict)
    transported: Optional[Augmentation] = None  # before moving markers home

    def to_json(self) -> dict:
        F = self.source_aug.field
        return {
            "kind": self.kind,
            "s": self.s,
            "source": format_braid(self.source),
            "target": format_braid(self.target),
            "source_aug": self.source_aug.to_json(),
            "target_aug": self.target_aug.to_json(),
            "T": [[F.to_json(v) for v in row] for row in self.T],
            "meridians": {str(t): list(w) for t, w in sorted(self.meridians.items())},
            "transported": None if self.transported is None else self.transported.to_json(),
            "checks": dict(self.checks),
        }


# ------------------------------------------------------------- helpers

def _relabel_units(a: Augmentation, cm_src: ComponentMap, cm_tgt: ComponentMap, src_of):
    """mu, lam for the target's component numbering; ``src_of(t)`` is the
    source strand identified with target strand t."""
    corr = {}
    for t in range(1, cm_tgt.n + 1):
        c_src = cm_src(src_of(t))
        if corr.setdefault(cm_tgt(t), c_src) != c_src:
            raise MoveError("component correspondence is not well defined")
    mu = [a.mu[corr[c] - 1] for c in range(1, cm_tgt.r + 1)]
    lam = [a.lam[corr[c] - 1] for c in range(1, cm_tgt.r + 1)]
    return mu, lam, corr


def marker_rescaling(a: Augmentation, b: BraidWord, frm: dict, to: dict) -> list:
    """Diagonal D with D R D^-1 the augmentation for markers ``to``, given R
    for markers ``frm`` (both map component -> top position)."""
    F = a.field
    nxt = closure_permutation(b)
    d = [F.one()] * b.n
    for c, q in frm.items():
        q2 = to[c]
        if q == q2:
            continue
        f = longitude_word(b, c)[1]
        fac = F.mul(F.inv(a.lam[c - 1]), F.pow(a.mu[c - 1], f))
        p, stop = nxt[q - 1], nxt[q2 - 1]
        while p != stop:
            d[p - 1] = F.mul(d[p - 1], fac)
            p = nxt[p - 1]
    return d


def rescale(a: Augmentation, d: list) -> Augmentation:
    F = a.field
    n = a.n
    x = tuple(tuple(F.mul(F.mul(d[i], a.x[i][j]), F.inv(d[j])) for j in range(n)) for i in range(n))
    return Augmentation(F, a.mu, a.lam, x)


def _diag(F, d):
    n = len(d)
    return tuple(tuple(d[i] if i == j else F.zero() for j in range(n)) for i in range(n))


def _block(F, n: int, s: int, B2) -> tuple:
    """Identity with the 2x2 block ``B2`` at rows/columns s, s+1."""
    M = [list(r) for r in la.identity(F, n)]
    for u in range(2):
        for v in range(2):
            M[s - 1 + u][s - 1 + v] = B2[u][v]
    return tuple(tuple(r) for r in M)


# ------------------------------------------------------------- conjugation

def conjugate_move(b: BraidWord, a: Augmentation, s: int, sign: int = 1) -> MoveRecord:
    """Conjugate by a half twist at s.

    ``sign=+1`` gives the target sigma_s^-1 b sigma_s and transports the
    cords by the half-twist identities; ``sign=-1`` gives sigma_s b
    sigma_s^-1 and uses the inverse identities, undoing a ``+1`` move.
    """
    n = b.n
    if not 1 <= s <= n - 1:
        raise MoveError(f"twist index {s} out of range for {n} strands")
    F = a.field
    cm = components(b)
    a.check(cm)
    tm = half_twist_transport(s, sign, cm.comp, cm.r)
    asg = a.assignment()
    off = {(v.a, v.b): evaluate(img, asg, F) for v, img in tm.subs.items()}
    letter = s if sign > 0 else -s
    target = BraidWord(n, (-letter,) + b.letters + (letter,))
    cmt = components(target)
    swap = lambda t: s + 1 if t == s else s if t == s + 1 else t
    mu, lam, _ = _relabel_units(a, cm, cmt, swap)
    raw = make_augmentation(F, cmt, mu, lam, off)

    R, Rt = a.x, raw.x
    if sign > 0:
        x12, x21 = R[s - 1][s], R[s][s - 1]
        minv = F.inv(a.mu[cm(s) - 1])
        block_T = ((F.zero(), F.one()), (F.one(), x12))
        ML = _block(F, n, s, ((F.mul(x21, minv), F.one()), (F.one(), F.zero())))
        MR = _block(F, n, s, ((F.neg(x12), F.one()), (F.one(), F.zero())))
        row_col_ok = la.matmul(F, la.matmul(F, ML, R), MR) == Rt
        meridians = {t: (t,) for t in range(1, n + 1)}
        meridians[s] = (s + 1,)
        meridians[s + 1] = (-(s + 1), s, s + 1)
    else:
        # the inverse of the +1 move read from the target side
        y12, y21 = Rt[s - 1][s], Rt[s][s - 1]
        minv = F.inv(raw.mu[cmt(s) - 1])
        block_T = ((F.neg(y12), F.one()), (F.one(), F.zero()))
        ML = _block(F, n, s, ((F.mul(y21, minv), F.one()), (F.one(), F.zero())))
        MR = _block(F, n, s, ((F.neg(y12), F.one()), (F.one(), F.zero())))
        row_col_ok = la.matmul(F, la.matmul(F, ML, Rt), MR) == R
        meridians = {t: (t,) for t in range(1, n + 1)}
        meridians[s] = (s, s + 1, -s)
        meridians[s + 1] = (s,)
    T = _block(F, n, s, block_T)

    tracked = {cmt(swap(q)): swap(q) for q in default_markers(cm).values()}
    d = marker_rescaling(raw, target, tracked, default_markers(cmt))
    tgt = rescale(raw, d)
    rec = MoveRecord("conjugate" if sign > 0 else "conjugate_inverse", b, target, a, tgt,
                     la.matmul(F, _diag(F, d), T), meridians, s=s, transported=raw)
    rec.checks["row_column_ops"] = row_col_ok
    rec.checks["tracked_markers_verify"] = verify_numeric(target, raw, tracked).ok
    return rec


# ------------------------------------------------------------ stabilization

def stabilize_move(b: BraidWord, a: Augmentation, sign: int) -> MoveRecord:
    """Add strand n+1 and a half twist sigma_n^{sign} with it."""
    n = b.n
    F = a.field
    cm = components(b)
    a.check(cm)
    source = a
    # the formulas below need the marker of strand n's component on the
    # gluing segment into point n
    home = default_markers(cm)
    moved = dict(home)
    moved[cm(n)] = capping_words(b).top[n - 1]
    d_src = marker_rescaling(a, b, home, moved)
    a = rescale(a, d_src)
    target = BraidWord(n + 1, ((n if sign > 0 else -n),) + b.letters)
    cmt = components(target)
    src_of = lambda t: min(t, n)
    mu, lam, _ = _relabel_units(a, cm, cmt, src_of)
    m = a.mu[cm(n) - 1]
    minv = F.inv(m)
    R = a.x
    N = n + 1
    Rt = [[F.zero()] * N for _ in range(N)]
    for i in range(N):
        for j in range(N):
            si, sj = min(i, n - 1), min(j, n - 1)
            v = R[si][sj]
            if sign < 0:
                # column n scaled by mu, row n by mu^-1; corner [[x, mu^-1 x], [mu x, x]]
                if i == n - 1 and j == n:
                    v = F.mul(minv, v)
                elif i == n and j == n - 1:
                    v = F.mul(m, v)
                elif j == n - 1 and i < n - 1:
                    v = F.mul(m, v)
                elif i == n - 1 and j < n - 1:
                    v = F.mul(minv, v)
            else:
                # columns n, n+1 scaled by mu^-1, rows n, n+1 by mu
                if j >= n - 1 and i < n - 1:
                    v = F.mul(minv, v)
                elif i >= n - 1 and j < n - 1:
                    v = F.mul(m, v)
            Rt[i][j] = v
    off = {(i + 1, j + 1): Rt[i][j] for i in range(N) for j in range(N) if i != j}
    raw = make_augmentation(F, cmt, mu, lam, off)
    T = [[F.zero()] * n for _ in range(N)]
    for j in range(n - 1):
        T[j][j] = F.one()
    # R~_n = mu R~_{n+1} when sign < 0; for sign > 0 the two columns agree
    # and the rescaled copy of R_n is mu R~_{n+1}
    T[n][n - 1] = m if sign > 0 else F.one()
    meridians = {t: (t,) for t in range(1, n)}
    meridians[n] = (n + 1,)
    tracked = {cmt(q if q != n else n + 1): (q if q != n else n + 1) for q in moved.values()}
    d_tgt = marker_rescaling(raw, target, tracked, default_markers(cmt))
    tgt = rescale(raw, d_tgt)
    T = la.matmul(F, la.matmul(F, _diag(F, d_tgt), tuple(tuple(r) for r in T)), _diag(F, d_src))
    rec = MoveRecord("stab_pos" if sign > 0 else "stab_neg", b, target, source, tgt, T, meridians,
                     transported=raw)
    rec.checks["tracked_markers_verify"] = verify_numeric(target, raw, tracked).ok
    cols = raw.x
    if sign < 0:
        dep = all(cols[i][n - 1] == F.mul(m, cols[i][n]) for i in range(N))
    else:
        dep = all(cols[i][n - 1] == cols[i][n] for i in range(N))
    rec.checks["column_dependency"] = dep
    return rec


# ------------------------------------------------------------ verification

@dataclass
class IntertwinerReport:
    ok: bool
    target_verifies: bool
    rank_source: int
    rank_target: int
    descends: bool
    invertible: bool
    commutes: list
    checks: dict

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "target_verifies": self.target_verifies,
            "rank_source": self.rank_source,
            "rank_target": self.rank_target,
            "descends": self.descends,
            "invertible": self.invertible,
            "commutes": self.commutes,
            "checks": dict(self.checks),
        }


def check_intertwiner(rec: MoveRecord, target_rels=None) -> IntertwinerReport:
    F = rec.source_aug.field
    cm, cmt = components(rec.source), components(rec.target)
    if target_rels is not None:
        tv = verify(target_rels, rec.target_aug).ok
    else:
        tv = verify_numeric(rec.target, rec.target_aug).ok
    rep = build_rep(rec.source_aug, cm)
    rept = build_rep(rec.target_aug, cmt)
    R, Rt = rep.R, rept.R
    RtT = la.matmul(F, Rt, rec.T)  # images of the source spanning vectors
    # T descends iff every relation among the R_j is sent to a relation
    descends = all(all(F.is_zero(v) for v in la.matvec(F, RtT, z)) for z in la.nullspace(F, R))
    commutes = []
    invertible = False
    if descends and rep.dim == rept.dim:
        imgs = tuple(tuple(RtT[i][p] for p in rep.basis) for i in range(len(RtT)))
        try:
            L = la.solve_columns(F, Rt, rept.basis, imgs) if rep.dim else ()
            invertible = la.rank(F, L) == rep.dim if rep.dim else True
        except ValueError:
            L = None
        if L is not None and invertible:
            for t in range(1, rec.source.n + 1):
                lhs = la.matmul(F, act_word(rept, rec.meridians[t]), L, rep.dim) if rep.dim else ()
                rhs = la.matmul(F, L, rep.gens[t - 1], rep.dim) if rep.dim else ()
                commutes.append(lhs == rhs)
    ok = (tv and rep.dim == rept.dim and descends and invertible
          and len(commutes) == rec.source.n and all(commutes) and all(rec.checks.values()))
    return IntertwinerReport(ok, tv, rep.dim, rept.dim, descends, invertible, commutes, dict(rec.checks))


def apply_move(b: BraidWord, a: Augmentation, move: str) -> MoveRecord:
    """``conj:s``, ``conjinv:s``, ``stab+`` or ``stab-``."""
    if move.startswith("conj:") or move.startswith("conjinv:"):
        kind, _, k = move.partition(":")
        if not k.isdigit():
            raise ValueError(f"bad move {move!r}")
        return conjugate_move(b, a, int(k), 1 if kind == "conj" else -1)
    if move in ("stab+", "stab-"):
        return stabilize_move(b, a, 1 if move == "stab+" else -1)
    raise ValueError(f"unknown move {move!r}")


def random_moves(rng: random.Random, n: int, count: int, max_n: int = 4) -> list:
    out = []
    for _ in range(count):
        choices = []
        if n >= 2:
            choices += [f"conj:{k}" for k in range(1, n)] + [f"conjinv:{k}" for k in range(1, n)]
        if n < max_n:
            choices += ["stab+", "stab-"]
        if not choices:
            break
        mv = rng.choice(choices)
        out.append(mv)
        if mv.startswith("stab"):
            n += 1
    return out


@dataclass
class FuzzResult:
    ok: bool
    sequences: int
    moves: int
    failures: list

    def to_json(self) -> dict:
        return {"ok": self.ok, "sequences": self.sequences, "moves": self.moves,
                "failures": self.failures}


def fuzz(starts: list, count: int, seed: int, length: int = 3, max_n: int = 4) -> FuzzResult:
    """Apply ``count`` random move sequences to (braid, augmentation) pairs
    drawn from ``starts`` and check every intertwiner along the way."""
    rng = random.Random(seed)
    failures = []
    total = 0
    for k in range(count):
        b, a = starts[rng.randrange(len(starts))]
        seq = random_moves(rng, b.n, rng.randint(1, length), max_n)
        for mv in seq:
            rec = apply_move(b, a, mv)
            rep = check_intertwiner(rec)
            total += 1
            if not rep.ok:
                failures.append({"sequence": k, "braid": format_braid(b), "move": mv,
                                 "report": rep.to_json()})
                break
            b, a = rec.target, rec.target_aug
    return FuzzResult(not failures, count, total, failures)


def random_braid(rng: random.Random, max_n: int = 3, max_len: int = 6) -> BraidWord:
    n = rng.randint(1, max_n)
    if n == 1:
        return BraidWord(1, ())
    k = rng.randint(0, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(k)))


def random_start_pairs(seed: int, p: int = 3, braids: int = 12, max_n: int = 3,
                       max_len: int = 6) -> list:
    """Every F_p augmentation of a few seeded random braids.  Each braid is
    enumerated once, so repeated draws share the work."""
    from .augment import enumerate_fp

    rng = random.Random(seed)
    seen: dict = {}
    while len(seen) < braids:
        b = random_braid(rng, max_n, max_len)
        if b not in seen:
            seen[b] = enumerate_fp(all_relations(b), p).solutions
    return [(b, a) for b, sols in seen.items() for a in sols]
