"""Structural properties of augmentation representations.

Hypotheses about *all* cords are checked on standard cords only.  By the
support lemma in :mod:`cordrep.cordcalc`, each monomial of a cord from a
strand of K' carries a factor x_t. with t on K', so every cord starting on
K' vanishes iff the rows of R for K' vanish (and symmetrically for cords
ending on K' and columns).  A mixed cord between K_1 and K_2 starts on one
and ends on the other, so all of them vanish iff both off-diagonal blocks
of R vanish: a monomial of a cord from K_1 to K_2 has an x_{t.} with t in
K_1 and walks by shared indices to an x_{.u} with u in K_2, so inside it
some adjacent pair crosses from K_1 to K_2.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .augment import Augmentation
from .braid import BraidWord, ComponentMap, components, delete_strands
from .rep import AugRep, build_rep, check_link_relations, rep_from_matrix


class PartitionError(ValueError):
    pass


def _strands(cm: ComponentMap, comps) -> list:
    return [t for t in range(1, cm.n + 1) if cm(t) in set(comps)]


def _check_sublink(cm: ComponentMap, comps, proper: bool):
    s = set(comps)
    if not s or not s <= set(range(1, cm.r + 1)):
        raise PartitionError(f"sublink {sorted(s)} must be a nonempty set of components 1..{cm.r}")
    if proper and len(s) == cm.r:
        raise PartitionError("sublink must be a proper subset")


# ------------------------------------------------------------ simpleness

@dataclass
class SimplenessReport:
    ok: bool
    ranks: list
    witnesses: list  # per strand: coordinates of R_t spanning im(I - rho(m_t)), or None

    def to_json(self, F) -> dict:
        return {
            "ok": self.ok,
            "ranks": self.ranks,
            "witnesses": [None if w is None else [F.to_json(v) for v in w] for w in self.witnesses],
        }


def is_microlocally_simple(rep: AugRep) -> SimplenessReport:
    """Is every I - rho(m_t) of rank at most one?"""
    F = rep.field
    ranks, wits = [], []
    for t in range(rep.n):
        d = la.sub(F, rep.identity(), rep.gens[t])
        k = la.rank(F, d) if rep.dim else 0
        ranks.append(k)
        wits.append(tuple(rep.coords[i][t] for i in range(rep.dim)) if k else None)
    return SimplenessReport(all(k <= 1 for k in ranks), ranks, wits)


def meridian_difference_ranks(F, gens) -> list:
    """rank(I - g) for arbitrary square matrices; used for negative controls."""
    return [la.rank(F, la.sub(F, la.identity(F, len(g)), g)) if g else 0 for g in gens]


# ------------------------------------------------------------ vanishing

@dataclass
class VanishingReport:
    sublink: list
    hypothesis_row: bool
    hypothesis_col: bool
    conclusion: bool

    @property
    def holds(self) -> bool:
        return not (self.hypothesis_row or self.hypothesis_col) or self.conclusion

    def to_json(self) -> dict:
        return {
            "sublink": self.sublink,
            "hypothesis_row": self.hypothesis_row,
            "hypothesis_col": self.hypothesis_col,
            "conclusion": self.conclusion,
            "implication_holds": self.holds,
        }


def check_vanishing(a: Augmentation, rep: AugRep, sublink) -> VanishingReport:
    """Cords from (or to) K' all vanish => K' meridians act trivially."""
    cm = rep.cm
    _check_sublink(cm, sublink, proper=False)
    F = a.field
    ts = _strands(cm, sublink)
    row = all(F.is_zero(a.x[t - 1][j]) for t in ts for j in range(a.n))
    col = all(F.is_zero(a.x[j][t - 1]) for t in ts for j in range(a.n))
    concl = all(la.is_identity(F, rep.gens[t - 1]) for t in ts)
    return VanishingReport(sorted(set(sublink)), row, col, concl)


# ------------------------------------------------------------ separability

@dataclass
class SeparabilityReport:
    parts: tuple
    mixed_zero: bool
    dims: tuple = ()
    decomposition: bool = False
    sub_link_relations: tuple = ()

    @property
    def holds(self) -> bool:
        return not self.mixed_zero or (self.decomposition and all(self.sub_link_relations))

    def to_json(self) -> dict:
        return {
            "parts": [list(p) for p in self.parts],
            "mixed_zero": self.mixed_zero,
            "dims": list(self.dims),
            "decomposition": self.decomposition,
            "sub_link_relations": list(self.sub_link_relations),
        }


def _sub_rep(F, a: Augmentation, b: BraidWord, strands: list) -> tuple:
    idx = [t - 1 for t in strands]
    R = tuple(tuple(a.x[i][j] for j in idx) for i in idx)
    sub_b = delete_strands(b, strands)
    scm = components(sub_b)
    cm = components(b)
    # component of each kept strand in the full link, for mu
    full = [cm(t) for t in strands]
    basis, coords, gens, gens_inv = rep_from_matrix(F, R, lambda u: a.mu[full[u - 1] - 1])
    return AugRep(F, len(strands), len(basis), basis, coords, gens, gens_inv, scm, R), sub_b


def check_separability(a: Augmentation, rep: AugRep, b: BraidWord, part1) -> SeparabilityReport:
    """Split the link into K_1 = ``part1`` and the rest.

    The strands of K_1 must be 1..s (see :func:`order_partition`).  When
    every mixed cord vanishes, checks that V is the direct sum of the
    representations of the two diagonal blocks, compatibly with every
    meridian, and that each summand is a representation of its sublink.
    """
    cm = rep.cm
    _check_sublink(cm, part1, proper=True)
    F = a.field
    k1 = _strands(cm, part1)
    s = len(k1)
    if k1 != list(range(1, s + 1)):
        raise PartitionError("partition is not ordered: K_1 must occupy strands 1..s")
    k2 = list(range(s + 1, cm.n + 1))
    parts = (tuple(sorted(set(part1))), tuple(sorted({cm(t) for t in k2})))
    mixed = all(F.is_zero(a.x[i - 1][j - 1]) and F.is_zero(a.x[j - 1][i - 1]) for i in k1 for j in k2)
    if not mixed:
        return SeparabilityReport(parts, False)
    rep1, b1 = _sub_rep(F, a, b, k1)
    rep2, b2 = _sub_rep(F, a, b, k2)
    links = (check_link_relations(rep1, b1).ok, check_link_relations(rep2, b2).ok)
    d1, d2 = rep1.dim, rep2.dim
    # phi: V_1 + V_2 -> V, R~_j -> R_j, written in pivot coordinates
    images = []
    for sub, offset in ((rep1, 0), (rep2, s)):
        for p in sub.basis:
            images.append(offset + p)
    dec = d1 + d2 == rep.dim
    if dec and rep.dim:
        cols = tuple(tuple(rep.coords[i][j] for j in images) for i in range(rep.dim))
        phi = cols  # dim x (d1 + d2)
        dec = la.rank(F, phi) == rep.dim
        if dec:
            for t in range(1, cm.n + 1):
                blk = _direct_sum(F, rep1.gens[t - 1] if t <= s else rep1.identity(),
                                  rep2.gens[t - s - 1] if t > s else rep2.identity())
                lhs = la.matmul(F, rep.gens[t - 1], phi)
                rhs = la.matmul(F, phi, blk, d1 + d2)
                if lhs != rhs:
                    dec = False
                    break
            # phi respects every relation among the block columns
            if dec:
                both = tuple(tuple(rep1.coords[i][j] if j < s else F.zero() for j in range(cm.n))
                             for i in range(d1)) + \
                       tuple(tuple(rep2.coords[i][j - s] if j >= s else F.zero() for j in range(cm.n))
                             for i in range(d2))
                dec = la.matmul(F, phi, both, d1 + d2) == rep.coords
    return SeparabilityReport(parts, True, (d1, d2), dec, links)


def _direct_sum(F, A, B) -> tuple:
    p, q = len(A), len(B)
    z = F.zero()
    top = tuple(tuple(A[i]) + (z,) * q for i in range(p))
    bot = tuple((z,) * p + tuple(B[i]) for i in range(q))
    return top + bot


def order_partition(b: BraidWord, a: Augmentation, part1):
    """Conjugate until the strands of ``part1`` come first, carrying the
    augmentation along.  Returns ``(b', a', part1')`` with components
    renumbered for b'."""
    from .markov import conjugate_move  # markov imports rep; keep props light

    cm = components(b)
    _check_sublink(cm, part1, proper=True)
    inside = [cm(t) in set(part1) for t in range(1, b.n + 1)]
    while True:
        k = next((k for k in range(1, b.n) if not inside[k - 1] and inside[k]), None)
        if k is None:
            break
        a = conjugate_move(b, a, k).target_aug
        b = BraidWord(b.n, (-k,) + b.letters + (k,))
        inside[k - 1], inside[k] = inside[k], inside[k - 1]
    cm2 = components(b)
    return b, a, sorted({cm2(t) for t in range(1, b.n + 1) if inside[t - 1]})


def two_partitions(r: int) -> list:
    """Unordered splits {K_1, K_2} of the components, K_1 holding component 1."""
    out = []
    for mask in range(1 << (r - 1)):
        k1 = [1] + [c for c in range(2, r + 1) if mask >> (c - 2) & 1]
        if len(k1) < r:
            out.append(k1)
    return out


def separability_any_order(b: BraidWord, a: Augmentation, part1) -> SeparabilityReport:
    b2, a2, p2 = order_partition(b, a, part1)
    cm2 = components(b2)
    rep2 = build_rep(a2, cm2)
    rep = check_separability(a2, rep2, b2, p2)
    # report the parts in the caller's numbering
    cm = components(b)
    rest = tuple(sorted(set(range(1, cm.r + 1)) - set(part1)))
    rep.parts = (tuple(sorted(set(part1))), rest)
    return rep
