"""The augmentation representation of the link group.

V is the column space of R = (x_ij).  The meridian m_t acts on the ambient
space k^n by v -> v - v_t R_t, which sends each column R_j to
R_j - x_tj R_t; its inverse is v -> v + mu_{c(t)}^-1 v_t R_t.  Both
preserve V, and we record them in coordinates of the leftmost pivot
columns of R.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .augment import Augmentation
from .braid import BraidWord, ComponentMap, artin_images

SCHEMA = "cordrep.rep/1"


class RepError(RuntimeError):
    pass


def r_matrix(a: Augmentation):
    return tuple(tuple(row) for row in a.x)


@dataclass(frozen=True)
class AugRep:
    field: object
    n: int
    dim: int
    basis: tuple  # 0-based pivot columns of R
    coords: tuple  # dim x n: column j holds the coordinates of R_j
    gens: tuple
    gens_inv: tuple
    cm: ComponentMap
    R: tuple

    def identity(self):
        return la.identity(self.field, self.dim)

    def to_json(self) -> dict:
        F = self.field
        enc = lambda M: [[F.to_json(v) for v in row] for row in M]
        return {
            "rank": self.dim,
            "basis": [p + 1 for p in self.basis],
            "coords": enc(self.coords),
            "gens": [enc(g) for g in self.gens],
        }


def rep_from_matrix(F, R, mu_of_strand) -> tuple:
    """(basis, coords, gens, gens_inv) for the column space of ``R``.

    ``mu_of_strand(t)`` is the meridian eigenvalue at strand t (1-based).
    """
    n = len(R)
    _, basis = la.rref(F, R)
    dim = len(basis)
    coords = la.solve_columns(F, R, basis, R) if dim else ()
    gens, gens_inv = [], []
    for t in range(n):
        # row t of R restricted to basis columns
        row = [R[t][p] for p in basis]
        ct = [coords[k][t] for k in range(dim)]
        minv = F.inv(mu_of_strand(t + 1))
        g, gi = [], []
        for a in range(dim):
            g.append(tuple(F.sub(F.one() if a == b else F.zero(), F.mul(ct[a], row[b])) for b in range(dim)))
            gi.append(tuple(F.add(F.one() if a == b else F.zero(), F.mul(minv, F.mul(ct[a], row[b]))) for b in range(dim)))
        g, gi = tuple(g), tuple(gi)
        if dim and not la.is_identity(F, la.matmul(F, g, gi, dim)):
            raise RepError(f"meridian {t + 1} does not act invertibly; input is not an augmentation")
        gens.append(g)
        gens_inv.append(gi)
    return tuple(basis), coords, tuple(gens), tuple(gens_inv)


def build_rep(a: Augmentation, cm: ComponentMap) -> AugRep:
    a.check(cm)
    F = a.field
    R = r_matrix(a)
    basis, coords, gens, gens_inv = rep_from_matrix(F, R, lambda t: a.mu[cm(t) - 1])
    return AugRep(F, cm.n, len(basis), basis, coords, gens, gens_inv, cm, R)


def act_word(rep: AugRep, w) -> tuple:
    """Matrix of a meridian word; ``act_word(uv) = act_word(u) act_word(v)``."""
    F = rep.field
    M = rep.identity()
    for a in w:
        if not 1 <= abs(a) <= rep.n:
            raise IndexError(f"generator {a} out of range")
        G = rep.gens[a - 1] if a > 0 else rep.gens_inv[-a - 1]
        M = la.matmul(F, M, G, rep.dim)
    return M


@dataclass
class LinkCheck:
    ok: bool
    per_strand: list

    def to_json(self) -> dict:
        return {"ok": self.ok, "per_strand": self.per_strand}


def check_link_relations(rep: AugRep, b: BraidWord) -> LinkCheck:
    """Does the action factor through the closure's group, i.e. does each
    meridian agree with its image under the braid automorphism?"""
    if b.n != rep.n:
        raise ValueError("braid and representation have different strand counts")
    imgs = artin_images(b)
    verdicts = [act_word(rep, imgs[t]) == rep.gens[t - 1] for t in range(1, b.n + 1)]
    return LinkCheck(all(verdicts), verdicts)
