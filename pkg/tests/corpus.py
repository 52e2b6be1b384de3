"""Braids and cached enumerations shared by the test modules."""

from functools import lru_cache

from cordrep.augment import enumerate_fp
from cordrep.braid import parse_braid
from cordrep.relations import all_relations

UNKNOT = "n=1;"
HOPF = "n=2; 1 1"
TREFOIL = "n=2; 1 1 1"
WHITEHEAD = "n=3; 1 1 2 2 -1 -2 -2"
UNLINK2 = "n=2;"


@lru_cache(maxsize=None)
def rels(text):
    return all_relations(parse_braid(text))


@lru_cache(maxsize=None)
def solutions(text, p):
    return tuple(enumerate_fp(rels(text), p).solutions)


def in_vb(mu1, lam1, mu2, lam2, p):
    return (1 - lam1) * (1 - mu1) % p == 0 and (1 - lam2) * (1 - mu2) % p == 0


def in_va(mu1, lam1, mu2, lam2, p):
    return mu1 == lam2 and mu2 == lam1
