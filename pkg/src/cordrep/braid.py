"""Braid words, closure combinatorics and the Artin action on meridian words.

Letters are signed integers: ``k`` is the half twist sigma_k, ``-k`` its
inverse.  Free-group words in the meridians m_1..m_n use the same encoding:
``t`` is m_t and ``-t`` is m_t^{-1}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

FreeWord = tuple  # tuple of nonzero signed ints, freely reduced


class BraidParseError(ValueError):
    pass


def free_reduce(letters: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def word_inverse(w: Sequence[int]) -> FreeWord:
    return tuple(-a for a in reversed(w))


def word_mul(*ws: Sequence[int]) -> FreeWord:
    return free_reduce(a for w in ws for a in w)


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(a) for a in w)


def exponent_sums(w: Sequence[int], n: int) -> list[int]:
    """Abelianization: exponent sum of each generator m_1..m_n."""
    out = [0] * (n + 1)
    for a in w:
        out[abs(a)] += 1 if a > 0 else -1
    return out[1:]


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise BraidParseError("strand count must be at least 1")
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        for a in self.letters:
            if a == 0 or abs(a) > self.n - 1:
                raise BraidParseError(f"letter {a} out of range for {self.n} strands")

    def __str__(self):
        return format_braid(self)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, word_inverse(self.letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def pairs(self):
        """Letters as (k, sign) pairs."""
        return [(abs(a), 1 if a > 0 else -1) for a in self.letters]


_BRAID_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*;(.*)$", re.S)


def parse_braid(text: str) -> BraidWord:
    m = _BRAID_RE.match(text)
    if not m:
        raise BraidParseError(f"expected 'n=<int>; <letters>', got {text!r}")
    n = int(m.group(1))
    letters = []
    for tok in m.group(2).split():
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise BraidParseError(f"malformed letter {tok!r}")
        letters.append(int(tok))
    return BraidWord(n, tuple(letters))


def format_braid(b: BraidWord) -> str:
    if not b.letters:
        return f"n={b.n};"
    return f"n={b.n}; " + " ".join(str(a) for a in b.letters)


# ------------------------------------------------------------ permutations

def closure_permutation(b: BraidWord) -> tuple:
    """Where each strand ends: ``perm[i-1]`` is the bottom position of the
    strand starting at top position ``i``.  Signs are irrelevant."""
    pos = list(range(1, b.n + 1))  # pos[i-1] = current position of strand from top i
    where = {i: i for i in pos}  # position -> strand
    for a in b.letters:
        k = abs(a)
        s1, s2 = where[k], where[k + 1]
        where[k], where[k + 1] = s2, s1
    perm = [0] * b.n
    for p, s in where.items():
        perm[s - 1] = p
    return tuple(perm)


@dataclass(frozen=True)
class ComponentMap:
    n: int
    r: int
    comp: tuple  # comp[i-1] = component of strand i (top position)

    def __call__(self, i: int) -> int:
        return self.comp[i - 1]

    def strands(self, c: int) -> list[int]:
        return [i for i in range(1, self.n + 1) if self.comp[i - 1] == c]

    def representative(self, c: int) -> int:
        return self.strands(c)[0]

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "comp": list(self.comp)}


def components(b: BraidWord) -> ComponentMap:
    perm = closure_permutation(b)
    comp = [0] * b.n
    r = 0
    for start in range(1, b.n + 1):
        if comp[start - 1]:
            continue
        r += 1
        i = start
        while not comp[i - 1]:
            comp[i - 1] = r
            i = perm[i - 1]
    return ComponentMap(b.n, r, tuple(comp))


def level_components(b: BraidWord) -> list[tuple]:
    """Component of the strand at each position, level by level.

    ``out[k][i-1]`` is the component at position i after the first k letters.
    """
    cm = components(b)
    cur = list(cm.comp)
    out = [tuple(cur)]
    for a in b.letters:
        k = abs(a)
        cur[k - 1], cur[k] = cur[k], cur[k - 1]
        out.append(tuple(cur))
    return out


def crossings(b: BraidWord):
    """Per letter: (sign, component of the strand at k, component at k+1)."""
    levels = level_components(b)
    out = []
    for idx, a in enumerate(b.letters):
        k = abs(a)
        lv = levels[idx]
        out.append((1 if a > 0 else -1, lv[k - 1], lv[k]))
    return out


def linking_numbers(b: BraidWord):
    """Return ``(lk, self_writhe)``: ``lk[(c, d)]`` for c != d (symmetric) and
    ``self_writhe[c]``.  Components are numbered from 1."""
    cm = components(b)
    twice = {}
    writhe = {c: 0 for c in range(1, cm.r + 1)}
    for sign, c, d in crossings(b):
        if c == d:
            writhe[c] += sign
        else:
            twice[(c, d)] = twice.get((c, d), 0) + sign
            twice[(d, c)] = twice.get((d, c), 0) + sign
    lk = {}
    for c in range(1, cm.r + 1):
        for d in range(1, cm.r + 1):
            if c != d:
                t = twice.get((c, d), 0)
                assert t % 2 == 0
                lk[(c, d)] = t // 2
    return lk, writhe


def sort_ordered_partition(b: BraidWord):
    """Conjugate ``b`` until its component function is non-decreasing.

    Returns ``(b', relabel)`` with ``relabel[i-1]`` the position in ``b'``
    of the strand at position ``i`` of ``b``.  Each step swaps two adjacent
    out-of-order strands with the conjugation sigma_k^{-1} b sigma_k, which
    preserves the closure.
    """
    cur = b
    relabel = list(range(1, b.n + 1))
    while True:
        comp = components(cur).comp
        k = next((k for k in range(1, cur.n) if comp[k - 1] > comp[k]), None)
        if k is None:
            return cur, tuple(relabel)
        cur = BraidWord(cur.n, (-k,) + cur.letters + (k,))
        relabel = [k + 1 if p == k else k if p == k + 1 else p for p in relabel]


# ------------------------------------------------------------ Artin action

def _letter_images(k: int, sign: int) -> dict:
    if sign > 0:
        return {k: (k, k + 1, -k), k + 1: (k,)}
    return {k: (k + 1,), k + 1: (-(k + 1), k, k + 1)}


def substitute_word(w: Sequence[int], images: dict) -> FreeWord:
    """Apply the endomorphism m_t -> images[t] (missing t fixed)."""
    out = []
    for a in w:
        img = images.get(abs(a), (abs(a),))
        out.extend(img if a > 0 else word_inverse(img))
    return free_reduce(out)


def artin_letter(w: Sequence[int], k: int, sign: int) -> FreeWord:
    return substitute_word(w, _letter_images(k, sign))


def artin_images(b: BraidWord) -> dict:
    """Images of every meridian under the automorphism of ``b``.

    Letters are folded in left to right: after reading sigma_k the current
    images W are replaced by phi_k(m_t) with each m_u replaced by W_u.  The
    result is phi_{b_1} o phi_{b_2} o ... o phi_{b_l}.
    """
    imgs = {t: (t,) for t in range(1, b.n + 1)}
    for k, sign in b.pairs():
        step = _letter_images(k, sign)
        imgs = {t: substitute_word(step.get(t, (t,)), imgs) for t in imgs}
    return imgs


def artin_braid(w: Sequence[int], b: BraidWord) -> FreeWord:
    return substitute_word(w, artin_images(b))


@dataclass(frozen=True)
class CappingData:
    """Capping paths at the bottom of a braid, pushed up to the top.

    The capping path of bottom position i is homotopic to ``h[i-1]`` followed
    by the top capping path of position ``top[i-1]``; ``h`` is a word in the
    top-level meridians.
    """
    n: int
    h: tuple
    top: tuple

    def meridian(self, i: int) -> FreeWord:
        return word_mul(self.h[i - 1], (self.top[i - 1],), word_inverse(self.h[i - 1]))


def capping_words(b: BraidWord) -> CappingData:
    n = b.n
    h = [() for _ in range(n)]
    top = list(range(1, n + 1))
    for k, sign in b.pairs():
        s = k - 1
        hs, ht = h[s], h[s + 1]
        ws = word_mul(hs, (top[s],), word_inverse(hs))
        wt = word_mul(ht, (top[s + 1],), word_inverse(ht))
        if sign > 0:
            h[s], h[s + 1] = word_mul(ws, ht), hs
        else:
            h[s], h[s + 1] = ht, word_mul(word_inverse(wt), hs)
        top[s], top[s + 1] = top[s + 1], top[s]
    return CappingData(n, tuple(h), tuple(top))


def longitude_word(b: BraidWord, c: int, start: int | None = None):
    """Meridian word of the blackboard longitude of component ``c``, read
    from top position ``start`` (default: its least strand), and the framing
    exponent f with ``word * m_start^f`` the Seifert longitude."""
    cm = components(b)
    if not 1 <= c <= cm.r:
        raise ValueError(f"component {c} out of range")
    cap = capping_words(b)
    rho = cm.representative(c) if start is None else start
    if cm(rho) != c:
        raise ValueError(f"strand {rho} is not on component {c}")
    word: tuple = ()
    i = rho
    while True:
        word = word_mul(word, cap.h[i - 1])
        i = cap.top[i - 1]
        if i == rho:
            break
    sums = exponent_sums(word, b.n)
    own = sum(sums[t - 1] for t in cm.strands(c))
    return word, -own


def delete_strands(b: BraidWord, keep: Sequence[int]) -> BraidWord:
    """Sub-braid on the strands of a sublink, by top position.

    ``keep`` must be a union of closure cycles.  Letters whose two strands
    are not both kept are dropped; the rest are re-indexed.
    """
    keep_set = set(keep)
    # strand identity by top position; track positions through the braid
    where = list(range(1, b.n + 1))  # where[p-1] = top-label of strand at position p
    out = []
    for a in b.letters:
        k = abs(a)
        s1, s2 = where[k - 1], where[k]
        if s1 in keep_set and s2 in keep_set:
            kept_before = sum(1 for q in where[:k - 1] if q in keep_set)
            out.append((kept_before + 1) * (1 if a > 0 else -1))
        where[k - 1], where[k] = s2, s1
    return BraidWord(len(keep_set), tuple(out))
