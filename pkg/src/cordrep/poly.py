"""Integer-coefficient Laurent polynomials in cord variables.

Variables are the standard-cord values ``x[i][j]`` (polynomial) and the
units ``lam[c]``, ``mu[c]`` (Laurent).  Polynomials are immutable and kept
in canonical form, so ``==`` is structural equality.

Text form::

    1 - mu[1]
    x[1][2]*mu[1]^-1 - 2*x[1][3]*x[3][2]
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Optional

X, LAM, MU = 0, 1, 2
_KIND_NAMES = {X: "x", LAM: "lam", MU: "mu"}


class ContextError(ValueError):
    """Polynomials from different (n, r) contexts were combined."""


class SubstitutionError(ValueError):
    pass


class EvaluationError(ValueError):
    pass


class PolyParseError(ValueError):
    pass


class Context(NamedTuple):
    n: int
    r: int


class VarId(NamedTuple):
    kind: int
    a: int
    b: int = 0

    def __str__(self):
        if self.kind == X:
            return f"x[{self.a}][{self.b}]"
        return f"{_KIND_NAMES[self.kind]}[{self.a}]"

    @property
    def is_laurent(self) -> bool:
        return self.kind != X

    def check(self, ctx: Context):
        if self.kind == X:
            ok = 1 <= self.a <= ctx.n and 1 <= self.b <= ctx.n
        else:
            ok = 1 <= self.a <= ctx.r
        if not ok:
            raise ContextError(f"{self} outside context n={ctx.n}, r={ctx.r}")


def Xv(i: int, j: int) -> VarId:
    return VarId(X, i, j)


def Muv(c: int) -> VarId:
    return VarId(MU, c)


def Lamv(c: int) -> VarId:
    return VarId(LAM, c)


# A monomial is a sorted tuple of (VarId, nonzero exponent) pairs.
Monomial = tuple
ONE: Monomial = ()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(abs(e) for _, e in m)


def _sort_key(m: Monomial):
    return (mono_degree(m), m)


def _merge_ctx(a: Optional[Context], b: Optional[Context]) -> Optional[Context]:
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise ContextError(f"context mismatch: {tuple(a)} vs {tuple(b)}")


class LaurentPoly:
    __slots__ = ("_terms", "_ctx", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None,
                 ctx: Optional[Context] = None, _trusted: bool = False):
        if _trusted:
            clean = terms
        else:
            clean = {}
            for m, c in (terms or {}).items():
                if not c:
                    continue
                m = tuple(sorted((v, e) for v, e in m if e))
                for v, e in m:
                    if v.kind == X and e < 0:
                        raise ValueError(f"negative exponent on {v}")
                s = clean.get(m, 0) + int(c)
                if s:
                    clean[m] = s
                else:
                    clean.pop(m, None)
        if ctx is not None:
            ctx = Context(*ctx)
            for m in clean:
                for v, _ in m:
                    v.check(ctx)
        self._terms = clean
        self._ctx = ctx
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: int, ctx=None) -> "LaurentPoly":
        return cls({ONE: c} if c else {}, ctx, _trusted=True)

    @classmethod
    def var(cls, v: VarId, ctx=None) -> "LaurentPoly":
        return cls({((v, 1),): 1}, ctx)

    @property
    def ctx(self) -> Optional[Context]:
        return self._ctx

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical (graded lexicographic) order."""
        for m in sorted(self._terms, key=_sort_key):
            yield m, self._terms[m]

    def with_ctx(self, ctx) -> "LaurentPoly":
        return LaurentPoly(self._terms, ctx, _trusted=True) if ctx is None else LaurentPoly(self._terms, ctx)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def constant_value(self) -> Optional[int]:
        """The integer value if the polynomial is constant, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and ONE in self._terms:
            return self._terms[ONE]
        return None

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        ctx = _merge_ctx(self._ctx, other._ctx)
        t = dict(self._terms)
        for m, c in other._terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return LaurentPoly(t, ctx, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self._terms.items()}, self._ctx, _trusted=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        ctx = _merge_ctx(self._ctx, other._ctx)
        t: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        return LaurentPoly(t, ctx, _trusted=True)

    __rmul__ = __mul__

    def is_unit_monomial(self) -> bool:
        if len(self._terms) != 1:
            return False
        (m, c), = self._terms.items()
        return c in (1, -1) and all(v.kind != X for v, _ in m)

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_unit_monomial():
                raise ValueError("only unit monomials have inverses")
            (m, c), = self._terms.items()
            inv = LaurentPoly({tuple((v, -k) for v, k in m): c}, self._ctx, _trusted=True)
            return inv ** (-e)
        out = LaurentPoly.const(1, self._ctx)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self):
        return f"LaurentPoly({render(self)!r})"

    def __str__(self):
        return render(self)


def x(i: int, j: int, ctx=None) -> LaurentPoly:
    return LaurentPoly.var(Xv(i, j), ctx)


def mu(c: int, ctx=None) -> LaurentPoly:
    return LaurentPoly.var(Muv(c), ctx)


def lam(c: int, ctx=None) -> LaurentPoly:
    return LaurentPoly.var(Lamv(c), ctx)


def const(c: int, ctx=None) -> LaurentPoly:
    return LaurentPoly.const(c, ctx)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def substitute(p: LaurentPoly, s: Mapping[VarId, LaurentPoly]) -> LaurentPoly:
    """Apply the ring homomorphism sending each variable ``v`` to ``s[v]``.

    Variables missing from ``s`` are fixed.  A variable carrying a negative
    exponent must be sent to a unit monomial.
    """
    ctx = p.ctx
    for img in s.values():
        if isinstance(img, LaurentPoly):
            ctx = _merge_ctx(ctx, img.ctx)
    powers: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            img = s.get(v)
            if img is None:
                powers[key] = LaurentPoly({((v, e),): 1}, _trusted=True)
            else:
                if isinstance(img, int):
                    img = LaurentPoly.const(img)
                if e < 0 and not img.is_unit_monomial():
                    raise SubstitutionError(f"{v} has a negative exponent but its image is not a unit")
                powers[key] = img ** e
        return powers[key]

    out = LaurentPoly.const(0)
    for m, c in p._terms.items():
        term = LaurentPoly.const(c)
        for v, e in m:
            term = term * power(v, e)
        out = out + term
    return LaurentPoly(out._terms, ctx) if ctx is not None else out


def evaluate(p: LaurentPoly, a: Mapping[VarId, object], field):
    """Value of ``p`` in ``field`` at the assignment ``a``."""
    total = field.zero()
    cache: dict = {}
    for m, c in p._terms.items():
        val = field(c)
        for v, e in m:
            key = (v, e)
            if key not in cache:
                if v not in a:
                    raise EvaluationError(f"no value assigned to {v}")
                base = a[v]
                if v.kind != X and field.is_zero(base):
                    raise EvaluationError(f"zero assigned to unit variable {v}")
                cache[key] = field.pow(base, e)
            val = field.mul(val, cache[key])
        total = field.add(total, val)
    return total


def compile_poly(p: LaurentPoly, var_index: Callable[[VarId], int]):
    """Flatten ``p`` into ``[(coef, ((slot, exp), ...)), ...]`` for fast repeated evaluation."""
    return [(c, tuple((var_index(v), e) for v, e in m)) for m, c in p.items()]


# ---------------------------------------------------------------- text form

def _render_mono(m: Monomial) -> str:
    parts = []
    for v, e in m:
        parts.append(str(v) if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def render(p: LaurentPoly) -> str:
    out = []
    for m, c in p.items():
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = _render_mono(m)
        else:
            body = f"{mag}*{_render_mono(m)}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out) if out else "0"


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)\[(\d+)\]\[(\d+)\]|(mu|lam)\[(\d+)\]|(\^-?\d+)|([-+*()]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolyParseError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        num, xx, i, j, kind, c, exp, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif xx:
            toks.append(("var", Xv(int(i), int(j))))
        elif kind:
            toks.append(("var", Muv(int(c)) if kind == "mu" else Lamv(int(c))))
        elif exp:
            toks.append(("exp", int(exp[1:])))
        else:
            toks.append(("op", op))
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self):
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek() in (("op", "-"), ("op", "+")):
            op = self.take()[1]
            t = self.term()
            acc = acc - t if op == "-" else acc + t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            base = LaurentPoly.const(val)
        elif kind == "var":
            base = LaurentPoly.var(val)
        elif (kind, val) == ("op", "("):
            base = self.expr()
            if self.take() != ("op", ")"):
                raise PolyParseError("missing ')'")
        else:
            raise PolyParseError(f"unexpected token {val!r}")
        if self.peek()[0] == "exp":
            e = self.take()[1]
            try:
                base = base ** e
            except ValueError as err:
                raise PolyParseError(str(err)) from err
        return base


def parse(text: str, ctx=None) -> LaurentPoly:
    toks = _tokenize(text)
    if not toks:
        raise PolyParseError("empty polynomial")
    ps = _Parser(toks)
    try:
        p = ps.expr()
    except ValueError as err:
        raise PolyParseError(str(err)) from err
    if ps.i != len(toks):
        raise PolyParseError(f"trailing input near token {ps.i}")
    return p.with_ctx(ctx) if ctx is not None else p


def sum_polys(ps: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.const(0)
    for q in ps:
        out = out + q
    return out
