"""Bivariate polynomials over GF(q) and principal 2D-cyclic codes.

A codeword of length l*m stores the coefficient of x^i y^j at position i + l*j.
"""

from __future__ import annotations

import re
import warnings
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import numpy as np

from .code import LinearCode, rank
from .field import GF


class PolyError(ValueError):
    pass


class DimensionWarning(UserWarning):
    """Rank of the shifted generator rows differs from (l-a)(m-b)."""

    def __init__(self, l: int, m: int, degree: tuple[int, int], rank: int, formula: int) -> None:
        super().__init__(f"l={l} m={m} deg(g)={degree}: rank {rank} != formula {formula}")
        self.l, self.m, self.degree, self.rank, self.formula = l, m, degree, rank, formula


def lex_key(e: tuple[int, int]) -> tuple[int, int]:
    """Sort key for the lex order with x dominant."""
    return e


def lex_geq(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] > b[0] or (a[0] == b[0] and a[1] >= b[1])


def partial_geq(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] >= b[0] and a[1] >= b[1]


class BivarPoly:
    """Sparse polynomial: ``terms[(i, j)]`` is the encoding of the coefficient of x^i y^j."""

    __slots__ = ("field", "terms")

    def __init__(self, field: GF, terms: Mapping[tuple[int, int], int] | None = None) -> None:
        self.field = field
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = int(c)
            if i < 0 or j < 0:
                raise PolyError(f"negative exponent in x^{i} y^{j}")
            if not 0 <= c < field.q:
                raise PolyError(f"coefficient {c} out of range for {field!r}")
            if c:
                clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def monomial(cls, field: GF, i: int, j: int, c: int = 1) -> BivarPoly:
        return cls(field, {(i, j): c})

    @classmethod
    def one(cls, field: GF) -> BivarPoly:
        return cls(field, {(0, 0): 1})

    @classmethod
    def from_grid(cls, field: GF, grid) -> BivarPoly:
        """``grid[i, j]`` is the coefficient of x^i y^j."""
        grid = np.asarray(grid, dtype=np.int64)
        return cls(field, {(int(i), int(j)): int(grid[i, j]) for i, j in zip(*np.nonzero(grid))})

    def to_grid(self, l: int, m: int) -> np.ndarray:
        out = np.zeros((l, m), dtype=np.int64)
        F = self.field
        for (i, j), c in self.terms.items():
            out[i % l, j % m] = F.add(out[i % l, j % m], c)
        return out

    def to_vector(self, l: int, m: int) -> np.ndarray:
        """Codeword vector: position i + l*j holds the coefficient of x^i y^j."""
        return self.to_grid(l, m).T.reshape(-1)

    @classmethod
    def from_vector(cls, field: GF, v, l: int, m: int) -> BivarPoly:
        return cls.from_grid(field, np.asarray(v).reshape(m, l).T)

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> tuple[int, int]:
        """Componentwise maxima (deg_x, deg_y)."""
        if not self.terms:
            raise PolyError("degree of the zero polynomial")
        return max(i for i, _ in self.terms), max(j for _, j in self.terms)

    def leading(self) -> tuple[tuple[int, int], int]:
        """Leading exponent and coefficient under the lex order."""
        if not self.terms:
            raise PolyError("leading term of the zero polynomial")
        e = max(self.terms, key=lex_key)
        return e, self.terms[e]

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.field, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"BivarPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic ---------------------------------------------------------

    def _same(self, other: BivarPoly) -> None:
        if self.field != other.field:
            raise PolyError("polynomials over different fields")

    def __add__(self, other: BivarPoly) -> BivarPoly:
        self._same(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = int(F.add(out.get(e, 0), c))
        return BivarPoly(F, out)

    def __neg__(self) -> BivarPoly:
        F = self.field
        return BivarPoly(F, {e: int(F.neg(c)) for e, c in self.terms.items()})

    def __sub__(self, other: BivarPoly) -> BivarPoly:
        return self + (-other)

    def __mul__(self, other: BivarPoly) -> BivarPoly:
        return poly_mul(self, other)

    def scale(self, c: int) -> BivarPoly:
        F = self.field
        return BivarPoly(F, {e: int(F.mul(c, v)) for e, v in self.terms.items()})

    def reduce(self, l: int, m: int) -> BivarPoly:
        """Image in GF(q)[x,y]/<x^l - 1, y^m - 1>."""
        F = self.field
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in self.terms.items():
            e = (i % l, j % m)
            out[e] = int(F.add(out.get(e, 0), c))
        return BivarPoly(F, out)

    def shift(self, di: int, dj: int, l: int, m: int) -> BivarPoly:
        return BivarPoly.monomial(self.field, di, dj).__mul__(self).reduce(l, m)


def poly_mul(f1: BivarPoly, f2: BivarPoly) -> BivarPoly:
    """Full product in GF(q)[x,y]."""
    f1._same(f2)
    F = f1.field
    out: dict[tuple[int, int], int] = {}
    for (i1, j1), c1 in f1.terms.items():
        for (i2, j2), c2 in f2.terms.items():
            e = (i1 + i2, j1 + j2)
            out[e] = int(F.add(out.get(e, 0), F.mul(c1, c2)))
    return BivarPoly(F, out)


def poly_mul_quotient(f1: BivarPoly, f2: BivarPoly, l: int, m: int) -> BivarPoly:
    """Product in GF(q)[x,y]/<x^l - 1, y^m - 1>."""
    return poly_mul(f1.reduce(l, m), f2.reduce(l, m)).reduce(l, m)


def reciprocal(f: BivarPoly) -> BivarPoly:
    """``f* = x^a y^b f(1/x, 1/y)`` with (a, b) the componentwise degree maxima."""
    if f.is_zero():
        raise PolyError("reciprocal of the zero polynomial")
    a, b = f.degree
    return BivarPoly(f.field, {(a - i, b - j): c for (i, j), c in f.terms.items()})


def poly_divmod(f: BivarPoly, g: BivarPoly) -> tuple[BivarPoly, BivarPoly]:
    """Division of f by the single divisor g under lex order (x > y).

    Since {g} is a Groebner basis of <g>, the remainder is zero iff g | f.
    """
    f._same(g)
    if g.is_zero():
        raise PolyError("division by the zero polynomial")
    F = f.field
    (gi, gj), gc = g.leading()
    ginv = int(F.inv(gc))
    p = dict(f.terms)
    quot: dict[tuple[int, int], int] = {}
    rem: dict[tuple[int, int], int] = {}
    while p:
        e = max(p, key=lex_key)
        c = p[e]
        if e[0] >= gi and e[1] >= gj:
            s = (e[0] - gi, e[1] - gj)
            t = int(F.mul(c, ginv))
            quot[s] = int(F.add(quot.get(s, 0), t))
            for (i, j), gcoef in g.terms.items():
                k = (i + s[0], j + s[1])
                v = int(F.sub(p.get(k, 0), F.mul(t, gcoef)))
                if v:
                    p[k] = v
                else:
                    p.pop(k, None)
        else:
            rem[e] = c
            del p[e]
    return BivarPoly(F, quot), BivarPoly(F, rem)


def poly_divides(g: BivarPoly, f: BivarPoly) -> tuple[bool, BivarPoly | None]:
    """``(True, h)`` with f = g*h when g divides f in GF(q)[x,y], else ``(False, None)``."""
    h, r = poly_divmod(f, g)
    if r.is_zero():
        return True, h
    return False, None


def big_f(field: GF, l: int, m: int) -> BivarPoly:
    """(x^l - 1)(y^m - 1)."""
    one = field.one.v
    mone = int(field.neg(one))
    return BivarPoly(field, {(l, m): one, (l, 0): mone, (0, m): mone, (0, 0): one})


# --- text form -----------------------------------------------------------------

_TERM_RE = re.compile(r"^(w\^?\d+|w|\d+)?\*?(?:x(?:\^?(\d+))?)?(?:y(?:\^?(\d+))?)?$")


def parse_poly(text: str, field: GF) -> BivarPoly:
    """Parse ``x4y4 + x4y2 + 3*x + w2y + 1``; ``^`` before exponents is optional."""
    s = text.replace(" ", "")
    if not s:
        raise PolyError("empty polynomial")
    out: dict[tuple[int, int], int] = {}
    pos = 0
    for raw in re.split(r"(?=[+-])", s):
        if not raw:
            continue
        at, pos = pos, pos + len(raw)
        neg = raw[0] == "-"
        t = raw[1:] if raw[0] in "+-" else raw
        m = _TERM_RE.match(t)
        if not t or not m or (t.endswith("*")):
            raise PolyError(f"bad term {raw!r} at position {at}")
        lit = m.group(1)
        has_x, has_y = "x" in t, "y" in t
        if lit is None and not (has_x or has_y):
            raise PolyError(f"bad term {raw!r} at position {at}")
        try:
            coef = field.parse_literal(lit) if lit is not None else field.one.v
        except ValueError as exc:
            raise PolyError(f"at position {at}: {exc}") from None
        e = (int(m.group(2) or 1) if has_x else 0, int(m.group(3) or 1) if has_y else 0)
        if neg:
            coef = int(field.neg(coef))
        out[e] = int(field.add(out.get(e, 0), coef))
    return BivarPoly(field, out)


def _mono(i: int, j: int) -> str:
    s = ""
    if i:
        s += "x" if i == 1 else f"x{i}"
    if j:
        s += "y" if j == 1 else f"y{j}"
    return s or "1"


def format_poly(f: BivarPoly) -> str:
    """Terms in descending lex order, e.g. ``x4y4 + x3 + 1``."""
    if f.is_zero():
        return "0"
    parts = []
    for e in sorted(f.terms, key=lex_key, reverse=True):
        c = f.terms[e]
        mono = _mono(*e)
        if c == 1:
            parts.append(mono)
        else:
            lit = f.field.format_literal(c)
            parts.append(lit if mono == "1" else f"{lit}*{mono}")
    return " + ".join(parts)


# --- codes ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TwoDCyclicCode:
    l: int
    m: int
    g: BivarPoly
    code: LinearCode
    formula_dim: int

    @property
    def field(self) -> GF:
        return self.g.field

    @property
    def n(self) -> int:
        return self.l * self.m

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def generator(self) -> np.ndarray:
        return self.code.generator


def _shift_rows(g: BivarPoly, l: int, m: int, ni: int, nj: int) -> np.ndarray:
    """Rows x^i y^j g for 0 <= i < ni, 0 <= j < nj (i varies fastest)."""
    grid = g.to_grid(l, m)
    rows = [np.roll(np.roll(grid, i, axis=0), j, axis=1).T.reshape(-1) for j in range(nj) for i in range(ni)]
    if not rows:
        return np.zeros((1, l * m), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def _check_sides(l: int, m: int) -> None:
    if l < 1 or m < 1:
        raise PolyError(f"side lengths must be positive, got l={l} m={m}")


def _principal(l: int, m: int, g: BivarPoly) -> TwoDCyclicCode:
    a, b = g.degree
    ni, nj = max(0, l - a), max(0, m - b)
    M = _shift_rows(g, l, m, ni, nj)
    code = LinearCode(g.field, M)
    formula = ni * nj
    if code.k != formula:
        warnings.warn(DimensionWarning(l, m, (a, b), code.k, formula), stacklevel=3)
    return TwoDCyclicCode(l, m, g, code, formula)


def code_from_g(l: int, m: int, g: BivarPoly) -> TwoDCyclicCode:
    """The principal code <g> of length l*m; the dimension is the rank of the basis rows."""
    _check_sides(l, m)
    if g.is_zero():
        raise PolyError("generator polynomial is zero")
    a, b = g.degree
    if a >= l or b >= m:
        raise PolyError(f"deg(g) = {(a, b)} must be below (l, m) = {(l, m)}")
    ok, _ = poly_divides(g, big_f(g.field, l, m))
    if not ok:
        raise PolyError(f"g does not divide (x^{l} - 1)(y^{m} - 1)")
    return _principal(l, m, g)


def check_polynomial(l: int, m: int, g: BivarPoly) -> tuple[BivarPoly, BivarPoly]:
    """Return (h, h*) with (x^l - 1)(y^m - 1) = g h."""
    ok, h = poly_divides(g, big_f(g.field, l, m))
    if not ok:
        raise PolyError(f"g does not divide (x^{l} - 1)(y^{m} - 1)")
    return h, reciprocal(h)


def dual_star(l: int, m: int, g: BivarPoly) -> TwoDCyclicCode:
    """C* = <h*> where (x^l - 1)(y^m - 1) = g h; requires dim C > 0."""
    _check_sides(l, m)
    C = code_from_g(l, m, g)
    if C.k == 0:
        raise PolyError("dim(C) = 0")
    _, hs = check_polynomial(l, m, g)
    Cs = _principal(l, m, hs)
    if Cs.k:
        prod = g.field.matmul(C.code.basis, Cs.code.basis.T)
        if prod.any():
            raise AssertionError("C* is not contained in the Euclidean dual of C")
    return Cs


def _require_dim(C: TwoDCyclicCode) -> None:
    if C.k == 0:
        raise PolyError("dim(C) must be positive")


def check_dual_containing(l: int, m: int, g: BivarPoly) -> bool:
    """C* is contained in C iff g g* divides (x^l - 1)(y^m - 1)."""
    C = code_from_g(l, m, g)
    _require_dim(C)
    Cs = dual_star(l, m, g)
    contained = C.code.contains_code(Cs.code) if Cs.k else True
    if Cs.k == 0:
        # C* = {0}: containment is trivial and the divisibility criterion is not claimed
        return contained
    verdict, _ = poly_divides(poly_mul(g, reciprocal(g)), big_f(g.field, l, m))
    if verdict != contained:
        raise AssertionError(f"g g* | F is {verdict} but row-space containment is {contained}")
    return verdict


def check_self_orthogonal(l: int, m: int, g: BivarPoly) -> bool:
    """C is Euclidean self-orthogonal iff (x^l - 1)(y^m - 1) divides g g*."""
    C = code_from_g(l, m, g)
    _require_dim(C)
    verdict, _ = poly_divides(big_f(g.field, l, m), poly_mul(g, reciprocal(g)))
    B = C.code.basis
    matrix = not g.field.matmul(B, B.T).any()
    if verdict and not matrix:
        raise AssertionError("F | g g* but M M^T != O")
    if verdict != matrix:
        warnings.warn(
            f"l={l} m={m}: divisibility verdict {verdict} differs from M M^T verdict {matrix}",
            stacklevel=2,
        )
    return verdict


def is_shift_closed(code: LinearCode, l: int, m: int) -> bool:
    """Both cyclic shifts of the l x m array map every basis word back into the code."""
    for v in code.basis:
        grid = v.reshape(m, l)  # grid[j, i]
        for s in (np.roll(grid, 1, axis=1), np.roll(grid, 1, axis=0)):
            if not code.contains(s.reshape(-1)):
                return False
    return True


def divisors_from_factors(field: GF, factors: Iterable[tuple[BivarPoly, int]]) -> list[BivarPoly]:
    """All products prod f_i^{e_i} with 0 <= e_i <= mult_i."""
    out = [BivarPoly.one(field)]
    for f, mult in factors:
        nxt = []
        for d in out:
            p = d
            nxt.append(p)
            for _ in range(mult):
                p = poly_mul(p, f)
                nxt.append(p)
        out = nxt
    return out


def rank_of_rows(code: TwoDCyclicCode) -> int:
    return rank(code.field, code.code.generator)
