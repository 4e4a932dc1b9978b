"""Finite fields GF(p^k) for small q.

Elements are encoded as integers ``0 <= v < q``: the coefficient vector
``(c_0, ..., c_{k-1})`` of the power-basis representation maps to
``sum(c_i * p**i)``.  Scalar arithmetic goes through :class:`FieldElement`;
the array methods on :class:`GF` operate elementwise on numpy integer arrays
holding such encodings, which is what the linear algebra uses.
"""

from __future__ import annotations

import functools
import itertools
import re
from collections.abc import Sequence

import numpy as np

DEFAULT_MAX_ORDER = 2**16

# Default moduli, coefficient lists c_0..c_k.  x^2+2x+2 is the usual choice for GF(9).
_DEFAULT_MODULI = {(3, 2): (2, 2, 1)}


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**k``; raises FieldError if q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1 or not is_prime(p):
                raise FieldError(f"{q} is not a prime power")
            return p, k
    raise FieldError(f"{q} is not a prime power")  # pragma: no cover


# --- polynomials over F_p as coefficient lists, lowest degree first ---------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        f = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= k/2."""
    k = len(modulus) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _polymod(modulus, list(low) + [1], p):
                return False
    return True


class GF:
    """The finite field with ``p**k`` elements.

    ``modulus`` is the coefficient list ``c_0, ..., c_k`` of a monic
    irreducible polynomial; the power basis is taken w.r.t. one of its roots.
    ``primitive`` is the encoding of the designated multiplicative generator
    (the class of ``x`` whenever that is primitive).
    """

    def __init__(
        self,
        p: int,
        k: int = 1,
        modulus: Sequence[int] | None = None,
        *,
        max_order: int = DEFAULT_MAX_ORDER,
    ) -> None:
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        if p**k > max_order:
            raise FieldError(f"GF({p}^{k}) exceeds the desk-scale bound q <= {max_order}")
        self.p = p
        self.k = k
        self.q = p**k
        if modulus is None:
            modulus = _default_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {k}: {list(modulus)}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {format_poly_fp(modulus)} is reducible over GF({p})")
        self.modulus = modulus
        self._build_tables()

    # -- construction -------------------------------------------------------

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        self._pw = np.array([p**i for i in range(k)], dtype=np.int64)
        digits = (np.arange(q)[:, None] // self._pw[None, :]) % p  # q x k
        self._digits = digits
        if k == 1:
            self.primitive = _smallest_prime_root(p)
        else:
            x = p  # class of x
            self.primitive = x if self._order_scalar(x) == q - 1 else self._search_primitive()
        exp = np.zeros(q - 1 if q > 1 else 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        cur = 1
        for e in range(q - 1):
            exp[e] = cur
            log[cur] = e
            cur = self._mul_slow(cur, self.primitive)
        if cur != 1 or (log[1:] < 0).any():
            raise FieldError("designated primitive element does not generate the multiplicative group")
        self._exp = exp
        self._log = log
        frob = np.zeros(q, dtype=np.int64)
        for v in range(1, q):
            frob[v] = exp[(log[v] * p) % (q - 1)]
        self._frob = frob
        neg = ((-digits) % p) @ self._pw
        self._neg = neg.astype(np.int64)
        inv = np.zeros(q, dtype=np.int64)
        inv[exp] = exp[(-np.arange(q - 1)) % (q - 1)]
        self._inv = inv
        self._add_table = None
        if k > 1 and p != 2 and q <= 1024:
            a = digits[:, None, :] + digits[None, :, :]
            self._add_table = ((a % p) @ self._pw).astype(np.int64)

    def _mul_slow(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        da = [(a // p**i) % p for i in range(k)]
        db = [(b // p**i) % p for i in range(k)]
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        r = _polymod(prod, self.modulus, p)
        return sum(c * p**i for i, c in enumerate(r))

    def _order_scalar(self, a: int) -> int:
        cur, n = a, 1
        while cur != 1:
            cur = self._mul_slow(cur, a)
            n += 1
            if n > self.q:
                return 0
        return n

    def _search_primitive(self) -> int:
        for v in range(2, self.q):
            if self._order_scalar(v) == self.q - 1:
                return v
        raise FieldError("no primitive element found")  # pragma: no cover

    # -- identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and (self.p, self.k, self.modulus) == (
            other.p,
            other.k,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k};modulus={','.join(map(str, self.modulus))})"

    @property
    def order(self) -> int:
        return self.q

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def __call__(self, value: int | str | FieldElement) -> FieldElement:
        if isinstance(value, FieldElement):
            self._check(value)
            return value
        if isinstance(value, str):
            return FieldElement(self, self.parse_literal(value))
        v = int(value)
        if self.k == 1:
            return FieldElement(self, v % self.p)
        if not 0 <= v < self.q:
            raise FieldError(f"encoding {v} outside GF({self.q})")
        return FieldElement(self, v)

    def _check(self, e: FieldElement) -> None:
        if e.field != self:
            raise FieldError(f"operand from {e.field!r} used with {self!r}")

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def w(self) -> FieldElement:
        """The designated primitive element."""
        return FieldElement(self, self.primitive)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    def power_of_primitive(self, e: int) -> int:
        return int(self._exp[e % (self.q - 1)])

    def log(self, v: int) -> int:
        if v == 0:
            raise FieldError("log of zero")
        return int(self._log[v])

    def coeffs(self, v: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self._digits[v])

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.k:
            coeffs = _polymod(list(coeffs), self.modulus, self.p) if self.k > 1 else [sum(coeffs) % self.p]
        return int(sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs)))

    # -- literals -----------------------------------------------------------

    def parse_literal(self, s: str) -> int:
        s = s.strip()
        m = re.fullmatch(r"w\^?(-?\d+)", s)
        if m:
            return self.power_of_primitive(int(m.group(1)))
        if s == "w":
            return self.primitive
        if re.fullmatch(r"-?\d+", s):
            v = int(s)
            if self.k == 1:
                return v % self.p
            if 0 <= v < self.p:
                return v
        raise FieldError(f"bad literal {s!r} for {self!r}")

    def format_literal(self, v: int) -> str:
        v = int(v)
        if self.k == 1 or v < self.p:
            return str(v)
        return f"w{self.log(v)}"

    # -- array arithmetic ---------------------------------------------------

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a, b]
        da = (a[..., None] // self._pw) % self.p
        db = (b[..., None] // self._pw) % self.p
        return ((da + db) % self.p) @ self._pw

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a * b) % self.p
        a, b = np.broadcast_arrays(a, b)
        r = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, r)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._inv[a]

    def frobenius(self, a):
        """Elementwise ``a -> a**p``."""
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return a.copy()
        return self._frob[a]

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        r = self._exp[(self._log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, r)

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.k == 1:
            # entries < p <= 2**16, so int64 accumulation is exact for any desk-scale width
            return (A @ B) % self.p
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for j in range(A.shape[1]):
            out = self.add(out, self.mul(A[:, j, None], B[None, j, :]))
        return out

    def random(self, shape, rng: np.random.Generator):
        return rng.integers(0, self.q, size=shape, dtype=np.int64)


@functools.lru_cache(maxsize=None)
def _default_modulus(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    if (p, k) in _DEFAULT_MODULI:
        return _DEFAULT_MODULI[(p, k)]
    # first primitive polynomial, else first irreducible one
    fallback = None
    for low in itertools.product(range(p), repeat=k):
        cand = tuple(reversed(low)) + (1,)
        if cand[0] == 0 or not is_irreducible(cand, p):
            continue
        if fallback is None:
            fallback = cand
        if _x_is_primitive(cand, p):
            return cand
    assert fallback is not None
    return fallback


def _x_is_primitive(modulus: tuple[int, ...], p: int) -> bool:
    k = len(modulus) - 1
    q = p**k
    cur = [0, 1]
    for n in range(1, q):
        if _trim(list(cur)) == [1]:
            return n == q - 1
        cur = _polymod([0] + cur, modulus, p)
    return _trim(list(cur)) == [1]


def _smallest_prime_root(p: int) -> int:
    if p == 2:
        return 1
    for g in range(2, p):
        x, n = g, 1
        while x != 1:
            x = x * g % p
            n += 1
        if n == p - 1:
            return g
    raise FieldError(f"no primitive root mod {p}")  # pragma: no cover


def format_poly_fp(c: Sequence[int]) -> str:
    terms = []
    for i in range(len(c) - 1, -1, -1):
        if c[i]:
            coef = "" if c[i] == 1 and i else str(c[i])
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(coef + mono)
    return " + ".join(terms) or "0"


class FieldElement:
    """A scalar in a :class:`GF`; immutable and hashable."""

    __slots__ = ("field", "v")

    def __init__(self, field: GF, v: int) -> None:
        self.field = field
        self.v = int(v)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            self.field._check(other)
            return other.v
        if isinstance(other, (int, np.integer)):
            return self.field(int(other)).v
        return NotImplemented

    def _wrap(self, v) -> FieldElement:
        return FieldElement(self.field, int(v))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.add(self.v, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(self.v, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(o, self.v))

    def __neg__(self):
        return self._wrap(self.field.neg(self.v))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.mul(self.v, o))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.v))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FieldElement(self.field, o).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._wrap(self.field.pow(self.v, e))

    def frobenius(self) -> FieldElement:
        return self._wrap(self.field.frobenius(self.v))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.v == other.v
        if isinstance(other, (int, np.integer)):
            try:
                return self.v == self.field(int(other)).v
            except FieldError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.v))

    def __bool__(self) -> bool:
        return self.v != 0

    def __int__(self) -> int:
        return self.v

    def __repr__(self) -> str:
        return self.field.format_literal(self.v)


def make_field(p: int, k: int = 1, modulus: Sequence[int] | None = None, **kw) -> GF:
    return GF(p, k, modulus, **kw)


_SPEC_RE = re.compile(
    r"\s*GF\(\s*(\d+)(?:\s*\^\s*(\d+))?\s*(?:;\s*modulus\s*=\s*([\d,\s]+))?\)\s*$",
    re.IGNORECASE,
)


def parse_field(spec: str, *, max_order: int = DEFAULT_MAX_ORDER) -> GF:
    """Parse ``GF(q)``, ``GF(p^k)`` or ``GF(p^k;modulus=c0,c1,...,ck)``."""
    m = _SPEC_RE.match(spec)
    if not m:
        raise FieldError(f"cannot parse field spec {spec!r}")
    base, exp, mod = m.groups()
    if exp is None:
        p, k = prime_power(int(base))
    else:
        p, k = int(base), int(exp)
    modulus = [int(c) for c in mod.split(",")] if mod else None
    return GF(p, k, modulus, max_order=max_order)
