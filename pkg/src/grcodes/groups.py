"""Small finite groups given by presentations, with named element listings.

Every family multiplies in a fixed normal form:

* ``C_n``: ``x^i``
* ``D_m``: ``a^i b^s`` using ``ba = a^{-1}b``
* ``Q_{4n}``: ``a^i b^s`` using ``ba = a^{-1}b`` and ``b^2 = a^n``
* ``C_l ⋊_k C_m``: ``x^i y^j`` using ``yx = x^k y``
* direct products: componentwise

A *listing* fixes the order ``g_1, ..., g_n`` of the elements; it decides the
block pattern of the group ring matrices, so listings are named (``f1``,
``f2``, ...) rather than arbitrary permutations.  Indices are 0-based here.
"""

from __future__ import annotations

import itertools
import math
import re
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

DEFAULT_MAX_ORDER = 4096

_PRODUCT_NAMES = "xyzuvstrpq"


class GroupError(ValueError):
    pass


def _mono(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}{e}"


def _label(s: str) -> str:
    return s or "e"


# --- group families ------------------------------------------------------------
#
# Each family exposes: order, identity(), mul(u, v), generators() -> {name: nf},
# listing() -> list of (nf, label).  Normal forms are tuples of ints.


@dataclass(frozen=True)
class Cyclic:
    n: int
    names: tuple[str, ...] = ("x",)

    def validate(self) -> None:
        if self.n < 1:
            raise GroupError(f"cyclic order must be >= 1, got {self.n}")

    @property
    def order(self) -> int:
        return self.n

    @property
    def n_gens(self) -> int:
        return 1

    def identity(self):
        return (0,)

    def mul(self, u, v):
        return ((u[0] + v[0]) % self.n,)

    def generators(self):
        return {self.names[0]: (1 % self.n,)}

    def listing(self):
        return [((i,), _mono(self.names[0], i)) for i in range(self.n)]

    def describe(self) -> str:
        return f"C{self.n}"


_DIHEDRAL_FORMS = ("f1", "f2", "f3", "f4")


@dataclass(frozen=True)
class Dihedral:
    """``D_m`` of order 2m; ``names`` = (rotation, reflection)."""

    m: int
    form: str = "f1"
    names: tuple[str, ...] = ("a", "b")

    def validate(self) -> None:
        if self.m < 1:
            raise GroupError(f"dihedral parameter must be >= 1, got {self.m}")
        if self.form not in _DIHEDRAL_FORMS:
            raise GroupError(f"dihedral listing must be one of {_DIHEDRAL_FORMS}, got {self.form!r}")

    @property
    def order(self) -> int:
        return 2 * self.m

    @property
    def n_gens(self) -> int:
        return 2

    def identity(self):
        return (0, 0)

    def mul(self, u, v):
        i, s = u
        j, t = v
        return ((i + (-j if s else j)) % self.m, (s + t) % 2)

    def generators(self):
        r, f = self.names
        return {r: (1 % self.m, 0), f: (0, 1)}

    def listing(self):
        m = self.m
        r, f = self.names
        rots = [((i, 0), _mono(r, i)) for i in range(m)]
        # b a^i = a^{-i} b ; a^i b
        refl_ba = [((-i % m, 1), f + _mono(r, i)) for i in range(m)]
        refl_ab = [((i, 1), _mono(r, i) + f) for i in range(m)]
        if self.form == "f1":
            return rots + refl_ba
        if self.form == "f2":
            return rots + refl_ab
        refl = refl_ba if self.form == "f3" else refl_ab
        return [x for pair in zip(rots, refl) for x in pair]

    def describe(self) -> str:
        return f"D{self.m}"


@dataclass(frozen=True)
class Quaternion:
    """Generalised quaternion group of order 4n; ``names`` = (a, b)."""

    n: int
    form: str = "f1"
    names: tuple[str, ...] = ("a", "b")

    def validate(self) -> None:
        if self.n < 2:
            raise GroupError(f"quaternion parameter must be >= 2, got {self.n}")
        if self.form not in ("f1", "f2"):
            raise GroupError(f"quaternion listing must be f1 or f2, got {self.form!r}")

    @property
    def order(self) -> int:
        return 4 * self.n

    @property
    def n_gens(self) -> int:
        return 2

    def identity(self):
        return (0, 0)

    def mul(self, u, v):
        i, s = u
        j, t = v
        e = i + (-j if s else j)
        if s and t:
            e += self.n
        return (e % (2 * self.n), (s + t) % 2)

    def generators(self):
        a, b = self.names
        return {a: (1, 0), b: (0, 1)}

    def listing(self):
        N = 2 * self.n
        a, b = self.names
        rots = [((i, 0), _mono(a, i)) for i in range(N)]
        if self.form == "f1":
            return rots + [((i, 1), _mono(a, i) + b) for i in range(N)]
        return rots + [((-i % N, 1), b + _mono(a, i)) for i in range(N)]

    def describe(self) -> str:
        return f"Q{4 * self.n}"


@dataclass(frozen=True)
class Semidirect:
    """``C_l ⋊ C_m = <x, y | x^l = y^m = 1, y x y^{-1} = x^k>``."""

    l: int
    m: int
    k: int
    form: str = "f1"
    names: tuple[str, ...] = ("x", "y")

    def validate(self) -> None:
        if self.l < 1 or self.m < 1:
            raise GroupError("semidirect factors must have order >= 1")
        if math.gcd(self.k, self.l) != 1 or pow(self.k, self.m, self.l) != 1 % self.l:
            raise GroupError(
                f"invalid semidirect parameters: need gcd(k, l) = 1 and k^m = 1 mod l "
                f"(l={self.l}, m={self.m}, k={self.k})"
            )
        if self.form not in ("f1", "f2"):
            raise GroupError(f"semidirect listing must be f1 or f2, got {self.form!r}")

    @property
    def order(self) -> int:
        return self.l * self.m

    @property
    def n_gens(self) -> int:
        return 2

    def identity(self):
        return (0, 0)

    def mul(self, u, v):
        i, j = u
        a, b = v
        return ((i + a * pow(self.k, j, self.l)) % self.l, (j + b) % self.m)

    def generators(self):
        x, y = self.names
        return {x: (1 % self.l, 0), y: (0, 1 % self.m)}

    def listing(self):
        x, y = self.names
        pairs = [(i, j) for j in range(self.m) for i in range(self.l)]
        if self.form == "f2":
            pairs = [(i, j) for i in range(self.l) for j in range(self.m)]
        return [((i, j), _mono(x, i) + _mono(y, j)) for i, j in pairs]

    def describe(self) -> str:
        return f"C{self.l}sd{self.k}C{self.m}"


@dataclass(frozen=True)
class DirectProduct:
    """Direct product; ``loops`` lists factor indices from innermost to outermost loop."""

    factors: tuple
    loops: tuple[int, ...] | None = None

    def validate(self) -> None:
        if not self.factors:
            raise GroupError("direct product needs at least one factor")
        for f in self.factors:
            f.validate()
        if sorted(self.loop_order) != list(range(len(self.factors))):
            raise GroupError(f"loop order {self.loop_order} is not a permutation of the factors")
        names = [nm for f in self.factors for nm in f.generators()]
        if len(set(names)) != len(names):
            raise GroupError(f"generator names clash across factors: {names}")

    @property
    def loop_order(self) -> tuple[int, ...]:
        return self.loops if self.loops is not None else tuple(range(len(self.factors)))

    @property
    def order(self) -> int:
        return math.prod(f.order for f in self.factors)

    @property
    def n_gens(self) -> int:
        return sum(f.n_gens for f in self.factors)

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def mul(self, u, v):
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, u, v))

    def generators(self):
        out = {}
        for idx, f in enumerate(self.factors):
            for name, g in f.generators().items():
                nf = list(self.identity())
                nf[idx] = g
                out[name] = tuple(nf)
        return out

    def listing(self):
        lists = [f.listing() for f in self.factors]
        outer_first = list(reversed(self.loop_order))
        out = []
        for combo in itertools.product(*(lists[i] for i in outer_first)):
            picked = dict(zip(outer_first, combo))
            nf = tuple(picked[i][0] for i in range(len(self.factors)))
            label = "".join(picked[i][1] for i in range(len(self.factors)))
            out.append((nf, label))
        return out

    def describe(self) -> str:
        return "x".join(f.describe() for f in self.factors)


GroupSpec = Cyclic | Dihedral | Quaternion | Semidirect | DirectProduct


# --- tables --------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group as an indexed multiplication table under a fixed listing."""

    spec: object
    elements: tuple[str, ...]
    mul: np.ndarray = field(repr=False)
    inv: np.ndarray = field(repr=False)
    id: int
    gens: dict = field(repr=False)
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupTable)
            and self.elements == other.elements
            and np.array_equal(self.mul, other.mul)
        )

    def __hash__(self) -> int:
        return hash((self.elements, self.mul.tobytes()))

    def inverse(self, i: int) -> int:
        return int(self.inv[i])

    def product(self, i: int, j: int) -> int:
        return int(self.mul[i, j])

    def power(self, i: int, e: int) -> int:
        if e < 0:
            i, e = self.inverse(i), -e
        r = self.id
        for _ in range(e):
            r = int(self.mul[r, i])
        return r

    def index(self, word: str) -> int:
        """Listing index of a word such as ``"ba2"``, ``"x^2y"`` or ``"e"``."""
        return self.evaluate(parse_word(word, self.gens))

    def evaluate(self, word: Sequence[tuple[str, int]]) -> int:
        r = self.id
        for name, e in word:
            if name not in self.gens:
                raise GroupError(f"unknown generator {name!r}; have {sorted(self.gens)}")
            r = int(self.mul[r, self.power(self.gens[name], e)])
        return r

    def label(self, i: int) -> str:
        return self.elements[i]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))


def build(spec, *, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """Construct the :class:`GroupTable` of ``spec`` under its listing."""
    spec.validate()
    n = spec.order
    if n > max_order:
        raise GroupError(f"group order {n} exceeds bound {max_order}")
    listing = spec.listing()
    nfs = [nf for nf, _ in listing]
    pos = {nf: i for i, nf in enumerate(nfs)}
    if len(pos) != n:
        raise GroupError("listing does not enumerate distinct elements")  # pragma: no cover
    mul = np.empty((n, n), dtype=np.int64)
    for i, u in enumerate(nfs):
        mul[i] = [pos[spec.mul(u, v)] for v in nfs]
    ident = pos[spec.identity()]
    inv = np.argmax(mul == ident, axis=1).astype(np.int64)
    gens = {name: pos[g] for name, g in spec.generators().items()}
    labels = tuple(_label(lbl) for _, lbl in listing)
    return GroupTable(spec, labels, mul, inv, ident, gens, spec.describe())


_WORD_RE = re.compile(r"([A-Za-z])(?:\^(-?\d+)|(\d+))?")


def parse_word(word: str, gens: dict | None = None) -> list[tuple[str, int]]:
    """Split a juxtaposed generator-power word into ``[(name, exponent), ...]``."""
    w = word.replace(" ", "").replace("*", "")
    if w in ("e", "1", ""):
        return []
    out, pos = [], 0
    while pos < len(w):
        m = _WORD_RE.match(w, pos)
        if not m:
            raise GroupError(f"cannot parse word {word!r} at position {pos}")
        name = m.group(1)
        if name == "e":
            pos = m.end()
            continue
        if gens is not None and name not in gens:
            raise GroupError(f"unknown generator {name!r} in {word!r}; have {sorted(gens)}")
        exp = m.group(2) or m.group(3)
        out.append((name, int(exp) if exp else 1))
        pos = m.end()
    return out


# --- spec strings --------------------------------------------------------------

_FACTOR_RE = re.compile(r"^(?:C(\d+)sd(\d+)C(\d+)|([CDQ])(\d+))$")


def _parse_factor(tok: str):
    m = _FACTOR_RE.match(tok)
    if not m:
        raise GroupError(f"cannot parse group factor {tok!r}")
    if m.group(1):
        return Semidirect(int(m.group(1)), int(m.group(3)), int(m.group(2)))
    kind, num = m.group(4), int(m.group(5))
    if kind == "C":
        return Cyclic(num)
    if kind == "D":
        return Dihedral(num)
    if num % 4:
        raise GroupError(f"quaternion order must be a multiple of 4, got Q{num}")
    return Quaternion(num // 4)


def _rename(f, names: Sequence[str]):
    return type(f)(**{**f.__dict__, "names": tuple(names)})


def _with_form(f, form: str):
    if isinstance(f, Cyclic):
        if form != "f1":
            raise GroupError("cyclic groups have a single listing")
        return f
    return type(f)(**{**f.__dict__, "form": form})


def parse_group(text: str):
    """Parse strings like ``C5xC3:inner=2``, ``D5:form=f2``, ``Q8``,
    ``C5sd2C4``, ``C3xD3:form=f3`` or ``D11:names=b,a``.

    Options after ``:`` are ``form=fN``, ``inner=<factor, 1-based>``,
    ``loops=<factors inner to outer, 1-based>`` and ``names=<generators>``.
    """
    base, *opts = [s.strip() for s in text.strip().split(":")]
    options = {}
    for o in opts:
        if "=" not in o:
            raise GroupError(f"bad group option {o!r}")
        key, val = (s.strip() for s in o.split("=", 1))
        options[key] = val
    unknown = set(options) - {"form", "inner", "loops", "names"}
    if unknown:
        raise GroupError(f"unknown group options {sorted(unknown)}")
    factors = [_parse_factor(t) for t in base.split("x")]

    if len(factors) == 1:
        spec = factors[0]
        if "inner" in options or "loops" in options:
            raise GroupError("loop options apply to direct products only")
        if "form" in options:
            spec = _with_form(spec, options["form"])
        if "names" in options:
            names = tuple(options["names"].split(","))
            if len(names) != spec.n_gens:
                raise GroupError(f"{spec.describe()} needs {spec.n_gens} generator names")
            spec = _rename(spec, names)
        return spec

    names = options.get("names")
    names = tuple(names.split(",")) if names else None
    total = sum(f.n_gens for f in factors)
    if names is None:
        if total > len(_PRODUCT_NAMES):
            raise GroupError("too many generators for default names")
        names = tuple(_PRODUCT_NAMES[:total])
    if len(names) != total:
        raise GroupError(f"product needs {total} generator names, got {len(names)}")
    renamed, pos = [], 0
    for f in factors:
        renamed.append(_rename(f, names[pos : pos + f.n_gens]))
        pos += f.n_gens
    factors = renamed

    loops = None
    if "form" in options:
        factors, loops = _product_form(factors, options["form"])
    if "inner" in options:
        i = int(options["inner"]) - 1
        loops = (i,) + tuple(j for j in range(len(factors)) if j != i)
    if "loops" in options:
        loops = tuple(int(s) - 1 for s in options["loops"].split(","))
    return DirectProduct(tuple(factors), loops)


def _product_form(factors, form: str):
    """Named listings of products: for all-cyclic products ``fN`` is the N-th loop
    order in lexicographic order; for ``C_l x D_m`` (or ``x Q``) f1/f2 use the
    factor's f1 listing and f3/f4 its f2 listing, with the cyclic factor inner
    in f1/f3 and outer in f2/f4."""
    m = re.fullmatch(r"f(\d+)", form)
    if not m:
        raise GroupError(f"bad form {form!r}")
    r = int(m.group(1)) - 1
    if all(isinstance(f, Cyclic) for f in factors):
        perms = list(itertools.permutations(range(len(factors))))
        if not 0 <= r < len(perms):
            raise GroupError(f"form {form} out of range for {len(factors)} cyclic factors")
        return factors, perms[r]
    if len(factors) == 2 and isinstance(factors[0], Cyclic) and isinstance(factors[1], (Dihedral, Quaternion)):
        if not 0 <= r < 4:
            raise GroupError(f"form {form} out of range for C x D products")
        inner_form = "f1" if r < 2 else "f2"
        loops = (0, 1) if r % 2 == 0 else (1, 0)
        return [factors[0], _with_form(factors[1], inner_form)], loops
    raise GroupError(f"no named forms for {'x'.join(f.describe() for f in factors)}; use loops=")


def group_table(text: str, **kw) -> GroupTable:
    return build(parse_group(text), **kw)
