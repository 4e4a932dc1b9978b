"""Group ring elements of F_q G and the matrix map sigma."""

from __future__ import annotations

import re
from collections.abc import Sequence

import numpy as np

from .field import GF, FieldElement
from .groups import GroupTable, parse_word


class GroupRingError(ValueError):
    pass


class GroupRingElement:
    """``a = sum_i alpha_i g_i``; ``coeffs[i]`` is the field encoding of alpha_{g_i}."""

    __slots__ = ("field", "group", "coeffs")

    def __init__(self, field: GF, group: GroupTable, coeffs) -> None:
        c = np.asarray(coeffs, dtype=np.int64).reshape(-1)
        if c.shape[0] != group.n:
            raise GroupRingError(f"need {group.n} coefficients, got {c.shape[0]}")
        if ((c < 0) | (c >= field.q)).any():
            raise GroupRingError("coefficient encoding out of range")
        c = c.copy()
        c.setflags(write=False)
        self.field = field
        self.group = group
        self.coeffs = c

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: GF, group: GroupTable) -> GroupRingElement:
        return cls(field, group, np.zeros(group.n, dtype=np.int64))

    @classmethod
    def identity(cls, field: GF, group: GroupTable) -> GroupRingElement:
        c = np.zeros(group.n, dtype=np.int64)
        c[group.id] = 1
        return cls(field, group, c)

    @classmethod
    def basis(cls, field: GF, group: GroupTable, i: int) -> GroupRingElement:
        c = np.zeros(group.n, dtype=np.int64)
        c[i] = 1
        return cls(field, group, c)

    @classmethod
    def random(cls, field: GF, group: GroupTable, rng: np.random.Generator) -> GroupRingElement:
        return cls(field, group, field.random(group.n, rng))

    @classmethod
    def parse(cls, text: str, field: GF, group: GroupTable) -> GroupRingElement:
        return parse_element(text, field, group)

    # -- basic properties ---------------------------------------------------

    def _same(self, other: GroupRingElement) -> None:
        if not isinstance(other, GroupRingElement):
            raise TypeError(f"expected GroupRingElement, got {type(other).__name__}")
        if self.field != other.field or self.group != other.group:
            raise GroupRingError("operands live in different group rings")

    @property
    def n(self) -> int:
        return self.group.n

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.coeffs)]

    def weight(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def coefficient(self, g: int | str) -> FieldElement:
        i = self.group.index(g) if isinstance(g, str) else g
        return FieldElement(self.field, int(self.coeffs[i]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return (
            self.field == other.field
            and self.group == other.group
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.group.elements, self.coeffs.tobytes()))

    def __repr__(self) -> str:
        return f"GroupRingElement({format_element(self)!r} in {self.field!r}[{self.group.name}])"

    def __str__(self) -> str:
        return format_element(self)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        self._same(other)
        return GroupRingElement(self.field, self.group, self.field.add(self.coeffs, other.coeffs))

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement(self.field, self.group, self.field.neg(self.coeffs))

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        self._same(other)
        return GroupRingElement(self.field, self.group, self.field.sub(self.coeffs, other.coeffs))

    def scale(self, lam: FieldElement | int) -> GroupRingElement:
        lam = self.field(lam)
        return GroupRingElement(self.field, self.group, self.field.mul(lam.v, self.coeffs))

    def __rmul__(self, lam) -> GroupRingElement:
        if isinstance(lam, (FieldElement, int, np.integer)):
            return self.scale(lam)
        return NotImplemented

    def __mul__(self, other) -> GroupRingElement:
        if isinstance(other, (FieldElement, int, np.integer)):
            return self.scale(other)
        self._same(other)
        F, mul = self.field, self.group.mul
        out = np.zeros(self.n, dtype=np.int64)
        # gamma_{gh} += alpha_g beta_h
        for g in np.flatnonzero(self.coeffs):
            terms = F.mul(self.coeffs[g], other.coeffs)
            dest = mul[g]
            acc = np.zeros(self.n, dtype=np.int64)
            acc[dest] = terms
            out = F.add(out, acc)
        return GroupRingElement(F, self.group, out)

    def transpose(self) -> GroupRingElement:
        """``a^T = sum alpha_i g_i^{-1}``."""
        out = np.zeros(self.n, dtype=np.int64)
        out[self.group.inv] = self.coeffs
        return GroupRingElement(self.field, self.group, out)

    @property
    def T(self) -> GroupRingElement:
        return self.transpose()

    def frobenius(self) -> GroupRingElement:
        """``a^p = sum alpha_i^p g_i``."""
        return GroupRingElement(self.field, self.group, self.field.frobenius(self.coeffs))

    def sigma(self) -> np.ndarray:
        return sigma(self)


def gr_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a + b


def gr_scale(lam, a: GroupRingElement) -> GroupRingElement:
    return a.scale(lam)


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


def sigma(a: GroupRingElement) -> np.ndarray:
    """The n x n matrix with entry (i, j) equal to the coefficient of g_i^{-1} g_j."""
    G = a.group
    idx = G.mul[G.inv]  # idx[i, j] = index of g_i^{-1} g_j
    return a.coeffs[idx]


# --- block builders ------------------------------------------------------------


def circ(row: Sequence) -> np.ndarray:
    """Circulant matrix: each row is the previous one shifted right by one."""
    row = np.asarray(row)
    n = row.shape[0]
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return row[idx]


def revcirc(row: Sequence) -> np.ndarray:
    """Reverse circulant matrix: each row is the previous one shifted left by one."""
    row = np.asarray(row)
    n = row.shape[0]
    idx = (np.arange(n)[None, :] + np.arange(n)[:, None]) % n
    return row[idx]


def _check_blocks(blocks: Sequence[np.ndarray]) -> list[np.ndarray]:
    blocks = [np.asarray(b) for b in blocks]
    if not blocks:
        raise ValueError("need at least one block")
    shape = blocks[0].shape
    if len(shape) != 2 or shape[0] != shape[1] or any(b.shape != shape for b in blocks):
        raise ValueError(f"blocks must be square and of equal size: {[b.shape for b in blocks]}")
    return blocks


def block_circ(blocks: Sequence[np.ndarray]) -> np.ndarray:
    """Block circulant ``Circ(B_1, ..., B_m)``."""
    blocks = _check_blocks(blocks)
    m = len(blocks)
    return np.block([[blocks[(j - i) % m] for j in range(m)] for i in range(m)])


def block_revcirc(blocks: Sequence[np.ndarray]) -> np.ndarray:
    """Block reverse circulant ``RevCirc(B_1, ..., B_m)``."""
    blocks = _check_blocks(blocks)
    m = len(blocks)
    return np.block([[blocks[(j + i) % m] for j in range(m)] for i in range(m)])


# --- expressions ---------------------------------------------------------------

_COEF_RE = re.compile(r"^(-?\d+|w\^?-?\d+|w)(?:\*|(?=[A-Za-z])|$)")


def parse_element(text: str, field: GF, group: GroupTable) -> GroupRingElement:
    """Parse ``term ('+' term)*`` where ``term := [coeff ['*']] mono``.

    ``mono`` is ``e``/``1`` or juxtaposed generator powers (``x2y``, ``ab^3``);
    coefficients are field literals (``2``, ``w5``).  Repeated monomials add up.
    """
    s = text.replace(" ", "")
    if not s:
        raise GroupRingError("empty element expression")
    coeffs = np.zeros(group.n, dtype=np.int64)
    terms = re.split(r"(?<![\^w])(?=[+-])", s)
    offset = 0
    for raw in terms:
        if not raw:
            continue
        at = offset
        offset += len(raw)
        sign = 1
        t = raw
        if t[0] in "+-":
            sign = -1 if t[0] == "-" else 1
            t = t[1:]
        if not t:
            raise GroupRingError(f"empty term at position {at}")
        coef = field.one
        m = _COEF_RE.match(t)
        if m and not (m.group(1) == "w" and "w" in group.gens):
            lit = m.group(1)
            rest = t[m.end() :]
            if m.group(0).endswith("*") and not rest:
                raise GroupRingError(f"missing group element after '*' at position {at}")
            coef = field(field.parse_literal(lit))
            t = rest if rest else "e"
        try:
            idx = group.evaluate(parse_word(t, group.gens))
        except ValueError as exc:
            raise GroupRingError(f"at position {at}: {exc}") from None
        if sign < 0:
            coef = -coef
        coeffs[idx] = field.add(coeffs[idx], coef.v)
    return GroupRingElement(field, group, coeffs)


def format_element(a: GroupRingElement) -> str:
    parts = []
    for i in a.support():
        c = int(a.coeffs[i])
        label = a.group.label(i)
        if c == 1:
            parts.append(label)
        else:
            lit = a.field.format_literal(c)
            parts.append(lit if label == "e" else f"{lit}*{label}")
    return " + ".join(parts) if parts else "0"
