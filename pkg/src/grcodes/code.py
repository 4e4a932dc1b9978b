"""Linear codes over GF(q): row reduction, duals, membership and minimum weight."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .field import GF

DEFAULT_BUDGET = 2**24
_CHUNK_ELEMS = 1 << 22


class BudgetExceeded(RuntimeError):
    pass


class EmptySearchSet(ValueError):
    pass


# --- matrix helpers ------------------------------------------------------------


def rref(F: GF, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns the nonzero rows and the pivot columns."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        if A[r, c] != 1:
            A[r] = F.mul(F.inv(A[r, c]), A[r])
        col = A[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            A[mask] = F.sub(A[mask], F.mul(col[mask, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: GF, M) -> int:
    return len(rref(F, M)[1])


def nullspace(F: GF, M) -> np.ndarray:
    """Basis (as rows) of ``{x : M x^T = 0}``."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    R, piv = rref(F, M)
    free = [j for j in range(n) if j not in set(piv)]
    N = np.zeros((len(free), n), dtype=np.int64)
    for t, j in enumerate(free):
        N[t, j] = 1
        for i, pc in enumerate(piv):
            N[t, pc] = F.neg(R[i, j])
    return N


def omega(F: GF, m: int) -> np.ndarray:
    """The 2m x 2m matrix ``[[O, I], [-I, O]]``."""
    I = np.eye(m, dtype=np.int64)
    O = np.zeros((m, m), dtype=np.int64)
    return np.block([[O, I], [F.neg(I), O]])


def inner_euclidean(F: GF, u, v) -> int:
    return int(F.matmul(np.atleast_2d(u), np.atleast_2d(v).T)[0, 0])


def inner_hermitian(F: GF, u, v) -> int:
    return int(F.matmul(np.atleast_2d(u), F.frobenius(np.atleast_2d(v)).T)[0, 0])


def inner_symplectic(F: GF, u, v) -> int:
    u = np.atleast_2d(u)
    return int(F.matmul(F.matmul(u, omega(F, u.shape[1] // 2)), np.atleast_2d(v).T)[0, 0])


def hamming_weight(v) -> np.ndarray:
    return np.count_nonzero(np.asarray(v), axis=-1)


def symplectic_weight(v) -> np.ndarray:
    v = np.asarray(v)
    m = v.shape[-1] // 2
    return np.count_nonzero((v[..., :m] != 0) | (v[..., m:] != 0), axis=-1)


def _weight_fn(metric: str):
    if metric == "hamming":
        return hamming_weight
    if metric == "symplectic":
        return symplectic_weight
    raise ValueError(f"unknown metric {metric!r}")


# --- codes ---------------------------------------------------------------------


@dataclass
class CodeParams:
    n: int
    k: int
    d: int | None
    metric: str = "hamming"
    exact: bool = True
    degenerate_dual_gap: bool = False
    witness: np.ndarray | None = field(default=None, repr=False, compare=False)
    evaluated: int = field(default=0, repr=False, compare=False)

    def to_json(self) -> dict:
        out = {"n": self.n, "k": self.k, "d": self.d, "metric": self.metric, "exact": self.exact}
        if self.degenerate_dual_gap:
            out["degenerate_dual_gap"] = True
        return out

    def __iter__(self):
        return iter((self.n, self.k, self.d))


class LinearCode:
    """Row space of a generator matrix over ``field``."""

    def __init__(self, field: GF, generator) -> None:
        G = np.array(generator, dtype=np.int64, copy=True)
        if G.ndim != 2 or G.shape[1] == 0:
            raise ValueError("generator must be a nonempty matrix")
        if ((G < 0) | (G >= field.q)).any():
            raise ValueError("generator entries out of range for " + repr(field))
        G.setflags(write=False)
        self.field = field
        self.generator = G
        R, piv = rref(field, G)
        R.setflags(write=False)
        self.basis = R
        self.pivots = piv

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.basis.shape[0]

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over {self.field!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.field == other.field
            and self.basis.shape == other.basis.shape
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.basis.shape, self.basis.tobytes()))

    # -- duals --------------------------------------------------------------

    def dual(self, kind: str = "euclidean") -> LinearCode:
        F = self.field
        if kind == "euclidean":
            M = self.basis
        elif kind == "hermitian":
            if F.k % 2:
                raise ValueError("Hermitian duality needs a field of even degree")
            # <x, y>_h = sum x_i y_i^p; for q = p^2 this is the conjugation
            M = _hermitian_conj(F, self.basis)
        elif kind == "symplectic":
            if self.n % 2:
                raise ValueError(f"symplectic dual needs even length, got {self.n}")
            m = self.n // 2
            B = self.basis
            M = np.hstack([F.neg(B[:, m:]), B[:, :m]])  # B @ Omega
        else:
            raise ValueError(f"unknown inner product {kind!r}")
        if M.shape[0] == 0:
            return LinearCode(F, np.eye(self.n, dtype=np.int64))
        N = nullspace(F, M)
        if N.shape[0] == 0:
            return LinearCode(F, np.zeros((1, self.n), dtype=np.int64))
        return LinearCode(F, N)

    def dual_euclidean(self) -> LinearCode:
        return self.dual("euclidean")

    def dual_hermitian(self) -> LinearCode:
        return self.dual("hermitian")

    def dual_symplectic(self) -> LinearCode:
        return self.dual("symplectic")

    # -- membership ---------------------------------------------------------

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64).reshape(-1)
        if v.shape[0] != self.n:
            raise ValueError(f"vector length {v.shape[0]} != code length {self.n}")
        if not v.any():
            return True
        return rank(self.field, np.vstack([self.basis, v])) == self.k

    def contains_code(self, other: LinearCode) -> bool:
        if other.n != self.n:
            return False
        if other.k == 0:
            return True
        return rank(self.field, np.vstack([self.basis, other.basis])) == self.k

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def codewords(self) -> np.ndarray:
        """All q^k codewords (small codes only)."""
        if self.field.q**self.k > 1 << 20:
            raise BudgetExceeded("too many codewords to list")
        return _span_table(self.field, self.basis)

    # -- distance -----------------------------------------------------------

    def min_weight(self, metric: str = "hamming", **kw) -> CodeParams:
        return min_weight(self, metric, **kw)

    def params(self, metric: str = "hamming", **kw) -> CodeParams:
        return min_weight(self, metric, **kw)


def _hermitian_conj(F: GF, M):
    # conjugation x -> x^{sqrt(q)}: p-th power applied k/2 times
    out = np.asarray(M, dtype=np.int64)
    for _ in range(F.k // 2):
        out = F.frobenius(out)
    return out


def code_from_generator(field: GF, M) -> LinearCode:
    return LinearCode(field, M)


def hconcat(field: GF, M1, M2) -> LinearCode:
    """Code generated by the horizontal join ``(M1 | M2)``."""
    M1 = np.asarray(M1, dtype=np.int64)
    M2 = np.asarray(M2, dtype=np.int64)
    if M1.shape[0] != M2.shape[0]:
        raise ValueError(f"row counts differ: {M1.shape[0]} vs {M2.shape[0]}")
    return LinearCode(field, np.hstack([M1, M2]))


# --- enumeration ---------------------------------------------------------------


def gray_steps(q: int, k: int):
    """Reflected q-ary Gray code: yields ``(position, old_digit, new_digit)``."""
    digits = [0] * k
    direction = [1] * k
    for _ in range(q**k - 1):
        i = 0
        while True:
            nd = digits[i] + direction[i]
            if 0 <= nd < q:
                break
            direction[i] = -direction[i]
            i += 1
        old = digits[i]
        digits[i] = nd
        yield i, old, nd


def _span_table(F: GF, rows: np.ndarray) -> np.ndarray:
    """All linear combinations of ``rows``; index = sum(digit_r * q**r)."""
    T = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for r in rows:
        T = np.concatenate([F.add(T, F.mul(lam, r)[None, :]) for lam in range(F.q)])
    return T


def _span_flags(q: int, k: int, marked: int) -> np.ndarray:
    """For the table of :func:`_span_table`: whether any of the first ``marked``
    message digits is nonzero."""
    flags = np.zeros(1, dtype=bool)
    for r in range(k):
        parts = [flags]
        for _ in range(1, q):
            parts.append(np.ones_like(flags) if r < marked else flags)
        flags = np.concatenate(parts)
    return flags


def _complement(F: GF, code_basis: np.ndarray, sub_basis: np.ndarray) -> np.ndarray:
    """Rows of ``code_basis`` extending ``sub_basis`` to a basis of the code."""
    cur = sub_basis.copy()
    r = cur.shape[0]
    picked = []
    for row in code_basis:
        trial = np.vstack([cur, row]) if cur.size else row[None, :]
        rr = rank(F, trial)
        if rr > r:
            cur, r = trial, rr
            picked.append(row)
    if not picked:
        return np.zeros((0, code_basis.shape[1]), dtype=np.int64)
    return np.array(picked, dtype=np.int64)


def min_weight(
    code: LinearCode,
    metric: str = "hamming",
    *,
    exclude: LinearCode | None = None,
    budget: int = DEFAULT_BUDGET,
    randomized: bool = False,
    seed: int | None = None,
    samples: int = 2000,
    workers: int = 1,
) -> CodeParams:
    """Minimum nonzero weight of ``code``, skipping members of the subcode ``exclude``.

    Exhaustive when ``q**k <= budget``; otherwise, if ``randomized`` is set,
    information-set sampling (seeded) gives an upper bound with ``exact=False``.
    If ``exclude`` equals the whole code the search set is empty; the minimum
    over the code itself is returned with ``degenerate_dual_gap=True``.
    """
    F = code.field
    wfn = _weight_fn(metric)
    if metric == "symplectic" and code.n % 2:
        raise ValueError("symplectic metric needs even length")
    degenerate = False
    if exclude is not None and exclude.k > 0:
        if exclude.n != code.n or not code.contains_code(exclude):
            raise ValueError("exclude must be a subcode of the searched code")
        W = _complement(F, code.basis, exclude.basis)
        if W.shape[0] == 0:
            degenerate = True
            W, E = code.basis, np.zeros((0, code.n), dtype=np.int64)
        else:
            E = exclude.basis
    else:
        W, E = code.basis, np.zeros((0, code.n), dtype=np.int64)
    if W.shape[0] == 0:
        raise EmptySearchSet("code has dimension 0: no nonzero codewords")

    total = F.q ** (W.shape[0] + E.shape[0])
    if total <= budget:
        d, word, count = _exhaustive(F, W, E, wfn, workers)
        return CodeParams(code.n, code.k, d, metric, True, degenerate, word, count)
    if not randomized:
        raise BudgetExceeded(f"q^k = {total} codewords exceeds budget {budget}")
    if seed is None:
        raise ValueError("randomized search needs an explicit seed")
    d, word, its = information_set_search(
        F, np.vstack([W, E]), wfn, seed=seed, samples=samples, exclude=None if degenerate or E.shape[0] == 0 else exclude
    )
    return CodeParams(code.n, code.k, d, metric, False, degenerate, word, its)


def _exhaustive(F: GF, W: np.ndarray, E: np.ndarray, wfn, workers: int = 1):
    rows = np.vstack([W, E])
    k, n = rows.shape
    kw = W.shape[0]
    q = F.q
    k_low = min(k, max(1, int(math.log(max(2, _CHUNK_ELEMS // (8 * n)), q))))
    low, high = rows[:k_low], rows[k_low:]
    table = _span_table(F, low)
    low_ok = _span_flags(q, k_low, min(kw, k_low))
    high_marked = max(0, kw - k_low)
    k_high = high.shape[0]

    # Offsets for the high part, in Gray order; one row update per step.
    batch = max(1, _CHUNK_ELEMS // (table.shape[0] * n))

    def offsets():
        off = np.zeros(n, dtype=np.int64)
        digits = [0] * k_high
        yield off.copy(), False
        for pos, old, new in gray_steps(q, k_high):
            off = F.add(off, F.mul(F.sub(new, old), high[pos]))
            digits[pos] = new
            yield off.copy(), any(digits[:high_marked])

    def evaluate(chunk):
        offs = np.array([o for o, _ in chunk])
        ok = np.array([f for _, f in chunk])
        words = F.add(table[None, :, :], offs[:, None, :])
        w = wfn(words)
        valid = low_ok[None, :] | ok[:, None]
        w = np.where(valid, w, np.iinfo(np.int64).max)
        flat = int(np.argmin(w))
        b, t = divmod(flat, table.shape[0])
        return int(w[b, t]), words[b, t], int(valid.sum())

    def chunks():
        it = offsets()
        while True:
            c = list(itertools.islice(it, batch))
            if not c:
                return
            yield c

    best, word, count = np.iinfo(np.int64).max, None, 0
    if workers <= 1:
        results = map(evaluate, chunks())
    else:
        pool = ThreadPoolExecutor(max_workers=workers)
        results = pool.map(evaluate, chunks())
    # Ties resolve to the first chunk in enumeration order, so output is scheduling-independent.
    for d, wd, c in results:
        count += c
        if d < best:
            best, word = d, wd
    if workers > 1:
        pool.shutdown()
    return int(best), word, count


def information_set_search(
    F: GF,
    rows: np.ndarray,
    wfn,
    *,
    seed: int,
    samples: int = 2000,
    exclude: LinearCode | None = None,
    target: int | None = None,
    p: int = 2,
):
    """Lee-Brickell style sampling: pick a random information set, reduce to
    systematic form there and try all combinations of at most ``p`` rows.

    Returns ``(best_weight, codeword, iterations_used)``; stops early once
    ``target`` is reached.
    """
    rng = np.random.default_rng(seed)
    R0, _ = rref(F, rows)
    k, n = R0.shape
    check = None
    if exclude is not None:
        check = nullspace(F, exclude.basis)  # v in exclude iff check @ v^T == 0
    best, best_word = np.iinfo(np.int64).max, None
    nonzero = np.arange(1, F.q)
    its = 0
    for its in range(1, samples + 1):
        perm = rng.permutation(n)
        R, _ = rref(F, R0[:, perm])
        S = np.empty_like(R)
        S[:, perm] = R
        cands = [S]
        if p >= 2 and k >= 2:
            for c in nonzero:
                cS = F.mul(c, S)
                step = max(1, _CHUNK_ELEMS // (k * n))
                for i0 in range(0, k, step):
                    block = F.add(S[i0 : i0 + step, None, :], cS[None, :, :])
                    cands.append(block.reshape(-1, n))
        for C in cands:
            w = wfn(C)
            w = np.where(w == 0, np.iinfo(np.int64).max, w)
            order = np.argsort(w, kind="stable")
            for idx in order:
                if w[idx] >= best:
                    break
                v = C[idx]
                if check is not None and not F.matmul(check, v[:, None]).any():
                    continue
                best, best_word = int(w[idx]), v.copy()
                break
        if target is not None and best <= target:
            break
    return int(best), best_word, its
