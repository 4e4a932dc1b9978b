"""Self-orthogonality certificates and quantum code parameters."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .code import DEFAULT_BUDGET, CodeParams, LinearCode, hconcat, min_weight, omega
from .field import GF
from .groupring import GroupRingElement, format_element, sigma

KINDS = ("euclidean", "hermitian", "symplectic", "symplectic-pair")


class CertificateError(ValueError):
    pass


@dataclass
class OrthoCertificate:
    """Outcome of a self-orthogonality check.

    ``residual`` is the quantity that must vanish (a group ring element or a
    matrix); ``matrix_residual`` is the same identity evaluated on sigma(a),
    kept so the two levels can be compared.
    """

    kind: str
    holds: bool
    residual: GroupRingElement | np.ndarray | None = None
    matrix_residual: np.ndarray | None = field(default=None, repr=False)
    failed: tuple[str, ...] = ()

    def residual_terms(self) -> list[str]:
        r = self.residual
        if isinstance(r, GroupRingElement):
            return [] if r.is_zero() else format_element(r).split(" + ")
        if isinstance(r, np.ndarray):
            return [f"({i},{j})={int(r[i, j])}" for i, j in zip(*np.nonzero(r))]
        return []

    def to_json(self) -> dict:
        out = {"kind": self.kind, "holds": self.holds, "residual": self.residual_terms()}
        if self.failed:
            out["failed"] = list(self.failed)
        return out


def _cross_check(cert_level: bool, matrix_level: bool, what: str) -> None:
    if cert_level != matrix_level:
        raise AssertionError(f"{what}: group ring verdict {cert_level} != matrix verdict {matrix_level}")


def check_euclidean(a: GroupRingElement) -> OrthoCertificate:
    """C(a) is Euclidean self-orthogonal iff a a^T = 0."""
    F = a.field
    r = a * a.T
    M = sigma(a)
    mm = F.matmul(M, M.T)
    _cross_check(r.is_zero(), not mm.any(), "a a^T = 0 vs M M^T = O")
    return OrthoCertificate("euclidean", r.is_zero(), r, mm)


def check_euclidean_corollary(a: GroupRingElement) -> OrthoCertificate:
    """Sufficient condition: a = a^T and a^2 = 0."""
    failed = []
    if a != a.T:
        failed.append("a != a^T")
    sq = a * a
    if not sq.is_zero():
        failed.append("a^2 != 0")
    holds = not failed
    if holds and not check_euclidean(a).holds:
        raise AssertionError("corollary holds but a a^T != 0")
    return OrthoCertificate("euclidean-corollary", holds, sq, failed=tuple(failed))


def check_hermitian(a: GroupRingElement) -> OrthoCertificate:
    """C(a) over GF(p^2) is Hermitian self-orthogonal iff a (a^p)^T = 0."""
    F = a.field
    if F.k != 2:
        raise CertificateError(f"Hermitian check needs a quadratic extension field, got {F!r}")
    r = a * a.frobenius().T
    M = sigma(a)
    mm = F.matmul(M, F.frobenius(M).T)
    _cross_check(r.is_zero(), not mm.any(), "a (a^p)^T = 0 vs M conj(M)^T = O")
    return OrthoCertificate("hermitian", r.is_zero(), r, mm)


def check_symplectic_matrix(F: GF, M) -> OrthoCertificate:
    """The code generated by M (2n columns) is symplectic self-orthogonal iff M Omega M^T = O."""
    M = np.asarray(M, dtype=np.int64)
    if M.shape[1] % 2:
        raise CertificateError(f"symplectic check needs an even number of columns, got {M.shape[1]}")
    r = F.matmul(F.matmul(M, omega(F, M.shape[1] // 2)), M.T)
    return OrthoCertificate("symplectic", not r.any(), r, r)


def check_symplectic_pair(a: GroupRingElement, b: GroupRingElement) -> OrthoCertificate:
    """(sigma(a) | sigma(b)) is symplectic self-orthogonal iff a b^T = b a^T."""
    a._same(b)
    r = a * b.T - b * a.T
    M = np.hstack([sigma(a), sigma(b)])
    mat = check_symplectic_matrix(a.field, M)
    _cross_check(r.is_zero(), mat.holds, "a b^T = b a^T vs G Omega G^T = O")
    return OrthoCertificate("symplectic-pair", r.is_zero(), r, mat.matrix_residual)


@dataclass
class QeccParams:
    n: int
    k: int
    d: int
    base_q: int
    construction: str
    d_exact: bool
    classical: CodeParams
    degenerate_dual_gap: bool = False

    def to_json(self) -> dict:
        c = self.classical
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "base_q": self.base_q,
            "construction": self.construction,
            "d_exact": self.d_exact,
            "classical": {"n": c.n, "k": c.k, "d": c.d},
            "degenerate_dual_gap": self.degenerate_dual_gap,
        }

    def __str__(self) -> str:
        return f"[[{self.n}, {self.k}, {self.d}]]_{self.base_q}"


def _dual_kind(kind: str) -> str:
    return "symplectic" if kind.startswith("symplectic") else kind


def derive_qecc(
    C: LinearCode,
    kind: str,
    *,
    certificate: OrthoCertificate | None = None,
    budget: int = DEFAULT_BUDGET,
    randomized: bool = False,
    seed: int | None = None,
    samples: int = 2000,
    workers: int = 1,
) -> QeccParams:
    """Quantum parameters from a self-orthogonal classical code.

    * euclidean:  [[n, n-2k, d_H]]_q, d_H over C^perp_e minus C
    * hermitian:  [[n, n-2k, d_H]]_p for C over GF(p^2), d_H over C^perp_h minus C
    * symplectic: [[n, n-k, d_S]]_q from a [2n, k] code, d_S over C^perp_s minus C
    """
    if kind not in KINDS:
        raise ValueError(f"unknown construction {kind!r}")
    if certificate is not None:
        if _dual_kind(certificate.kind) != _dual_kind(kind):
            raise CertificateError(f"certificate of kind {certificate.kind} does not match {kind}")
        if not certificate.holds:
            raise CertificateError(f"{certificate.kind} certificate does not hold")
    dual = C.dual(_dual_kind(kind))
    if not dual.contains_code(C):
        raise CertificateError(f"code is not {_dual_kind(kind)} self-orthogonal")

    opts = dict(budget=budget, randomized=randomized, seed=seed, samples=samples, workers=workers)
    classical = min_weight(C, "hamming", **opts) if C.k else CodeParams(C.n, 0, None)
    F = C.field
    if kind == "euclidean":
        dist = min_weight(dual, "hamming", exclude=C, **opts)
        return QeccParams(C.n, C.n - 2 * C.k, dist.d, F.q, kind, dist.exact, classical, dist.degenerate_dual_gap)
    if kind == "hermitian":
        if F.k != 2:
            raise CertificateError("Hermitian construction needs a classical field GF(p^2)")
        dist = min_weight(dual, "hamming", exclude=C, **opts)
        return QeccParams(C.n, C.n - 2 * C.k, dist.d, F.p, kind, dist.exact, classical, dist.degenerate_dual_gap)
    if C.n % 2:
        raise CertificateError("symplectic construction needs even classical length")
    dist = min_weight(dual, "symplectic", exclude=C, **opts)
    n = C.n // 2
    return QeccParams(n, n - C.k, dist.d, F.q, kind, dist.exact, classical, dist.degenerate_dual_gap)


def qecc_from_elements(
    kind: str, a: GroupRingElement, b: GroupRingElement | None = None, **kw
) -> tuple[OrthoCertificate, QeccParams | None]:
    """Certificate plus parameters for C(a), or for (sigma(a) | sigma(b)) in the pair form.

    Parameters are None when the certificate fails.
    """
    if kind == "euclidean":
        cert = check_euclidean(a)
        C = LinearCode(a.field, sigma(a))
    elif kind == "hermitian":
        cert = check_hermitian(a)
        C = LinearCode(a.field, sigma(a))
    elif kind == "symplectic":
        cert = check_symplectic_matrix(a.field, sigma(a))
        C = LinearCode(a.field, sigma(a))
    elif kind == "symplectic-pair":
        if b is None:
            raise ValueError("symplectic-pair needs a second element")
        cert = check_symplectic_pair(a, b)
        C = hconcat(a.field, sigma(a), sigma(b))
    else:
        raise ValueError(f"unknown construction {kind!r}")
    if not cert.holds:
        return cert, None
    return cert, derive_qecc(C, kind, certificate=cert, **kw)
