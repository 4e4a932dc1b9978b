from __future__ import annotations

import numpy as np
import pytest

from grcodes.code import LinearCode, hconcat
from grcodes.field import GF, parse_field
from grcodes.groupring import GroupRingElement, parse_element, sigma
from grcodes.groups import group_table
from grcodes.qecc import (
    CertificateError,
    check_euclidean,
    check_euclidean_corollary,
    check_hermitian,
    check_symplectic_matrix,
    check_symplectic_pair,
    derive_qecc,
    qecc_from_elements,
)
from known_elements import EUCLIDEAN, HERMITIAN, PAIR, SYMPLECTIC


def load(ex, key="a"):
    F, G = parse_field(ex["field"]), group_table(ex["group"])
    return parse_element(ex[key], F, G)


def test_euclidean_example():
    a = load(EUCLIDEAN)
    assert a.T == load(EUCLIDEAN, "a_T")
    cert, q = qecc_from_elements("euclidean", a)
    assert cert.holds and cert.residual_terms() == []
    assert (q.classical.n, q.classical.k, q.classical.d) == (15, 4, 8)
    assert (q.n, q.k, q.d, q.base_q, q.d_exact) == (15, 7, 3, 2, True)


def test_hermitian_example():
    a = load(HERMITIAN)
    assert a.frobenius() == load(HERMITIAN, "a_p")
    assert a.frobenius().T == load(HERMITIAN, "a_p_T")
    cert, q = qecc_from_elements("hermitian", a)
    assert cert.holds
    assert (q.classical.n, q.classical.k, q.classical.d) == (10, 4, 6)
    assert (q.n, q.k, q.d, q.base_q, q.d_exact) == (10, 2, 4, 3, True)


def test_symplectic_example():
    a = load(SYMPLECTIC)
    assert a.T == load(SYMPLECTIC, "a_T")
    cert, q = qecc_from_elements("symplectic", a)
    assert cert.holds
    assert (q.classical.n, q.classical.k, q.classical.d) == (22, 11, 6)
    # C equals its symplectic dual: the distance falls back to C itself
    assert (q.n, q.k, q.d, q.base_q) == (11, 0, 5, 3)
    assert q.degenerate_dual_gap and q.d_exact


def test_pair_example():
    a, b = load(PAIR), load(PAIR, "b")
    assert a.T == load(PAIR, "a_T") and b.T == load(PAIR, "b_T")
    assert a * b.T == b * a.T
    cert, q = qecc_from_elements("symplectic-pair", a, b)
    assert cert.holds
    assert (q.classical.n, q.classical.k, q.classical.d) == (20, 9, 6)
    assert (q.n, q.k, q.d, q.base_q) == (10, 1, 4, 2)


def test_failed_certificate_lists_residual():
    F, G = GF(2), group_table("C3")
    cert, q = qecc_from_elements("euclidean", GroupRingElement.identity(F, G))
    assert not cert.holds and q is None
    assert cert.residual_terms() == ["e"]


def test_corollary_clauses():
    F, G = GF(2), group_table("C4")
    a = parse_element("e + x2", F, G)  # symmetric, a^2 = e + x4 = 0
    assert check_euclidean_corollary(a).holds
    b = parse_element("e + x", F, G)
    cert = check_euclidean_corollary(b)
    assert not cert.holds and "a != a^T" in cert.failed and "a^2 != 0" in cert.failed
    c = parse_element("x + x3", F, G)  # symmetric, c^2 = x2 + x6 = 0
    assert check_euclidean_corollary(c).holds


def test_corollary_is_only_sufficient():
    a = load(EUCLIDEAN)
    assert check_euclidean(a).holds
    assert not check_euclidean_corollary(a).holds


def test_hermitian_needs_quadratic_field():
    a = GroupRingElement.identity(GF(3), group_table("C3"))
    with pytest.raises(CertificateError):
        check_hermitian(a)


def test_symplectic_matrix_odd_columns():
    with pytest.raises(CertificateError):
        check_symplectic_matrix(GF(2), np.ones((1, 3), dtype=np.int64))


def test_matrix_and_group_ring_levels_agree_randomly():
    rng = np.random.default_rng(11)
    F, G = GF(2), group_table("D4")
    for _ in range(200):
        a = GroupRingElement.random(F, G, rng)
        b = GroupRingElement.random(F, G, rng)
        # these raise internally if the two levels disagree
        check_euclidean(a)
        check_symplectic_pair(a, b)
    F9 = GF(3, 2)
    for _ in range(50):
        check_hermitian(GroupRingElement.random(F9, group_table("C4"), rng))


def test_derive_rejects_non_self_orthogonal():
    C = LinearCode(GF(2), [[1, 0, 0, 0]])
    with pytest.raises(CertificateError):
        derive_qecc(C, "euclidean")
    with pytest.raises(ValueError):
        derive_qecc(C, "bogus")


def test_derive_rejects_mismatched_certificate():
    a = load(EUCLIDEAN)
    cert = check_euclidean(a)
    C = LinearCode(a.field, sigma(a))
    with pytest.raises(CertificateError):
        derive_qecc(C, "symplectic", certificate=cert)


def test_json_shape():
    a, b = load(PAIR), load(PAIR, "b")
    _, q = qecc_from_elements("symplectic-pair", a, b)
    js = q.to_json()
    assert set(js) == {"n", "k", "d", "base_q", "construction", "d_exact", "classical", "degenerate_dual_gap"}
    assert js["classical"] == {"n": 20, "k": 9, "d": 6}
    assert str(q) == "[[10, 1, 4]]_2"


def test_pair_code_matches_hconcat():
    a, b = load(PAIR), load(PAIR, "b")
    C = hconcat(a.field, sigma(a), sigma(b))
    assert check_symplectic_matrix(a.field, C.generator).holds
