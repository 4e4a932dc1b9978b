from __future__ import annotations

import numpy as np
import pytest

from grcodes.groups import (
    Cyclic,
    Dihedral,
    DirectProduct,
    GroupError,
    Quaternion,
    Semidirect,
    build,
    group_table,
    parse_word,
)

SPECS = [
    "C1", "C7", "D3", "D4:form=f2", "D5:form=f3", "D8:form=f4", "Q8", "Q12:form=f2",
    "C5sd2C4", "C7sd2C3", "C3xC5", "C5xC3:inner=2", "C3xD3:form=f1", "C2xD5:form=f4",
    "C2xC3xC2:loops=3,1,2", "C2xQ8:form=f2",
]


@pytest.mark.parametrize("spec", SPECS)
def test_group_axioms(spec):
    G = group_table(spec)
    n = G.n
    M = G.mul
    # Latin square, identity, inverses
    assert all(len(set(row)) == n for row in M) and all(len(set(col)) == n for col in M.T)
    assert np.array_equal(M[G.id], np.arange(n)) and np.array_equal(M[:, G.id], np.arange(n))
    assert np.all(M[np.arange(n), G.inv] == G.id)
    # associativity, checked on the full table
    lhs = M[M[:, :, None], np.arange(n)[None, None, :]]  # (ab)c
    rhs = M[np.arange(n)[:, None, None], M[None, :, :]]  # a(bc)
    assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("spec, order, abelian", [
    ("C6", 6, True), ("D5", 10, False), ("Q8", 8, False), ("Q12", 12, False),
    ("C5sd2C4", 20, False), ("C5sd1C4", 20, True), ("C3xD3", 18, False), ("C3xC5", 15, True),
])
def test_orders(spec, order, abelian):
    G = group_table(spec)
    assert G.n == order and G.is_abelian() == abelian


def test_dihedral_relations():
    G = group_table("D7")
    a, b = G.gens["a"], G.gens["b"]
    assert G.power(a, 7) == G.id and G.power(b, 2) == G.id
    assert G.product(b, a) == G.product(G.inverse(a), b)


def test_quaternion_relations():
    G = group_table("Q12")
    a, b = G.gens["a"], G.gens["b"]
    assert G.power(a, 6) == G.id
    assert G.power(b, 2) == G.power(a, 3)
    assert G.product(b, a) == G.product(G.inverse(a), b)
    # a unique involution
    assert sum(1 for i in range(G.n) if i != G.id and G.product(i, i) == G.id) == 1


def test_semidirect_relation():
    G = group_table("C7sd2C3")
    x, y = G.gens["x"], G.gens["y"]
    assert G.product(G.product(y, x), G.inverse(y)) == G.power(x, 2)


@pytest.mark.parametrize("spec", ["C5sd2C3", "C6sd2C2", "C5sd3C2"])
def test_semidirect_rejects_bad_parameters(spec):
    with pytest.raises(GroupError):
        group_table(spec)


def test_dihedral_listings():
    assert group_table("D4").elements == ("e", "a", "a2", "a3", "b", "ba", "ba2", "ba3")
    assert group_table("D4:form=f2").elements == ("e", "a", "a2", "a3", "b", "ab", "a2b", "a3b")
    assert group_table("D3:form=f3").elements == ("e", "b", "a", "ba", "a2", "ba2")
    assert group_table("D3:form=f4").elements == ("e", "b", "a", "ab", "a2", "a2b")


def test_listing_positions_agree():
    # ba sits at position n+2 in f1 and equals a^{n-1}b, listed last in f2
    n = 6
    G1, G2 = group_table(f"D{n}"), group_table(f"D{n}:form=f2")
    assert G1.elements[n + 1] == "ba"
    assert G2.index("ba") == 2 * n - 1
    assert G2.elements[2 * n - 1] == f"a{n - 1}b"


def test_cyclic_product_forms():
    f1 = group_table("C3xC5:form=f1").elements
    f2 = group_table("C3xC5:form=f2").elements
    assert f1[:4] == ("e", "x", "x2", "y")
    assert f2[:6] == ("e", "y", "y2", "y3", "y4", "x")
    assert sorted(f1) == sorted(f2)


def test_c_x_d_forms():
    f1 = group_table("C3xD3:form=f1").elements
    assert f1[:7] == ("e", "x", "x2", "y", "xy", "x2y", "y2")
    assert f1[9:12] == ("z", "xz", "x2z")
    f4 = group_table("C3xD3:form=f4").elements
    assert f4[:7] == ("e", "y", "y2", "z", "yz", "y2z", "x")


def test_names_option():
    G = group_table("D5:names=b,a")
    assert G.elements[:6] == ("e", "b", "b2", "b3", "b4", "a")
    assert G.power(G.gens["b"], 5) == G.id and G.power(G.gens["a"], 2) == G.id


def test_parse_word_forms():
    assert parse_word("x2y") == [("x", 2), ("y", 1)]
    assert parse_word("x^2y^-1") == [("x", 2), ("y", -1)]
    assert parse_word("e") == [] and parse_word("1") == []
    for bad in ("x^", "x-1", "2x"):
        with pytest.raises(GroupError):
            parse_word(bad)


def test_index_words():
    G = group_table("D5")
    assert G.index("ab") == G.index("b a^-1") == G.index("ba4")


@pytest.mark.parametrize("text", ["X5", "D0", "C5xC3:inner=3", "C5:form=f2", "D5:names=a", "C5:foo=1", "Q4", "D4:form=f7"])
def test_parse_errors(text):
    with pytest.raises(GroupError):
        group_table(text)


def test_max_order_guard():
    with pytest.raises(GroupError):
        build(Cyclic(5000))


def test_build_from_dataclasses():
    G = build(DirectProduct((Cyclic(2, ("x",)), Dihedral(3, names=("y", "z")))))
    assert G.n == 12
    assert build(Quaternion(2)).n == 8
    assert build(Semidirect(5, 4, 2)).n == 20
