from __future__ import annotations

import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grcodes.code import LinearCode
from grcodes.field import GF
from grcodes.twod import (
    BivarPoly,
    DimensionWarning,
    PolyError,
    big_f,
    check_dual_containing,
    check_polynomial,
    check_self_orthogonal,
    code_from_g,
    divisors_from_factors,
    dual_star,
    format_poly,
    is_shift_closed,
    lex_geq,
    parse_poly,
    partial_geq,
    poly_divides,
    poly_mul,
    poly_mul_quotient,
    reciprocal,
)
from known_elements import REMARK, TWOD_G, TWOD_GGSTAR, TWOD_GSTAR, TWOD_H, TWOD_HSTAR

F2, F3 = GF(2), GF(3)


def P(text, F=F2):
    return parse_poly(text, F)


def poly_strategy(F, max_deg=4, max_terms=6):
    term = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg), st.integers(1, F.q - 1))
    return st.lists(term, min_size=1, max_size=max_terms).map(
        lambda ts: BivarPoly(F, {(i, j): c for i, j, c in ts})
    ).filter(lambda f: not f.is_zero())


# --- polynomials ------------------------------------------------------------------


def test_parse_and_format():
    f = P("x^4y^4 + x4y2 + x + y + 1")
    assert set(f.terms) == {(4, 4), (4, 2), (1, 0), (0, 1), (0, 0)}
    assert format_poly(f) == "x4y4 + x4y2 + x + y + 1"
    g = P("2*x2 - y + 1", F3)
    assert g.terms == {(2, 0): 2, (0, 1): 2, (0, 0): 1}
    assert P("x + x").is_zero()


@pytest.mark.parametrize("text", ["", "x +", "z", "x^", "3*", "xy2x"])
def test_parse_errors(text):
    with pytest.raises(PolyError):
        P(text)


def test_orders():
    assert lex_geq((2, 0), (1, 5)) and lex_geq((1, 5), (1, 4)) and not lex_geq((1, 3), (1, 4))
    assert partial_geq((2, 3), (1, 3)) and not partial_geq((2, 0), (1, 5))


def test_degree_and_leading():
    f = P("x5y + x2y7 + 1")
    assert f.degree == (5, 7)
    assert f.leading() == ((5, 1), 1)


def test_mul_identity_and_remark():
    f1, f2 = P(REMARK["f1"]), P(REMARK["f2"])
    assert poly_mul(f1, BivarPoly.one(F2)) == f1
    assert poly_mul(f1, f2) == P(REMARK["f1f2"])
    assert poly_mul_quotient(f1, f2, 8, 6) == P(REMARK["f1f2_mod"])


def test_reciprocal_examples():
    assert reciprocal(BivarPoly.one(F2)) == BivarPoly.one(F2)
    assert reciprocal(P(REMARK["f1"])) == P(REMARK["f1s"])
    assert reciprocal(P(REMARK["f2"])) == P(REMARK["f2s"])
    with pytest.raises(PolyError):
        reciprocal(BivarPoly(F2))


@given(st.sampled_from([F2, F3, GF(2, 2)]).flatmap(lambda F: st.tuples(poly_strategy(F), poly_strategy(F))))
def test_reciprocal_of_product(pair):
    f1, f2 = pair
    assert reciprocal(poly_mul(f1, f2)) == poly_mul(reciprocal(f1), reciprocal(f2))


@given(st.sampled_from([F2, F3]).flatmap(lambda F: st.tuples(poly_strategy(F, 3), poly_strategy(F, 3))))
def test_reciprocal_of_quotient_product_when_degrees_fit(pair):
    f1, f2 = pair
    (a, b), (c, d) = f1.degree, f2.degree
    l, m = a + c + 1, b + d + 1
    lhs = reciprocal(poly_mul_quotient(f1, f2, l, m))
    assert lhs == poly_mul_quotient(reciprocal(f1), reciprocal(f2), l, m)


@given(st.sampled_from([F2, F3]).flatmap(lambda F: st.tuples(poly_strategy(F, 3), poly_strategy(F, 3))))
def test_division_recovers_factor(pair):
    g, h = pair
    ok, quot = poly_divides(g, poly_mul(g, h))
    assert ok and quot == h


def test_divides_examples():
    ok, h = poly_divides(P("x + 1", F3), P("x2 - 1", F3))
    assert ok and h == P("x - 1", F3)
    ok, h = poly_divides(P("x + y"), P("x2 + y2"))
    assert ok and h == P("x + y")
    assert poly_divides(P("x + y"), P("x2 + y"))[0] is False


# --- codes ------------------------------------------------------------------------


def test_example_code():
    g = P(TWOD_G)
    h, hs = check_polynomial(15, 12, g)
    assert h == P(TWOD_H) and hs == P(TWOD_HSTAR)
    assert reciprocal(g) == P(TWOD_GSTAR)
    assert poly_mul(g, reciprocal(g)) == P(TWOD_GGSTAR)
    C = code_from_g(15, 12, g)
    assert (C.n, C.k) == (180, 88)
    Cs = dual_star(15, 12, g)
    assert (Cs.n, Cs.k) == (180, 16)
    assert check_dual_containing(15, 12, g) is True
    assert check_self_orthogonal(15, 12, g) is False


def test_full_space_and_small_cases():
    C = code_from_g(3, 2, BivarPoly.one(F2))
    assert C.k == 6
    g = P("xy + x + y + 1")
    C = code_from_g(2, 2, g)
    assert C.k == 1 and C.generator.tolist() == [[1, 1, 1, 1]]
    assert check_self_orthogonal(2, 2, g)
    assert check_dual_containing(2, 2, BivarPoly.one(F2))


def test_dual_star_small():
    Cs = dual_star(2, 2, P("x + 1"))
    # h = (x+1)(y^2+1) has y-degree 2 = m, so (l-a')(m-b') = 0
    assert Cs.k == 0 and Cs.formula_dim == 0


def test_code_position_convention():
    # coefficient of x^i y^j lands at i + l*j
    v = P("x2y").to_vector(3, 2)
    assert v.tolist() == [0, 0, 0, 0, 0, 1]
    assert BivarPoly.from_vector(F2, v, 3, 2) == P("x2y")


def test_preconditions():
    with pytest.raises(PolyError):
        code_from_g(3, 3, P("x + y"))  # does not divide
    F = big_f(F2, 2, 2)
    with pytest.raises(PolyError):
        code_from_g(2, 2, F)  # degree not below (l, m): the zero code
    with pytest.raises(PolyError):
        dual_star(2, 2, F)
    with pytest.raises(PolyError):
        check_self_orthogonal(2, 2, F)


def _small_divisors():
    x1, y1, y2 = P("x + 1"), P("y + 1"), P("y2 + y + 1")
    return [g for g in divisors_from_factors(F2, [(x1, 4), (y1, 1), (y2, 1)]) if g.degree[0] < 4 and g.degree[1] < 3]


def test_divisor_scan_shift_closure_and_duals():
    divs = _small_divisors()
    assert len(divs) == 12
    for g in divs:
        with warnings.catch_warnings():
            warnings.simplefilter("error", DimensionWarning)
            C = code_from_g(4, 3, g)
        assert C.k > 0 and is_shift_closed(C.code, 4, 3)
        Cs = dual_star(4, 3, g)
        if Cs.k:
            assert is_shift_closed(Cs.code, 4, 3)
            assert not F2.matmul(C.code.basis, Cs.code.basis.T).any()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UserWarning)
            so = check_self_orthogonal(4, 3, g)
        if so:
            B = C.code.basis
            assert not F2.matmul(B, B.T).any()


def test_dual_containing_matches_containment_on_divisors():
    for g in _small_divisors():
        C, Cs = code_from_g(4, 3, g), dual_star(4, 3, g)
        if Cs.k == 0:
            continue
        contained = C.code.contains_code(Cs.code)
        assert check_dual_containing(4, 3, g) == contained


def test_euclidean_dual_is_two_d_cyclic():
    for g in _small_divisors():
        D = code_from_g(4, 3, g).code.dual()
        if D.k:
            assert is_shift_closed(D, 4, 3)


def test_shift_detects_non_cyclic_code():
    assert not is_shift_closed(LinearCode(F2, [[1, 0, 0, 0, 0, 0]]), 3, 2)
