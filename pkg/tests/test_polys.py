from fractions import Fraction

import pytest
from commons import (
    ConstantPolynomialError,
    PolySyntaxError,
    ZeroPolynomialError,
)
from hypothesis import given
from hypothesis import strategies as st
from polys import (
    Poly,
    is_coeff_list,
    derivative,
    eval_poly,
    eval_poly_complex,
    format_poly,
    make_monic,
    parse_poly,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
)
from strategies import generated_cases, rationals

F = Fraction

polys_ = st.lists(rationals, max_size=6).map(lambda cs: Poly(tuple(cs)))
nonzero_polys = polys_.filter(lambda p: not p.is_zero)


# -- parse_poly --


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x^2+1", (1, 0, 1)),
        ("0", ()),
        ("x^3-6*x^2+11*x-6", (-6, 11, -6, 1)),
        ("1, 0, 1", (1, 0, 1)),
        ("1 0 1", (1, 0, 1)),
        ("-6, 11, -6, 1", (-6, 11, -6, 1)),
        ("1/2*x^2 - 3/4", (F(-3, 4), 0, F(1, 2))),
        ("-x^2", (0, 0, -1)),
        ("(x-1)*(x+1)", (-1, 0, 1)),
        ("2^3*x", (0, 8)),
        ("x - 1 - 2", (-3, 1)),
    ],
)
def test_parse_poly(text, expected):
    assert parse_poly(text).coeffs == tuple(F(c) for c in expected)


def test_parse_expression_and_list_agree():
    assert parse_poly("x^2+1") == parse_poly("1, 0, 1")


@pytest.mark.parametrize(
    "text, is_list",
    [
        ("1 0 1", True),
        ("-1 0 1", True),
        ("3, -2", True),
        ("3 -2", False),
        ("3 - 2", False),
        ("x + 1", False),
    ],
)
def test_is_coeff_list(text, is_list):
    assert is_coeff_list(text) is is_list


def test_signed_whitespace_chunks_read_as_expression():
    assert parse_poly("3 -2") == Poly((1,))
    assert parse_poly("3 -2", coeffs=True) == Poly((3, -2))
    assert parse_poly("3, -2") == Poly((3, -2))


def test_parse_forced_coeff_list():
    assert parse_poly("5", coeffs=True) == Poly((5,))
    with pytest.raises(PolySyntaxError):
        parse_poly("x^2", coeffs=True)


@pytest.mark.parametrize(
    "text, position",
    [
        ("x^2 +", 5),
        ("2x", 1),
        ("x^-1", 2),
        ("x + y", 4),
        ("x $ 1", 2),
        ("1/0*x", 2),
        ("(x+1", 4),
    ],
)
def test_parse_errors_are_position_annotated(text, position):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text)
    assert info.value.position == position


def test_parse_error_messages():
    with pytest.raises(PolySyntaxError, match="multiple variables"):
        parse_poly("x*y")
    with pytest.raises(PolySyntaxError, match="negative exponent"):
        parse_poly("x^-2")
    with pytest.raises(PolySyntaxError, match="implicit multiplication"):
        parse_poly("3x^2")


@given(polys_)
def test_format_round_trip(p):
    assert parse_poly(format_poly(p)) == p


def test_format_poly():
    assert format_poly(Poly((-6, 11, -6, 1))) == "x^3 - 6*x^2 + 11*x - 6"
    assert format_poly(Poly((F(-1, 2), 1, F(-1, 2)))) == "-1/2*x^2 + x - 1/2"
    assert format_poly(Poly()) == "0"


# -- evaluation --


def test_eval_poly():
    assert eval_poly(Poly((-6, 11, -6, 1)), 2) == 0
    assert eval_poly(Poly((1, 0, 1)), F(1, 2)) == F(5, 4)


def test_eval_poly_complex():
    assert eval_poly_complex(Poly((1, 0, 1)), 1j) == 0
    value = eval_poly_complex(Poly((F(-1, 2), 1, F(-1, 2))), 1j)
    assert abs(value - 1j) < 1e-15


# -- derivative, gcd, monic, squarefree --


@pytest.mark.parametrize(
    "p, expected",
    [((1, 0, 1), (0, 2)), ((), ()), ((-6, 11, -6, 1), (11, -12, 3))],
)
def test_derivative(p, expected):
    assert derivative(Poly(p)) == Poly(expected)


def test_poly_gcd():
    x = Poly.x()
    assert poly_gcd(x**2 - 1, x - 1) == x - 1
    assert poly_gcd(x**2 + 1, x**2 + 1) == x**2 + 1
    a = (x - 1) ** 2 * (x + 2)
    b = (x - 1) * (x + 3)
    assert poly_gcd(a, b) == x - 1
    assert poly_gcd(Poly((2, 2)), Poly()) == Poly((1, 1))


def test_poly_gcd_both_zero():
    with pytest.raises(ZeroPolynomialError):
        poly_gcd(Poly(), Poly())


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_divisible_by_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert (g % make_monic(c)).is_zero


def test_make_monic():
    assert make_monic(Poly((2, 0, 2))) == Poly((1, 0, 1))
    assert make_monic(Poly((1, 0, 1))) == Poly((1, 0, 1))
    assert make_monic(Poly((-12, 22, -12, 2))) == Poly((-6, 11, -6, 1))
    with pytest.raises(ZeroPolynomialError):
        make_monic(Poly())


def test_squarefree_part():
    x = Poly.x()
    assert squarefree_part(x**2) == x
    assert squarefree_part((x**2 + 1) * (x - 1)) == make_monic(
        (x**2 + 1) * (x - 1)
    )
    assert squarefree_part(Poly((2, -3, 0, 1))) == Poly((-2, 1, 1))


@pytest.mark.parametrize("p", [Poly(), Poly((5,))])
def test_squarefree_part_rejects_constants(p):
    with pytest.raises(ConstantPolynomialError):
        squarefree_part(p)


@given(generated_cases())
def test_squarefree_degree_accounts_for_multiplicities(case):
    f = case.poly
    excess = sum(mu - 1 for _, mu in case.linear) + sum(
        2 * (mu - 1) for _, mu in case.quadratics
    )
    assert squarefree_part(f).degree + excess == f.degree


@given(generated_cases())
def test_squarefree_part_keeps_rational_roots(case):
    g = squarefree_part(case.poly)
    for root in range(-6, 7):
        assert (eval_poly(g, root) == 0) == (eval_poly(case.poly, root) == 0)


@given(generated_cases())
def test_squarefree_decomposition_rebuilds_monic(case):
    product = Poly((1,))
    for factor, k in squarefree_decomposition(case.poly):
        assert factor.leading == 1
        product = product * factor**k
    assert product == make_monic(case.poly)


def test_from_roots():
    assert Poly.from_roots([1, 2, 3]) == parse_poly("x^3-6*x^2+11*x-6")
    assert Poly.from_roots([F(1, 2), F(1, 2)]) == parse_poly("x^2 - x + 1/4")
    assert Poly.from_roots([]) == Poly((1,))
