from fractions import Fraction

import pytest
from commons import ConstantPolynomialError, DimensionMismatchError
from hermite import (
    HermiteMatrix,
    build_hermite_matrix,
    quadratic_form,
    sos_identity_check,
)
from hypothesis import given, settings
from hypothesis import strategies as st
from polys import Poly, parse_poly
from power_sums import PowerSums
from strategies import generated_cases, vectors

F = Fraction


def test_build_examples(x2_plus_1, cubic_123, mixed_cubic):
    assert build_hermite_matrix(x2_plus_1).entries == ((2, 0), (0, -2))
    assert build_hermite_matrix(cubic_123).entries == (
        (3, 6, 14),
        (6, 14, 36),
        (14, 36, 98),
    )
    assert build_hermite_matrix(mixed_cubic).entries == (
        (3, 1, -1),
        (1, -1, 1),
        (-1, 1, 3),
    )


def test_degree_one_is_1x1():
    h = build_hermite_matrix(Poly((7, -2)))
    assert h.n == 1
    assert h.entries == ((1,),)


def test_constant_is_rejected():
    with pytest.raises(ConstantPolynomialError):
        build_hermite_matrix(Poly((3,)))


def test_from_power_sums_needs_enough_values():
    with pytest.raises(DimensionMismatchError):
        HermiteMatrix.from_power_sums(PowerSums(n=3, values=(3, 0, 1)))


@pytest.mark.parametrize(
    "x, expected",
    [((0, 1), -2), ((1, 0), 2), ((1, 1), 0), ((F(1, 2), F(1, 3)), F(5, 18))],
)
def test_quadratic_form_x2_plus_1(x2_plus_1, x, expected):
    assert quadratic_form(build_hermite_matrix(x2_plus_1), x) == expected


def test_quadratic_form_negative_direction(mixed_cubic):
    h = build_hermite_matrix(mixed_cubic)
    assert quadratic_form(h, (F(-1, 2), 1, F(-1, 2))) == -2


def test_quadratic_form_accepts_rows():
    assert quadratic_form([[0, 1], [1, 0]], (F(-1, 2), F(1, 2))) == F(-1, 2)


def test_quadratic_form_dimension_mismatch(x2_plus_1):
    with pytest.raises(DimensionMismatchError):
        quadratic_form(build_hermite_matrix(x2_plus_1), (1, 0, 0))


@given(generated_cases())
def test_is_symmetric_hankel(case):
    h = build_hermite_matrix(case.poly)
    assert h.is_symmetric
    assert h.is_hankel
    assert h[0, 0] == case.poly.degree


@settings(max_examples=150)
@given(generated_cases(max_degree=7), st.data())
def test_sum_of_squares_identity(case, data):
    n = case.poly.degree
    x = data.draw(vectors(n))
    exact = quadratic_form(build_hermite_matrix(case.poly), x)
    sos = sos_identity_check(case.poly, x, case.roots)
    bound = 1e-7 * (1 + sum(abs(float(v)) for v in x)) ** 2 * (
        1 + max(abs(value) for value, _ in case.roots)
    ) ** (2 * n)
    assert abs(sos.imag) <= bound
    assert abs(sos.real - float(exact)) <= bound


@given(generated_cases(), st.data())
def test_form_is_even(case, data):
    h = build_hermite_matrix(case.poly)
    x = data.draw(vectors(case.poly.degree))
    assert quadratic_form(h, x) == quadratic_form(h, [-v for v in x])


@settings(max_examples=100)
@given(generated_cases(non_real=False), st.data())
def test_real_rooted_form_is_nonnegative(case, data):
    h = build_hermite_matrix(case.poly)
    for _ in range(10):
        x = data.draw(vectors(case.poly.degree))
        assert quadratic_form(h, x) >= 0


@pytest.mark.parametrize(
    "text, x, roots, expected",
    [
        ("x^2-1", (1, 1), [(1, 1), (-1, 1)], 4),
        ("x^2+1", (0, 1), [(1j, 1), (-1j, 1)], -2),
        ("x^2", (0, 1), [(0, 2)], 0),
    ],
)
def test_sos_identity_examples(text, x, roots, expected):
    f = parse_poly(text)
    assert quadratic_form(build_hermite_matrix(f), x) == expected
    assert sos_identity_check(f, x, roots) == pytest.approx(expected)
