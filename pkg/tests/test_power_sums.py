import pytest
from commons import ConstantPolynomialError
from hypothesis import given
from polys import Poly, parse_poly
from power_sums import (
    companion_matrix,
    companion_power_sums,
    direct_power_sums,
    newton_power_sums,
)
from strategies import generated_cases, scales


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x^2+1", [2, 0, -2]),
        ("x^3-6*x^2+11*x-6", [3, 6, 14, 36, 98]),
        ("x^3-x^2+x-1", [3, 1, -1, 1, 3]),
        ("x^2", [2, 0, 0]),
        ("2*x - 3", [1]),
        ("2*x^2+2", [2, 0, -2]),
    ],
)
def test_newton_power_sums(text, expected):
    assert list(newton_power_sums(parse_poly(text))) == expected


def test_upto_extends_past_2n_minus_2(cubic_123):
    sums = newton_power_sums(cubic_123, upto=6)
    assert list(sums) == [3, 6, 14, 36, 98, 276, 794]


@pytest.mark.parametrize("p", [Poly(), Poly((4,))])
def test_constant_is_rejected(p):
    with pytest.raises(ConstantPolynomialError):
        newton_power_sums(p)
    with pytest.raises(ConstantPolynomialError):
        companion_power_sums(p)


def test_companion_matrix(x2_plus_1):
    c = companion_matrix(x2_plus_1)
    assert c.tolist() == [[0, -1], [1, 0]]


def test_direct_power_sums():
    assert direct_power_sums([(1, 1), (2, 1), (3, 1)], 4) == [
        3, 6, 14, 36, 98
    ]
    assert direct_power_sums([(5, 3)], 2) == [3, 15, 75]
    conjugates = direct_power_sums([(1j, 1), (-1j, 1)], 2)
    assert [z.real for z in conjugates] == [2, 0, -2]
    assert all(z.imag == 0 for z in conjugates)
    with pytest.raises(ValueError):
        direct_power_sums([(1, 0)], 2)


@given(generated_cases(max_degree=8))
def test_matches_root_multiset(case):
    n = case.poly.degree
    exact = newton_power_sums(case.poly)
    approx = direct_power_sums(case.roots, 2 * n - 2)
    for k, (m, z) in enumerate(zip(exact, approx)):
        scale = 1 + sum(mu * abs(value) ** k for value, mu in case.roots)
        assert abs(complex(m) - z) <= 1e-9 * scale


@given(generated_cases(non_real=False, max_degree=8))
def test_integer_roots_give_exact_sums(case):
    exact = list(newton_power_sums(case.poly))
    direct = [
        sum(mu * root**k for root, mu in case.linear)
        for k in range(len(exact))
    ]
    assert exact == direct


@given(generated_cases(), scales)
def test_scale_invariant(case, c):
    assert newton_power_sums(case.poly) == newton_power_sums(case.poly.scale(c))


@given(generated_cases(max_degree=7))
def test_companion_traces_match_newton(case):
    assert companion_power_sums(case.poly) == newton_power_sums(case.poly)


@given(generated_cases())
def test_m0_is_degree(case):
    assert newton_power_sums(case.poly)[0] == case.poly.degree
