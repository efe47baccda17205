"""
Dense univariate polynomials over the rationals

Contains:
    - Poly: immutable ascending coefficient tuple of Fractions
    - evaluation (exact and complex), derivative, gcd, monic normalization
    - squarefree part and squarefree decomposition (gcd chain)
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from commons import ConstantPolynomialError, ZeroPolynomialError, to_fraction


def _strip(coeffs: Iterable[Fraction]) -> Tuple[Fraction, ...]:
    values = [to_fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Poly:
    """
    coeffs[j] is the coefficient of x^j. Empty tuple is the zero polynomial.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls((value,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        """monic product of (x - root)"""
        out = cls((1,))
        for root in roots:
            out = out * cls((-to_fraction(root), 1))
        return out

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        size = max(len(self), len(other))
        return Poly(tuple(self[j] + other[j] for j in range(size)))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("[Error: Poly.__pow__] negative exponent")
        out = Poly((1,))
        base = self
        while exponent:
            if exponent & 1:
                out = out * base
            base = base * base
            exponent >>= 1
        return out

    def scale(self, factor) -> "Poly":
        factor = to_fraction(factor)
        return Poly(tuple(c * factor for c in self.coeffs))

    def divmod(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        """
        Euclidean division over Q

        Args:
            divisor (Poly): nonzero

        Returns:
            (quotient, remainder) with deg remainder < deg divisor
        """
        if divisor.is_zero:
            raise ZeroPolynomialError(
                "[Error: Poly.divmod] division by the zero polynomial"
            )
        remainder = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading
        if len(remainder) - 1 < dd:
            return Poly(), self
        quotient = [Fraction(0)] * (len(remainder) - dd)
        for k in range(len(remainder) - 1 - dd, -1, -1):
            q = remainder[k + dd] / lead
            quotient[k] = q
            if q == 0:
                continue
            for j, c in enumerate(divisor.coeffs):
                remainder[k + j] -= q * c
        return Poly(tuple(quotient)), Poly(tuple(remainder[:dd]))

    def __floordiv__(self, divisor: "Poly") -> "Poly":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "Poly") -> "Poly":
        return self.divmod(divisor)[1]

    def __call__(self, t):
        if isinstance(t, complex):
            return eval_poly_complex(self, t)
        return eval_poly(self, t)

    def __str__(self):
        from .parser import format_poly

        return format_poly(self)


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.constant(value)


def _require_nonconstant(f: Poly, owner: str):
    if f.degree < 1:
        raise ConstantPolynomialError(
            f"[Error: {owner}] nonconstant polynomial required, got degree"
            f" {f.degree}"
        )


# -- Operations --


def eval_poly(p: Poly, t) -> Fraction:
    """Exact Horner evaluation"""
    t = to_fraction(t)
    value = Fraction(0)
    for c in reversed(p.coeffs):
        value = value * t + c
    return value


def eval_poly_complex(p: Poly, t: complex) -> complex:
    value = 0j
    for c in reversed(p.coeffs):
        value = value * t + float(c)
    return value


def derivative(p: Poly) -> Poly:
    return Poly(tuple(j * c for j, c in enumerate(p.coeffs) if j > 0))


def make_monic(f: Poly) -> Poly:
    if f.is_zero:
        raise ZeroPolynomialError(
            "[Error: polys.make_monic] zero polynomial has no leading coefficient"
        )
    return f.scale(1 / f.leading)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """
    Monic gcd by Euclidean remainders over Q.
    Coefficient growth is not controlled, fine at desk-scale degrees.
    """
    if a.is_zero and b.is_zero:
        raise ZeroPolynomialError(
            "[Error: polys.poly_gcd] gcd of two zero polynomials is undefined"
        )
    while not b.is_zero:
        a, b = b, a % b
        if not b.is_zero:
            # keep remainders monic to slow down denominator growth
            b = make_monic(b)
    return make_monic(a)


def squarefree_part(f: Poly) -> Poly:
    """
    Monic f / gcd(f, f'): same distinct roots, each simple
    """
    _require_nonconstant(f, "polys.squarefree_part")
    g = poly_gcd(f, derivative(f))
    return make_monic(f // g)


def squarefree_decomposition(f: Poly) -> List[Tuple[Poly, int]]:
    """
    Yun's algorithm: monic(f) = prod a_k ** k with a_k squarefree, pairwise
    coprime. Only nonconstant factors are returned.

    Args:
        f (Poly): nonconstant

    Returns:
        list of (a_k, k) ordered by increasing multiplicity k
    """
    _require_nonconstant(f, "polys.squarefree_decomposition")
    f = make_monic(f)
    df = derivative(f)
    a0 = poly_gcd(f, df)
    b = f // a0
    c = df // a0
    d = c - derivative(b)
    factors: List[Tuple[Poly, int]] = []
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            factors.append((a, k))
        b = b // a
        c = d // a
        d = c - derivative(b)
        k += 1
    return factors
