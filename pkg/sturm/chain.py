"""
Sturm sequences: independent exact count of distinct real roots
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from commons import ConstantPolynomialError
from polys import Poly, derivative, squarefree_part


@dataclass(frozen=True)
class SturmChain:
    """
    g, g', then -rem of the previous two until a nonzero constant
    """

    polys: Tuple[Poly, ...]

    def signs_at_pos_infinity(self) -> List[int]:
        return [_sign(p.leading) for p in self.polys]

    def signs_at_neg_infinity(self) -> List[int]:
        return [
            _sign(p.leading) * (-1 if p.degree % 2 else 1) for p in self.polys
        ]

    def count_real_roots(self) -> int:
        return sign_variations(self.signs_at_neg_infinity()) - sign_variations(
            self.signs_at_pos_infinity()
        )


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def sign_variations(values: Iterable) -> int:
    """Number of sign changes, zeros skipped"""
    signs = [_sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(g: Poly) -> SturmChain:
    if g.degree < 1:
        raise ConstantPolynomialError(
            "[Error: sturm.sturm_chain] nonconstant polynomial required"
        )
    chain = [g, derivative(g)]
    while chain[-1].degree > 0:
        remainder = chain[-2] % chain[-1]
        if remainder.is_zero:
            break
        chain.append(-remainder)
    return SturmChain(polys=tuple(chain))


def sturm_count_all(f: Poly) -> int:
    """
    Distinct real roots of f: V(-inf) - V(+inf) on the chain of its
    squarefree part
    """
    if f.degree < 1:
        raise ConstantPolynomialError(
            "[Error: sturm.sturm_count_all] nonconstant polynomial required,"
            f" got degree {f.degree}"
        )
    return sturm_chain(squarefree_part(f)).count_real_roots()


def oracle_is_real_rooted(f: Poly) -> bool:
    return sturm_count_all(f) == squarefree_part(f).degree
