from .parser import format_poly, is_coeff_list, parse_coeff_list, parse_poly
from .poly import (
    Poly,
    derivative,
    eval_poly,
    eval_poly_complex,
    make_monic,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
)
