from .interpolant import (
    ComplexPoly,
    Lemma2Witness,
    conjugate_symmetry_defect,
    interpolate,
    lemma2_witness,
    select_lambda1,
)
from .roots import RootSet, approx_roots
