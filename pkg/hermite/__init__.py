from .matrix import (
    HermiteMatrix,
    RealVector,
    build_hermite_matrix,
    quadratic_form,
    sos_identity_check,
)
