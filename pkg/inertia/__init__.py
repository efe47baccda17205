from .congruence import (
    CongruenceResult,
    Inertia,
    congruence_diagonalize,
    inertia_of,
    is_psd,
    matrix_rank,
    negative_witness,
    verify_congruence,
)
