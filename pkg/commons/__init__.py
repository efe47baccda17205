from .errors import (
    ConstantPolynomialError,
    DimensionMismatchError,
    InterpolationError,
    NonSymmetricMatrixError,
    NotApplicableError,
    PolynomialError,
    PolySyntaxError,
    RootFindingError,
    WitnessError,
    ZeroPolynomialError,
)
from .logs import configure_logging, get_logger
from .matrices import (
    RationalMatrix,
    as_fraction_array,
    as_fraction_vector,
    identity,
    is_symmetric,
    to_rows,
)
from .utils import format_rational, load_from_yml, str_to_values, to_fraction
