from .commands import build_parser, main
from .selftest import check_case, run_selftest
