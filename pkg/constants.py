# -- Exit codes (stable contract) --

EXIT_REAL_ROOTED = 0
EXIT_NOT_REAL_ROOTED = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3

EXIT_OK = EXIT_REAL_ROOTED

# -- CLI --

STDIN_MARKER = "-"

CHECK = "check"
MATRIX = "matrix"
WITNESS = "witness"
COUNTS = "counts"
SELFTEST = "selftest"
