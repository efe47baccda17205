from pathlib import Path

from commons.utils import load_from_yml

# --- Utils and Config ---
PROJECT_ROOT = Path(__file__).parent

# -- conf.yml ---

CONF = load_from_yml(PROJECT_ROOT / "conf.yml")

# --- Logging ---
LOG_LEVEL = str(CONF.get("RRC_LOG_LEVEL", "WARNING")).upper()

# --- Selftest corpus ---
SELFTEST_DEGREE_MAX = int(CONF.get("RRC_SELFTEST_DEGREE_MAX", 10))
SELFTEST_CASES = int(CONF.get("RRC_SELFTEST_CASES", 500))
SELFTEST_SEED = int(CONF.get("RRC_SELFTEST_SEED", 42))

# --- Numerical tolerances (oracle side only, verdicts are exact) ---
ROOT_RESIDUAL_TOL = float(CONF.get("RRC_ROOT_RESIDUAL_TOL", 1e-9))
CONJUGATE_TOL = float(CONF.get("RRC_CONJUGATE_TOL", 1e-7))
LEMMA2_TOL = float(CONF.get("RRC_LEMMA2_TOL", 1e-5))
INTERPOLATION_RESIDUAL_TOL = float(
    CONF.get("RRC_INTERPOLATION_RESIDUAL_TOL", 1e-7)
)
NEWTON_POLISH_STEPS = int(CONF.get("RRC_NEWTON_POLISH_STEPS", 50))
