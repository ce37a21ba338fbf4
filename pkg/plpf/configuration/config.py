import os
from dotenv import load_dotenv, find_dotenv

# Locates the path of the .env file and loads it
env_path = find_dotenv(usecwd=True)
load_dotenv(dotenv_path=env_path)

def _get_bool(name: str, default: bool = False) -> bool:
    val = os.getenv(name)
    if val is None:
        return default
    return str(val).strip().lower() in ("1", "true", "yes", "on")

# Loads run defaults (seeding, trial counts, numerics) from environment variables, optionally defined in a .env file.
class Config:
    DEFAULT_SEED = int(os.getenv("PLPF_SEED", 20240601))
    DEFAULT_TRIALS = int(os.getenv("PLPF_TRIALS", 10000))
    N_JOBS = int(os.getenv("PLPF_N_JOBS", 1))

    # Expected number of nodes a sampling window may miss
    TRUNCATION_EPS = float(os.getenv("PLPF_TRUNCATION_EPS", 1e-4))

    # --- adaptive quadrature ---
    QUAD_ABS_TOL = float(os.getenv("PLPF_QUAD_ABS_TOL", 1e-10))
    QUAD_REL_TOL = float(os.getenv("PLPF_QUAD_REL_TOL", 1e-8))
    QUAD_LIMIT = int(os.getenv("PLPF_QUAD_LIMIT", 200))

    LOG_LEVEL = os.getenv("PLPF_LOG_LEVEL", "INFO").upper()
    PROGRESS = _get_bool("PLPF_PROGRESS", True)

    QUAD_OPTS = {
        "epsabs": QUAD_ABS_TOL,
        "epsrel": QUAD_REL_TOL,
        "limit": QUAD_LIMIT,
    }
