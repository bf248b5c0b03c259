"""
Configuration for the distinguishing-number toolkit.

Defaults live here as constants. Two of them can be overridden from the environment
(or a `.env` file in the working directory):

    CIRCDIST_CAP=<int>            maximum number of automorphisms to enumerate
    CIRCDIST_LABELING_CAP=<int>   maximum number of labelings the exact oracle may test
"""

import os
from dotenv import load_dotenv
from circulant.errors import ConfigError

# --- Search limits ---
AUTOMORPHISM_CAP = 1_000_000  # Enumeration stops with CapExceededError past this many elements
LABELING_CAP = 5_000_000  # Exact oracle stops past this many candidate labelings

# --- Exact oracle ---
DEFAULT_R_MAX = 12  # Largest number of labels tried before giving up

# --- Randomized checks ---
DEFAULT_SEED = 0
RANDOM_SAMPLES = 200  # Random labelings broken per member when certifying a family

CAP_ENV_VAR = "CIRCDIST_CAP"
LABELING_CAP_ENV_VAR = "CIRCDIST_LABELING_CAP"


def _positive_int_from_env(name: str, default: int) -> int:
    load_dotenv()
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


def automorphism_cap() -> int:
    """Automorphism enumeration cap, honouring CIRCDIST_CAP."""
    return _positive_int_from_env(CAP_ENV_VAR, AUTOMORPHISM_CAP)


def labeling_cap() -> int:
    """Exact-oracle labeling budget, honouring CIRCDIST_LABELING_CAP."""
    return _positive_int_from_env(LABELING_CAP_ENV_VAR, LABELING_CAP)
