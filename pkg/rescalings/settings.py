"""
Constants and environment overrides for rescalings.
"""

import os

__version__: str = "0.1.0"

MODULE_DIR: str = os.path.dirname(__file__)

# Zero test in float mode: |z| <= tolerance * scale.
DEFAULT_TOLERANCE: float = 1e-9
TOLERANCE_ENV: str = "RESCALINGS_TOLERANCE"

# Eigenvalue clip for PSD factorization, relative to the max |K| entry.
PSD_TOLERANCE: float = 1e-10
ORTHO_TOLERANCE: float = 1e-10
RESIDUAL_TOLERANCE: float = 1e-8

MAX_WORKERS: int = int(os.getenv("RESCALINGS_WORKERS", "0")) or min(
    4, (os.cpu_count() or 1) + 1
)
