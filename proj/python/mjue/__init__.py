"""Orthogonal polynomials, kernels and gap probabilities for modified Jacobi weights."""

import json

from ._core import *  # noqa: F401,F403
from ._core import run_study_json


def run_study(config):
    """Run a study from a config dict (same keys as the CLI JSON config)."""
    return run_study_json(json.dumps(config))
