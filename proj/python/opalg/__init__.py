"""Operator factorization, left-ideal and C*-convexity toolkit."""

from ._opalg import *  # noqa: F401,F403
from ._opalg import __version__  # noqa: F401
