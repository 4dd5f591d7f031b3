"""Exact engine for skew Schur / quantum power sum product rules."""

from ._skewsym import *  # noqa: F401,F403
from ._skewsym import __doc__  # noqa: F401
