"""Vacuum-fluctuation force on a rigid Casimir cavity in a weak gravitational field."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
