"""Coauthorship network analytics (C++ core)."""

from ._coauthornet import *  # noqa: F401,F403
from ._coauthornet import __version__  # noqa: F401
