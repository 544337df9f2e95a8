"""Faddeev-Green function evaluators.

Thin wrapper over the compiled extension; see the project README for the
library layout and the CLI.
"""

from _fadgreen import *  # noqa: F401,F403
from _fadgreen import __version__  # noqa: F401
