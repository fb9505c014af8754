"""Vector norms, matrix norms and generalized induced norms on C^n."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
