"""Integer representations of arithmetic matroids.

Matrices are lists of rows of Python ints; ground-set indices are 0-based.
"""

from ._core import *  # noqa: F401,F403
from ._core import ArimatError, __version__

__all__ = [name for name in dir() if not name.startswith("_")]
