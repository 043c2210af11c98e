"""Poncelet triangle families, triangle centers and their invariants.

Points are ``(x, y)`` tuples and triangles are 3-tuples of points. Geometric
failures raise :class:`GeometryError` with ``args == (code, message)``.
"""

from ._core import *  # noqa: F401,F403
from ._core import GeometryError

__all__ = [name for name in dir() if not name.startswith("_")]
