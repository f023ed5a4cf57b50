"""Betti numbers of type-A Springer fibers via row-standard tableaux."""

from ._springer import *  # noqa: F401,F403
from ._springer import __doc__  # noqa: F401
