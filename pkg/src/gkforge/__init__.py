"""Prime graphs of finite solvable permutation groups."""

from gkforge.kernels import BACKEND

__version__ = "0.1.0"
