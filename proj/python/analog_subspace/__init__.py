"""Python bindings for the analog subspace codes library."""

from ._core import *  # noqa: F401,F403
from ._core import Error, Field, Rng, Subspace, SubspaceCode

__all__ = [name for name in dir() if not name.startswith("_")]
