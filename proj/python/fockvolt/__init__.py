"""Volterra-type integral operators on Fock-Sobolev spaces.

Weighted norms (direct and derivative-based), reproducing-kernel models,
boundedness/compactness classification and spectral-disk computations, backed
by the C++ core.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
