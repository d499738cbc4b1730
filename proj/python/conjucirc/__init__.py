"""Optimal quantum circuits for unitary complex conjugation.

Thin wrapper over the C++ core. The main entry points are
``conjugation_fidelity``, ``apply_circuit``, ``certify`` and the
Young-diagram helpers (``c_lambda``, ``max_c``), all exported from the
compiled extension.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
