"""Graded semiprime and quasi-semiprime submodules.

Finite graded rings and modules are built from small constructors
(``cyclic_ring``, ``quotient_poly_ring``, ``product_module``); elements are
integer indices and every verdict comes with a witness where one exists.
"""

from ._core import *  # noqa: F401,F403
from ._core import GqsError, __doc__  # noqa: F401

__version__ = "0.1.0"
