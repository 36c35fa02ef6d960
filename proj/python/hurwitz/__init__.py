"""Braid orbits of product-one tuples in finite permutation groups.

Components of Hurwitz spaces are modeled combinatorially: a component is a
braid-group orbit of a product-one tuple, carried by its canonical
representative. The extension module provides permutation groups with exact
order and membership queries, orbit enumeration, multidiscriminants,
rationality tests for the cyclotomic Galois model, ni sets and the permuting
criteria, reduced Schur covers via coset enumeration, and lifting invariants.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
