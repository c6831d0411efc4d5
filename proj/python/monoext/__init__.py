"""Ext, Tor and cohomology of finite monoid algebras.

Monoids are built with the ``Monoid`` constructors or from a JSON
description; reports are returned as dictionaries.
"""

from ._monoext import (
    Monoid,
    MonoextError,
    cohomology,
    ext,
    global_dimension_bound,
    green,
    homology,
    reduced_homology_dims,
    standard_resolution,
)

__version__ = "0.1.0"

__all__ = [
    "Monoid",
    "MonoextError",
    "cohomology",
    "ext",
    "global_dimension_bound",
    "green",
    "homology",
    "reduced_homology_dims",
    "standard_resolution",
]
