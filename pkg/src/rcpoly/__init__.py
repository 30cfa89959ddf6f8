"""Restrained chromatic polynomials of small graphs.

A restraint forbids a finite set of colours at each vertex; pi_r(G, x)
counts the proper x-colourings that avoid them.  This package computes those
polynomials exactly and searches for the restraints that make them
eventually largest or smallest.
"""
__version__ = "0.1.0"

from .engine import (
    RestrainedPoly,
    brute_count,
    chromatic_polynomial,
    count_with_fixed_colour,
    rcp_delcon,
    rcp_interpolate,
)
from .graph import Graph, encode_graph6, parse_graph6
from .poly import IntPoly, Order, eventually_compare, shift_compose
from .restraints import enumerate_canonical_simple, make_restraint, parse_restraint

__all__ = [
    "Graph",
    "IntPoly",
    "Order",
    "RestrainedPoly",
    "brute_count",
    "chromatic_polynomial",
    "count_with_fixed_colour",
    "encode_graph6",
    "enumerate_canonical_simple",
    "eventually_compare",
    "make_restraint",
    "parse_graph6",
    "parse_restraint",
    "rcp_delcon",
    "rcp_interpolate",
    "shift_compose",
]
