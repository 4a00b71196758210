"""Exact computations with real forms of untwisted affine Kac-Moody algebras.

The layers build on each other: exact scalars and loop matrices, affine Cartan
data, involutions of the loop algebra, Vogan diagrams, and the catalog of real
forms with its command-line front end.
"""

from .cartan import build_affine_diagram
from .vogan import VoganDiagram, make_vogan, reduce_borel_siebenthal, vogan

__all__ = ["VoganDiagram", "build_affine_diagram", "make_vogan", "reduce_borel_siebenthal", "vogan"]
__version__ = "0.1.0"
