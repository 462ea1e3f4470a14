"""Graph cobordisms, orientation signs and graded Frobenius algebras.

Submodules: ``grmod`` (graded modules and maps over the rationals),
``graph`` (graph cobordisms), ``orient`` (orientation words and their
signs), ``frobenius`` (algebras and the relation checker), ``tqft``
(decomposition and evaluation), ``algebras`` (cohomology rings and
Hochschild operations), ``catalog`` and ``cli``.
"""

from .algebras import cohomology_algebra, sphere, torus
from .catalog import catalogue
from .frobenius import (
    FrobeniusData,
    builtin_Rcd,
    check_relations,
    check_snake,
    suspend_algebra,
    tensor_algebras,
)
from .graph import Graph, elementary, glue, make_graph
from .grmod import GradedMap, GradedModule
from .orient import CdOrientation, canonical_orientation, generator_orientation, orbit_class
from .tqft import decompose, decomposition_sign, evaluate, evaluate_oriented

__version__ = "0.1.0"

__all__ = [
    "CdOrientation",
    "FrobeniusData",
    "GradedMap",
    "GradedModule",
    "Graph",
    "builtin_Rcd",
    "canonical_orientation",
    "catalogue",
    "check_relations",
    "check_snake",
    "cohomology_algebra",
    "decompose",
    "decomposition_sign",
    "elementary",
    "evaluate",
    "evaluate_oriented",
    "generator_orientation",
    "glue",
    "make_graph",
    "orbit_class",
    "sphere",
    "suspend_algebra",
    "tensor_algebras",
    "torus",
]
