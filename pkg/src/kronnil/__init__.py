"""Exact decategorified checks for Kronecker-quiver KLR categories and nilpotent cones.

Two sides are computed independently and compared:

* the dual PBW structure of the quantum unipotent coordinate ring of type
  A1^(1), modelled in the quantum shuffle algebra (:mod:`kronnil.shuffle`);
* the equivariant K-theory of nilpotent cones of ``gl_r`` through
  Andersen-Jantzen classes (:mod:`kronnil.ktheory`).
"""

from .conventions import __version__
from .conventions import Conventions, DEFAULT as DEFAULT_CONVENTIONS
from .qlaurent import LaurentQ, q_int, shift_multiset
from .roots import DimVector, Root, convex_compare, pairing
from .kostant import KostantPartition, bilex_leq, enumerate_gamma, kp_to_weight
from .shuffle import ShuffleAlgebra, ShuffleElement
from .ktheory import KClass, aj_class, induction_product, proper_standard_class

__all__ = [
    "__version__",
    "Conventions",
    "DEFAULT_CONVENTIONS",
    "LaurentQ",
    "q_int",
    "shift_multiset",
    "DimVector",
    "Root",
    "convex_compare",
    "pairing",
    "KostantPartition",
    "bilex_leq",
    "enumerate_gamma",
    "kp_to_weight",
    "ShuffleAlgebra",
    "ShuffleElement",
    "KClass",
    "aj_class",
    "induction_product",
    "proper_standard_class",
]
