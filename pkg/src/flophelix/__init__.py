"""Exact combinatorics of length-l 3-fold flops.

Modules:
  dynkin        ADE diagrams, highest-root labels, placements
  numerics      helix period, ranks and exchange multiplicities
  helix         the simples helix, duality and K-classes
  knitting      translation-quiver knitting and chamber walks
  defalg        deformation-algebra profiles and GV lower bounds
  monodromy     strip-groupoid word calculus and K-matrices
  verification  the named acceptance checks
  cli           command-line interface
"""

from .numerics import for_length, derive_ns, LENGTHS
from .dynkin import DynkinType, build_diagram, highest_root_labels
from .knitting import KnitProblem, knit, chamber_walk, sliced_def_dim
from .helix import simple_at, dualize, kclass, tilt_descriptor
from .defalg import profile, gv_bounds
from .monodromy import loop_q, loop_q_minus, loop_q_plus, k_matrix, reduce
from .verification import run_all

__version__ = "0.1.0"

__all__ = ["for_length", "derive_ns", "LENGTHS", "DynkinType", "build_diagram",
           "highest_root_labels", "KnitProblem", "knit", "chamber_walk",
           "sliced_def_dim", "simple_at", "dualize", "kclass",
           "tilt_descriptor", "profile", "gv_bounds", "loop_q", "loop_q_minus",
           "loop_q_plus", "k_matrix", "reduce", "run_all", "__version__"]
