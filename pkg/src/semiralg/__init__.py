"""Generic linear algebra over abstract semirings.

One set of matrix kernels serves shortest paths, widest paths, staged
decision problems, and real matrix inversion: the operations come from
a :class:`SemiringDescriptor` chosen at call time.  See the README for
a tour; the command line front end lives in :mod:`semiralg.cli`.
"""

from .closure import (ClosureOptions, IterativeClosure, closure,
                      closure_block, closure_gauss_jordan, closure_iterative,
                      solve_bellman)
from .errors import (DescriptorMismatch, DimensionMismatch, EmptyInterval,
                     IllegalElement, IndexOutOfRange, InvalidBounds,
                     InvalidGraph, InvalidOptions, InvalidPath,
                     NoStabilization, NotCommutative, NotPositive,
                     NotSymmetric, OracleScaleExceeded, ParseError,
                     SemiringError, ShapeViolation, StarUndefined,
                     UnknownSemiring, WrongDescriptor)
from .graphs import (Path, WeightedDigraph, brute_force_star, graph_to_matrix,
                     matrix_to_graph, max_profit, path_weight,
                     real_matrix_star, shortest_paths, widest_paths)
from .intervals import Interval, contains, lift_semiring, make_interval
from .laws import (all_violations, fused_accumulate_matches,
                   idempotency_axioms, positivity_axioms, semiring_axioms,
                   star_axioms)
from .ldm import (LdmTriple, OpCounter, back_substitution, diagonal_solve,
                  forward_substitution, ldm_factorize, solve_ldm,
                  solve_via_ldm, symmetric_factorize)
from .matrices import Matrix, identity, zeros
from .scalars import (NEG_INF, POS_INF, Infinity, from_token, is_finite,
                      to_token, usual_leq)
from .semirings import (SemiringDescriptor, SemiringFlags, make_semiring,
                        same_descriptor)
from .serialize import (dumps, graph_from_json, graph_to_json, loads,
                        matrix_from_json, matrix_to_json, scalar_from_json,
                        scalar_to_json, triple_from_json, triple_to_json)

__version__ = "0.1.0"

__all__ = [
    "ClosureOptions", "IterativeClosure", "closure", "closure_block",
    "closure_gauss_jordan", "closure_iterative", "solve_bellman",
    "SemiringError", "UnknownSemiring", "InvalidBounds", "IllegalElement",
    "StarUndefined", "DimensionMismatch", "DescriptorMismatch",
    "ShapeViolation", "NotSymmetric", "NotCommutative", "NoStabilization",
    "EmptyInterval", "NotPositive", "IndexOutOfRange", "InvalidGraph",
    "InvalidPath", "OracleScaleExceeded", "WrongDescriptor", "InvalidOptions",
    "ParseError",
    "WeightedDigraph", "Path", "graph_to_matrix", "matrix_to_graph",
    "path_weight", "brute_force_star", "shortest_paths", "widest_paths",
    "max_profit", "real_matrix_star",
    "Interval", "make_interval", "contains", "lift_semiring",
    "semiring_axioms", "idempotency_axioms", "positivity_axioms",
    "star_axioms", "fused_accumulate_matches", "all_violations",
    "OpCounter", "LdmTriple", "forward_substitution", "back_substitution",
    "diagonal_solve", "solve_ldm", "solve_via_ldm", "ldm_factorize",
    "symmetric_factorize",
    "Matrix", "identity", "zeros",
    "Infinity", "NEG_INF", "POS_INF", "is_finite", "usual_leq", "to_token",
    "from_token",
    "SemiringFlags", "SemiringDescriptor", "make_semiring", "same_descriptor",
    "scalar_to_json", "scalar_from_json", "matrix_to_json", "matrix_from_json",
    "graph_to_json", "graph_from_json", "triple_to_json", "triple_from_json",
    "dumps", "loads",
    "__version__",
]
