"""Exact-arithmetic construction and verification of the fixed-point
subalgebras of gl_N under the diagram involution, their presentations and
root vectors, the explicit isomorphisms onto two-block Levi algebras, the
type B Schur quotients, and the two hyperoctahedral actions on tensor
space.

All computations are over exact rationals; every identity is checked with
tolerance-free equality.  See the suite registry in `thetafix.suites` (or
`verify list-suites`) for the statement-by-statement map.
"""

from .gl import GlContext, gl_context, chevalley, theta, fixed_point_basis, theta_generators
from .linalg import Matrix, bracket, commutant_basis, kron, matrix_unit, span_dim
from .pbw import UElement, embed, evaluate, u_mul

__version__ = "0.1.0"

__all__ = [
    "GlContext",
    "Matrix",
    "UElement",
    "bracket",
    "chevalley",
    "commutant_basis",
    "embed",
    "evaluate",
    "fixed_point_basis",
    "gl_context",
    "kron",
    "matrix_unit",
    "span_dim",
    "theta",
    "theta_generators",
    "u_mul",
    "__version__",
]
