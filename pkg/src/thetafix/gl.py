"""Concrete gl_N over Q: Chevalley generators, the diagram involution, and
the fixed subalgebra.

The involution acts on Chevalley generators by E_i -> F_{tau(i)},
F_i -> E_{tau(i)}, H_i -> H_{tau(i)+1}, where tau flips the type A diagram.
At matrix level this is conjugation by the antidiagonal permutation J; the
context constructor re-derives the generator prescriptions from J and fails
loudly if they ever disagree, so the closed form can safely back the
null-space computation of the fixed subalgebra.

All indices are 1-based, matching the usual conventions for gl_N
(E_i = E_{i,i+1}, F_i = E_{i+1,i}, H_i = E_{i,i}).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import (
    Matrix,
    ShapeError,
    antidiagonal_permutation,
    matrix_unit,
    nullspace,
    matrix,
)

PARITIES = ("odd", "even")


@dataclass(frozen=True)
class GlContext:
    """Ambient gl_N together with its parity bookkeeping.

    odd:  N = 2n+1, diagram vertices 1..2n,  tau(i) = 2n+1-i
    even: N = 2n,   diagram vertices 1..2n-1, tau(i) = 2n-i
    """

    parity: str
    n: int
    N: int

    @property
    def num_vertices(self) -> int:
        return self.N - 1

    def tau(self, i: int) -> int:
        if not (1 <= i <= self.num_vertices):
            raise IndexError(f"diagram vertex {i} out of range 1..{self.num_vertices}")
        return self.N - i


@dataclass(frozen=True)
class ThetaGenSet:
    """The nonstandard generators of the fixed subalgebra.

    odd:  e_i = E_i + F_{2n+1-i}, f_i = F_i + E_{2n+1-i} (1<=i<=n),
          d_i = H_i + H_{2n+2-i} (1<=i<=n), d_{n+1} = 2 H_{n+1}, no t.
    even: e_i = E_i + F_{2n-i}, f_i = F_i + E_{2n-i} (1<=i<=n-1),
          t = E_n + F_n, d_i = H_i + H_{2n+1-i} (1<=i<=n).
    """

    e: tuple
    f: tuple
    d: tuple
    t: Matrix | None


def gl_context(parity: str, n: int) -> GlContext:
    """Validated context; verifies the matrix-level involution against the
    generator prescriptions before anything else is allowed to use it."""
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}, got {parity!r}")
    if n < 1:
        raise ValueError("rank n must be >= 1")
    N = 2 * n + 1 if parity == "odd" else 2 * n
    if N < 2:
        raise ValueError("N must be >= 2")
    ctx = GlContext(parity, n, N)
    _verify_involution(ctx)
    return ctx


def chevalley(ctx: GlContext, kind: str, index: int) -> Matrix:
    """E_i = E_{i,i+1}, F_i = E_{i+1,i} (1<=i<=N-1), H_i = E_{i,i} (1<=i<=N)."""
    N = ctx.N
    if kind == "E":
        if not (1 <= index <= N - 1):
            raise IndexError(f"E index {index} out of range 1..{N - 1}")
        return matrix_unit(N, index, index + 1)
    if kind == "F":
        if not (1 <= index <= N - 1):
            raise IndexError(f"F index {index} out of range 1..{N - 1}")
        return matrix_unit(N, index + 1, index)
    if kind == "H":
        if not (1 <= index <= N):
            raise IndexError(f"H index {index} out of range 1..{N}")
        return matrix_unit(N, index, index)
    raise ValueError(f"unknown Chevalley kind {kind!r}")


def theta(ctx: GlContext, x: Matrix) -> Matrix:
    """The involution as conjugation by the antidiagonal permutation."""
    if not (x.is_square and x.rows == ctx.N):
        raise ShapeError(f"theta expects an {ctx.N}x{ctx.N} matrix")
    J = antidiagonal_permutation(ctx.N)
    return J @ x @ J


def _verify_involution(ctx: GlContext) -> None:
    for i in range(1, ctx.num_vertices + 1):
        ti = ctx.tau(i)
        if theta(ctx, chevalley(ctx, "E", i)) != chevalley(ctx, "F", ti):
            raise RuntimeError(f"involution mismatch on E_{i}")
        if theta(ctx, chevalley(ctx, "F", i)) != chevalley(ctx, "E", ti):
            raise RuntimeError(f"involution mismatch on F_{i}")
        if theta(ctx, chevalley(ctx, "H", i)) != chevalley(ctx, "H", ti + 1):
            raise RuntimeError(f"involution mismatch on H_{i}")


def fixed_point_basis(ctx: GlContext) -> list:
    """Canonical basis of {x : theta(x) = x}, as the null space of
    x - theta(x) on the N^2 matrix coordinates.

    This is the independent oracle for every dimension claim about the
    fixed subalgebra; it never consults the explicit generators.
    """
    N = ctx.N
    rows = []
    # theta(x)[i][j] = x[N-1-i][N-1-j] in 0-based coordinates.
    for i in range(N):
        for j in range(N):
            ti, tj = N - 1 - i, N - 1 - j
            if (i, j) == (ti, tj):
                continue
            row = {i * N + j: 1, ti * N + tj: -1}
            rows.append(row)
    vecs = nullspace(rows, N * N)
    return [matrix(N, N, {(c // N, c % N): v for c, v in vec.items()}) for vec in vecs]


@lru_cache(maxsize=None)
def _theta_generators_cached(parity: str, n: int) -> ThetaGenSet:
    ctx = gl_context(parity, n)
    E = lambda i: chevalley(ctx, "E", i)
    F = lambda i: chevalley(ctx, "F", i)
    H = lambda i: chevalley(ctx, "H", i)
    if parity == "odd":
        e = tuple(E(i) + F(2 * n + 1 - i) for i in range(1, n + 1))
        f = tuple(F(i) + E(2 * n + 1 - i) for i in range(1, n + 1))
        d = tuple(H(i) + H(2 * n + 2 - i) for i in range(1, n + 1)) + (H(n + 1).scale(2),)
        t = None
    else:
        e = tuple(E(i) + F(2 * n - i) for i in range(1, n))
        f = tuple(F(i) + E(2 * n - i) for i in range(1, n))
        d = tuple(H(i) + H(2 * n + 1 - i) for i in range(1, n + 1))
        t = E(n) + F(n)
    gens = ThetaGenSet(e, f, d, t)
    for m in list(e) + list(f) + list(d) + ([t] if t is not None else []):
        if theta(ctx, m) != m:
            raise RuntimeError("generator is not fixed by the involution")
    return gens


def theta_generators(ctx: GlContext) -> ThetaGenSet:
    return _theta_generators_cached(ctx.parity, ctx.n)


def fixed_dim(ctx: GlContext) -> int:
    """(n+1)^2 + n^2 for odd N = 2n+1, 2n^2 for even N = 2n."""
    n = ctx.n
    return (n + 1) ** 2 + n ** 2 if ctx.parity == "odd" else 2 * n * n
