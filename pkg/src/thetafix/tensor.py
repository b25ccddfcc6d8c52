"""Tensor space for the even case and the two hyperoctahedral actions.

V is 2n-dimensional with two labeled bases whose bar placement differs:

    v-basis: v_1, ..., v_n, v_{bar n}, ..., v_{bar 1}   (barred descending)
    w-basis: w_1, ..., w_n, w_{bar 1}, ..., w_{bar n}   (barred ascending)

Flat indexing of V^(x)d is row-major over the factors with those per-factor
orders; preserving both orders verbatim is what gives the basis change L
(v_i -> w_i + w_{bar i}, v_{bar i} -> w_i - w_{bar i}) its printed form.

Both B_d actions swap adjacent factors for s_1..s_{d-1}.  The last
generator acts by barring the final v-index (first action) and by a sign
on the final w-index (second action).  The printed sign rule
"(-1)^eps(k_d)" with eps = +-1 reads as a constant -1; the convention is
therefore fixed by machine certification (`certify_sign_convention`):
eigenvalue +1 on unbarred w_k and -1 on barred w_{bar k} is the unique
choice under which the basis change intertwines the two actions, and it is
also the conjugate of the first action's bar operator.

Lie algebra elements act on V^(x)d by the Leibniz derivation sum; the
product-style tensor extension is what a group element would use and makes
the intertwining fail beyond d = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import pbw
from .gl import gl_context, theta_generators
from .linalg import (
    Matrix,
    Q,
    antidiagonal_permutation,
    bracket,
    commutant_basis,
    algebra_closure_dim,
    identity,
    kron,
    kron_all,
    matrix,
    zero,
)
from .morphisms import generator_map, levi_assignment, levi_context
from .presentation import cartan_set

CERTIFIED_SIGNS = (Q(1), Q(-1))  # (unbarred eigenvalue, barred eigenvalue)


@dataclass(frozen=True)
class TensorSpace:
    """V^(x)d for the even case, dim = (2n)^d."""

    n: int
    d: int

    @property
    def factor_dim(self) -> int:
        return 2 * self.n

    @property
    def dim(self) -> int:
        return self.factor_dim ** self.d


def tensor_space(n: int, d: int) -> TensorSpace:
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return TensorSpace(n, d)


def _swap_factor_matrix(m: int) -> Matrix:
    """The flip a (x) b -> b (x) a on two m-dimensional factors."""
    entries = {}
    for a in range(m):
        for b in range(m):
            entries[(b * m + a, a * m + b)] = Q(1)
    return Matrix(m * m, m * m, entries)


def _insert_at_factor(space: TensorSpace, op: Matrix, k: int, width: int) -> Matrix:
    """I ... I (x) op (x) I ... I with op covering factors k..k+width-1."""
    m = space.factor_dim
    factors = []
    pos = 1
    while pos <= space.d:
        if pos == k:
            factors.append(op)
            pos += width
        else:
            factors.append(identity(m))
            pos += 1
    return kron_all(factors)


def sign_factor_matrix(n: int, signs=CERTIFIED_SIGNS) -> Matrix:
    unbarred, barred = signs
    entries = {}
    for i in range(n):
        entries[(i, i)] = Q(unbarred)
    for i in range(n, 2 * n):
        entries[(i, i)] = Q(barred)
    return Matrix(2 * n, 2 * n, entries)


def weyl_action(model: str, i: int, space: TensorSpace, signs=CERTIFIED_SIGNS) -> Matrix:
    """The i-th B_d generator as an operator on V^(x)d.

    `model="green"` is the first action (on the v-basis; the last generator
    bars the final index), `model="shoji"` the second (on the w-basis; the
    last generator scales the final index by the certified signs).
    """
    if model not in ("green", "shoji"):
        raise ValueError(f"unknown model {model!r}")
    if not (1 <= i <= space.d):
        raise IndexError(f"generator index {i} out of range 1..{space.d}")
    m = space.factor_dim
    if i < space.d:
        return _insert_at_factor(space, _swap_factor_matrix(m), i, 2)
    if model == "green":
        last = antidiagonal_permutation(m)
    else:
        last = sign_factor_matrix(space.n, signs)
    return _insert_at_factor(space, last, space.d, 1)


def weyl_group_relations(d: int) -> list:
    """Defining relations of B_d as word pairs over generator indices."""
    rels = []
    for i in range(1, d + 1):
        rels.append((f"square[{i}]", (i, i), ()))
    for i in range(1, d + 1):
        for j in range(i + 2, d + 1):
            rels.append((f"commute[{i},{j}]", (i, j), (j, i)))
    for i in range(1, d - 1):
        rels.append((f"braid[{i},{i + 1}]", (i, i + 1, i), (i + 1, i, i + 1)))
    if d >= 2:
        rels.append((f"braid4[{d - 1},{d}]",
                     (d - 1, d, d - 1, d), (d, d - 1, d, d - 1)))
    return rels


def _word_operator(ops: dict, word: tuple, dim: int) -> Matrix:
    out = identity(dim)
    for idx in word:
        out = out @ ops[idx]
    return out


def verify_weyl_presentation(model: str, space: TensorSpace, signs=CERTIFIED_SIGNS) -> list:
    """Every defining relation of B_d must hold as an exact operator identity."""
    ops = {i: weyl_action(model, i, space, signs) for i in range(1, space.d + 1)}
    checks = []
    for name, lhs, rhs in weyl_group_relations(space.d):
        ok = _word_operator(ops, lhs, space.dim) == _word_operator(ops, rhs, space.dim)
        checks.append((f"{model}:{name}", ok, None))
    return checks


@lru_cache(maxsize=None)
def intertwiner_factor(n: int) -> Matrix:
    """L on one factor: v_i -> w_i + w_{bar i}, v_{bar i} -> w_i - w_{bar i}.

    Columns are v-positions (barred indices descending after unbarred),
    rows are w-positions (barred ascending); L^T L = 2I, so det L = ±2^n.
    """
    entries = {}
    for p in range(2 * n):
        if p < n:
            i = p + 1
            entries[(i - 1, p)] = Q(1)
            entries[(n + i - 1, p)] = Q(1)
        else:
            i = 2 * n - p
            entries[(i - 1, p)] = Q(1)
            entries[(n + i - 1, p)] = Q(-1)
    return Matrix(2 * n, 2 * n, entries)


def intertwiner(space: TensorSpace) -> Matrix:
    return kron_all([intertwiner_factor(space.n)] * space.d)


def intertwiner_inverse(space: TensorSpace) -> Matrix:
    inv = intertwiner_factor(space.n).transpose().scale(Q(1, 2))
    return kron_all([inv] * space.d)


def enveloping_action(x: Matrix, space: TensorSpace) -> Matrix:
    """Derivation (Leibniz) action of a Lie element on V^(x)d:
    sum over factors of 1 (x) ... (x) x (x) ... (x) 1."""
    if not (x.is_square and x.rows == space.factor_dim):
        raise ValueError(f"operator must be {space.factor_dim}x{space.factor_dim}")
    out = zero(space.dim)
    for k in range(1, space.d + 1):
        out = out + _insert_at_factor(space, x, k, 1)
    return out


def fixed_generator_matrices(n: int) -> dict:
    """The even-case nonstandard generators as matrices (v-coordinates)."""
    gens = theta_generators(gl_context("even", n))
    out = {}
    for i, m in enumerate(gens.e, start=1):
        out[f"e_{i}"] = m
    for i, m in enumerate(gens.f, start=1):
        out[f"f_{i}"] = m
    out["t"] = gens.t
    for i, m in enumerate(gens.d, start=1):
        out[f"d_{i}"] = m
    return out


def levi_image_matrices(n: int) -> dict:
    """rho(x) for each generator x, as a block matrix in w-coordinates.

    The two-block embedding from the substitution machinery has the first
    copy on rows 1..n and the second on rows n+1..2n, which is exactly the
    w-basis layout, so the images act on tensor space verbatim.
    """
    ctx = levi_context("even", n)
    assign = levi_assignment(ctx)
    rho = generator_map("rho", "even", n)
    return {name: pbw.evaluate(expr, assign, ctx.NL).linear_part_matrix()
            for name, expr in rho.table.items()}


def verify_intertwining(space: TensorSpace, signs=CERTIFIED_SIGNS) -> list:
    """(a) the basis change conjugates the first B_d action into the second;
    (b) it matches the two enveloping actions through rho, generator by
    generator."""
    L = intertwiner(space)
    checks = []
    for i in range(1, space.d + 1):
        lhs = L @ weyl_action("green", i, space)
        rhs = weyl_action("shoji", i, space, signs) @ L
        checks.append((f"weyl[s{i}]", lhs == rhs, None))
    fixed = fixed_generator_matrices(space.n)
    images = levi_image_matrices(space.n)
    for name in sorted(fixed):
        lhs = enveloping_action(images[name], space) @ L
        rhs = L @ enveloping_action(fixed[name], space)
        checks.append((f"enveloping[{name}]", lhs == rhs, None))
    return checks


def schur_operator_check(n: int, d: int) -> list:
    """The quotient relations as operators on V^(x)d: the d_i sum acts as
    d, and every Cartan element satisfies x(x-1)...(x-d) = 0."""
    space = tensor_space(n, d)
    gens = theta_generators(gl_context("even", n))
    checks = []
    total = zero(space.dim)
    for m in gens.d:
        total = total + enveloping_action(m, space)
    ok = total == identity(space.dim).scale(d)
    checks.append(("trace", ok, None))
    cart = cartan_set("even", n)
    eye = identity(space.dim)
    for label, mats in (("hmin", cart.h), ("hbarmin", cart.h_bar)):
        for i, h in enumerate(mats, start=1):
            op = enveloping_action(h, space)
            prod = eye
            for k in range(d + 1):
                prod = prod @ (op - eye.scale(k))
            checks.append((f"{label}[{i}]", prod.is_zero(), None))
    return checks


@dataclass(frozen=True)
class DoubleCentralizerRecord:
    dim_weyl_commutant: int
    dim_image_algebra: int
    commute: bool
    equal: bool


def double_centralizer(space: TensorSpace) -> DoubleCentralizerRecord:
    """Two independently computed integers that must agree: the dimension
    of the commutant of the second B_d action (null-space route) and the
    dimension of the algebra generated by the two-block action
    (product-closure route)."""
    f2 = [weyl_action("shoji", i, space) for i in range(1, space.d + 1)]
    commutant = commutant_basis(f2)
    n = space.n
    blocks = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for offset in (0, n):
                blocks.append(matrix(2 * n, 2 * n, {(offset + i - 1, offset + j - 1): 1}))
    ops = [enveloping_action(b, space) for b in blocks]
    commute = all(bracket(op, s).is_zero() for op in ops for s in f2)
    dim_image = algebra_closure_dim(ops, max_dim=space.dim ** 2)
    return DoubleCentralizerRecord(
        dim_weyl_commutant=len(commutant),
        dim_image_algebra=dim_image,
        commute=commute,
        equal=len(commutant) == dim_image,
    )


def certify_sign_convention(space: TensorSpace) -> dict:
    """Try both sign conventions for the last generator of the second
    action; exactly one satisfies the B_d presentation *and* the
    intertwining, and that one is certified.

    The group relations alone cannot tell the conventions apart (the last
    generator appears an even number of times in each), so the intertwining
    is the deciding test.
    """
    outcomes = {}
    for name, signs in (("+unbarred,-barred", (Q(1), Q(-1))),
                        ("-unbarred,+barred", (Q(-1), Q(1)))):
        weyl_ok = all(ok for _, ok, _ in verify_weyl_presentation("shoji", space, signs))
        L = intertwiner(space)
        inter_ok = all(
            L @ weyl_action("green", i, space) == weyl_action("shoji", i, space, signs) @ L
            for i in range(1, space.d + 1))
        outcomes[name] = (weyl_ok, inter_ok)
    winners = [name for name, (w, i) in outcomes.items() if w and i]
    return {
        "outcomes": outcomes,
        "certified": winners[0] if len(winners) == 1 else None,
    }
