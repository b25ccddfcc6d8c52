"""Exact arithmetic in U(gl_N): PBW monomials and straightening.

Elements are finitely supported rational combinations of ordered monomials
in the matrix units E_{pq}.  The unit order is: strictly lower-triangular
units (p > q) first, then diagonal, then strictly upper, lexicographic on
(p, q) within each class.  Any fixed global order would do, but normal
forms depend on it, so it is pinned here once.

Multiplication straightens by repeated adjacent transposition with
[E_{pq}, E_{rs}] = delta_{qr} E_{ps} - delta_{sp} E_{rq}; correction terms
strictly drop degree, which is why the rewriting terminates.  Unit-level
products are memoized per ambient size.

A monomial-count budget (THETAFIX_BUDGET, default 500000) aborts runaway
expansions instead of letting them run unbounded.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from . import expr as ex
from .linalg import Matrix, Q, as_q

DEFAULT_BUDGET = 500_000


class BudgetExceededError(RuntimeError):
    """An intermediate element outgrew the configured monomial budget."""


class ContextMismatchError(ValueError):
    pass


def monomial_budget() -> int:
    raw = os.environ.get("THETAFIX_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"THETAFIX_BUDGET must be an integer, got {raw!r}") from e
    if value <= 0:
        raise ValueError("THETAFIX_BUDGET must be positive")
    return value


class UContext:
    """Per-N tables: the pinned unit order and the straightening cache."""

    __slots__ = ("N", "units", "index", "_mono_unit_cache")

    def __init__(self, N: int):
        self.N = N
        lower = [(p, q) for p in range(1, N + 1) for q in range(1, N + 1) if p > q]
        diag = [(p, p) for p in range(1, N + 1)]
        upper = [(p, q) for p in range(1, N + 1) for q in range(1, N + 1) if p < q]
        lower.sort()
        upper.sort()
        self.units = tuple(lower + diag + upper)
        self.index = {pq: k for k, pq in enumerate(self.units)}
        self._mono_unit_cache = {}

    def commutator_units(self, a: int, b: int):
        """[E_a, E_b] as ((unit, coeff), ...) in this context's indexing."""
        p, q = self.units[a]
        r, s = self.units[b]
        terms = []
        if q == r:
            terms.append(((p, s), 1))
        if s == p:
            terms.append(((r, q), -1))
        out = {}
        for pq, c in terms:
            k = self.index[pq]
            out[k] = out.get(k, 0) + c
        return tuple((k, c) for k, c in out.items() if c)


_CONTEXTS: dict = {}


def u_context(N: int) -> UContext:
    ctx = _CONTEXTS.get(N)
    if ctx is None:
        ctx = _CONTEXTS[N] = UContext(N)
    return ctx


# A monomial is a tuple of (unit_index, exponent) pairs with strictly
# increasing unit indices; () is the unit monomial.
Monomial = tuple


def _mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def _mono_times_unit(ctx: UContext, mono: Monomial, u: int) -> dict:
    """Normal form of (normal monomial) * E_u, as {monomial: int coeff}."""
    cache = ctx._mono_unit_cache
    key = (mono, u)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not mono or mono[-1][0] < u:
        result = {mono + ((u, 1),): 1}
    elif mono[-1][0] == u:
        w, k = mono[-1]
        result = {mono[:-1] + ((w, k + 1),): 1}
    else:
        # mono = rest * w^k with w > u:
        #   rest * w^k * u = (rest * w^{k-1} * u) * w + (rest * w^{k-1}) * [E_w, E_u]
        w, k = mono[-1]
        rest = mono[:-1] if k == 1 else mono[:-1] + ((w, k - 1),)
        result: dict = {}
        for m1, c1 in _mono_times_unit(ctx, rest, u).items():
            for m2, c2 in _mono_times_unit(ctx, m1, w).items():
                c = result.get(m2, 0) + c1 * c2
                if c:
                    result[m2] = c
                else:
                    del result[m2]
        for v, cv in ctx.commutator_units(w, u):
            for m2, c2 in _mono_times_unit(ctx, rest, v).items():
                c = result.get(m2, 0) + cv * c2
                if c:
                    result[m2] = c
                else:
                    del result[m2]
    cache[key] = result
    return result


@dataclass(frozen=True)
class UElement:
    """An element of U(gl_N) in PBW normal form: {monomial: coefficient}."""

    N: int
    terms: dict

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Top filtration degree; -1 for the zero element."""
        if not self.terms:
            return -1
        return max(_mono_degree(m) for m in self.terms)

    def __add__(self, other: "UElement") -> "UElement":
        _check_ctx(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Q(0)) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return UElement(self.N, out)

    def __sub__(self, other: "UElement") -> "UElement":
        return self + other.scale(-1)

    def __neg__(self) -> "UElement":
        return self.scale(-1)

    def scale(self, c) -> "UElement":
        c = as_q(c)
        if not c:
            return UElement(self.N, {})
        return UElement(self.N, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UElement):
            return u_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __pow__(self, k: int) -> "UElement":
        if not isinstance(k, int) or k < 0:
            raise ValueError("UElement powers must be nonnegative integers")
        out = one(self.N)
        for _ in range(k):
            out = u_mul(out, self)
        return out

    def commutator(self, other: "UElement") -> "UElement":
        return u_mul(self, other) - u_mul(other, self)

    def linear_part_matrix(self) -> Matrix:
        """The degree-<=1 element as a matrix; errors if degree exceeds 1
        or a constant term is present."""
        ctx = u_context(self.N)
        entries = {}
        for m, c in self.terms.items():
            if m == ():
                raise ValueError("element has a constant term; not a Lie element")
            if _mono_degree(m) != 1:
                raise ValueError("element has degree > 1; not a Lie element")
            (u, _e), = m
            p, q = ctx.units[u]
            entries[(p - 1, q - 1)] = c
        return Matrix(self.N, self.N, entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UElement):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"UElement(N={self.N}, {to_text(self)!r})"


def _check_ctx(a: UElement, b: UElement) -> None:
    if a.N != b.N:
        raise ContextMismatchError(f"mixed ambient sizes {a.N} and {b.N}")


def zero(N: int) -> UElement:
    return UElement(N, {})


def one(N: int) -> UElement:
    return UElement(N, {(): Q(1)})


def unit(N: int, p: int, q: int) -> UElement:
    ctx = u_context(N)
    return UElement(N, {((ctx.index[(p, q)], 1),): Q(1)})


def embed(x: Matrix) -> UElement:
    """Degree-1 embedding gl_N -> U(gl_N): sum of x_{pq} E_{pq}."""
    if not x.is_square:
        raise ContextMismatchError("embed expects a square matrix")
    ctx = u_context(x.rows)
    terms = {}
    for (i, j), v in x.entries.items():
        terms[((ctx.index[(i + 1, j + 1)], 1),)] = v
    return UElement(x.rows, terms)


def u_mul(a: UElement, b: UElement, budget: int | None = None) -> UElement:
    _check_ctx(a, b)
    ctx = u_context(a.N)
    cap = budget if budget is not None else monomial_budget()
    out: dict = {}
    for mb, cb in b.terms.items():
        # expand b's monomial into its unit sequence once
        seq = []
        for u, e in mb:
            seq.extend([u] * e)
        for ma, ca in a.terms.items():
            coeff = ca * cb
            partial = {ma: coeff}
            for u in seq:
                nxt: dict = {}
                for m, c in partial.items():
                    for m2, c2 in _mono_times_unit(ctx, m, u).items():
                        s = nxt.get(m2, Q(0)) + c * c2
                        if s:
                            nxt[m2] = s
                        else:
                            del nxt[m2]
                partial = nxt
                if len(partial) > cap:
                    raise BudgetExceededError(
                        f"intermediate element has {len(partial)} monomials (budget {cap})")
            for m, c in partial.items():
                s = out.get(m, Q(0)) + c
                if s:
                    out[m] = s
                else:
                    del out[m]
            if len(out) > cap:
                raise BudgetExceededError(
                    f"product has {len(out)} monomials (budget {cap})")
    return UElement(a.N, out)


class UnassignedSymbolError(KeyError):
    pass


def evaluate(expr: "ex.Expr", assignment: dict, N: int | None = None) -> UElement:
    """Evaluate an expression tree with symbols bound to UElements.

    The ambient size is inferred from the assignment unless given.  All
    products, powers and brackets land in PBW normal form.
    """
    if N is None:
        for v in assignment.values():
            N = v.N
            break
        if N is None:
            raise ValueError("cannot infer ambient size from an empty assignment")
    return _eval(expr, assignment, N)


def _eval(node, assignment, N: int) -> UElement:
    if isinstance(node, ex.Sym):
        try:
            val = assignment[node.name]
        except KeyError:
            raise UnassignedSymbolError(node.name) from None
        if val.N != N:
            raise ContextMismatchError(f"symbol {node.name} bound in size {val.N}, expected {N}")
        return val
    if isinstance(node, ex.Const):
        return one(N).scale(node.value)
    if isinstance(node, ex.Sum):
        out = zero(N)
        for t in node.terms:
            out = out + _eval(t, assignment, N)
        return out
    if isinstance(node, ex.Prod):
        out = one(N)
        for f in node.factors:
            out = u_mul(out, _eval(f, assignment, N))
        return out
    if isinstance(node, ex.Bracket):
        return _eval(node.left, assignment, N).commutator(_eval(node.right, assignment, N))
    if isinstance(node, ex.Power):
        return _eval(node.base, assignment, N) ** node.exp
    raise ex.ExprError(f"not an expression: {node!r}")


def to_text(elem: UElement) -> str:
    """Serialize in the expression text syntax, with units named E_p_q."""
    if not elem.terms:
        return "0"
    ctx = u_context(elem.N)

    def mono_key(m):
        return (_mono_degree(m), m)

    parts = []
    for m in sorted(elem.terms, key=mono_key):
        c = elem.terms[m]
        factors = []
        for u, e in m:
            p, q = ctx.units[u]
            factors.append(f"E_{p}_{q}" + (f"^{e}" if e > 1 else ""))
        body = "*".join(factors)
        if not body:
            term = str(c)
        elif c == 1:
            term = body
        elif c == -1:
            term = f"-{body}"
        else:
            cs = str(c)
            term = f"{cs}*{body}" if c > 0 else f"-{str(-c)}*{body}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def assignment_from_gens(names_to_matrices: dict) -> dict:
    """Convenience: embed a dict of matrices as degree-1 UElements."""
    return {name: embed(m) for name, m in names_to_matrices.items()}
