"""Exact sparse linear algebra over the rationals.

Every computation in this package runs through the kernels in this module:
sparse rational matrices, Lie brackets, Kronecker products, ranks, null
spaces and commutants.  There is no floating point anywhere; coefficients
are `fractions.Fraction` throughout, so equality checks are exact and
tolerance-free.

Elimination is fraction-free: rows are cleared to integers and reduced with
cross-multiplication plus gcd normalization, which keeps intermediate
entries small on the large-but-sparse systems produced by the tensor-space
commutant computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

Q = Fraction

# Density above which matrix products switch to a dense kernel.
DENSE_FILL_THRESHOLD = Q(1, 4)


def as_q(x) -> Fraction:
    """Coerce ints / strings / Fractions to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point is not allowed in exact computations")
    return Fraction(x)


class ShapeError(ValueError):
    """Raised when matrix shapes are incompatible for an operation."""


@dataclass(frozen=True)
class Matrix:
    """Immutable sparse matrix over Q.

    `entries` maps 0-based (row, col) pairs to nonzero Fractions; absent
    keys are zero.  Use the module constructors (`matrix`, `matrix_unit`,
    `identity`, ...) rather than building `entries` by hand.
    """

    rows: int
    cols: int
    entries: dict

    def get(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), Q(0))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not self.entries

    def density(self) -> Fraction:
        if self.rows == 0 or self.cols == 0:
            return Q(0)
        return Q(len(self.entries), self.rows * self.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_same_shape(self, other)
        out = dict(self.entries)
        for key, v in other.entries.items():
            s = out.get(key, Q(0)) + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Matrix(self.rows, self.cols, out)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def scale(self, c) -> "Matrix":
        c = as_q(c)
        if not c:
            return Matrix(self.rows, self.cols, {})
        return Matrix(self.rows, self.cols, {k: c * v for k, v in self.entries.items()})

    def __mul__(self, c) -> "Matrix":
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if (self.density() > DENSE_FILL_THRESHOLD and other.density() > DENSE_FILL_THRESHOLD
                and self.rows * other.cols <= 10_000):
            return _matmul_dense(self, other)
        return _matmul_sparse(self, other)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def trace(self) -> Fraction:
        return sum((v for (i, j), v in self.entries.items() if i == j), Q(0))

    def flatten(self) -> dict:
        """Row-major sparse vector view, used for rank/span computations."""
        return {i * self.cols + j: v for (i, j), v in self.entries.items()}

    def rows_dense(self) -> list:
        out = [[Q(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        items = sorted(self.entries.items())
        body = ", ".join(f"({i},{j}): {v}" for (i, j), v in items[:8])
        if len(items) > 8:
            body += ", ..."
        return f"Matrix({self.rows}x{self.cols}, {{{body}}})"


def _check_same_shape(a: Matrix, b: Matrix) -> None:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeError(f"shape mismatch: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")


def _matmul_sparse(a: Matrix, b: Matrix) -> Matrix:
    b_rows: dict = {}
    for (k, j), v in b.entries.items():
        b_rows.setdefault(k, []).append((j, v))
    out: dict = {}
    for (i, k), va in a.entries.items():
        for j, vb in b_rows.get(k, ()):
            key = (i, j)
            s = out.get(key, Q(0)) + va * vb
            if s:
                out[key] = s
            else:
                del out[key]
    return Matrix(a.rows, b.cols, out)


def _matmul_dense(a: Matrix, b: Matrix) -> Matrix:
    ad, bd = a.rows_dense(), b.rows_dense()
    out: dict = {}
    for i in range(a.rows):
        arow = ad[i]
        for j in range(b.cols):
            s = Q(0)
            for k in range(a.cols):
                if arow[k]:
                    s += arow[k] * bd[k][j]
            if s:
                out[(i, j)] = s
    return Matrix(a.rows, b.cols, out)


def matrix(rows: int, cols: int, entries: Mapping | Iterable = ()) -> Matrix:
    """Build a matrix from {(i, j): value} or an iterable of (i, j, value)."""
    data: dict = {}
    items = entries.items() if isinstance(entries, Mapping) else ((i, j, v) for (i, j, v) in entries)
    for item in items:
        if isinstance(entries, Mapping):
            (i, j), v = item
        else:
            i, j, v = item
        if not (0 <= i < rows and 0 <= j < cols):
            raise ShapeError(f"index ({i},{j}) out of bounds for {rows}x{cols}")
        v = as_q(v)
        if v:
            data[(i, j)] = v
    return Matrix(rows, cols, data)


def from_rows(rows: list) -> Matrix:
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    data = {}
    for i, row in enumerate(rows):
        if len(row) != nc:
            raise ShapeError("ragged rows")
        for j, v in enumerate(row):
            v = as_q(v)
            if v:
                data[(i, j)] = v
    return Matrix(nr, nc, data)


def zero(rows: int, cols: int | None = None) -> Matrix:
    return Matrix(rows, cols if cols is not None else rows, {})


def identity(n: int) -> Matrix:
    return Matrix(n, n, {(i, i): Q(1) for i in range(n)})


def matrix_unit(n: int, p: int, q: int) -> Matrix:
    """E_{pq} in gl_n, with 1-based indices p, q."""
    if not (1 <= p <= n and 1 <= q <= n):
        raise ShapeError(f"matrix unit ({p},{q}) out of range for size {n}")
    return Matrix(n, n, {(p - 1, q - 1): Q(1)})


def antidiagonal_permutation(n: int) -> Matrix:
    """J with J[k, n+1-k] = 1 (1-based); J^2 = I."""
    return Matrix(n, n, {(k, n - 1 - k): Q(1) for k in range(n)})


def bracket(a: Matrix, b: Matrix) -> Matrix:
    """Lie bracket [a, b] = ab - ba of square matrices of equal size."""
    if not (a.is_square and b.is_square and a.rows == b.rows):
        raise ShapeError("bracket requires square matrices of equal size")
    return a @ b - b @ a


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with row-major block ordering of the factors."""
    out = {}
    for (i, j), va in a.entries.items():
        for (k, l), vb in b.entries.items():
            out[(i * b.rows + k, j * b.cols + l)] = va * vb
    return Matrix(a.rows * b.rows, a.cols * b.cols, out)


def kron_all(factors: list) -> Matrix:
    out = identity(1)
    for f in factors:
        out = kron(out, f)
    return out


# ---------------------------------------------------------------------------
# Fraction-free elimination
# ---------------------------------------------------------------------------

def _integerize(row: Mapping) -> dict:
    """Scale a sparse rational row to coprime integers (sign preserved)."""
    if not row:
        return {}
    denom_lcm = 1
    for v in row.values():
        d = v.denominator
        denom_lcm = denom_lcm // gcd(denom_lcm, d) * d
    ints = {j: int(v * denom_lcm) for j, v in row.items() if v}
    g = 0
    for v in ints.values():
        g = gcd(g, abs(v))
    if g > 1:
        ints = {j: v // g for j, v in ints.items()}
    return ints


def row_echelon(rows: Iterable[Mapping], ncols: int):
    """Fraction-free echelon form of sparse rows.

    Returns (pivot_cols, echelon) where echelon[r] is an integer sparse row
    whose leading column is pivot_cols[r].  Eliminates with
    cross-multiplication and divides each result row by its content, so no
    rational arithmetic occurs during the sweep.
    """
    work = [_integerize(r) for r in rows]
    work = [r for r in work if r]
    pivot_cols: list = []
    echelon: list = []
    for col in range(ncols):
        pivot_idx = None
        for idx, r in enumerate(work):
            if col in r:
                # Prefer sparse rows with small pivots; keeps fill-in low.
                if pivot_idx is None or (len(r), abs(r[col])) < (len(work[pivot_idx]), abs(work[pivot_idx][col])):
                    pivot_idx = idx
        if pivot_idx is None:
            continue
        piv = work.pop(pivot_idx)
        pv = piv[col]
        nxt = []
        for r in work:
            rv = r.get(col)
            if rv is None:
                nxt.append(r)
                continue
            new = {}
            for j, v in r.items():
                new[j] = v * pv
            for j, v in piv.items():
                s = new.get(j, 0) - rv * v
                if s:
                    new[j] = s
                else:
                    new.pop(j, None)
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, abs(v))
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
                nxt.append(new)
        work = nxt
        pivot_cols.append(col)
        echelon.append(piv)
        if not work:
            break
    return pivot_cols, echelon


def rank_of_rows(rows: Iterable[Mapping], ncols: int) -> int:
    pivot_cols, _ = row_echelon(rows, ncols)
    return len(pivot_cols)


def nullspace(rows: Iterable[Mapping], ncols: int) -> list:
    """Canonical basis of {x : Ax = 0} for sparse rows A; one sparse
    rational vector per free column, with that coordinate set to 1."""
    pivot_cols, echelon = row_echelon(rows, ncols)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        x = {fc: Q(1)}
        for r in range(len(echelon) - 1, -1, -1):
            row = echelon[r]
            pc = pivot_cols[r]
            s = Q(0)
            for j, v in row.items():
                if j != pc and j in x:
                    s += v * x[j]
            if s:
                x[pc] = -s / row[pc]
        basis.append(x)
    return basis


def span_dim(mats: list) -> int:
    """Rank of the family of matrices, flattened row-major. Exact."""
    if not mats:
        return 0
    shape = (mats[0].rows, mats[0].cols)
    for m in mats:
        if (m.rows, m.cols) != shape:
            raise ShapeError("span_dim requires matrices of a common shape")
    return rank_of_rows([m.flatten() for m in mats], shape[0] * shape[1])


def solve_coordinates(basis: list, target: Matrix):
    """Coordinates of `target` in the span of `basis`, or None.

    Dense rational back-substitution; intended for small bases (dimension
    of a Lie algebra, not of an operator space).
    """
    if not basis:
        return None if not target.is_zero() else []
    ncols = len(basis)
    nrows = basis[0].rows * basis[0].cols
    cols = [b.flatten() for b in basis]
    rows_map: dict = {}
    for c, col in enumerate(cols):
        for r, v in col.items():
            rows_map.setdefault(r, {})[c] = v
    tflat = target.flatten()
    for r, v in tflat.items():
        rows_map.setdefault(r, {})[ncols] = rows_map.get(r, {}).get(ncols, Q(0)) + v
    # Gaussian elimination on the augmented system with Fraction arithmetic.
    work = [dict(r) for r in rows_map.values()]
    sol = [Q(0)] * ncols
    pivots = []
    for col in range(ncols):
        idx = next((i for i, r in enumerate(work) if r.get(col)), None)
        if idx is None:
            continue
        piv = work.pop(idx)
        pv = piv[col]
        piv = {j: v / pv for j, v in piv.items()}
        for r in work:
            rv = r.get(col)
            if rv:
                for j, v in piv.items():
                    s = r.get(j, Q(0)) - rv * v
                    if s:
                        r[j] = s
                    else:
                        r.pop(j, None)
        pivots.append((col, piv))
    for r in work:
        if any(j < ncols and v for j, v in r.items()) or r.get(ncols):
            if not any(j < ncols for j in r):
                return None  # inconsistent
    for col, piv in reversed(pivots):
        s = piv.get(ncols, Q(0))
        for j, v in piv.items():
            if j != col and j < ncols:
                s -= v * sol[j]
        sol[col] = s
    # Verify exactly; guards against inconsistent systems with no pivot row.
    acc = zero(target.rows, target.cols)
    for c, b in zip(sol, basis):
        acc = acc + b.scale(c)
    if acc != target:
        return None
    return sol


class SpanSolver:
    """Repeatedly resolve vectors against a fixed spanning family.

    Builds a row-reduced form of the family once, tracking how each reduced
    row is expressed in the original vectors, so each `coordinates` call is
    a single reduction pass.
    """

    def __init__(self, mats: list):
        if not mats:
            raise ShapeError("SpanSolver needs a nonempty family")
        self.shape = (mats[0].rows, mats[0].cols)
        self.n = len(mats)
        self._rows: list = []  # (pivot_col, row_dict, combo_dict)
        for idx, m in enumerate(mats):
            if (m.rows, m.cols) != self.shape:
                raise ShapeError("SpanSolver requires a common shape")
            self._insert(dict(m.flatten()), {idx: Q(1)})

    def _reduce(self, vec: dict, combo: dict):
        for pc, row, rcombo in self._rows:
            v = vec.get(pc)
            if not v:
                continue
            for j, w in row.items():
                s = vec.get(j, Q(0)) - v * w
                if s:
                    vec[j] = s
                else:
                    vec.pop(j, None)
            for j, w in rcombo.items():
                s = combo.get(j, Q(0)) - v * w
                if s:
                    combo[j] = s
                else:
                    combo.pop(j, None)
        return vec, combo

    def _insert(self, vec: dict, combo: dict) -> bool:
        vec, combo = self._reduce(vec, combo)
        if not vec:
            return False
        pc = min(vec)
        pv = vec[pc]
        vec = {j: v / pv for j, v in vec.items()}
        combo = {j: v / pv for j, v in combo.items()}
        # Keep the family fully inter-reduced so one reduction pass suffices.
        updated = []
        for opc, orow, ocombo in self._rows:
            v = orow.get(pc)
            if v:
                for j, w in vec.items():
                    s = orow.get(j, Q(0)) - v * w
                    if s:
                        orow[j] = s
                    else:
                        orow.pop(j, None)
                for j, w in combo.items():
                    s = ocombo.get(j, Q(0)) - v * w
                    if s:
                        ocombo[j] = s
                    else:
                        ocombo.pop(j, None)
            updated.append((opc, orow, ocombo))
        self._rows = updated
        self._rows.append((pc, vec, combo))
        self._rows.sort(key=lambda item: item[0])
        return True

    @property
    def rank(self) -> int:
        return len(self._rows)

    def coordinates(self, target: Matrix):
        """Coefficients expressing target in the family, or None."""
        if (target.rows, target.cols) != self.shape:
            raise ShapeError("target shape differs from family shape")
        vec, combo = self._reduce(dict(target.flatten()), {})
        if vec:
            return None
        return {j: -v for j, v in combo.items()}


def det(m: Matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination; small dense use."""
    if not m.is_square:
        raise ShapeError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Q(1)
    a = m.rows_dense()
    sign = 1
    prev = Q(1)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Q(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Q(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def commutant_basis(gens: list) -> list:
    """Basis of {X : XG = GX for all G in gens}.

    Computed as the joint null space of X -> XG - GX.  Empty input yields
    the full matrix algebra basis.
    """
    if not gens:
        raise ShapeError("commutant_basis needs at least the ambient size; pass [identity(n)]")
    n = gens[0].rows
    for g in gens:
        if not (g.is_square and g.rows == n):
            raise ShapeError("commutant generators must be square of equal size")
    rows = []
    for g in gens:
        # (XG - GX)_{ij} = sum_k X_{ik} G_{kj} - G_{ik} X_{kj}
        by_col: dict = {}
        by_row: dict = {}
        for (k, j), v in g.entries.items():
            by_col.setdefault(j, []).append((k, v))
            by_row.setdefault(k, []).append((j, v))
        for i in range(n):
            for j in range(n):
                row: dict = {}
                for k, v in by_col.get(j, ()):
                    row[i * n + k] = row.get(i * n + k, Q(0)) + v
                for k, v in by_row.get(i, ()):
                    row[k * n + j] = row.get(k * n + j, Q(0)) - v
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows.append(row)
    basis_vecs = nullspace(rows, n * n)
    out = []
    for vec in basis_vecs:
        out.append(Matrix(n, n, {(c // n, c % n): v for c, v in vec.items() if v}))
    return out


def algebra_closure_dim(gens: list, include_identity: bool = True, max_dim: int | None = None) -> int:
    """Dimension of the unital associative algebra generated by `gens`.

    Seeds the span with the identity and the generators, then left-multiplies
    by generators until the span stops growing.  Raises if the dimension
    would exceed `max_dim` (a guard against bugs: the closure can never
    exceed the full operator-space dimension).
    """
    if not gens:
        return 1 if include_identity else 0
    n = gens[0].rows
    cap = max_dim if max_dim is not None else n * n
    # Incremental echelon of flattened operators: pivot col -> integer row,
    # plus the matrices retained as independent basis members.
    pivots: dict = {}
    basis: list = []

    def reduce_and_add(m: Matrix) -> bool:
        row = _integerize(m.flatten())
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                basis.append(m)
                return True
            pv, rv = piv[lead], row[lead]
            new = {}
            for j, v in row.items():
                new[j] = v * pv
            for j, v in piv.items():
                s = new.get(j, 0) - rv * v
                if s:
                    new[j] = s
                else:
                    new.pop(j, None)
            g = 0
            for v in new.values():
                g = gcd(g, abs(v))
            if g > 1:
                new = {j: v // g for j, v in new.items()}
            row = new
        return False

    frontier = []
    if include_identity:
        if reduce_and_add(identity(n)):
            frontier.append(identity(n))
    for g in gens:
        if reduce_and_add(g):
            frontier.append(g)
    while frontier:
        new_frontier = []
        for b in frontier:
            for g in gens:
                prod = g @ b
                if reduce_and_add(prod):
                    new_frontier.append(prod)
                    if len(basis) > cap:
                        raise RuntimeError("algebra closure exceeded the operator-space dimension")
        frontier = new_frontier
    return len(basis)
