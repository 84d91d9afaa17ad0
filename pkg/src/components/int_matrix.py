# Exact integer linear algebra: triangular inverse, naive Gram row reduction,
# Hermite and Smith normal forms, integer kernels and lattice quotients.

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.exception import InvariantViolation, LatticeMembershipError
from src.logger import logging

logger = logging.getLogger(__name__)

Row = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable rectangular matrix of Python integers."""

    rows: Tuple[Row, ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise ValueError(f"ragged matrix: expected {ncols} columns, got {len(row)}")
        return cls(rows, ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows(([1 if i == j else 0 for j in range(n)] for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(zip(*self.rows), self.nrows) if self.rows else IntMatrix((), 0)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        return IntMatrix.from_rows(
            ([sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows),
            other.ncols,
        )

    def is_lower_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def rank(self) -> int:
        if not self.rows or self.ncols == 0:
            return 0
        dm = DomainMatrix([[QQ(x) for x in row] for row in self.rows], self.shape, QQ)
        return dm.rank()


@dataclass(frozen=True)
class SmithDecomposition:
    """left @ A @ right = diag(invariant_factors) padded with zeros."""

    invariant_factors: Tuple[int, ...]
    left: IntMatrix
    right: IntMatrix
    right_inverse: IntMatrix


@dataclass(frozen=True)
class LatticeQuotient:
    ambient_rank: int
    free_rank: int
    invariant_factors: Tuple[int, ...]
    # (order, vector): order 0 marks a free generator
    generators: Tuple[Tuple[int, Row], ...] = field(default=())

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"


def _as_rows(m) -> List[List[int]]:
    if isinstance(m, IntMatrix):
        return m.to_lists()
    return [[int(x) for x in row] for row in m]


def triangular_inverse(m) -> List[List[Fraction]]:
    rows = _as_rows(m)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise InvariantViolation("triangular_inverse needs a square matrix", sys)
    for i in range(n):
        if any(rows[i][j] for j in range(i + 1, n)):
            raise InvariantViolation(f"matrix is not lower triangular (row {i})", sys)
        if rows[i][i] == 0:
            raise InvariantViolation(f"zero on the diagonal at {i}", sys)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = Fraction(1, rows[j][j])
        for i in range(j + 1, n):
            acc = sum((rows[i][k] * inv[k][j] for k in range(j, i)), Fraction(0))
            inv[i][j] = -acc / rows[i][i]
    return inv


def row_reduce_upper(M) -> Tuple[IntMatrix, IntMatrix]:
    """
    Naive integral row reduction of a Gram matrix: each pivot row in turn
    clears its column in the rows below by integer multiples. Zero rows are
    dropped. Returns (H_tilde, U_tilde) with U_tilde @ M == H_tilde.
    """
    A = _as_rows(M)
    n = len(A)
    if any(len(row) != n for row in A):
        raise InvariantViolation("row_reduce_upper needs a square matrix", sys)
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot = A[k][k]
        if pivot == 0:
            if any(A[k]):
                raise InvariantViolation(f"row {k} has zero pivot but is nonzero", sys)
            continue
        for i in range(k + 1, n):
            entry = A[i][k]
            if entry == 0:
                continue
            q, r = divmod(entry, pivot)
            if r:
                raise InvariantViolation(
                    f"non-integer multiplier {entry}/{pivot} at row {i}, pivot {k}", sys
                )
            A[i] = [a - q * b for a, b in zip(A[i], A[k])]
            U[i] = [a - q * b for a, b in zip(U[i], U[k])]
    keep = [i for i in range(n) if any(A[i])]
    logger.debug("row_reduce_upper: %d of %d rows survive", len(keep), n)
    return (
        IntMatrix.from_rows((A[i] for i in keep), n),
        IntMatrix.from_rows((U[i] for i in keep), n),
    )


def _smallest_nonzero(D, t: int):
    best = None
    for i in range(t, len(D)):
        for j in range(t, len(D[i])):
            if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(A) -> SmithDecomposition:
    D = _as_rows(A)
    m = len(D)
    n = len(D[0]) if D else (A.ncols if isinstance(A, IntMatrix) else 0)
    L = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    R = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    Rinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        L[i], L[k] = L[k], L[i]

    def swap_cols(j, k):
        for row in D:
            row[j], row[k] = row[k], row[j]
        for row in R:
            row[j], row[k] = row[k], row[j]
        Rinv[j], Rinv[k] = Rinv[k], Rinv[j]

    def add_row(target, source, q):
        # row_target -= q * row_source
        D[target] = [a - q * b for a, b in zip(D[target], D[source])]
        L[target] = [a - q * b for a, b in zip(L[target], L[source])]

    def add_col(target, source, q):
        # col_target -= q * col_source
        for row in D:
            row[target] -= q * row[source]
        for row in R:
            row[target] -= q * row[source]
        Rinv[source] = [a + q * b for a, b in zip(Rinv[source], Rinv[target])]

    factors = []
    t = 0
    while t < min(m, n):
        best = _smallest_nonzero(D, t)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            pivot = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, D[i][t] // pivot)
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, D[t][j] // pivot)
            leftovers = [(i, t) for i in range(t + 1, m) if D[i][t]]
            leftovers += [(t, j) for j in range(t + 1, n) if D[t][j]]
            if leftovers:
                i, j = min(leftovers, key=lambda ij: abs(D[ij[0]][ij[1]]))
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % pivot),
                None,
            )
            if bad is None:
                break
            # pull the offending row into the pivot row and go again
            add_row(t, bad, -1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            L[t] = [-x for x in L[t]]
        factors.append(D[t][t])
        t += 1

    return SmithDecomposition(
        invariant_factors=tuple(factors),
        left=IntMatrix.from_rows(L, m),
        right=IntMatrix.from_rows(R, n),
        right_inverse=IntMatrix.from_rows(Rinv, n),
    )


def _normalize_sign(vector: Sequence[int]) -> Row:
    for x in vector:
        if x:
            return tuple(vector) if x > 0 else tuple(-y for y in vector)
    return tuple(vector)


def lattice_quotient(ambient_rank: int, relations) -> LatticeQuotient:
    """Z^ambient_rank modulo the row span of relations."""
    rows = _as_rows(relations)
    if not rows:
        eye = IntMatrix.identity(ambient_rank)
        return LatticeQuotient(ambient_rank, ambient_rank, (), tuple((0, r) for r in eye.rows))
    for row in rows:
        if len(row) != ambient_rank:
            raise ValueError(f"relation of length {len(row)} in ambient rank {ambient_rank}")
    snf = smith_normal_form(IntMatrix.from_rows(rows, ambient_rank))
    rank = len(snf.invariant_factors)
    basis = snf.right_inverse.rows
    generators = []
    for i, d in enumerate(snf.invariant_factors):
        if d > 1:
            generators.append((d, _normalize_sign(basis[i])))
    for i in range(rank, ambient_rank):
        generators.append((0, _normalize_sign(basis[i])))
    return LatticeQuotient(
        ambient_rank=ambient_rank,
        free_rank=ambient_rank - rank,
        invariant_factors=tuple(d for d in snf.invariant_factors if d > 1),
        generators=tuple(generators),
    )


def hermite_normal_form(rows) -> Tuple[IntMatrix, IntMatrix]:
    """Row-style HNF: returns (H, U) with U unimodular and U @ rows == H."""
    A = _as_rows(rows)
    m = len(A)
    n = len(A[0]) if A else (rows.ncols if isinstance(rows, IntMatrix) else 0)
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            live = [i for i in range(r, m) if A[i][c]]
            if not live:
                break
            k = min(live, key=lambda i: abs(A[i][c]))
            A[r], A[k] = A[k], A[r]
            U[r], U[k] = U[k], U[r]
            done = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if r < m and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
                U[r] = [-x for x in U[r]]
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
    return IntMatrix.from_rows(A, n), IntMatrix.from_rows(U, m)


def integer_kernel(A) -> IntMatrix:
    """Row basis (in HNF) of {x in Z^n : A x = 0} for A with n columns."""
    rows = _as_rows(A)
    n = A.ncols if isinstance(A, IntMatrix) else (len(rows[0]) if rows else 0)
    if not rows:
        return IntMatrix.identity(n)
    transposed = [list(col) for col in zip(*rows)]
    H, U = hermite_normal_form(IntMatrix.from_rows(transposed, len(rows)))
    kernel = [U.rows[i] for i in range(n) if not any(H.rows[i])]
    if not kernel:
        return IntMatrix((), n)
    basis, _ = hermite_normal_form(IntMatrix.from_rows(kernel, n))
    return IntMatrix.from_rows((row for row in basis.rows if any(row)), n)


def solve_integer(B, c: Sequence[int]) -> Row:
    """Integer x with x @ B == c; B's rows must be linearly independent."""
    rows = _as_rows(B)
    target = [int(v) for v in c]
    if not rows:
        if any(target):
            raise LatticeMembershipError("nonzero vector in the zero lattice", sys)
        return ()
    H, U = hermite_normal_form(rows)
    remaining = list(target)
    y = [0] * len(rows)
    for i, row in enumerate(H.rows):
        pivot_col = next((j for j, x in enumerate(row) if x), None)
        if pivot_col is None:
            break
        q, r = divmod(remaining[pivot_col], row[pivot_col])
        if r:
            raise LatticeMembershipError(
                f"{tuple(target)} is not an integer combination of the basis", sys
            )
        y[i] = q
        remaining = [a - q * b for a, b in zip(remaining, row)]
    if any(remaining):
        raise LatticeMembershipError(f"{tuple(target)} lies outside the lattice", sys)
    x = [sum(y[i] * U.rows[i][j] for i in range(len(rows))) for j in range(len(rows))]
    return tuple(x)
