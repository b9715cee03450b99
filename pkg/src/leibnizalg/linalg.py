"""Exact linear algebra over the ground fields.

Vectors are tuples of scalars, matrices are lists of row lists, and
operators act on column vectors (column j of a matrix is the image of
basis vector j).  Subspaces are kept in reduced row echelon form with the
rows as basis, so two subspaces are equal exactly when their stored bases
are identical; everything downstream leans on that canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import AmbientMismatch, NoSolution, ShapeMismatch


def zero_vec(field, n):
    return (field.zero,) * n


def vec_add(field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field, c, v):
    return tuple(field.mul(c, a) for a in v)


def is_zero_vec(field, v):
    return all(field.is_zero(a) for a in v)


def identity_matrix(field, n):
    one, zero = field.one, field.zero
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def mat_vec(field, rows, v):
    """Matrix times column vector."""
    add, mul, zero = field.add, field.mul, field.zero
    out = []
    for row in rows:
        acc = zero
        for a, b in zip(row, v):
            acc = add(acc, mul(a, b))
        out.append(acc)
    return tuple(out)


def mat_mul(field, A, B):
    add, mul, zero = field.add, field.mul, field.zero
    if A and B and len(A[0]) != len(B):
        raise ShapeMismatch(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(B[0])}")
    Bt = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = zero
            for a, b in zip(row, col):
                acc = add(acc, mul(a, b))
            out_row.append(acc)
        out.append(out_row)
    return out


def rref(field, rows):
    """Reduced row echelon form.

    Returns (rows, pivots): nonzero rows as tuples with pivot entries 1,
    zeros above and below each pivot, pivot columns strictly increasing.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], ()
    n = len(work[0])
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, len(work)):
            if not field.is_zero(work[i][c]):
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = field.inv(work[r][c])
        if inv != field.one:
            work[r] = [field.mul(inv, a) for a in work[r]]
        for i in range(len(work)):
            if i != r and not field.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]], tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held as a canonical reduced-echelon basis."""

    field: object
    ambient: int
    basis: tuple  # tuple of row tuples, reduced echelon form
    pivots: tuple

    @classmethod
    def span(cls, field, ambient, vectors) -> "Subspace":
        for v in vectors:
            if len(v) != ambient:
                raise ShapeMismatch(f"vector of length {len(v)} in ambient dimension {ambient}")
        rows, pivots = rref(field, list(vectors))
        return cls(field, ambient, tuple(rows), pivots)

    @classmethod
    def zero_space(cls, field, ambient) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full_space(cls, field, ambient) -> "Subspace":
        rows = tuple(tuple(field.one if i == j else field.zero for j in range(ambient))
                     for i in range(ambient))
        return cls(field, ambient, rows, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient

    def reduce(self, v):
        """Subtract the projection onto this space: zero out pivot coords."""
        F = self.field
        v = tuple(v)
        if len(v) != self.ambient:
            raise ShapeMismatch(f"vector of length {len(v)} in ambient {self.ambient}")
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if not F.is_zero(c):
                v = tuple(F.sub(a, F.mul(c, b)) for a, b in zip(v, row))
        return v

    def contains(self, v) -> bool:
        return is_zero_vec(self.field, self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coords_of(self, v):
        """Coefficients of v in this basis; NoSolution if v lies outside."""
        coeffs = tuple(v[p] for p in self.pivots)
        if not self.contains(v):
            raise NoSolution("vector outside subspace")
        return coeffs

    def add(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(self.field, self.ambient, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus block trick on [u|u] and [w|0] rows."""
        self._check_compatible(other)
        F, n = self.field, self.ambient
        block = [tuple(u) + tuple(u) for u in self.basis]
        block += [tuple(w) + zero_vec(F, n) for w in other.basis]
        rows, _ = rref(F, block)
        inter = [r[n:] for r in rows if is_zero_vec(F, r[:n])]
        return Subspace.span(F, n, inter)

    def free_positions(self):
        pivset = set(self.pivots)
        return tuple(j for j in range(self.ambient) if j not in pivset)

    def _check_compatible(self, other: "Subspace"):
        if self.field != other.field or self.ambient != other.ambient:
            raise AmbientMismatch("subspaces live in different ambient spaces")

    def __str__(self):
        return f"<{self.dim}-dim subspace of F^{self.ambient}>"


def kernel(field, rows, ncols=None) -> Subspace:
    """Null space {x : A x = 0} of a matrix acting on column vectors."""
    if not rows:
        if ncols is None:
            raise ShapeMismatch("kernel of a matrix with no rows needs ncols")
        return Subspace.full_space(field, ncols)
    n = len(rows[0])
    red, pivots = rref(field, rows)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    vecs = []
    for j in free:
        v = [field.zero] * n
        v[j] = field.one
        for row, p in zip(red, pivots):
            v[p] = field.neg(row[j])
        vecs.append(tuple(v))
    return Subspace.span(field, n, vecs)


def image(field, rows) -> Subspace:
    """Column space of a matrix acting on column vectors."""
    if not rows:
        return Subspace.zero_space(field, 0)
    return Subspace.span(field, len(rows), list(zip(*rows)))


def solve(field, rows, b):
    """One solution of A x = b, or NoSolution."""
    if not rows:
        raise ShapeMismatch("solve needs at least one equation row")
    n = len(rows[0])
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    red, pivots = rref(field, aug)
    x = [field.zero] * n
    for row, p in zip(red, pivots):
        if p == n:
            raise NoSolution("inconsistent linear system")
        x[p] = row[-1]
    return tuple(x)


def is_nilpotent_operator(field, A) -> bool:
    """Whether the n x n matrix A is nilpotent, i.e. A**n = 0."""
    n = len(A)
    if n == 0:
        return True
    B = A
    k = 1
    while k < n:
        if all(field.is_zero(a) for row in B for a in row):
            return True
        B = mat_mul(field, B, B)
        k *= 2
    return all(field.is_zero(a) for row in B for a in row)


def mat_power(field, A, e: int):
    if e < 1:
        raise ShapeMismatch("matrix power needs a positive exponent")
    result = None
    base = A
    while e:
        if e & 1:
            result = base if result is None else mat_mul(field, result, base)
        e >>= 1
        if e:
            base = mat_mul(field, base, base)
    return result


def generalized_kernel(field, A, power=None) -> Subspace:
    """Kernel of A**power; default power is the dimension (Fitting null part)."""
    n = len(A)
    if n == 0:
        return Subspace.zero_space(field, 0)
    if power is None:
        # square past the dimension; the kernel chain has stabilized by then
        B = A
        k = 1
        while k < n:
            B = mat_mul(field, B, B)
            k *= 2
        return kernel(field, B)
    return kernel(field, mat_power(field, A, power))


def restrict_operator(field, A, space: Subspace):
    """Matrix of A on an invariant subspace, in the subspace basis.

    Column j is the coordinate vector of A applied to basis row j.
    Raises NoSolution when the space is not invariant.
    """
    cols = []
    for v in space.basis:
        cols.append(space.coords_of(mat_vec(field, A, v)))
    d = space.dim
    return [[cols[j][i] for j in range(d)] for i in range(d)]
