"""Structure-constant Leibniz algebras and their basic constructions.

An algebra is a table: entry [i][j] is the coordinate vector of the
bracket of basis vectors i and j.  The (right) Leibniz identity reads

    [x, [y, z]] = [[x, y], z] - [[x, z], y]

and is only verified on demand, so tables that fail it can still be
loaded, reported on and rejected with a concrete violating triple.
Derived objects (quotients, subalgebras, direct sums) come with explicit
coordinate maps instead of implicit conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotAnIdeal, NotASubalgebra, NotLeibniz, ShapeMismatch
from .linalg import Subspace, is_zero_vec, kernel, vec_add, vec_sub, zero_vec


@dataclass(frozen=True)
class Violation:
    """A basis triple where the Leibniz identity fails."""

    triple: tuple  # (i, j, k)
    lhs: tuple     # [b_i, [b_j, b_k]]
    rhs: tuple     # [[b_i, b_j], b_k] - [[b_i, b_k], b_j]


@dataclass(frozen=True)
class QuotientMap:
    """Coordinates for L/I: transversal positions are the non-pivots of I."""

    ideal: Subspace
    free: tuple

    def push(self, v):
        reduced = self.ideal.reduce(v)
        return tuple(reduced[j] for j in self.free)

    def lift(self, w):
        field = self.ideal.field
        v = [field.zero] * self.ideal.ambient
        for j, c in zip(self.free, w):
            v[j] = c
        return tuple(v)

    def push_space(self, space: Subspace) -> Subspace:
        return Subspace.span(self.ideal.field, len(self.free),
                             [self.push(v) for v in space.basis])


@dataclass(frozen=True)
class Embedding:
    """Coordinates for a subalgebra in its own basis versus the ambient one."""

    space: Subspace

    def embed(self, w):
        F = self.space.field
        v = zero_vec(F, self.space.ambient)
        for c, row in zip(w, self.space.basis):
            if not F.is_zero(c):
                v = vec_add(F, v, tuple(F.mul(c, a) for a in row))
        return v

    def coords(self, v):
        return self.space.coords_of(v)

    def embed_space(self, small: Subspace) -> Subspace:
        return Subspace.span(self.space.field, self.space.ambient,
                             [self.embed(w) for w in small.basis])


class SubHandle:
    """A subspace of an algebra with lazily computed closure flags.

    One-sided flags matter here: products are not antisymmetric, so left
    ideals and right ideals genuinely differ.
    """

    def __init__(self, algebra: "LeibnizAlgebra", space: Subspace):
        if space.ambient != algebra.dim or space.field != algebra.field:
            raise ShapeMismatch("subspace does not live in the algebra")
        self.algebra = algebra
        self.space = space
        self._flags = {}

    @property
    def dim(self) -> int:
        return self.space.dim

    def _flag(self, name, compute):
        if name not in self._flags:
            self._flags[name] = compute()
        return self._flags[name]

    @property
    def is_subalgebra(self) -> bool:
        return self._flag("sub", lambda: self.algebra.is_subalgebra(self.space))

    @property
    def is_left_ideal(self) -> bool:
        """[L, U] contained in U."""
        def check():
            L, U = self.algebra, self.space
            return all(U.contains(L.bracket(L.basis_vector(i), u))
                       for i in range(L.dim) for u in U.basis)
        return self._flag("left", check)

    @property
    def is_right_ideal(self) -> bool:
        """[U, L] contained in U."""
        def check():
            L, U = self.algebra, self.space
            return all(U.contains(L.bracket(u, L.basis_vector(i)))
                       for i in range(L.dim) for u in U.basis)
        return self._flag("right", check)

    @property
    def is_ideal(self) -> bool:
        return self.is_left_ideal and self.is_right_ideal

    def __repr__(self):
        return f"SubHandle(dim={self.space.dim} of {self.algebra})"


class LeibnizAlgebra:
    """A finite-dimensional algebra given by structure constants."""

    def __init__(self, field, table, names=None):
        n = len(table)
        tab = []
        for i, row in enumerate(table):
            if len(row) != n:
                raise ShapeMismatch(f"table row {i} has {len(row)} entries, expected {n}")
            new_row = []
            for j, v in enumerate(row):
                if len(v) != n:
                    raise ShapeMismatch(
                        f"table entry [{i}][{j}] has length {len(v)}, expected {n}")
                new_row.append(tuple(v))
            tab.append(tuple(new_row))
        self.field = field
        self.dim = n
        self.table = tuple(tab)
        if names is None:
            names = tuple(f"e{i + 1}" for i in range(n))
        if len(names) != n:
            raise ShapeMismatch(f"{len(names)} basis names for dimension {n}")
        self.names = tuple(names)
        self._cache = {}

    def table_key(self):
        return (self.field, self.dim, self.table)

    # -- bracket ---------------------------------------------------------
    def bracket(self, u, v):
        F = self.field
        out = list(zero_vec(F, self.dim))
        for i, a in enumerate(u):
            if F.is_zero(a):
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if F.is_zero(b):
                    continue
                c = F.mul(a, b)
                entry = row[j]
                for m in range(self.dim):
                    if not F.is_zero(entry[m]):
                        out[m] = F.add(out[m], F.mul(c, entry[m]))
        return tuple(out)

    def basis_vector(self, i):
        return tuple(self.field.one if j == i else self.field.zero
                     for j in range(self.dim))

    def right_mult(self, x):
        """Matrix of u -> [u, x] on column vectors."""
        cols = [self.bracket(self.basis_vector(j), x) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def left_mult(self, x):
        """Matrix of u -> [x, u] on column vectors."""
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    # -- identity check ----------------------------------------------------
    def leibniz_violation(self) -> Optional[Violation]:
        """First basis triple breaking [x,[y,z]] = [[x,y],z] - [[x,z],y]."""
        F = self.field
        n = self.dim
        basis = [self.basis_vector(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.bracket(basis[i], self.table[j][k])
                    rhs = vec_sub(F,
                                  self.bracket(self.table[i][j], basis[k]),
                                  self.bracket(self.table[i][k], basis[j]))
                    if lhs != rhs:
                        return Violation((i, j, k), lhs, rhs)
        return None

    def require_leibniz(self):
        v = self.leibniz_violation()
        if v is not None:
            raise NotLeibniz(v)

    # -- subspace helpers --------------------------------------------------
    def span(self, vectors) -> Subspace:
        return Subspace.span(self.field, self.dim, list(vectors))

    def zero_space(self) -> Subspace:
        return Subspace.zero_space(self.field, self.dim)

    def full_space(self) -> Subspace:
        return Subspace.full_space(self.field, self.dim)

    def product(self, U: Subspace, V: Subspace) -> Subspace:
        """Span of [u, v] over basis pairs; equals [U, V] by bilinearity."""
        vecs = [self.bracket(u, v) for u in U.basis for v in V.basis]
        return self.span(vecs)

    def closure(self, vectors) -> Subspace:
        """Smallest subalgebra containing the given vectors."""
        S = self.span(vectors)
        while True:
            prods = [self.bracket(u, v) for u in S.basis for v in S.basis]
            new = [p for p in prods if not S.contains(p)]
            if not new:
                return S
            S = self.span(list(S.basis) + new)

    def derived_space(self) -> Subspace:
        if "derived" not in self._cache:
            full = self.full_space()
            self._cache["derived"] = self.product(full, full)
        return self._cache["derived"]

    def leib_ideal(self) -> Subspace:
        """Span of all squares: generated by the symmetrized table entries."""
        F = self.field
        vecs = [self.table[i][i] for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vecs.append(vec_add(F, self.table[i][j], self.table[j][i]))
        return self.span(vecs)

    def is_abelian_space(self, U: Subspace) -> bool:
        F = self.field
        return all(is_zero_vec(F, self.bracket(u, v))
                   for u in U.basis for v in U.basis)

    def is_abelian(self) -> bool:
        return all(is_zero_vec(self.field, v) for row in self.table for v in row)

    def is_subalgebra(self, U: Subspace) -> bool:
        return all(U.contains(self.bracket(u, v))
                   for u in U.basis for v in U.basis)

    def is_ideal(self, U: Subspace) -> bool:
        for i in range(self.dim):
            e = self.basis_vector(i)
            for u in U.basis:
                if not U.contains(self.bracket(u, e)):
                    return False
                if not U.contains(self.bracket(e, u)):
                    return False
        return True

    # -- distinguished subspaces -------------------------------------------
    def centre(self) -> Subspace:
        """Two-sided centre {x : [x, L] = 0 = [L, x]}."""
        if "centre" in self._cache:
            return self._cache["centre"]
        z = self.centralizer(self.full_space())
        self._cache["centre"] = z
        return z

    def centralizer(self, U: Subspace) -> Subspace:
        """{x : [x, u] = 0 = [u, x] for all u in U}."""
        F, n = self.field, self.dim
        if U.is_zero() or n == 0:
            return self.full_space()
        cols = []
        for i in range(n):
            e = self.basis_vector(i)
            long = []
            for u in U.basis:
                long.extend(self.bracket(e, u))
                long.extend(self.bracket(u, e))
            cols.append(long)
        rows = [[cols[i][r] for i in range(n)] for r in range(len(cols[0]))]
        return kernel(F, rows, ncols=n)

    def normalizer(self, U: Subspace) -> Subspace:
        """{x : [x, U] + [U, x] contained in U}, via reduction mod U."""
        F, n = self.field, self.dim
        if U.is_zero() or n == 0:
            return self.full_space()
        cols = []
        for i in range(n):
            e = self.basis_vector(i)
            long = []
            for u in U.basis:
                long.extend(U.reduce(self.bracket(e, u)))
                long.extend(U.reduce(self.bracket(u, e)))
            cols.append(long)
        rows = [[cols[i][r] for i in range(n)] for r in range(len(cols[0]))]
        return kernel(F, rows, ncols=n)

    # -- derived algebras ----------------------------------------------------
    def quotient(self, I: Subspace):
        """Quotient algebra and its coordinate map; I must be an ideal."""
        if not self.is_ideal(I):
            raise NotAnIdeal(f"not an ideal: {I}")
        free = I.free_positions()
        qmap = QuotientMap(I, free)
        table = []
        for a in free:
            row = []
            ea = self.basis_vector(a)
            for b in free:
                row.append(qmap.push(self.bracket(ea, self.basis_vector(b))))
            table.append(row)
        quot = LeibnizAlgebra(self.field, table)
        return quot, qmap

    def restrict(self, U: Subspace):
        """Subalgebra on the basis of U, with the embedding; U must close."""
        if not self.is_subalgebra(U):
            raise NotASubalgebra(f"not a subalgebra: {U}")
        emb = Embedding(U)
        table = []
        for u in U.basis:
            row = []
            for v in U.basis:
                row.append(U.coords_of(self.bracket(u, v)))
            table.append(row)
        sub = LeibnizAlgebra(self.field, table)
        return sub, emb

    def __str__(self):
        return f"LeibnizAlgebra(dim={self.dim}, field={self.field})"


def direct_sum(A: LeibnizAlgebra, B: LeibnizAlgebra) -> LeibnizAlgebra:
    if A.field != B.field:
        raise ShapeMismatch("direct sum needs a common ground field")
    F = A.field
    n, m = A.dim, B.dim
    total = n + m

    def pad_left(v):
        return tuple(v) + zero_vec(F, m)

    def pad_right(v):
        return zero_vec(F, n) + tuple(v)

    table = []
    for i in range(total):
        row = []
        for j in range(total):
            if i < n and j < n:
                row.append(pad_left(A.table[i][j]))
            elif i >= n and j >= n:
                row.append(pad_right(B.table[i - n][j - n]))
            else:
                row.append(zero_vec(F, total))
        table.append(row)
    names = tuple(f"l.{s}" for s in A.names) + tuple(f"r.{s}" for s in B.names)
    return LeibnizAlgebra(F, table, names=names)


def format_vector(field, names, v) -> str:
    """Human form of a coordinate vector, e.g. 'a - 2*a^3'."""
    parts = []
    for c, name in zip(v, names):
        if field.is_zero(c):
            continue
        s = field.serialize_scalar(c)
        if isinstance(s, list):
            s = str(s[0]) if len(s) == 1 else str(s)
        else:
            s = str(s)
        if s == "1":
            term = name
        elif s == "-1":
            term = f"-{name}"
        else:
            term = f"{s}*{name}"
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out
