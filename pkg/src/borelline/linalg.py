"""Exact linear algebra over finite-field elements.

Vectors are tuples of FieldElement; matrices are row tuples. Monomial maps
(one nonzero entry per column) get a compact representation because every
group generator acting on an induced module has that shape.
"""

from __future__ import annotations


def vec_is_zero(v) -> bool:
    return all(x.is_zero() for x in v)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def rref(rows):
    """Canonical reduced row echelon form; zero rows dropped."""
    mat = [list(r) for r in rows]
    m = len(mat)
    if m == 0:
        return ()
    n = len(mat[0])
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, m):
            if not mat[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = mat[rank][col].inverse()
        mat[rank] = [inv * x for x in mat[rank]]
        for r in range(m):
            if r != rank and not mat[r][col].is_zero():
                c = mat[r][col]
                mat[r] = [a - c * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == m:
            break
    return tuple(tuple(r) for r in mat[:rank])


def leading_index(row) -> int:
    for i, x in enumerate(row):
        if not x.is_zero():
            return i
    return -1


def reduce_vector(v, rows):
    """Residual of v against echelon rows."""
    out = list(v)
    for row in rows:
        lead = leading_index(row)
        if lead >= 0 and not out[lead].is_zero():
            c = out[lead]
            out = [a - c * b for a, b in zip(out, row)]
    return tuple(out)


def span_contains(rows, v) -> bool:
    return vec_is_zero(reduce_vector(v, rows))


def rref_insert(rows, v):
    """Adjoin v to canonical rref rows, keeping them canonical.

    Returns (rows, residual): the residual is the normalized reduced vector
    that was inserted, or None when v was already in the span.
    """
    w = reduce_vector(v, rows)
    if vec_is_zero(w):
        return rows, None
    lead = leading_index(w)
    w = vec_scale(w[lead].inverse(), w)
    out = []
    inserted = False
    for row in rows:
        if not inserted and leading_index(row) > lead:
            out.append(w)
            inserted = True
        c = row[lead]
        out.append(row if c.is_zero() else vec_sub(row, vec_scale(c, w)))
    if not inserted:
        out.append(w)
    return tuple(out), w


def mat_vec(rows, v):
    return tuple(
        sum((a * b for a, b in zip(row, v) if not a.is_zero()), start=row[0] - row[0])
        for row in rows
    )


def mat_mul(a, b):
    n = len(b)
    cols = list(zip(*b))
    return tuple(
        tuple(
            sum((x * y for x, y in zip(row, col) if not x.is_zero()),
                start=row[0] - row[0])
            for col in cols
        )
        for row in a
    )


def kernel(rows, ncols, one, zero):
    """Canonical basis of the right kernel of the given matrix."""
    red = rref(rows)
    pivots = {}
    for r, row in enumerate(red):
        pivots[leading_index(row)] = r
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [zero] * ncols
        v[free] = one
        for col, r in pivots.items():
            v[col] = -red[r][free]
        basis.append(tuple(v))
    return rref(basis)


class MonomialMap:
    """Linear map sending basis vector j to scale[j] times basis vector perm[j]."""

    __slots__ = ("perm", "scale")

    def __init__(self, perm, scale):
        self.perm = tuple(perm)
        self.scale = tuple(scale)

    @property
    def dim(self):
        return len(self.perm)

    def apply(self, v):
        out = [None] * len(v)
        zero = v[0] - v[0]
        for j in range(len(v)):
            out[j] = zero
        for j, x in enumerate(v):
            if not x.is_zero():
                i = self.perm[j]
                out[i] = out[i] + self.scale[j] * x
        return tuple(out)

    def compose(self, other):
        """self after other."""
        perm = tuple(self.perm[other.perm[j]] for j in range(len(other.perm)))
        scale = tuple(
            other.scale[j] * self.scale[other.perm[j]] for j in range(len(other.perm))
        )
        return MonomialMap(perm, scale)

    def to_dense(self, zero):
        n = len(self.perm)
        rows = [[zero] * n for _ in range(n)]
        for j in range(n):
            rows[self.perm[j]][j] = self.scale[j]
        return tuple(tuple(r) for r in rows)

    def __eq__(self, other):
        if not isinstance(other, MonomialMap):
            return NotImplemented
        if self.perm == other.perm and self.scale == other.scale:
            return True
        # scales of zero would make distinct perms equal, but generators
        # are invertible so scales are nonzero and perms must agree
        return False

    def __hash__(self):
        return hash((self.perm, self.scale))

    @staticmethod
    def identity(n, one):
        return MonomialMap(tuple(range(n)), (one,) * n)


class DenseMap:
    """Plain matrix action, row-major, columns indexed by source basis."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def dim(self):
        return len(self.rows)

    def apply(self, v):
        return mat_vec(self.rows, v)

    def __eq__(self, other):
        if not isinstance(other, DenseMap):
            return NotImplemented
        return self.rows == other.rows
