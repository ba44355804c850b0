"""Exact rational linear algebra.

Vectors are tuples of ``fractions.Fraction`` (or plain ints), matrices are
row-major tuples of such tuples.  Everything is exact; there is no floating
point anywhere because the geometric predicates built on top (span equality,
projected-fan equality, cone membership) are exact set equalities.

Integer vectors returned by :func:`primitive_ray` use arbitrary-precision
Python ints, so Gram-matrix inverses with large coefficients are safe.
"""

from fractions import Fraction
from math import gcd

from .errors import DependentBasis, DimensionMismatch, ZeroVector


def vec(entries):
    """Coerce an iterable of numbers into an exact rational vector."""
    return tuple(Fraction(x) for x in entries)


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a):
    c = Fraction(c)
    return tuple(c * x for x in a)


def dot(a, b):
    if len(a) != len(b):
        raise DimensionMismatch("vectors of different length", witness=(len(a), len(b)))
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


def is_zero(a):
    return all(x == 0 for x in a)


def identity_matrix(n):
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m):
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0]))) if m else ()


def primitive_ray(v):
    """Unique integer vector with entry-gcd 1 that is a positive multiple of v.

    >>> primitive_ray((2, -4))
    (1, -2)
    >>> from fractions import Fraction
    >>> primitive_ray((Fraction(1, 3), Fraction(1, 6)))
    (2, 1)

    Raises ZeroVector on the zero vector.
    """
    v = vec(v)
    if is_zero(v):
        raise ZeroVector("cannot normalize the zero vector", witness=list(map(str, v)))
    denom = 1
    for x in v:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def rref(rows):
    """Reduced row echelon form.  Returns (reduced nonzero rows, pivot columns)."""
    rows = [list(vec(r)) for r in rows]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch("ragged matrix", witness=(ncols, len(r)))
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    reduced = tuple(tuple(r) for r in rows[:rank])
    return reduced, tuple(pivots)


def matrix_rank(rows):
    return len(rref(rows)[0])


def in_span(v, reduced_rows, pivots):
    """Membership of v in the row space given by an rref basis."""
    v = list(vec(v))
    for row, p in zip(reduced_rows, pivots):
        if v[p] != 0:
            f = v[p]
            v = [x - f * y for x, y in zip(v, row)]
    return all(x == 0 for x in v)


def span_equal(a_vectors, b_vectors):
    """Whether two generating sets span the same linear subspace.

    >>> span_equal([(0, 1)], [(0, -1)])
    True
    >>> span_equal([(1, 0), (0, 1)], [(1, 1), (1, -1)])
    True
    >>> span_equal([(1, 0)], [(0, 1)])
    False
    """
    a_vectors = [vec(v) for v in a_vectors]
    b_vectors = [vec(v) for v in b_vectors]
    lengths = {len(v) for v in a_vectors} | {len(v) for v in b_vectors}
    if len(lengths) > 1:
        raise DimensionMismatch("mixed vector lengths", witness=sorted(lengths))
    ra, pa = rref(a_vectors)
    rb, pb = rref(b_vectors)
    if len(ra) != len(rb):
        return False
    return all(in_span(v, rb, pb) for v in ra) and all(in_span(v, ra, pa) for v in rb)


def solve(a_rows, b):
    """One solution x of A x = b, or None if inconsistent.

    A is given by rows; free variables are set to zero.
    """
    aug = [list(vec(row)) + [Fraction(bi)] for row, bi in zip(a_rows, b)]
    reduced, pivots = rref(aug)
    n = len(a_rows[0]) if a_rows else 0
    x = [Fraction(0)] * n
    for row, p in reversed(list(zip(reduced, pivots))):
        if p == n:
            return None
        x[p] = row[n] - sum(row[j] * x[j] for j in range(p + 1, n))
    return tuple(x)


def kernel_basis(rows, ncols):
    """Basis of the right kernel {x : A x = 0} as a tuple of vectors."""
    if not rows:
        return tuple(identity_matrix(ncols))
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free:
        x = [Fraction(0)] * ncols
        x[j] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[j]
        basis.append(tuple(x))
    return tuple(basis)


def int_kernel_basis(rows, ncols):
    """Kernel basis normalized to primitive integer vectors."""
    return tuple(primitive_ray(v) for v in kernel_basis(rows, ncols))


def complement_projection(basis, dim=None):
    """Matrix of the orthogonal projection onto span(basis)^perp.

    The result P is idempotent and symmetric with kernel span(basis).
    An empty basis yields the identity (the ambient dimension must then be
    supplied via ``dim``).  Raises DependentBasis if the given vectors are
    linearly dependent.
    """
    basis = [vec(v) for v in basis]
    if not basis:
        if dim is None:
            raise DimensionMismatch("empty basis needs an explicit ambient dimension")
        return identity_matrix(dim)
    n = len(basis[0])
    if matrix_rank(basis) != len(basis):
        raise DependentBasis("projection basis is linearly dependent",
                             witness=[[str(x) for x in v] for v in basis])
    # P = I - B^T (B B^T)^{-1} B  with B the matrix whose rows are the basis.
    b = tuple(basis)
    gram = mat_mul(b, transpose(b))
    inv = _invert(gram, len(b))
    coeff = mat_mul(mat_mul(transpose(b), inv), b)
    ident = identity_matrix(n)
    return tuple(tuple(ident[i][j] - coeff[i][j] for j in range(n)) for i in range(n))


def _invert(m, n):
    aug = [list(m[i]) + list(identity_matrix(n)[i]) for i in range(n)]
    reduced, pivots = rref(aug)
    if list(pivots[:n]) != list(range(n)):
        raise DependentBasis("singular Gram matrix")
    return tuple(tuple(row[n:]) for row in reduced)


def gram_schmidt(basis):
    """Orthogonal (not normalized) rational basis with the same span."""
    out = []
    for v in basis:
        w = vec(v)
        for u in out:
            w = vec_sub(w, vec_scale(dot(w, u) / dot(u, u), u))
        if not is_zero(w):
            out.append(w)
    return tuple(out)


def sqrt_combination_sign(x, p, y, q):
    """Exact sign of x*sqrt(p) + y*sqrt(q) for integers p, q > 0 and rational x, y."""
    x = Fraction(x)
    y = Fraction(y)
    if x >= 0 and y >= 0:
        return 0 if x == 0 and y == 0 else 1
    if x <= 0 and y <= 0:
        return 0 if x == 0 and y == 0 else -1
    lhs = x * x * p
    rhs = y * y * q
    s = 1 if x > 0 else -1
    if lhs > rhs:
        return s
    if lhs < rhs:
        return -s
    return 0
