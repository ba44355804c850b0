"""Exact polyhedral cone computations.

A cone is handled either by generators (V-representation) or by a system
``{x : E x = 0, A x >= 0}`` (H-representation).  Conversion in both
directions goes through extreme-ray extraction in the double-description
spirit: the lineality space is split off first, then extreme rays of the
pointed quotient are enumerated from candidate zero-sets of the inequality
rows.  At the ambient dimensions this library targets (fans live in small
n) the candidate enumeration is cheap and, unlike any floating-point code
path, provably exact.
"""

from fractions import Fraction
from itertools import combinations

from .rational import (
    _invert,
    dot,
    identity_matrix,
    kernel_basis,
    mat_mul,
    matrix_rank,
    primitive_ray,
    rref,
    transpose,
    vec,
)


def extreme_rays(equalities, inequalities, dim):
    """Extreme rays and lineality of {x in R^dim : E x = 0, A x >= 0}.

    Returns (lineality_basis, rays), both as sorted tuples of primitive
    integer vectors.  The rays are the extreme rays of the pointed part;
    together with +/- the lineality basis they generate the cone.
    """
    equalities = [vec(e) for e in equalities]
    inequalities = [vec(a) for a in inequalities]
    subspace = kernel_basis(equalities, dim) if equalities else identity_matrix(dim)
    d = len(subspace)
    if d == 0:
        return (), ()
    # inequality system pulled back to subspace coordinates y
    b_rows = [tuple(dot(a, q) for q in subspace) for a in inequalities]
    b_rows = [r for r in b_rows if any(x != 0 for x in r)]
    lin_y = kernel_basis(b_rows, d) if b_rows else identity_matrix(d)
    lineality = tuple(sorted(primitive_ray(_combine(subspace, y)) for y in lin_y))
    # complement W of the lineality inside the subspace coordinates
    pivot_cols = set(rref(lin_y)[1]) if lin_y else set()
    free_cols = [j for j in range(d) if j not in pivot_cols]
    p = len(free_cols)
    if p == 0:
        return lineality, ()
    b2 = [tuple(row[j] for j in free_cols) for row in b_rows]
    rays_z = _pointed_extreme_rays(b2, p)
    rays = set()
    for z in rays_z:
        y = [Fraction(0)] * d
        for j, zj in zip(free_cols, z):
            y[j] = Fraction(zj)
        rays.add(primitive_ray(_combine(subspace, y)))
    return lineality, tuple(sorted(rays))


def _combine(basis, coeffs):
    n = len(basis[0])
    out = [Fraction(0)] * n
    for c, b in zip(coeffs, basis):
        if c:
            out = [o + Fraction(c) * x for o, x in zip(out, b)]
    return tuple(out)


def _pointed_extreme_rays(rows, p):
    """Extreme rays of a pointed cone {z in R^p : B z >= 0}.

    A ray r is extreme iff B r >= 0 and the rows vanishing on r have rank
    p - 1, so candidates come from (p-1)-subsets of rows with a
    one-dimensional kernel.
    """
    if p == 1:
        rays = []
        for cand in ((1,), (-1,)):
            if all(dot(row, cand) >= 0 for row in rows):
                rays.append(cand)
        return rays
    found = set()
    for subset in combinations(range(len(rows)), p - 1):
        ker = kernel_basis([rows[i] for i in subset], p)
        if len(ker) != 1:
            continue
        z = primitive_ray(ker[0])
        for cand in (z, tuple(-x for x in z)):
            if all(dot(row, cand) >= 0 for row in rows):
                found.add(cand)
    return sorted(found)


def halfspaces(generators, dim):
    """H-representation (equalities, inequalities) of cone(generators).

    Uses cone duality: the facet normals of C are the extreme rays of the
    dual cone {y : <g, y> >= 0 for all generators g}, and the equalities
    are a basis of the dual's lineality, i.e. of span(C)^perp.
    """
    generators = [vec(g) for g in generators]
    if not generators:
        return tuple(identity_matrix(dim)), ()
    lin, rays = extreme_rays((), generators, dim)
    return lin, rays


def simplicial_halfspaces(ray_vectors, dim):
    """H-representation of a simplicial cone from its independent generators.

    Inequalities are the dual-basis functionals (barycentric coordinates
    must be nonnegative); equalities cut out the linear span.
    """
    rays = [vec(r) for r in ray_vectors]
    if not rays:
        return tuple(identity_matrix(dim)), ()
    eqs = kernel_basis(rays, dim)
    # rows of (G G^T)^{-1} G are the coordinate functionals on span(G)
    g = tuple(rays)
    gram = mat_mul(g, transpose(g))
    inv = _invert(gram, len(g))
    ineqs = mat_mul(inv, g)
    return tuple(eqs), tuple(ineqs)


def intersect_generated_cones(rays_a, rays_b, dim):
    """(lineality, extreme rays) of cone(rays_a) & cone(rays_b).

    Both inputs must generate simplicial cones.
    """
    eqs_a, ineqs_a = simplicial_halfspaces(rays_a, dim)
    eqs_b, ineqs_b = simplicial_halfspaces(rays_b, dim)
    return extreme_rays(tuple(eqs_a) + tuple(eqs_b), tuple(ineqs_a) + tuple(ineqs_b), dim)


def cone_contains(generators, dim, point):
    """Exact membership of a point in cone(generators)."""
    eqs, ineqs = halfspaces(generators, dim)
    point = vec(point)
    return all(dot(e, point) == 0 for e in eqs) and all(dot(a, point) >= 0 for a in ineqs)


def fulldim_intersection(simplicial_rays, generators, dim):
    """Whether a simplicial cone meets cone(generators) in full dimension."""
    return fulldim_in_halfspaces(simplicial_rays, halfspaces(generators, dim), dim)


def fulldim_in_halfspaces(simplicial_rays, halfspace_rep, dim):
    """fulldim_intersection against a precomputed (equalities, inequalities)."""
    eqs_a, ineqs_a = simplicial_halfspaces(simplicial_rays, dim)
    eqs_b, ineqs_b = halfspace_rep
    lin, rays = extreme_rays(tuple(eqs_a) + tuple(eqs_b),
                             tuple(ineqs_a) + tuple(ineqs_b), dim)
    spanning = list(lin) + list(rays)
    return bool(spanning) and matrix_rank(spanning) == dim


def relative_interior_point(equalities, inequalities, dim):
    """A relative-interior point of {E x = 0, A x >= 0}, or None if it is {0}.

    The sum of all extreme rays lies in the relative interior of the
    pointed part; the lineality contributes nothing and is ignored.
    When the cone is a pure subspace the origin (its relative interior
    under no strict constraints) is returned as the zero vector.
    """
    lin, rays = extreme_rays(equalities, inequalities, dim)
    if not rays:
        return tuple(0 for _ in range(dim)) if lin else None
    total = [0] * dim
    for r in rays:
        total = [a + b for a, b in zip(total, r)]
    return tuple(total)


def strict_sign_feasible(normals, signs, dim):
    """Whether a point exists with <n_i, x> of exactly the given sign per normal.

    ``signs`` entries are -1, 0, +1; zero means the point lies on the
    hyperplane, nonzero means strictly on that side.  Returns a witness
    point or None.  This is the exact feasibility test behind sign-vector
    enumeration of hyperplane arrangements.
    """
    eqs = [normals[i] for i, s in enumerate(signs) if s == 0]
    ineqs = [vec_scale_int(normals[i], s) for i, s in enumerate(signs) if s != 0]
    point = relative_interior_point(eqs, ineqs, dim)
    if point is None:
        point = tuple(0 for _ in range(dim))
    for i, s in enumerate(signs):
        val = dot(normals[i], point)
        if s == 0 and val != 0:
            return None
        if s != 0 and s * val <= 0:
            return None
    return point


def vec_scale_int(v, s):
    return tuple(s * Fraction(x) for x in v)
