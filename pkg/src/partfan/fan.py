"""Simplicial fans: construction, validation, stars and projected stars.

A cone of a fan is identified by the sorted tuple of its ray indices; the
empty tuple is the zero cone, which belongs to every fan.  Cone equality
across different fans (in particular between projected stars) is decided
through *canonical cones*: lexicographically sorted tuples of primitive
integer ray vectors in the ambient coordinates.
"""

from itertools import combinations

from . import cones as conelib
from .errors import (
    BadIndex,
    DuplicateRay,
    MixedBlock,
    NonSimplicialCone,
    NotComplete,
    UnknownCone,
)
from .rational import (
    complement_projection,
    matrix_rank,
    mat_vec,
    primitive_ray,
)

ZERO_CONE = ()


class ValidationReport:
    """Outcome of the pairwise intersection check of Definition-style fans."""

    def __init__(self, violations):
        self.violations = tuple(violations)

    @property
    def ok(self):
        return not self.violations

    def to_json(self):
        return {
            "valid": self.ok,
            "violations": [
                {
                    "cone_a": list(a),
                    "cone_b": list(b),
                    "intersection_rays": [list(r) for r in rays],
                }
                for a, b, rays in self.violations
            ],
        }


class Fan:
    """A finite simplicial fan given by primitive rays and maximal cones."""

    def __init__(self, dim, rays, max_cones, cones):
        self.dim = dim
        self.rays = rays
        self.max_cones = max_cones
        self.cones = cones
        self._cone_set = frozenset(cones)
        self._projection_cache = {}
        self._project_star_cache = {}

    def __contains__(self, cone):
        return tuple(cone) in self._cone_set

    def check_cone(self, cone):
        cone = tuple(sorted(cone))
        if cone not in self._cone_set:
            raise UnknownCone("cone not in fan", witness=list(cone))
        return cone

    def cone_dim(self, cone):
        return len(cone)

    def cones_of_dim(self, d):
        return tuple(c for c in self.cones if len(c) == d)

    def chambers(self):
        return self.cones_of_dim(self.dim)

    def walls(self):
        return self.cones_of_dim(self.dim - 1)

    def ray_vectors(self, cone):
        return tuple(self.rays[i] for i in cone)

    def star(self, cone):
        cone = self.check_cone(cone)
        s = set(cone)
        return tuple(c for c in self.cones if s.issubset(c))

    def projection(self, cone):
        """Matrix of the orthogonal projection onto span(cone)^perp."""
        cone = self.check_cone(cone)
        if cone not in self._projection_cache:
            self._projection_cache[cone] = complement_projection(
                self.ray_vectors(cone), dim=self.dim
            )
        return self._projection_cache[cone]

    def projected_cone(self, base, cone):
        """Canonical form of the projection of ``cone`` along ``base``.

        ``base`` must be a face of ``cone``; the result is the sorted tuple
        of primitive projected generators (ambient coordinates).
        """
        p = self.projection(base)
        base_set = set(base)
        out = set()
        for i in cone:
            if i in base_set:
                continue
            out.add(primitive_ray(mat_vec(p, self.rays[i])))
        return tuple(sorted(out))

    def project_star(self, cone):
        """The projected fan pi_sigma(star(sigma)) as a set of canonical cones."""
        cone = self.check_cone(cone)
        if cone not in self._project_star_cache:
            self._project_star_cache[cone] = frozenset(
                self.projected_cone(cone, tau) for tau in self.star(cone)
            )
        return self._project_star_cache[cone]

    def project_star_map(self, cone):
        """Bijection star(sigma) -> canonical projected cones."""
        cone = self.check_cone(cone)
        return {tau: self.projected_cone(cone, tau) for tau in self.star(cone)}

    def adjacent_chambers(self, wall):
        wall = self.check_cone(wall)
        if len(wall) != self.dim - 1:
            raise UnknownCone("not a codimension-1 cone", witness=list(wall))
        s = set(wall)
        return tuple(c for c in self.chambers() if s.issubset(c))

    def to_json(self):
        return {
            "dim": self.dim,
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }


def build_fan(dim, rays, max_cones):
    """Construct a simplicial fan, normalizing rays and deriving all faces."""
    prim = []
    for r in rays:
        if len(r) != dim:
            raise BadIndex("ray length does not match ambient dimension", witness=list(r))
        prim.append(primitive_ray(r))
    normalized = []
    for mc in max_cones:
        idxs = tuple(sorted(set(mc)))
        if len(idxs) != len(tuple(mc)):
            raise BadIndex("repeated ray index in a maximal cone", witness=list(mc))
        for i in idxs:
            if not (0 <= i < len(prim)):
                raise BadIndex("ray index out of range", witness=list(mc))
        vectors = [prim[i] for i in idxs]
        if matrix_rank(vectors) != len(vectors):
            raise NonSimplicialCone("dependent generators in a maximal cone",
                                    witness=list(idxs))
        normalized.append(idxs)
    seen = {}
    for i, r in enumerate(prim):
        if r in seen:
            raise DuplicateRay("rays coincide after primitive normalization",
                               witness=[seen[r], i])
        seen[r] = i
    faces = {ZERO_CONE}
    for mc in normalized:
        for k in range(1, len(mc) + 1):
            faces.update(combinations(mc, k))
    cones = tuple(sorted(faces, key=lambda c: (len(c), c)))
    return Fan(dim, tuple(prim), tuple(sorted(set(normalized))), cones)


def validate_fan(fan):
    """Check that every pairwise intersection of maximal cones is a common face.

    For simplicial cones with distinct rays this is equivalent to
    cone(S1) & cone(S2) == cone(S1 & S2), decided by exact extreme-ray
    extraction on the combined H-representations.
    """
    violations = []
    for a, b in combinations(fan.max_cones, 2):
        shared = tuple(sorted(set(a) & set(b)))
        lin, rays = conelib.intersect_generated_cones(
            fan.ray_vectors(a), fan.ray_vectors(b), fan.dim
        )
        if lin:
            violations.append((a, b, tuple(lin) + tuple(rays)))
            continue
        expected = tuple(sorted(fan.rays[i] for i in shared))
        if tuple(sorted(rays)) != expected:
            violations.append((a, b, rays))
    return ValidationReport(violations)


def is_finite_complete(fan):
    """Completeness via the ridge criterion.

    True iff all maximal cones are full-dimensional, every codimension-1
    cone lies in exactly two maximal cones, and the wall-crossing graph is
    connected.  Sufficient for pure simplicial fans of the sizes handled
    here; not a general completeness proof.
    """
    if not fan.max_cones:
        return False
    if any(len(c) != fan.dim for c in fan.max_cones):
        return False
    adjacency = {c: set() for c in fan.max_cones}
    for wall in fan.cones_of_dim(fan.dim - 1):
        incident = fan.adjacent_chambers(wall)
        if len(incident) != 2:
            return False
        adjacency[incident[0]].add(incident[1])
        adjacency[incident[1]].add(incident[0])
    seen = set()
    stack = [fan.max_cones[0]]
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        stack.extend(adjacency[c] - seen)
    return len(seen) == len(fan.max_cones)


def star(fan, cone):
    return fan.star(cone)


def project_star(fan, cone):
    return fan.project_star(cone)


class LinkComplex:
    """Abstract simplicial complex S([sigma]) on the next-dimension star cones."""

    def __init__(self, vertices, simplices):
        self.vertices = vertices
        self.simplices = simplices  # tuples of vertex indices, downward closed

    def facets(self):
        maximal = []
        sset = set(self.simplices)
        for s in self.simplices:
            if not any(set(s) < set(t) for t in sset if len(t) == len(s) + 1):
                maximal.append(s)
        return tuple(maximal)

    def dimension(self):
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def is_pure(self):
        facets = self.facets()
        return len({len(f) for f in facets}) <= 1

    def ridge_degrees(self):
        """Map from each codim-1 face of a facet to its facet count."""
        facets = self.facets()
        degrees = {}
        for f in facets:
            for ridge in combinations(f, len(f) - 1):
                degrees[ridge] = degrees.get(ridge, 0) + 1
        return degrees

    def to_json(self):
        return {
            "vertices": [list(v) for v in self.vertices],
            "simplices": [list(s) for s in self.simplices],
        }


def link_complex(fan, block):
    """The sphere complex of a block of cones sharing one projected star.

    Vertices are the cones of star(sigma) one dimension above a
    representative sigma; a set of vertices spans a simplex iff the cone of
    their projections is again a cone of the projected star.
    """
    if not is_finite_complete(fan):
        raise NotComplete("link complexes need a finite complete fan")
    block = sorted(fan.check_cone(c) for c in block)
    rep = block[0]
    ps = fan.project_star(rep)
    for other in block[1:]:
        if fan.project_star(other) != ps:
            raise MixedBlock("block members have different projected stars",
                             witness=[list(rep), list(other)])
    k = len(rep)
    vertices = tuple(c for c in fan.star(rep) if len(c) == k + 1)
    proj = {v: fan.projected_cone(rep, v) for v in vertices}
    simplices = []
    for size in range(1, len(vertices) + 1):
        layer = []
        for combo in combinations(range(len(vertices)), size):
            generators = set()
            for i in combo:
                generators.update(proj[vertices[i]])
            if tuple(sorted(generators)) in ps:
                layer.append(combo)
        if not layer:
            break
        simplices.extend(layer)
    return LinkComplex(vertices, tuple(simplices))


def fan_to_json(fan):
    return fan.to_json()


def fan_from_json(data):
    return build_fan(data["dim"], [tuple(r) for r in data["rays"]],
                     [tuple(c) for c in data["max_cones"]])


def canonical_fan(fan):
    """Re-index with rays in lexicographic order; canonical output form."""
    order = sorted(range(len(fan.rays)), key=lambda i: fan.rays[i])
    relabel = {old: new for new, old in enumerate(order)}
    rays = [fan.rays[i] for i in order]
    max_cones = sorted(tuple(sorted(relabel[i] for i in c)) for c in fan.max_cones)
    return build_fan(fan.dim, rays, max_cones)


def subspace_coordinates(fan, cone):
    """An orthogonal rational basis of span(cone)^perp, for 2D frames."""
    from .rational import gram_schmidt, kernel_basis

    comp = kernel_basis(fan.ray_vectors(cone), fan.dim)
    return gram_schmidt(comp)


def projected_star_as_fan(fan, cone):
    """Express pi_sigma(star sigma) as a Fan in coordinates of span(sigma)^perp.

    Fan validity and completeness are invariant under the linear
    identification, so the result can be fed to validate_fan and
    is_finite_complete.
    """
    from .rational import solve

    cone = fan.check_cone(cone)
    basis = subspace_coordinates(fan, cone)
    d = len(basis)
    if d == 0:
        return build_fan(0, [], [])
    ps = sorted(fan.project_star(cone))
    ray_list = sorted({r for c in ps for r in c})
    coords = []
    for r in ray_list:
        sol = solve([[basis[j][i] for j in range(d)] for i in range(fan.dim)], r)
        coords.append(primitive_ray(sol))
    index = {r: i for i, r in enumerate(ray_list)}
    maximal = [c for c in ps if not any(set(c) < set(o) for o in ps)]
    max_cones = [tuple(sorted(index[r] for r in c)) for c in maximal if c]
    if not max_cones and len(ps) == 1:
        max_cones = []
    return build_fan(d, coords, max_cones)
