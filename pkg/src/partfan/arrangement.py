"""Central simplicial hyperplane arrangements.

The induced fan is enumerated through sign vectors with an exact
feasibility test per candidate.  On top of the fan: flats and the
flat-partition, the poset of regions, shards with respect to a base
region and the shard-partition, and the wall algebra of the built-in
rank-3 arrangement together with its homomorphism certificate.
"""

from itertools import combinations, product

from . import cones as conelib
from .errors import (
    NotAChamber,
    NotSimplicialArrangement,
    UnknownCone,
    UnknownFace,
    WrongArrangement,
    WrongBasis,
)
from .fan import build_fan
from .partition import Partition
from .poset import FanPoset
from .rational import dot, int_kernel_basis, matrix_rank, primitive_ray


class Arrangement:
    """Normals of a central arrangement; pairwise non-parallel and nonzero."""

    def __init__(self, dim, normals):
        normals = tuple(primitive_ray(n) for n in normals)
        for a, b in combinations(range(len(normals)), 2):
            na, nb = normals[a], normals[b]
            if na == nb or na == tuple(-x for x in nb):
                raise WrongArrangement("parallel normals", witness=[a, b])
        self.dim = dim
        self.normals = normals

    def sign_vector(self, point):
        return tuple(_sign(dot(n, point)) for n in self.normals)

    def to_json(self):
        return {"dim": self.dim, "normals": [list(n) for n in self.normals]}


def arrangement_from_json(data):
    return Arrangement(data["dim"], [tuple(n) for n in data["normals"]])


def _sign(x):
    return (x > 0) - (x < 0)


def builtin_brauer():
    """The rank-3 arrangement with the seven 0/1 normals."""
    return Arrangement(3, [
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, 1, 0), (0, 1, 1), (1, 0, 1),
        (1, 1, 1),
    ])


class ArrangementFan:
    """The fan of an arrangement plus the face/sign-vector dictionary."""

    def __init__(self, arrangement, fan, face_signs, face_points):
        self.arrangement = arrangement
        self.fan = fan
        self.face_signs = face_signs    # cone -> sign vector
        self.face_points = face_points  # cone -> interior witness point

    def sign_of(self, cone):
        cone = self.fan.check_cone(cone)
        return self.face_signs[cone]


def arrangement_fan(arrangement, with_signs=False):
    """Enumerate all realizable sign vectors and assemble the fan.

    Feasibility of each of the 3^m candidates is decided exactly via
    extreme rays of the corresponding closed cell; the witness point is a
    relative-interior point.  Faces are matched to rays by sign-vector
    conformality.  Raises NotSimplicialArrangement when any cell has a ray
    count different from its dimension.
    """

    m = len(arrangement.normals)
    if m > 12:
        raise NotSimplicialArrangement(
            "sign enumeration guard: too many hyperplanes", witness=m)
    dim = arrangement.dim
    cells = {}
    for signs in product((1, 0, -1), repeat=m):
        point = conelib.strict_sign_feasible(arrangement.normals, signs, dim)
        if point is not None:
            cells[signs] = point
    ray_cells = {}
    for signs, point in cells.items():
        d = _cell_dimension(arrangement, signs, dim)
        if d == 1:
            ray_cells[signs] = primitive_ray(point)
    ray_list = sorted(ray_cells.values())
    ray_index = {r: i for i, r in enumerate(ray_list)}
    face_signs = {}
    face_points = {}
    max_cones = []
    for signs, point in cells.items():
        d = _cell_dimension(arrangement, signs, dim)
        rays = [ray_index[v] for s, v in ray_cells.items() if _conforms(s, signs)]
        if len(rays) != d:
            raise NotSimplicialArrangement(
                "cell has a non-simplicial ray count",
                witness={"signs": list(signs), "dim": d, "rays": len(rays)})
        cone = tuple(sorted(rays))
        face_signs[cone] = signs
        face_points[cone] = point
        if d == dim:
            max_cones.append(cone)
    fan = build_fan(dim, ray_list, max_cones)
    if set(fan.cones) != set(face_signs):
        raise NotSimplicialArrangement("derived faces disagree with sign cells")
    result = ArrangementFan(arrangement, fan, face_signs, face_points)
    return result if with_signs else fan


def _cell_dimension(arrangement, signs, dim):
    zero_normals = [arrangement.normals[i] for i, s in enumerate(signs) if s == 0]
    if not zero_normals:
        return dim
    return dim - matrix_rank(zero_normals)


def _conforms(face_signs, cell_signs):
    """Face order of covectors: zero where it must be, agreeing elsewhere."""
    return all(f == 0 or f == c for f, c in zip(face_signs, cell_signs))


class Flat:
    """A closed set of hyperplanes together with its subspace basis."""

    def __init__(self, indices, basis):
        self.indices = frozenset(indices)
        self.basis = tuple(sorted(basis))

    def __eq__(self, other):
        return isinstance(other, Flat) and self.indices == other.indices

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return "Flat(%s)" % sorted(self.indices)

    def to_json(self):
        return {"hyperplanes": sorted(self.indices),
                "basis": [list(b) for b in self.basis]}


def _flat_from_indices(arrangement, indices):
    normals = [arrangement.normals[i] for i in indices]
    basis = int_kernel_basis(normals, arrangement.dim) if indices \
        else int_kernel_basis([], arrangement.dim)
    closed = frozenset(
        i for i, n in enumerate(arrangement.normals)
        if all(dot(n, b) == 0 for b in basis)
    ) if basis else frozenset(range(len(arrangement.normals)))
    return Flat(closed, basis)


def flats(arrangement):
    """All flats, from closures of hyperplane subsets."""
    out = set()
    m = len(arrangement.normals)
    for size in range(m + 1):
        for subset in combinations(range(m), size):
            out.add(_flat_from_indices(arrangement, subset))
    return sorted(out, key=lambda f: (len(f.indices), sorted(f.indices)))


def support(arrangement, fan, cone):
    """Smallest flat containing a face of the arrangement fan."""
    try:
        cone = fan.check_cone(cone)
    except UnknownCone as err:
        raise UnknownFace("face not in the arrangement fan",
                          witness=err.witness) from err
    if cone == ():
        return _flat_from_indices(arrangement, range(len(arrangement.normals)))
    vectors = fan.ray_vectors(cone)
    containing = [i for i, n in enumerate(arrangement.normals)
                  if all(dot(n, v) == 0 for v in vectors)]
    return _flat_from_indices(arrangement, containing)


def flat_partition(arrangement, fan):
    """Blocks are the cones with equal support flats; admissible by theory,
    and re-verified by the caller through partition.is_admissible."""
    groups = {}
    for cone in fan.cones:
        key = support(arrangement, fan, cone).indices
        groups.setdefault(key, []).append(cone)
    return Partition(fan, [tuple(v) for v in groups.values()])


def _chamber_check(fan, base):
    base = fan.check_cone(base)
    if len(base) != fan.dim:
        raise NotAChamber("base region must be a maximal cone", witness=list(base))
    return base


def separating_set(arrfan, region, base):
    """Hyperplanes with strictly opposite signs on region and base."""
    region = _chamber_check(arrfan.fan, region)
    base = _chamber_check(arrfan.fan, base)
    rs = arrfan.sign_of(region)
    bs = arrfan.sign_of(base)
    return frozenset(i for i, (a, b) in enumerate(zip(rs, bs)) if a == -b and a != 0)


def poset_of_regions(arrfan, base):
    """Chambers ordered away from the base by separating-set inclusion."""
    fan = arrfan.fan
    base = _chamber_check(fan, base)
    covers = []
    for wall in fan.walls():
        t1, t2 = fan.adjacent_chambers(wall)
        s1 = separating_set(arrfan, t1, base)
        s2 = separating_set(arrfan, t2, base)
        if s1 < s2:
            covers.append((t1, t2, wall))
        elif s2 < s1:
            covers.append((t2, t1, wall))
        else:
            raise NotAChamber("separating sets of adjacent chambers not nested",
                              witness=list(wall))
    return FanPoset(fan, covers)


class Shard:
    """A hyperplane piece: connected walls after cutting along flagged flats."""

    def __init__(self, index, hyperplane, walls):
        self.index = index
        self.hyperplane = hyperplane
        self.walls = tuple(sorted(walls))

    def to_json(self):
        return {"shard": self.index, "hyperplane": self.hyperplane,
                "walls": [list(w) for w in self.walls]}


def shards(arrangement, arrfan, base):
    """Cut every hyperplane along the rank-2 subarrangement rule.

    For each codimension-2 flat X the subarrangement consists of the
    hyperplanes containing X; its two basic members are the facet
    hyperplanes of the region containing the base.  Every non-basic member
    is cut along X.  Shards are the components of each hyperplane's walls
    under adjacency through uncut codimension-2 faces.
    """
    fan = arrfan.fan
    base = _chamber_check(fan, base)
    base_point = arrfan.face_points[base]
    m = len(arrangement.normals)
    codim2 = [f for f in flats(arrangement)
              if matrix_rank([arrangement.normals[i] for i in f.indices]) == 2]
    cut_flats = {i: set() for i in range(m)}
    for flat in codim2:
        members = sorted(flat.indices)
        if len(members) < 3:
            continue
        basics = _rank2_basics(arrangement, members, base_point)
        for h in members:
            if h not in basics:
                cut_flats[h].add(flat.indices)
    wall_hyperplane = {}
    for wall in fan.walls():
        sup = support(arrangement, fan, wall)
        (h,) = sup.indices
        wall_hyperplane[wall] = h
    out = []
    for h in range(m):
        walls = sorted(w for w, hh in wall_hyperplane.items() if hh == h)
        parent = {w: w for w in walls}

        def find(w):
            while parent[w] != w:
                parent[w] = parent[parent[w]]
                w = parent[w]
            return w

        for a, b in combinations(walls, 2):
            shared = tuple(sorted(set(a) & set(b)))
            if len(shared) != fan.dim - 2 or shared not in fan:
                continue
            flat_key = support(arrangement, fan, shared).indices
            if flat_key in cut_flats[h]:
                continue
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
        groups = {}
        for w in walls:
            groups.setdefault(find(w), []).append(w)
        for members in sorted(groups.values()):
            out.append(Shard(len(out), h, members))
    return out


def _rank2_basics(arrangement, members, base_point):
    """Facet hyperplanes of the rank-2 subarrangement region holding the base.

    All member normals live in the 2-plane orthogonal to the flat, so a
    member is basic iff the line it cuts in that plane supports a boundary
    ray of the sign-restricted sector.
    """
    normals = [arrangement.normals[i] for i in members]
    signs = [_sign(dot(n, base_point)) for n in normals]
    if any(s == 0 for s in signs):
        raise NotAChamber("base point lies on a subarrangement hyperplane")
    flat_basis = int_kernel_basis(normals, arrangement.dim)
    basics = set()
    for idx, h in enumerate(members):
        # boundary-ray candidates: the line of H_h inside the normal plane
        cand = int_kernel_basis([normals[idx]] + list(flat_basis), arrangement.dim)
        for base_vec in cand:
            for d in (base_vec, tuple(-x for x in base_vec)):
                if all(s * dot(n, d) >= 0 for n, s in zip(normals, signs)):
                    basics.add(h)
    if len(basics) != 2:
        raise NotSimplicialArrangement(
            "rank-2 subarrangement does not have exactly two facets",
            witness=sorted(members))
    return basics


def shard_partition(arrangement, arrfan, base):
    """Blocks keyed by the smallest intersection of shards containing a cone.

    The intersection is taken over the shards' full face sets (all cones
    of the fan inside the shard), which represents the point-set
    intersection faithfully; chambers lie in no shard and share a
    distinguished ambient key.
    """
    fan = arrfan.fan
    shard_list = shards(arrangement, arrfan, base)
    face_sets = []
    for sh in shard_list:
        faces = set()
        for w in sh.walls:
            for k in range(len(w) + 1):
                faces.update(combinations(w, k))
        face_sets.append(frozenset(faces))
    groups = {}
    for cone in fan.cones:
        containing = [face_sets[i] for i, sh in enumerate(shard_list)
                      if cone in face_sets[i]]
        if containing:
            key = frozenset.intersection(*containing)
        else:
            key = "ambient"
        groups.setdefault(key, []).append(cone)
    return Partition(fan, [tuple(v) for v in groups.values()])


# ---------------------------------------------------------------------------
# wall algebra of the built-in rank-3 arrangement

ZERO_SYMBOL = "0"


class WallAlgebra:
    """Free Z-module on N union {0} with additive-when-defined multiplication.

    N is the Brauer normal set plus the zero vector (the unit); the extra
    symbol 0 is a distinguished basis element that absorbs products.
    Defined only for the built-in arrangement.
    """

    def __init__(self, arrangement):
        brauer = builtin_brauer()
        if arrangement.dim != brauer.dim or \
                set(arrangement.normals) != set(brauer.normals):
            raise WrongArrangement("wall algebra is defined for the built-in "
                                   "rank-3 arrangement only")
        self.vectors = tuple(sorted(brauer.normals)) + ((0, 0, 0),)
        self.basis = self.vectors + (ZERO_SYMBOL,)

    def element(self, items=()):
        out = {}
        for key, coeff in items:
            self._check_key(key)
            if coeff:
                out[key] = out.get(key, 0) + coeff
        return {k: v for k, v in out.items() if v}

    def unit(self):
        return {(0, 0, 0): 1}

    def _check_key(self, key):
        if key not in self.basis:
            raise WrongBasis("not a wall-algebra basis element", witness=key)

    def basis_mul(self, a, b):
        self._check_key(a)
        self._check_key(b)
        if a == ZERO_SYMBOL or b == ZERO_SYMBOL:
            return ZERO_SYMBOL
        total = tuple(x + y for x, y in zip(a, b))
        return total if total in self.vectors else ZERO_SYMBOL

    def mul(self, x, y):
        out = {}
        for ka, va in x.items():
            for kb, vb in y.items():
                k = self.basis_mul(ka, kb)
                out[k] = out.get(k, 0) + va * vb
        return {k: v for k, v in out.items() if v}

    def add(self, x, y):
        out = dict(x)
        for k, v in y.items():
            out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v}


def wa_mul(algebra, x, y):
    return algebra.mul(x, y)


def wa_certify(arrangement, presentation):
    """Generator-distinctness certificate via the wall algebra.

    (a) checks associativity and commutativity of * over all basis triples
    and pairs; (b) maps every relator, necessarily of the chain-pair shape
    w1 * w2^-1 with positive chain words, to the equation
    phi(w1) = phi(w2) with phi(X_m) = 0vec (+) m, and verifies it holds.
    Additionally the images of distinct generators are pairwise distinct
    and different from the unit.  Returns True iff everything holds.
    """
    algebra = WallAlgebra(arrangement)
    for a in algebra.basis:
        for b in algebra.basis:
            if algebra.basis_mul(a, b) != algebra.basis_mul(b, a):
                return False
            for c in algebra.basis:
                left = algebra.basis_mul(algebra.basis_mul(a, b), c)
                right = algebra.basis_mul(a, algebra.basis_mul(b, c))
                if left != right:
                    return False
    images = {}
    for gen in presentation.generators:
        vector = _generator_vector(gen)
        images[gen] = algebra.add(algebra.unit(), {vector: 1})
    seen = {}
    unit = algebra.unit()
    for gen, img in images.items():
        key = tuple(sorted(img.items()))
        if img == unit or key in seen:
            return False
        seen[key] = gen
    for relator in presentation.relators:
        split = _split_chain_relator(relator)
        if split is None:
            return False
        w1, w2 = split
        lhs = unit
        for sym in w1:
            lhs = algebra.mul(lhs, images[sym])
        rhs = unit
        for sym in w2:
            rhs = algebra.mul(rhs, images[sym])
        if lhs != rhs:
            return False
    return True


def _generator_vector(symbol):
    # X-symbols of the flat partition name a codimension-1 cone by two rays;
    # the hyperplane normal is the primitive vector orthogonal to both.
    if not (symbol.startswith("X[") and symbol.endswith("]")):
        raise WrongArrangement("not a wall generator symbol", witness=symbol)
    rays = [tuple(int(t) for t in part.split(","))
            for part in symbol[2:-1].split(";")]
    normal = int_kernel_basis(rays, 3)
    if len(normal) != 1:
        raise WrongArrangement("generator does not name a wall", witness=symbol)
    n = normal[0]
    return n if sum(n) > 0 else tuple(-x for x in n)


def _split_chain_relator(word):
    """Interpret a relator w1 * w2^-1 as the equation w1 = w2."""
    shape = tuple(exp for _, exp in word)
    k = sum(1 for e in shape if e == 1)
    if shape != (1,) * k + (-1,) * (len(word) - k):
        return None
    return [sym for sym, _ in word[:k]], [sym for sym, _ in reversed(word[k:])]
