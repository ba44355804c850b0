"""Potential identifications, admissible partitions, and their lattice.

Two cones are potentially identifiable when their linear spans agree and
their projected stars coincide as fans; these classes partition the fan.
A partition refining the classes is admissible when identified cones force
identification of the matching members of their stars.  The admissible
partitions of a fan form a complete lattice under refinement.
"""

from itertools import combinations

from .errors import (
    EnumerationLimitExceeded,
    FanMismatch,
    PossibleIdentViolation,
    SeedNotPossible,
    UnknownCone,
)
from .rational import span_equal


class Partition:
    """A partition of the cones of a fan into blocks.

    Blocks are sorted tuples of cones; the block list is sorted by least
    member so equality and block ids are deterministic.
    """

    def __init__(self, fan, blocks):
        blocks = tuple(tuple(sorted(b, key=_cone_key)) for b in blocks)
        self.fan = fan
        self.blocks = tuple(sorted(blocks, key=lambda b: _cone_key(b[0])))
        self.block_of = {}
        for idx, block in enumerate(self.blocks):
            for cone in block:
                if cone in self.block_of:
                    raise FanMismatch("cone appears in two blocks", witness=list(cone))
                self.block_of[cone] = idx
        if set(self.block_of) != set(fan.cones):
            missing = sorted(set(fan.cones) - set(self.block_of), key=_cone_key)
            extra = sorted(set(self.block_of) - set(fan.cones), key=_cone_key)
            raise FanMismatch("blocks do not partition the fan",
                              witness={"missing": [list(c) for c in missing],
                                       "unknown": [list(c) for c in extra]})

    def same_block(self, a, b):
        return self.block_of[tuple(a)] == self.block_of[tuple(b)]

    def block(self, cone):
        cone = tuple(cone)
        if cone not in self.block_of:
            raise UnknownCone("cone not in fan", witness=list(cone))
        return self.blocks[self.block_of[cone]]

    def __eq__(self, other):
        if not isinstance(other, Partition) or self.blocks != other.blocks:
            return False
        return self.fan is other.fan or self.fan.to_json() == other.fan.to_json()

    def __hash__(self):
        return hash(self.blocks)

    def key(self):
        return self.blocks

    def to_json(self):
        return {"blocks": [[list(c) for c in b] for b in self.blocks]}


def _cone_key(cone):
    return (len(cone), cone)


def finest_partition(fan):
    return Partition(fan, [(c,) for c in fan.cones])


def from_blocks(fan, listed_blocks):
    """Partition from explicitly listed blocks; unlisted cones become singletons."""
    listed = [tuple(fan.check_cone(c) for c in b) for b in listed_blocks]
    covered = {c for b in listed for c in b}
    blocks = [b for b in listed if b]
    blocks.extend((c,) for c in fan.cones if c not in covered)
    return Partition(fan, blocks)


def partition_from_json(fan, data):
    return from_blocks(fan, [[tuple(c) for c in b] for b in data["blocks"]])


class IdentTable:
    """The equivalence classes of potential identifications E_sigma."""

    def __init__(self, partition):
        self.partition = partition

    @property
    def classes(self):
        return self.partition.blocks

    def class_of(self, cone):
        return self.partition.block(cone)

    def same_class(self, a, b):
        return self.partition.same_block(a, b)


def potential_identifications(fan):
    """Group cones by (equal span, equal projected star); the coarsest partition."""
    remaining = list(fan.cones)
    classes = []
    while remaining:
        rep = remaining.pop(0)
        members = [rep]
        rest = []
        for other in remaining:
            if len(other) == len(rep) and _possibly_identified(fan, rep, other):
                members.append(other)
            else:
                rest.append(other)
        remaining = rest
        classes.append(tuple(members))
    return IdentTable(Partition(fan, classes))


def _possibly_identified(fan, a, b):
    if a == b:
        return True
    if len(a) != len(b):
        return False
    if len(a) == 0:
        return True
    if not span_equal(fan.ray_vectors(a), fan.ray_vectors(b)):
        return False
    return fan.project_star(a) == fan.project_star(b)


def _check_possible(fan, partition, ident=None):
    ident = ident or potential_identifications(fan)
    for block in partition.blocks:
        for cone in block[1:]:
            if not ident.same_class(block[0], cone):
                raise PossibleIdentViolation(
                    "block crosses potential-identification classes",
                    witness=[list(block[0]), list(cone)])
    return ident


def is_admissible(fan, partition, ident=None):
    """Whether identified cones force identification of matching star members.

    Returns (True, None) or (False, witness) with witness the offending
    quadruple (sigma1, sigma2, tau1, tau2).  Raises PossibleIdentViolation
    when a block is not even contained in one E-class.
    """
    _check_possible(fan, partition, ident)
    for block in partition.blocks:
        for s1, s2 in combinations(block, 2):
            match = _star_matching(fan, s1, s2)
            for t1, t2 in match.items():
                if not partition.same_block(t1, t2):
                    return False, (s1, s2, t1, t2)
    return True, None


def _star_matching(fan, s1, s2):
    """tau1 in star(s1) -> the unique tau2 in star(s2) with equal projection."""
    m1 = fan.project_star_map(s1)
    m2 = fan.project_star_map(s2)
    inverse2 = {v: k for k, v in m2.items()}
    return {t1: inverse2[c] for t1, c in m1.items()}


def admissible_closure(fan, seed_pairs):
    """Smallest admissible partition whose blocks contain all seed pairs.

    Union-find fixpoint: whenever sigma1 ~ sigma2, matching star members
    are merged; iterated until stable.  Merges strictly decrease the block
    count, so this terminates.
    """
    ident = potential_identifications(fan)
    parent = {c: c for c in fan.cones}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        if _cone_key(rb) < _cone_key(ra):
            ra, rb = rb, ra
        parent[rb] = ra
        return True

    for a, b in seed_pairs:
        a = fan.check_cone(a)
        b = fan.check_cone(b)
        if not ident.same_class(a, b):
            raise SeedNotPossible("seed pair crosses E-classes",
                                  witness=[list(a), list(b)])
        union(a, b)

    changed = True
    while changed:
        changed = False
        groups = {}
        for c in fan.cones:
            groups.setdefault(find(c), []).append(c)
        for members in groups.values():
            for s1, s2 in combinations(sorted(members, key=_cone_key), 2):
                for t1, t2 in _star_matching(fan, s1, s2).items():
                    if union(t1, t2):
                        changed = True
    groups = {}
    for c in fan.cones:
        groups.setdefault(find(c), []).append(c)
    return Partition(fan, [tuple(v) for v in groups.values()])


def refines(p1, p2):
    """Whether every block of p1 is contained in a block of p2."""
    _require_same_fan(p1, p2)
    return all(p2.same_block(b[0], c) for b in p1.blocks for c in b[1:])


def meet(p1, p2):
    """Common refinement: together iff together in both."""
    _require_same_fan(p1, p2)
    groups = {}
    for c in p1.fan.cones:
        key = (p1.block_of[c], p2.block_of[c])
        groups.setdefault(key, []).append(c)
    return Partition(p1.fan, [tuple(v) for v in groups.values()])


def join(p1, p2):
    """Transitive closure of the union of the two block relations."""
    _require_same_fan(p1, p2)
    parent = {c: c for c in p1.fan.cones}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for p in (p1, p2):
        for block in p.blocks:
            for c in block[1:]:
                ra, rb = find(block[0]), find(c)
                if ra != rb:
                    parent[rb] = ra
    groups = {}
    for c in p1.fan.cones:
        groups.setdefault(find(c), []).append(c)
    return Partition(p1.fan, [tuple(v) for v in groups.values()])


def _require_same_fan(p1, p2):
    if p1.fan is not p2.fan and p1.fan.to_json() != p2.fan.to_json():
        raise FanMismatch("partitions live on different fans")


def enumerate_admissible(fan, limit=16):
    """All admissible partitions of a small fan, by exhaustive search.

    Candidates are products of set partitions of each E-class, filtered by
    is_admissible.  Guarded by a cone-count limit because partition counts
    explode.
    """
    if len(fan.cones) > limit:
        raise EnumerationLimitExceeded(
            "fan exceeds the enumeration guard", witness=len(fan.cones))
    ident = potential_identifications(fan)
    per_class = [list(_set_partitions(list(cls))) for cls in ident.classes]
    out = []
    for choice in _product(per_class):
        blocks = [tuple(b) for part in choice for b in part]
        partition = Partition(fan, blocks)
        if is_admissible(fan, partition, ident)[0]:
            out.append(partition)
    return out


def _product(lists):
    if not lists:
        yield []
        return
    for head in lists[0]:
        for rest in _product(lists[1:]):
            yield [head] + rest


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
