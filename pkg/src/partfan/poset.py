"""Partial orders on the maximal cones of a complete fan.

Covers always connect wall-adjacent chambers and carry the shared
codimension-1 cone as a label.  Three constructions are provided: from a
generic linear functional (orient each wall so the functional increases),
the rank-2 angle-bisector order used for fans in the plane, and user
supplied cover lists.  Facial intervals, the fan-poset axioms and
non-degeneracy with respect to a partition are checked exactly.
"""

from fractions import Fraction
from itertools import combinations

from . import cones as conelib
from .errors import (
    DegenerateFunctional,
    NotAnInterval,
    NotComplete,
    NotRank2,
    PosetInvalid,
)
from .fan import is_finite_complete
from .rational import dot, int_kernel_basis, sqrt_combination_sign, vec


class FanPoset:
    """Labelled cover relations on the maximal cones plus the derived order."""

    def __init__(self, fan, covers):
        self.fan = fan
        self.elements = tuple(fan.chambers())
        covers = tuple(sorted(covers))
        for lower, upper, wall in covers:
            shared = tuple(sorted(set(lower) & set(upper)))
            if shared != wall or len(wall) != fan.dim - 1 or wall not in fan:
                raise PosetInvalid("cover does not cross a shared wall",
                                   witness=[list(lower), list(upper)])
        self.covers = covers
        self._cover_set = frozenset(covers)
        self._up = {c: set() for c in self.elements}
        for lower, upper, _ in covers:
            self._up[lower].add(upper)
        self._above = {}
        for c in self.elements:
            seen = set()
            stack = [c]
            while stack:
                x = stack.pop()
                for y in self._up[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if c in seen:
                raise PosetInvalid("cover relation has a cycle", witness=list(c))
            seen.add(c)
            self._above[c] = frozenset(seen)

    def leq(self, a, b):
        return b in self._above[a]

    def interval(self, a, b):
        return tuple(sorted(c for c in self.elements
                            if self.leq(a, c) and self.leq(c, b)))

    def cover_direction(self, a, b):
        """+1 if a is covered by b, -1 if b covered by a, else None."""
        wall = tuple(sorted(set(a) & set(b)))
        if (a, b, wall) in self._cover_set:
            return 1
        if (b, a, wall) in self._cover_set:
            return -1
        return None

    def minimum(self):
        mins = [c for c in self.elements
                if all(not self.leq(o, c) for o in self.elements if o != c)]
        return mins[0] if len(mins) == 1 else None

    def maximum(self):
        maxs = [c for c in self.elements
                if all(not self.leq(c, o) for o in self.elements if o != c)]
        return maxs[0] if len(maxs) == 1 else None

    def maximal_chains(self, a, b, cap=10 ** 6):
        """All maximal chains from a to b, each as a list of wall labels."""
        from .errors import ChainLimitExceeded

        up_labelled = {}
        for lower, upper, wall in self.covers:
            up_labelled.setdefault(lower, []).append((upper, wall))
        chains = []

        def walk(node, labels):
            if node == b:
                chains.append(tuple(labels))
                if len(chains) > cap:
                    raise ChainLimitExceeded("too many maximal chains", witness=cap)
                return
            for upper, wall in sorted(up_labelled.get(node, ())):
                if self.leq(upper, b):
                    walk(upper, labels + [wall])

        if self.leq(a, b):
            walk(a, [])
        return chains

    def to_json(self):
        return {"covers": [[list(lo), list(up)] for lo, up, _ in self.covers]}


def poset_from_json(fan, data):
    covers = []
    for lo, up in data["covers"]:
        lo = fan.check_cone(tuple(lo))
        up = fan.check_cone(tuple(up))
        covers.append((lo, up, tuple(sorted(set(lo) & set(up)))))
    return FanPoset(fan, covers)


def wall_normal(fan, wall, toward):
    """Primitive normal of span(wall), oriented toward the chamber ``toward``."""
    normals = int_kernel_basis(fan.ray_vectors(wall), fan.dim)
    nu = normals[0]
    interior = [0] * fan.dim
    for i in toward:
        interior = [a + b for a, b in zip(interior, fan.rays[i])]
    side = dot(nu, interior)
    if side == 0:
        raise PosetInvalid("chamber does not determine a side", witness=list(wall))
    return nu if side > 0 else tuple(-x for x in nu)


def poset_from_linear_functional(fan, b):
    """Order the chambers so the functional b increases across every wall.

    Each wall with adjacent chambers (t1, t2) contributes the cover
    t1 < t2 for which the normal pointing from t1 to t2 has b(nu) > 0.
    Requires completeness and genericity of b.
    """
    if not is_finite_complete(fan):
        raise NotComplete("fan posets need a finite complete fan")
    b = vec(b)
    covers = []
    for wall in fan.walls():
        t1, t2 = fan.adjacent_chambers(wall)
        nu = wall_normal(fan, wall, t2)
        val = dot(b, nu)
        if val == 0:
            raise DegenerateFunctional("functional vanishes on a wall normal",
                                       witness=list(wall))
        if val > 0:
            covers.append((t1, t2, wall))
        else:
            covers.append((t2, t1, wall))
    return FanPoset(fan, covers)


def _det2(a, b):
    return Fraction(a[0]) * Fraction(b[1]) - Fraction(a[1]) * Fraction(b[0])


def _ccw_rays(fan, chamber):
    a, b = fan.ray_vectors(chamber)
    return (a, b) if _det2(a, b) > 0 else (b, a)


def rank2_bisector_poset(fan, base):
    """The two-chain poset on a complete fan in the plane.

    The base chamber is the minimum; the maximum is the chamber containing
    the opposite of the base's angle bisector (if that direction lies on a
    ray, the chamber counterclockwise from the ray is chosen).  The two
    boundary paths around the circle are the covering chains.

    Signs of the bisector tests are decided exactly: with base rays u, w
    the bisector is u*|w| + w*|u| up to scale, and every comparison reduces
    to the sign of an integer combination x*sqrt(p) + y*sqrt(q).
    """
    if fan.dim != 2:
        raise NotRank2("bisector posets are defined for fans in the plane")
    if not is_finite_complete(fan):
        raise NotComplete("fan posets need a finite complete fan")
    base = fan.check_cone(base)
    if len(base) != 2:
        raise NotRank2("base must be a maximal cone", witness=list(base))
    u, w = _ccw_rays(fan, base)
    p = int(dot(w, w))   # -d = -(u*sqrt(p) + w*sqrt(q))
    q = int(dot(u, u))

    def det_with_minus_d(a):
        # sign of det(a, -d) = -(det(a,u) sqrt(p) + det(a,w) sqrt(q))
        return sqrt_combination_sign(-_det2(a, u), p, -_det2(a, w), q)

    containing = []
    for chamber in fan.chambers():
        a, b = _ccw_rays(fan, chamber)
        s1 = det_with_minus_d(a)          # want det(a, -d) >= 0
        s2 = -det_with_minus_d(b)         # want det(-d, b) >= 0
        if s1 >= 0 and s2 >= 0:
            containing.append((chamber, a, b, s1, s2))
    if len(containing) == 1:
        tau_d = containing[0][0]
    else:
        # -d lies on a shared ray.  Prefer the chamber counterclockwise of
        # it (s1 == 0), unless that chamber is wall-adjacent to the base:
        # a maximum adjacent to the minimum collapses the facial interval
        # of their shared wall to the whole poset, breaking the axiom.
        ccw_choice = next(c for c, _, _, s1, _ in containing if s1 == 0)
        cw_choice = next(c for c, _, _, _, s2 in containing if s2 == 0)

        def wall_adjacent(c):
            return c != base and len(set(c) & set(base)) == fan.dim - 1

        if wall_adjacent(ccw_choice) and not wall_adjacent(cw_choice):
            tau_d = cw_choice
        else:
            tau_d = ccw_choice

    order = _angular_chamber_order(fan, base)
    j = order.index(tau_d)
    covers = []
    for i in range(j):
        lo, up = order[i], order[i + 1]
        covers.append((lo, up, tuple(sorted(set(lo) & set(up)))))
    prev = base
    for i in range(len(order) - 1, j, -1):
        nxt = order[i]
        covers.append((prev, nxt, tuple(sorted(set(prev) & set(nxt)))))
        prev = nxt
    if prev != tau_d:
        covers.append((prev, tau_d, tuple(sorted(set(prev) & set(tau_d)))))
    return FanPoset(fan, covers)


def _angular_chamber_order(fan, start):
    """Chambers in counterclockwise order starting at ``start``."""
    chambers = list(fan.chambers())
    order = [start]
    current = start
    while len(order) < len(chambers):
        a, b = _ccw_rays(fan, current)
        nxt = next(c for c in chambers
                   if c != current and b in fan.ray_vectors(c))
        order.append(nxt)
        current = nxt
    return order


class PosetReport:
    def __init__(self, facial_failures, union_failures):
        self.facial_failures = tuple(facial_failures)
        self.union_failures = tuple(union_failures)
        self.weak_variant = "not checked"

    @property
    def facial_ok(self):
        return not self.facial_failures

    @property
    def union_ok(self):
        return not self.union_failures

    @property
    def ok(self):
        return self.facial_ok and self.union_ok

    def to_json(self):
        return {
            "facial_intervals": self.facial_ok,
            "facial_failures": [list(w) for w in self.facial_failures],
            "interval_unions": self.union_ok,
            "union_failures": list(self.union_failures),
            "weak_variant": self.weak_variant,
        }


def _facial_min_max(fan, poset, cone):
    members = tuple(c for c in fan.star(cone) if len(c) == fan.dim)
    mins = [c for c in members if all(not poset.leq(o, c) for o in members if o != c)]
    maxs = [c for c in members if all(not poset.leq(c, o) for o in members if o != c)]
    if len(mins) != 1 or len(maxs) != 1:
        return members, None, None
    lo, hi = mins[0], maxs[0]
    if set(poset.interval(lo, hi)) != set(members):
        return members, None, None
    return members, lo, hi


def check_weak_fan_poset(fan, poset):
    """Report on the two fan-poset axioms.

    (a) every star(sigma)^n is an order interval; (b) the union of the
    maximal cones of every interval is a polyhedral cone, checked by the
    exact criterion that no chamber outside the interval meets the cone
    generated by the interval's rays in full dimension.  The
    simply-connected weak variant is reported as not checked.
    """
    facial_failures = []
    for cone in fan.cones:
        _, lo, hi = _facial_min_max(fan, poset, cone)
        if lo is None:
            facial_failures.append(cone)
    union_failures = []
    for a in poset.elements:
        for b in poset.elements:
            if not poset.leq(a, b):
                continue
            members = poset.interval(a, b)
            generators = sorted({fan.rays[i] for c in members for i in c})
            halfspace_rep = conelib.halfspaces(generators, fan.dim)
            outside = [c for c in poset.elements if c not in set(members)]
            for c in outside:
                if conelib.fulldim_in_halfspaces(fan.ray_vectors(c),
                                                 halfspace_rep, fan.dim):
                    union_failures.append({
                        "interval": [list(a), list(b)],
                        "chamber": list(c),
                    })
    return PosetReport(facial_failures, union_failures)


class FacialInterval:
    def __init__(self, cone, lower, upper, members):
        self.cone = cone
        self.lower = lower
        self.upper = upper
        self.members = members


def facial_interval(fan, poset, cone):
    cone = fan.check_cone(cone)
    members, lo, hi = _facial_min_max(fan, poset, cone)
    if lo is None:
        raise NotAnInterval("star is not an order interval", witness=list(cone))
    return FacialInterval(cone, lo, hi, members)


def check_nondegenerate(fan, partition, poset):
    """Whether the poset is well-defined on identified stars.

    For every pair sigma1 ~ sigma2 the cover directions inside their stars
    must agree under the canonical matching of projected cones; a mismatch
    would force a picture-group generator to be trivial.  Returns
    (True, None) or (False, witness).
    """
    from .partition import _star_matching

    for block in partition.blocks:
        if len(block[0]) == fan.dim:
            continue
        for s1, s2 in combinations(block, 2):
            match = _star_matching(fan, s1, s2)
            for lower, upper, wall in poset.covers:
                if not (set(s1) <= set(wall)):
                    continue
                lo2, up2 = match.get(lower), match.get(upper)
                if lo2 is None or up2 is None:
                    continue
                direction = poset.cover_direction(lo2, up2)
                if direction != 1:
                    return False, {
                        "block": [list(c) for c in block],
                        "cover": [list(lower), list(upper)],
                        "image": [list(lo2), list(up2)],
                    }
    return True, None
