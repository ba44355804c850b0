"""The category of a partitioned fan and its cubical structure.

Objects are the blocks of an admissible partition.  A morphism class is an
equivalence class of inclusion pairs (sigma, tau), sigma a face of tau,
where two pairs are identified exactly when the projections of the targets
along their sources coincide.  That canonical projected cone, together
with the source and target blocks, is a complete identity for the class,
so composition and all five cubical axioms can be checked on fully
materialized tables.
"""

from itertools import combinations

from .errors import NotAdmissible, NotComposable, RankZero
from .partition import is_admissible


class MorphClass:
    """One morphism of the category: a class of inclusion pairs."""

    __slots__ = ("index", "source", "target", "signature", "reps", "rank")

    def __init__(self, index, source, target, signature, reps, rank):
        self.index = index
        self.source = source          # block id
        self.target = target          # block id
        self.signature = signature    # canonical projected cone
        self.reps = reps              # sorted tuple of (sigma, tau) pairs
        self.rank = rank

    def is_identity(self):
        return self.rank == 0

    def __repr__(self):
        return "MorphClass(%d: %d->%d, sig=%s)" % (
            self.index, self.source, self.target, self.signature)


class Category:
    def __init__(self, fan, partition, morphisms, hom, compose_table, identities):
        self.fan = fan
        self.partition = partition
        self.objects = tuple(range(len(partition.blocks)))
        self.morphisms = morphisms
        self.hom = hom                    # (source, target) -> tuple of indices
        self.compose_table = compose_table  # (f, g) -> index of g o f
        self.identities = identities      # block id -> morphism index

    def hom_set(self, source, target):
        return tuple(self.morphisms[i] for i in self.hom.get((source, target), ()))

    def block_label(self, block_id):
        return self.partition.blocks[block_id]

    def morphism_of_pair(self, sigma, tau):
        sigma = self.fan.check_cone(sigma)
        tau = self.fan.check_cone(tau)
        key = (self.partition.block_of[sigma], self.partition.block_of[tau],
               self.fan.projected_cone(sigma, tau))
        return self.morphisms[self._by_key[key]]

    def to_json(self):
        return {
            "objects": [[list(c) for c in b] for b in self.partition.blocks],
            "morphisms": [
                {
                    "index": m.index,
                    "source": m.source,
                    "target": m.target,
                    "rank": m.rank,
                    "signature": [list(r) for r in m.signature],
                    "representatives": [[list(s), list(t)] for s, t in m.reps],
                }
                for m in self.morphisms
            ],
            "composition": sorted(
                [f, g, h] for (f, g), h in self.compose_table.items()
            ),
        }


def build_category(fan, partition):
    """Materialize objects, morphism classes and the composition table.

    Raises NotAdmissible when the partition fails the admissibility check;
    well-definedness of composition (existence and uniqueness of the
    composite over all representative chains) is verified during the build.
    """
    ok, witness = is_admissible(fan, partition)
    if not ok:
        raise NotAdmissible("partition is not admissible",
                            witness=[list(c) for c in witness])
    groups = {}
    for tau in fan.cones:
        for k in range(len(tau) + 1):
            for sigma in combinations(tau, k):
                key = (partition.block_of[sigma], partition.block_of[tau],
                       fan.projected_cone(sigma, tau))
                groups.setdefault(key, set()).add((sigma, tau))
    morphisms = []
    by_key = {}
    for idx, key in enumerate(sorted(groups, key=_key_sort)):
        source, target, signature = key
        reps = tuple(sorted(groups[key]))
        rank = len(reps[0][1]) - len(reps[0][0])
        morphisms.append(MorphClass(idx, source, target, signature, reps, rank))
        by_key[key] = idx
    hom = {}
    for m in morphisms:
        hom.setdefault((m.source, m.target), []).append(m.index)
    hom = {k: tuple(v) for k, v in hom.items()}
    identities = {}
    for m in morphisms:
        if m.rank == 0:
            identities[m.source] = m.index

    # composition per representative matching; checked single-valued
    by_source_rep = {}
    for m in morphisms:
        for sigma, tau in m.reps:
            by_source_rep.setdefault(sigma, []).append(m.index)
    compose_table = {}
    for f in morphisms:
        targets = {tau for _, tau in f.reps}
        for kappa in sorted(targets):
            for g_idx in by_source_rep.get(kappa, ()):
                g = morphisms[g_idx]
                results = set()
                for sigma, tau in f.reps:
                    for sigma2, tau2 in g.reps:
                        if sigma2 == tau:
                            key = (partition.block_of[sigma],
                                   partition.block_of[tau2],
                                   fan.projected_cone(sigma, tau2))
                            results.add(by_key[key])
                if not results:
                    continue
                if len(results) > 1:
                    raise NotAdmissible(
                        "composition not single-valued",
                        witness=[f.index, g.index, sorted(results)])
                prev = compose_table.get((f.index, g.index))
                composed = results.pop()
                if prev is not None and prev != composed:
                    raise NotAdmissible("composition not single-valued",
                                        witness=[f.index, g.index])
                compose_table[(f.index, g.index)] = composed
    cat = Category(fan, partition, tuple(morphisms), hom, compose_table, identities)
    cat._by_key = by_key
    return cat


def _key_sort(key):
    source, target, signature = key
    return (source, target, signature)


def compose(category, f, g):
    """The composite g o f; f's target block must be g's source block."""
    if f.target != g.source:
        raise NotComposable("target/source blocks do not match",
                            witness=[f.index, g.index])
    result = category.compose_table.get((f.index, g.index))
    if result is None:
        raise NotComposable("no representative chain found",
                            witness=[f.index, g.index])
    return category.morphisms[result]


def first_factors(category, f):
    """The rank-1 first factors [f_{sigma, cone{sigma, v_i}}]."""
    if f.rank == 0:
        raise RankZero("identity morphisms have no factors", witness=f.index)
    sigma, tau = f.reps[0]
    extra = [i for i in tau if i not in sigma]
    out = set()
    for v in extra:
        middle = tuple(sorted(sigma + (v,)))
        out.add(category.morphism_of_pair(sigma, middle).index)
    return tuple(category.morphisms[i] for i in sorted(out))


def last_factors(category, f):
    """The rank-1 last factors [f_{lambda_i, tau}] with lambda_i dropping v_i."""
    if f.rank == 0:
        raise RankZero("identity morphisms have no factors", witness=f.index)
    sigma, tau = f.reps[0]
    extra = [i for i in tau if i not in sigma]
    out = set()
    for v in extra:
        lam = tuple(i for i in tau if i != v)
        out.add(category.morphism_of_pair(lam, tau).index)
    return tuple(category.morphisms[i] for i in sorted(out))


class FactorizationCube:
    """The factorization category Faq(f), indexed by subsets of {1..k}."""

    def __init__(self, anchor, objects, subset_of):
        self.anchor = anchor
        self.objects = objects      # tuple of (g index, h index) pairs
        self.subset_of = subset_of  # object -> frozenset index subset

    def rank(self):
        return self.anchor.rank


def factorization_cube(category, f):
    """All two-step factorizations of f, with the subset-poset indexing.

    The subset map comes from one representative (sigma, tau): S maps to
    sigma -> cone{sigma, {v_i : i in S}} -> tau.  The build verifies that
    this hits every factorization pair exactly once (Faq(f) ~ I^k).
    """
    sigma, tau = f.reps[0]
    extra = [i for i in tau if i not in sigma]
    objects = []
    subset_of = {}
    for size in range(len(extra) + 1):
        for S in combinations(range(len(extra)), size):
            middle = tuple(sorted(sigma + tuple(extra[i] for i in S)))
            g = category.morphism_of_pair(sigma, middle)
            h = category.morphism_of_pair(middle, tau)
            objects.append((g.index, h.index))
            subset_of[(g.index, h.index)] = frozenset(S)
    return FactorizationCube(f, tuple(objects), subset_of)


def factorization_pairs(category, f):
    """All (g, h) with h o g = f, straight from the composition table."""
    out = []
    for (gi, hi), res in category.compose_table.items():
        if res == f.index:
            g = category.morphisms[gi]
            if g.source == f.source and category.morphisms[hi].target == f.target:
                out.append((gi, hi))
    return sorted(out)


class AxiomReport:
    """Verdicts of the five cubical-category axioms with witnesses."""

    def __init__(self):
        self.failures = {k: [] for k in (1, 2, 3, 4, 5)}

    def record(self, axiom, witness):
        self.failures[axiom].append(witness)

    @property
    def ok(self):
        return all(not v for v in self.failures.values())

    def to_json(self):
        return {"cubical": self.ok,
                "violations": {str(k): v for k, v in self.failures.items() if v}}


def check_cubical(category):
    """Verify the five cubical axioms on the materialized category.

    1. rank additivity over the composition table;
    2. Faq(f) is isomorphic to the subset poset of {1..rank f};
    3. the middle-object functor Faq(f) -> C is injective on objects and
       faithful (at most one morphism between factorization objects);
    4. morphisms of equal rank >= 1 are determined by their first factors;
    5. likewise by their last factors.
    """
    report = AxiomReport()
    ms = category.morphisms
    for (fi, gi), hi in sorted(category.compose_table.items()):
        if ms[fi].rank + ms[gi].rank != ms[hi].rank:
            report.record(1, {"f": fi, "g": gi, "composite": hi})

    for f in ms:
        pairs = factorization_pairs(category, f)
        cube = factorization_cube(category, f)
        if sorted(cube.objects) != pairs or len(set(cube.objects)) != 2 ** f.rank:
            report.record(2, {"morphism": f.index,
                              "expected": 2 ** f.rank,
                              "pairs": pairs})
            continue
        middles = [ms[g].target for g, _ in cube.objects]
        if len(set(middles)) != len(middles):
            report.record(3, {"morphism": f.index, "middles": middles})
        for (a, b) in combinations(cube.objects, 2):
            for src, dst in ((a, b), (b, a)):
                count = _faq_morphisms(category, src, dst)
                expected = 1 if cube.subset_of[src] <= cube.subset_of[dst] else 0
                if count != expected:
                    report.record(3 if count > 1 else 2,
                                  {"morphism": f.index, "from": src, "to": dst,
                                   "count": count, "expected": expected})

    by_first = {}
    by_last = {}
    for f in ms:
        if f.rank == 0:
            continue
        fkey = tuple(sorted(m.index for m in first_factors(category, f)))
        lkey = tuple(sorted(m.index for m in last_factors(category, f)))
        if fkey in by_first:
            report.record(4, {"a": by_first[fkey], "b": f.index, "first": fkey})
        else:
            by_first[fkey] = f.index
        if lkey in by_last:
            report.record(5, {"a": by_last[lkey], "b": f.index, "last": lkey})
        else:
            by_last[lkey] = f.index
    return report


def _faq_morphisms(category, src, dst):
    """Number of Faq-morphisms between two factorization objects of one f."""
    g1, h1 = src
    g2, h2 = dst
    ms = category.morphisms
    count = 0
    for phi_idx in category.hom.get((ms[g1].target, ms[g2].target), ()):
        if category.compose_table.get((g1, phi_idx)) == g2 and \
           category.compose_table.get((phi_idx, h2)) == h1:
            count += 1
    return count


def check_last_factor_compatibility(category):
    """Pairwise compatibility of last factors.

    For each object, any set of k >= 3 rank-1 morphisms into it that are
    pairwise the last factors of a rank-2 morphism must jointly be the
    last-factor set of a rank-k morphism.  Returns (True, None) or
    (False, offending set of morphism indices).  In ambient dimension 2
    this amounts to detecting any 3 pairwise-compatible rank-1 morphisms.
    """
    ms = category.morphisms
    for obj in category.objects:
        incoming = [m for m in ms if m.target == obj]
        rank1 = sorted(m.index for m in incoming if m.rank == 1)
        if len(rank1) < 3:
            continue
        edges = set()
        realized = {}
        for m in incoming:
            if m.rank < 2:
                continue
            key = tuple(sorted(x.index for x in last_factors(category, m)))
            realized.setdefault(len(key), set()).add(key)
            if m.rank == 2:
                edges.add(key)
        neighbors = {v: set() for v in rank1}
        for a, b in edges:
            neighbors[a].add(b)
            neighbors[b].add(a)
        for clique in _cliques_of_size_3_up(rank1, neighbors):
            if clique not in realized.get(len(clique), set()):
                return False, clique
    return True, None


def _cliques_of_size_3_up(vertices, neighbors):
    """All cliques with at least three vertices, each found once.

    Grows cliques in increasing vertex order, so only actual cliques are
    visited; the compatibility graphs here are sparse.
    """
    out = []

    def grow(clique, candidates):
        for v in sorted(candidates):
            extended = clique + (v,)
            if len(extended) >= 3:
                out.append(extended)
            grow(extended, {u for u in candidates if u > v} & neighbors[v])

    grow((), set(vertices))
    return out


def export_category_dot(category):
    """Deterministic DOT digraph of the non-identity rank-1 morphisms."""
    lines = ["digraph category {"]
    for obj in category.objects:
        lines.append('  n%d [label="%s"];' % (obj, _block_text(category, obj)))
    for m in category.morphisms:
        if m.rank != 1:
            continue
        lines.append('  n%d -> n%d [label="%s"];'
                     % (m.source, m.target, _signature_text(m.signature)))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _block_text(category, obj):
    block = category.partition.blocks[obj]
    return "|".join("(%s)" % ",".join(str(i) for i in c) if c else "0"
                    for c in block)


def _signature_text(signature):
    return ";".join(",".join(str(x) for x in r) for r in signature)
