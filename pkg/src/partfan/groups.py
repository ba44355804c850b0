"""Finitely presented picture groups of a partitioned fan poset.

Generators are named after the codimension-1 blocks.  Relations of the
first kind equate the label words of maximal chains of facial intervals;
relations of the second kind equate the words of identified morphisms and
are skipped when the poset is non-degenerate (they are then consequences).

Group-word equality is undecidable in general, so this module never
claims full word-problem answers.  Equality uses free reduction plus a
bounded relator-rewriting search; inequality certificates use the
abelianization modulo the relator lattice.  Faithfulness claims are only
issued through the two certificate routes with an actual proof behind
them: the rank-2 bisector argument and the wall-algebra route for the
built-in rank-3 arrangement.
"""

from collections import deque
from itertools import combinations

from .errors import (
    Degenerate,
    IntervalBroken,
    MissingWallAlgebraCertificate,
    NotAnInterval,
    NotComparable,
    NotRank2,
    PosetInvalid,
)
from .poset import check_nondegenerate, facial_interval


# ---------------------------------------------------------------------------
# words and presentations

def free_reduce(word):
    out = []
    for sym, exp in word:
        if out and out[-1][0] == sym and out[-1][1] == -exp:
            out.pop()
        else:
            out.append((sym, exp))
    return tuple(out)


def word_inverse(word):
    return tuple((sym, -exp) for sym, exp in reversed(word))


def word_concat(*words):
    out = []
    for w in words:
        out.extend(w)
    return free_reduce(out)


def render_word(word):
    if not word:
        return "e"
    return " ".join(sym if exp == 1 else sym + "^-1" for sym, exp in word)


def parse_word(text):
    text = text.strip()
    if text in ("", "e"):
        return ()
    out = []
    for token in text.split():
        if token.endswith("^-1"):
            out.append((token[:-3], -1))
        else:
            out.append((token, 1))
    return tuple(out)


class Presentation:
    """Generators plus freely reduced relator words."""

    def __init__(self, generators, relators):
        self.generators = tuple(generators)
        genset = set(self.generators)
        reduced = []
        for w in relators:
            w = free_reduce(w)
            for sym, _ in w:
                if sym not in genset:
                    raise PosetInvalid("relator uses unknown generator", witness=sym)
            reduced.append(w)
        self.relators = tuple(reduced)

    def to_text(self):
        rels = "; ".join(render_word(w) for w in self.relators)
        return "gens: %s ; rels: %s" % (" ".join(self.generators), rels)

    def to_json(self):
        return {
            "generators": list(self.generators),
            "relators": [[[sym, exp] for sym, exp in w] for w in self.relators],
        }

    def to_gap(self):
        names = {g: "x%d" % (i + 1) for i, g in enumerate(self.generators)}
        lines = ["# generator key:"]
        for g in self.generators:
            lines.append("#   %s := %s" % (names[g], g))
        lines.append('F := FreeGroup(%s);;'
                     % ", ".join('"%s"' % names[g] for g in self.generators))
        lines.append("AssignGeneratorVariables(F);;")
        rel_terms = []
        for w in self.relators:
            if not w:
                continue
            rel_terms.append("*".join(
                names[sym] if exp == 1 else names[sym] + "^-1" for sym, exp in w))
        lines.append("rels := [%s];;" % ", ".join(rel_terms))
        lines.append("G := F / rels;")
        return "\n".join(lines) + "\n"


def presentation_from_json(data):
    return Presentation(data["generators"],
                        [tuple((sym, exp) for sym, exp in w) for w in data["relators"]])


# ---------------------------------------------------------------------------
# generator naming

def cone_symbol_body(fan, cone):
    rays = sorted(fan.ray_vectors(cone))
    return ";".join(",".join(str(x) for x in r) for r in rays)


def wall_generator(fan, partition, wall):
    """X-symbol of a codimension-1 block, named by its least member's rays."""
    block = partition.block(wall)
    return "X[%s]" % cone_symbol_body(fan, block[0])


def chamber_generator(fan, chamber):
    return "g[%s]" % cone_symbol_body(fan, chamber)


# ---------------------------------------------------------------------------
# picture group

def chain_word(fan, partition, labels):
    return tuple((wall_generator(fan, partition, wall), 1) for wall in labels)


def picture_group(fan, partition, poset, mode="full", chain_cap=10 ** 6):
    """Presentation of G(fan, partition, poset).

    mode="full" emits chain relators for the facial interval of every cone;
    mode="codim2" only for codimension-2 cones, which suffices when the
    poset is a polygonal lattice (the caller asserts polygonality).
    Type-2 relators (identified-morphism words) are emitted only when the
    poset is degenerate.
    """
    if mode not in ("full", "codim2"):
        raise PosetInvalid("unknown picture-group mode", witness=mode)
    for cone in fan.cones:
        try:
            facial_interval(fan, poset, cone)
        except NotAnInterval as err:
            raise PosetInvalid("facial-interval axiom fails",
                               witness=err.witness) from err
    generators = []
    seen = set()
    for wall in fan.walls():
        sym = wall_generator(fan, partition, wall)
        if sym not in seen:
            seen.add(sym)
            generators.append(sym)
    generators.sort()
    relators = []
    if mode == "full":
        cones = fan.cones
    else:
        cones = fan.cones_of_dim(fan.dim - 2)
    for cone in cones:
        fi = facial_interval(fan, poset, cone)
        chains = poset.maximal_chains(fi.lower, fi.upper, cap=chain_cap)
        if len(chains) <= 1:
            continue
        reference = chain_word(fan, partition, chains[0])
        for other in chains[1:]:
            relators.append(word_concat(reference,
                                        word_inverse(chain_word(fan, partition, other))))
    nondeg, _ = check_nondegenerate(fan, partition, poset)
    if not nondeg:
        relators.extend(_type2_relators(fan, partition, poset))
    unique = sorted(set(w for w in relators if w))
    return Presentation(generators, unique)


def _type2_relators(fan, partition, poset):
    from .category import build_category

    category = build_category(fan, partition)
    out = []
    for m in category.morphisms:
        if m.rank == 0 or len(m.reps) < 2:
            continue
        words = []
        for sigma, kappa in m.reps:
            lo_s = facial_interval(fan, poset, sigma).lower
            lo_k = facial_interval(fan, poset, kappa).lower
            chains = poset.maximal_chains(lo_s, lo_k)
            if not chains:
                raise IntervalBroken("no chain between interval minima",
                                     witness=[list(sigma), list(kappa)])
            words.append(chain_word(fan, partition, chains[0]))
        for w in words[1:]:
            rel = word_concat(words[0], word_inverse(w))
            if rel:
                out.append(rel)
    return out


def alt_presentation(fan, partition, poset):
    """Presentation with chamber generators g_tau and wall generators X.

    One relator g_lower * g_upper^-1 * X^-1 per labelled cover, plus the
    base relation setting g at the global minimum to the identity.
    Requires a non-degenerate poset.
    """
    nondeg, witness = check_nondegenerate(fan, partition, poset)
    if not nondeg:
        raise Degenerate("poset is degenerate on identified stars", witness=witness)
    fi0 = facial_interval(fan, poset, ())
    generators = []
    seen = set()
    for wall in fan.walls():
        sym = wall_generator(fan, partition, wall)
        if sym not in seen:
            seen.add(sym)
            generators.append(sym)
    generators.sort()
    chamber_syms = sorted(chamber_generator(fan, c) for c in fan.chambers())
    relators = []
    for lower, upper, wall in poset.covers:
        relators.append(free_reduce((
            (chamber_generator(fan, lower), 1),
            (chamber_generator(fan, upper), -1),
            (wall_generator(fan, partition, wall), -1),
        )))
    relators.append(((chamber_generator(fan, fi0.lower), 1),))
    return Presentation(generators + chamber_syms, relators)


def psi(fan, partition, poset, morphism):
    """Psi([f_{sigma kappa}]) as the chain word from sigma^- up to kappa^-.

    Identity morphisms map to the empty word; the chain choice is
    irrelevant up to the chain relators.
    """
    sigma, kappa = morphism.reps[0]
    lo_s = facial_interval(fan, poset, sigma).lower
    lo_k = facial_interval(fan, poset, kappa).lower
    chains = poset.maximal_chains(lo_s, lo_k)
    if not chains:
        raise IntervalBroken("interval minima are not comparable",
                             witness=[list(sigma), list(kappa)])
    return chain_word(fan, partition, chains[0])


def words_equal(word_a, word_b, relators, max_length=None, max_nodes=20000):
    """Bounded search for equality of two words modulo the relators.

    Breadth-first rewriting: free reduction plus replacing a subword s by
    t^-1 whenever s t is a cyclic rotation of a relator or its inverse.
    Returns True when a rewrite path to the empty word is found; False
    means no proof was found within the bounds, not a disproof.
    """
    target = word_concat(word_a, word_inverse(word_b))
    if not target:
        return True
    rewrites = _rewrite_rules(relators)
    if max_length is None:
        max_length = len(target) + max((len(r) for r in relators), default=0) + 2
    seen = {target}
    queue = deque([target])
    nodes = 0
    while queue and nodes < max_nodes:
        word = queue.popleft()
        nodes += 1
        for nxt in _neighbors(word, rewrites, max_length):
            if not nxt:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def _rewrite_rules(relators):
    rules = []
    for rel in relators:
        for base in (rel, word_inverse(rel)):
            n = len(base)
            for rot in range(n):
                cyc = base[rot:] + base[:rot]
                for cut in range(n + 1):
                    s, t = cyc[:cut], cyc[cut:]
                    rules.append((s, word_inverse(t)))
    dedup = sorted(set((s, t) for s, t in rules if s != t))
    return dedup


def _neighbors(word, rewrites, max_length):
    for s, t in rewrites:
        k = len(s)
        if k == 0:
            for pos in range(len(word) + 1):
                out = free_reduce(word[:pos] + t + word[pos:])
                if len(out) <= max_length:
                    yield out
            continue
        for pos in range(len(word) - k + 1):
            if word[pos:pos + k] == s:
                out = free_reduce(word[:pos] + t + word[pos + k:])
                if len(out) <= max_length:
                    yield out


def functor_check(category, poset, chain_cap=10 ** 6):
    """Verify Psi respects composition: Psi(g o f) ~ Psi(f) * Psi(g).

    Equality is witnessed by bounded relator rewriting against the full
    picture presentation.  Returns (True, []) or (False, failures).
    """
    fan = category.fan
    partition = category.partition
    pres = picture_group(fan, partition, poset, mode="full", chain_cap=chain_cap)
    failures = []
    for (fi, gi), hi in sorted(category.compose_table.items()):
        f = category.morphisms[fi]
        g = category.morphisms[gi]
        h = category.morphisms[hi]
        lhs = word_concat(psi(fan, partition, poset, f), psi(fan, partition, poset, g))
        rhs = psi(fan, partition, poset, h)
        if not words_equal(lhs, rhs, pres.relators):
            failures.append({"f": fi, "g": gi, "composite": hi,
                             "lhs": render_word(lhs), "rhs": render_word(rhs)})
    return (not failures), failures


def quotient_presentation(base, fan, fine, coarse):
    """Extend a presentation of the fine group by coarsening relators.

    For each coarse block that merges several fine codimension-1 blocks,
    the generator of every non-least fine block is equated with the least
    one.  The base presentation's generators are kept, so quotient steps
    compose; composing along a chain of partitions yields the same relator
    multiset as the direct quotient.
    """
    from .partition import refines

    if not refines(fine, coarse):
        raise NotComparable("fine partition does not refine the coarse one")
    new_relators = list(base.relators)
    for cblock in coarse.blocks:
        if len(cblock[0]) != fan.dim - 1:
            continue
        fine_ids = sorted({fine.block_of[c] for c in cblock})
        if len(fine_ids) < 2:
            continue
        syms = sorted("X[%s]" % cone_symbol_body(fan, fine.blocks[i][0])
                      for i in fine_ids)
        for other in syms[1:]:
            new_relators.append(free_reduce(((other, 1), (syms[0], -1))))
    return Presentation(base.generators, new_relators)


# ---------------------------------------------------------------------------
# abelianization / integer lattice tools

def smith_normal_form(matrix):
    """Diagonal of the Smith normal form of an integer matrix."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag = []
    r = c = 0
    while r < rows and c < cols:
        pivot = None
        best = None
        for i in range(r, rows):
            for j in range(c, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < best):
                    best = abs(m[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[r], m[pi] = m[pi], m[r]
        for row in m:
            row[c], row[pj] = row[pj], row[c]
        dirty = True
        while dirty:
            dirty = False
            for i in range(r + 1, rows):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][c]:
                        m[r], m[i] = m[i], m[r]
                        dirty = True
            for j in range(c + 1, cols):
                if m[r][j]:
                    q = m[r][j] // m[r][c]
                    for row in m:
                        row[j] -= q * row[c]
                    if m[r][j]:
                        for row in m:
                            row[c], row[j] = row[j], row[c]
                        dirty = True
        # pivot now divides everything in its row/column; clear and recurse
        entry = abs(m[r][c])
        rest_dirty = False
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                if m[i][j] % entry:
                    m[r] = [a + b for a, b in zip(m[r], m[i])]
                    rest_dirty = True
                    break
            if rest_dirty:
                break
        if rest_dirty:
            continue
        diag.append(entry)
        r += 1
        c += 1
    # normalize divisibility d1 | d2 | ...
    from math import gcd

    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag


def abelianization(presentation):
    """(free rank, nontrivial invariant factors) of the abelianized group."""
    gens = presentation.generators
    index = {g: i for i, g in enumerate(gens)}
    matrix = []
    for w in presentation.relators:
        row = [0] * len(gens)
        for sym, exp in w:
            row[index[sym]] += exp
        matrix.append(row)
    if not matrix:
        return len(gens), ()
    diag = smith_normal_form(matrix)
    rank = len([d for d in diag if d != 0])
    torsion = tuple(d for d in diag if d > 1)
    return len(gens) - rank, torsion


def _hermite_rows(matrix):
    """Row-style Hermite form used for integer row-lattice membership."""
    m = [list(row) for row in matrix if any(row)]
    if not m:
        return []
    cols = len(m[0])
    out = []
    col = 0
    while m and col < cols:
        candidates = [row for row in m if row[col] != 0]
        if not candidates:
            col += 1
            continue
        while True:
            candidates.sort(key=lambda row: abs(row[col]))
            pivot = candidates[0]
            done = True
            for row in candidates[1:]:
                q = row[col] // pivot[col]
                for j in range(cols):
                    row[j] -= q * pivot[j]
                if row[col]:
                    done = False
            candidates = [row for row in candidates if row[col] != 0]
            if done or len(candidates) == 1:
                break
        pivot = candidates[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        out.append(pivot)
        m = [row for row in m if row is not pivot and any(row)]
        for row in m:
            if row[col] % pivot[col] == 0 and row[col] != 0:
                q = row[col] // pivot[col]
                for j in range(cols):
                    row[j] -= q * pivot[j]
        m = [row for row in m if any(row)]
        col += 1
    return out


def in_row_lattice(vector, matrix):
    """Whether an integer vector lies in the integer row span of the matrix."""
    rows = [list(r) for r in matrix if any(r)]
    v = list(vector)
    if not any(v):
        return True
    if not rows:
        return False
    hermite = _hermite_rows(rows)
    cols = len(v)
    for row in hermite:
        lead = next(j for j in range(cols) if row[j] != 0)
        if v[lead] % row[lead] == 0:
            q = v[lead] // row[lead]
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


# ---------------------------------------------------------------------------
# faithfulness certificates

def _abelianized(word, generators):
    index = {g: i for i, g in enumerate(generators)}
    row = [0] * len(generators)
    for sym, exp in word:
        row[index[sym]] += exp
    return row


def rank2_faithfulness_certificate(category, poset):
    """Certify that Psi is injective on every hom-set of a rank-2 category.

    Follows the single-relator argument: two distinct parallel morphisms
    must already differ in the abelianization modulo the relator lattice.
    Returns (True, None) or (False, witness) when the separation fails.
    """
    fan = category.fan
    if fan.dim != 2:
        raise NotRank2("certificate applies to fans in the plane")
    partition = category.partition
    nondeg, witness = check_nondegenerate(fan, partition, poset)
    if not nondeg:
        raise Degenerate("certificate needs a non-degenerate poset", witness=witness)
    pres = picture_group(fan, partition, poset, mode="full")
    rel_rows = [_abelianized(w, pres.generators) for w in pres.relators]
    for (src, dst), indices in sorted(category.hom.items()):
        if len(indices) < 2:
            continue
        words = {i: psi(fan, partition, poset, category.morphisms[i])
                 for i in indices}
        for a, b in combinations(indices, 2):
            diff = [x - y for x, y in zip(_abelianized(words[a], pres.generators),
                                          _abelianized(words[b], pres.generators))]
            if in_row_lattice(diff, rel_rows):
                return False, {"hom": [src, dst], "morphisms": [a, b],
                               "words": [render_word(words[a]),
                                         render_word(words[b])]}
    return True, None


def hom_distinctness_certificate(category, poset, wall_algebra_certified):
    """Faithfulness route for arrangement fans with distinct generators.

    Given the wall-algebra generator-distinctness certificate, it remains
    to check that distinct parallel morphisms from a common source
    representative have distinct interval minima kappa^-.  Returns
    (True, None) or (False, witness).
    """
    if not wall_algebra_certified:
        raise MissingWallAlgebraCertificate(
            "wall-algebra generator certificate must be supplied")
    fan = category.fan
    for (src, dst), indices in sorted(category.hom.items()):
        if len(indices) < 2:
            continue
        source_block = category.partition.blocks[src]
        for sigma in source_block:
            minima = {}
            for i in indices:
                kappa = next((t for s, t in category.morphisms[i].reps
                              if s == sigma), None)
                if kappa is None:
                    # admissibility guarantees a representative per source
                    raise IntervalBroken("morphism lacks a representative at a "
                                         "source member", witness=list(sigma))
                lo = facial_interval(fan, poset, kappa).lower
                if lo in minima:
                    return False, {"hom": [src, dst],
                                   "morphisms": [minima[lo], i],
                                   "source": list(sigma)}
                minima[lo] = i
    return True, None
