import pytest

from partfan.errors import (
    EnumerationLimitExceeded,
    PossibleIdentViolation,
    SeedNotPossible,
)
from partfan.fan import build_fan
from partfan.partition import (
    admissible_closure,
    enumerate_admissible,
    finest_partition,
    from_blocks,
    is_admissible,
    join,
    meet,
    partition_from_json,
    potential_identifications,
    refines,
)

HZB_P1_BLOCKS = (((),), ((0,),), ((1,), (3,)), ((2,),),
                 ((0, 1), (0, 3)), ((1, 2), (2, 3)))


def test_potentials_hirzebruch(hzb_fan):
    ident = potential_identifications(hzb_fan)
    assert ident.classes == (
        ((),), ((0,),), ((1,), (3,)), ((2,),),
        ((0, 1), (0, 3), (1, 2), (2, 3)),
    )


def test_potentials_square(square_fan):
    ident = potential_identifications(square_fan)
    assert ident.classes == (
        ((),), ((0,), (2,)), ((1,), (3,)),
        ((0, 1), (0, 3), (1, 2), (2, 3)),
    )


def test_potentials_quadrant_all_singletons():
    quadrant = build_fan(2, [(1, 0), (0, 1)], [(0, 1)])
    ident = potential_identifications(quadrant)
    assert all(len(c) == 1 for c in ident.classes)


def test_is_admissible_p1(hzb_fan, p1_partition):
    assert p1_partition.blocks == HZB_P1_BLOCKS
    ok, witness = is_admissible(hzb_fan, p1_partition)
    assert ok and witness is None


def test_is_admissible_witness(hzb_fan):
    bad = from_blocks(hzb_fan, [[(1,), (3,)]])
    ok, witness = is_admissible(hzb_fan, bad)
    assert not ok
    # sigma2, sigma4, tau2, tau1 in the labelling of the pictures
    assert witness == ((1,), (3,), (0, 1), (0, 3))


def test_is_admissible_finest(square_fan):
    ok, witness = is_admissible(square_fan, finest_partition(square_fan))
    assert ok


def test_is_admissible_rejects_impossible(square_fan):
    bad = from_blocks(square_fan, [[(0,), (1,)]])
    with pytest.raises(PossibleIdentViolation):
        is_admissible(square_fan, bad)


def test_closure_p1(hzb_fan, p1_partition):
    assert admissible_closure(hzb_fan, [((1,), (3,))]) == p1_partition


def test_closure_torus(square_fan, torus_partition):
    chambers = set(square_fan.chambers())
    block = next(b for b in torus_partition.blocks if set(b) == chambers)
    assert len(block) == 4


def test_closure_empty_seed(square_fan):
    assert admissible_closure(square_fan, []) == finest_partition(square_fan)


def test_closure_bad_seed(square_fan):
    with pytest.raises(SeedNotPossible):
        admissible_closure(square_fan, [((0,), (1,))])


def test_lattice_bounds(hzb_fan, p1_partition):
    finest = finest_partition(hzb_fan)
    assert meet(p1_partition, finest) == finest
    assert join(p1_partition, finest) == p1_partition


def test_join_reaches_coarsest(hzb_fan):
    c1 = admissible_closure(hzb_fan, [((1,), (3,))])
    c2 = admissible_closure(hzb_fan, [((0, 3), (2, 3))])
    coarsest = potential_identifications(hzb_fan).partition
    assert join(c1, c2) == coarsest


def test_meet_blockwise(square_fan, torus_partition):
    c = admissible_closure(square_fan, [((0,), (2,))])
    coarsest = potential_identifications(square_fan).partition
    assert meet(coarsest, c) == c
    assert refines(c, torus_partition)


def test_refines_is_partial_order(square_admissible):
    finest = next(p for p in square_admissible
                  if all(len(b) == 1 for b in p.blocks))
    coarsest = max(square_admissible, key=lambda p: -len(p.blocks))
    for p in square_admissible:
        assert refines(finest, p)
        assert refines(p, coarsest)
        assert refines(p, p)
    for p in square_admissible:
        for q in square_admissible:
            if refines(p, q) and refines(q, p):
                assert p == q


def test_enumerate_counts(square_admissible, hzb_admissible):
    assert len(square_admissible) == 20
    assert len(hzb_admissible) == 17


def test_enumerate_limit(square_fan):
    with pytest.raises(EnumerationLimitExceeded):
        enumerate_admissible(square_fan, limit=4)


def test_coarsest_is_admissible_everywhere(square_fan, hzb_fan, three_lines_fan):
    for fan in (square_fan, hzb_fan, three_lines_fan):
        coarsest = potential_identifications(fan).partition
        ok, witness = is_admissible(fan, coarsest)
        assert ok, witness


def test_meet_join_closure(square_fan, square_admissible):
    for p in square_admissible:
        for q in square_admissible:
            for r in (meet(p, q), join(p, q)):
                ok, witness = is_admissible(square_fan, r)
                assert ok, witness
                assert refines(meet(p, q), p) and refines(meet(p, q), q)
                assert refines(p, join(p, q)) and refines(q, join(p, q))


def test_closure_minimality(hzb_fan, hzb_admissible):
    seed = ((1,), (3,))
    closure = admissible_closure(hzb_fan, [seed])
    for p in hzb_admissible:
        if p.same_block(*seed):
            assert refines(closure, p)


def test_partition_json_roundtrip(square_fan, torus_partition):
    data = torus_partition.to_json()
    again = partition_from_json(square_fan, data)
    assert again == torus_partition


def test_partition_json_defaults_singletons(square_fan):
    p = partition_from_json(square_fan, {"blocks": [[[0], [2]]]})
    assert p.same_block((0,), (2,))
    assert not p.same_block((0, 1), (0, 3))


def test_fan_mismatch(square_fan, hzb_fan):
    from partfan.errors import FanMismatch

    p = finest_partition(square_fan)
    q = finest_partition(hzb_fan)
    with pytest.raises(FanMismatch):
        meet(p, q)


def test_possible_identification_is_equivalence(square_fan, hzb_fan,
                                                three_lines_fan):
    from partfan.partition import _possibly_identified

    for fan in (square_fan, hzb_fan, three_lines_fan):
        cones = fan.cones
        table = {(a, b): _possibly_identified(fan, a, b)
                 for a in cones for b in cones}
        for a in cones:
            assert table[(a, a)]
            for b in cones:
                assert table[(a, b)] == table[(b, a)]
                for c in cones:
                    if table[(a, b)] and table[(b, c)]:
                        assert table[(a, c)]
