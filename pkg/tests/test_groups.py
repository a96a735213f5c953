"""Element algebra: canonical forms, group laws, words, table validation."""

from __future__ import annotations

import itertools
import random

import pytest

from deadend.groups import (
    Cyclic,
    Dihedral,
    GeneratingSet,
    IntegerGrid,
    IntegerLine,
    InvalidElementError,
    Lamplighter,
    MixedGroupError,
    RangeOverflowError,
    TableGroup,
    TableGroupError,
    evaluate_word,
    invert,
    invert_word,
    multiply,
    standard_gens,
)

ZZ = IntegerLine()
C10 = Cyclic(10)
LAMP = Lamplighter()


def cyclic_table(m: int) -> list[list[int]]:
    return [[(i + j) % m for j in range(m)] for i in range(m)]


def _sample_elements(group, rng, count=40):
    if isinstance(group, IntegerLine):
        return [group.element(rng.randrange(-10**6, 10**6)) for _ in range(count)]
    if isinstance(group, IntegerGrid):
        return [
            group.element([rng.randrange(-1000, 1000) for _ in range(group.rank)])
            for _ in range(count)
        ]
    if isinstance(group, Lamplighter):
        out = []
        for _ in range(count):
            lamps = sorted(rng.sample(range(-8, 9), rng.randrange(0, 5)))
            out.append(group.element((tuple(lamps), rng.randrange(-8, 9))))
        return out
    return [group.element(rng.randrange(group.order())) if isinstance(group, (Cyclic, TableGroup))
            else group.element((rng.randrange(group.m), rng.randrange(2)))
            for _ in range(count)]


# -- multiply / invert / evaluate_word ---------------------------------------


def test_multiply_integers():
    assert multiply(ZZ.element(3), ZZ.element(4)) == ZZ.element(7)


def test_multiply_cyclic_residues():
    assert multiply(C10.element(7), C10.element(5)) == C10.element(2)


def test_multiply_lamplighter_inverse_law():
    t = LAMP.element(((), 1))
    assert multiply(t, t.inverse()) == LAMP.identity()


def test_multiply_mixed_groups_rejected():
    with pytest.raises(MixedGroupError):
        multiply(ZZ.element(1), C10.element(1))


def test_invert_examples():
    assert invert(ZZ.element(5)) == ZZ.element(-5)
    reflection = Dihedral(4).element((0, 1))
    assert invert(reflection) == reflection
    assert invert(C10.element(3)) == C10.element(7)


def test_evaluate_word_line():
    gens = GeneratingSet([ZZ.element(1)])
    assert evaluate_word([1, 1, 1, 1, 1], gens) == ZZ.element(5)


def test_evaluate_word_empty_is_identity():
    gens = GeneratingSet([ZZ.element(1)])
    assert evaluate_word([], gens) == ZZ.identity()


def test_evaluate_word_cyclic_inverses():
    gens = GeneratingSet([C10.element(1)])
    assert evaluate_word([-1, -1, -1, -1], gens) == C10.element(6)


def test_evaluate_word_index_out_of_range():
    gens = GeneratingSet([ZZ.element(1)])
    with pytest.raises(ValueError):
        evaluate_word([2], gens)
    with pytest.raises(ValueError):
        evaluate_word([0], gens)


def test_invert_word_reverses_and_flips():
    assert invert_word((1, -2, 3)) == (-3, 2, -1)


# -- group laws ---------------------------------------------------------------


@pytest.mark.parametrize(
    "group",
    [ZZ, IntegerGrid(2), C10, Cyclic(7), Dihedral(5), LAMP],
    ids=lambda g: repr(g),
)
def test_group_laws_sampled(group):
    rng = random.Random(1234)
    elems = _sample_elements(group, rng, count=25)
    identity = group.identity()
    for x in elems:
        assert multiply(x, identity) == x
        assert multiply(identity, x) == x
        assert multiply(x, x.inverse()) == identity
        assert x.inverse().inverse() == x
    for _ in range(120):
        x, y, z = rng.choice(elems), rng.choice(elems), rng.choice(elems)
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


def test_table_group_laws_exhaustive():
    group = TableGroup(cyclic_table(12), identity_id=0)
    elems = list(group.elements())
    for x, y, z in itertools.product(elems, repeat=3):
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
    # payload-level sweep at the order-64 corpus ceiling
    big = TableGroup(cyclic_table(64), identity_id=0)
    t = big.table
    for x, y, z in itertools.product(range(64), repeat=3):
        assert t[t[x][y]][z] == t[x][t[y][z]]


def test_dihedral_relations():
    d = Dihedral(6)
    r = d.element((1, 0))
    s = d.element((0, 1))
    rk = d.identity()
    for _ in range(6):
        rk = multiply(rk, r)
    assert rk == d.identity()
    assert multiply(s, s) == d.identity()
    # s r s = r^-1
    assert multiply(multiply(s, r), s) == r.inverse()


def test_lamplighter_toggle_and_shift():
    t = LAMP.element(((), 1))
    a = LAMP.element(((0,), 0))
    # walk right, toggle, walk back: lamp lit at position 1, cursor home
    g = multiply(multiply(t, a), t.inverse())
    assert g == LAMP.element(((1,), 0))
    assert multiply(a, a) == LAMP.identity()


# -- canonical encodings -------------------------------------------------------


@pytest.mark.parametrize(
    "group",
    [ZZ, IntegerGrid(3), C10, Dihedral(7), LAMP, TableGroup(cyclic_table(6), 0)],
    ids=lambda g: repr(g),
)
def test_canonical_encoding_unique(group):
    rng = random.Random(7)
    elems = _sample_elements(group, rng, count=30)
    for x in elems:
        for y in elems:
            assert (x == y) == (x.encode() == y.encode())
        # round trip through bytes
        assert group.decode_payload(x.encode()) == x.payload


def test_lamplighter_canonical_sorted():
    g = LAMP.element(((5, -2, 3), 0))
    assert g.payload == ((-2, 3, 5), 0)
    with pytest.raises(InvalidElementError):
        LAMP.element(((1, 1), 0))


def test_cyclic_canonicalizes_residues():
    assert C10.element(76).payload == 6
    assert C10.element(-4).payload == 6


def test_invalid_payloads_rejected():
    with pytest.raises(InvalidElementError):
        ZZ.element("3")
    with pytest.raises(InvalidElementError):
        IntegerGrid(2).element((1,))
    with pytest.raises(InvalidElementError):
        Dihedral(4).element((1, 2))
    with pytest.raises(InvalidElementError):
        TableGroup(cyclic_table(4), 0).element(5)


# -- overflow -------------------------------------------------------------------


def test_integer_overflow_is_hard_error():
    small = IntegerLine(bits=8)
    x = small.element(100)
    with pytest.raises(RangeOverflowError):
        multiply(x, x)
    with pytest.raises(RangeOverflowError):
        small.element(1000)


def test_lamplighter_overflow():
    tiny = Lamplighter(bits=8)
    far = tiny.element(((), 100))
    with pytest.raises(RangeOverflowError):
        multiply(far, far)


# -- generating sets --------------------------------------------------------------


def test_generating_set_rejects_identity_and_dups():
    with pytest.raises(ValueError):
        GeneratingSet([ZZ.element(0)])
    with pytest.raises(ValueError):
        GeneratingSet([ZZ.element(2), ZZ.element(2)])
    with pytest.raises(MixedGroupError):
        GeneratingSet([ZZ.element(1), C10.element(1)])


def test_generating_set_symmetrized_letters_order():
    gens = GeneratingSet([ZZ.element(2), ZZ.element(3)])
    assert gens.symmetrized_letters() == ((1, 2), (-1, -2), (2, 3), (-2, -3))


def test_standard_gens():
    assert [e.payload for e in standard_gens(ZZ)] == [1]
    assert [e.payload for e in standard_gens(Cyclic(5))] == [1]
    assert [e.payload for e in standard_gens(Dihedral(4))] == [(1, 0), (0, 1)]
    assert [e.payload for e in standard_gens(LAMP)] == [((), 1), ((0,), 0)]
    grid = IntegerGrid(2)
    assert [e.payload for e in standard_gens(grid)] == [(1, 0), (0, 1)]


# -- table group validation --------------------------------------------------------


def brute_force_associative(table) -> bool:
    m = len(table)
    return all(
        table[table[x][y]][z] == table[x][table[y][z]]
        for x in range(m)
        for y in range(m)
        for z in range(m)
    )


def brute_force_is_group(table, identity) -> bool:
    """Cubic-time oracle for the full set of group axioms."""
    m = len(table)
    ids = set(range(m))
    if any(set(row) != ids for row in table):
        return False
    if any({table[y][x] for y in range(m)} != ids for x in range(m)):
        return False
    if any(table[identity][x] != x or table[x][identity] != x for x in range(m)):
        return False
    if any(identity not in table[x] for x in range(m)):
        return False
    return brute_force_associative(table)


def test_table_group_valid_tables_load():
    for m in (1, 2, 3, 8):
        group = TableGroup(cyclic_table(m), identity_id=0)
        assert group.order() == m


def test_table_group_beyond_exhaustive_limit_uses_sampling():
    m = 520  # above the conclusive-check limit, validated by sampling
    group = TableGroup(cyclic_table(m), identity_id=0)
    assert group.order() == m
    assert multiply(group.element(300), group.element(400)).payload == 180


def test_table_group_rejects_bad_identity():
    with pytest.raises(TableGroupError):
        TableGroup(cyclic_table(4), identity_id=1)


def test_table_group_rejects_non_latin():
    table = [[0, 1], [0, 1]]
    with pytest.raises(TableGroupError):
        TableGroup(table, identity_id=0)


def test_table_group_rejects_non_associative():
    # A Latin square with two-sided identity that is not a group:
    # the smallest such quasigroups have order 5.
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]
    assert not brute_force_associative(table)
    with pytest.raises(TableGroupError):
        TableGroup(table, identity_id=0)


def test_table_validation_agrees_with_brute_force_oracle():
    # Relabeled group tables must load; perturbed ones must be rejected
    # exactly when the cubic oracle rejects them.
    rng = random.Random(99)
    for trial in range(40):
        m = rng.choice([4, 5, 6, 8])
        table = cyclic_table(m)
        identity = 0
        if trial % 2 == 0:
            # relabel through a random bijection: still a group
            perm = list(range(m))
            rng.shuffle(perm)
            inv = [0] * m
            for i, p in enumerate(perm):
                inv[p] = i
            table = [[perm[table[inv[i]][inv[j]]] for j in range(m)] for i in range(m)]
            identity = perm[0]
        else:
            # swap two non-identity rows: no longer a group
            i, j = rng.sample(range(1, m), 2)
            table[i], table[j] = table[j], table[i]
        expected = brute_force_is_group(table, identity)
        try:
            TableGroup(table, identity_id=identity)
            accepted = True
        except TableGroupError:
            accepted = False
        assert accepted == expected, f"trial {trial}: oracle {expected}, loader {accepted}"
