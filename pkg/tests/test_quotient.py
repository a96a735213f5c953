"""Quotient maps, diameters, counting bound, and quotient search."""

from __future__ import annotations

import itertools
import random

import pytest

from deadend.groups import Cyclic, Dihedral, GeneratingSet, IntegerLine, Lamplighter, standard_gens
from deadend.quotient import (
    FamilyExhaustedError,
    HomomorphismError,
    QuotientError,
    SurjectivityError,
    check_homomorphism,
    counting_bound_check,
    cyclic_family,
    cyclic_quotient,
    diameter,
    find_quotient,
    word_quotient,
)

ZZ = IntegerLine()
UNIT = GeneratingSet([ZZ.element(1)])


def brute_force_diameter(group, gens):
    """Independent oracle: expand products length by length until closure."""
    steps = [gens.letter_payload(letter) for letter, _ in gens.symmetrized_letters()]
    seen = {group.identity_payload()}
    current = set(seen)
    length = 0
    while True:
        nxt = set()
        for x in current:
            for s in steps:
                y = group.mul_payload(x, s)
                if y not in seen:
                    nxt.add(y)
        if not nxt:
            return length
        length += 1
        seen |= nxt
        current = nxt


# -- apply ---------------------------------------------------------------------


def test_native_apply_examples():
    pi = cyclic_quotient(UNIT, 10)
    assert pi.apply(ZZ.element(76)).payload == 6
    assert pi.apply(ZZ.identity()) == Cyclic(10).identity()
    assert pi.apply(ZZ.element(5)).payload == 5


def test_word_apply_requires_hint():
    target = Cyclic(6)
    pi = word_quotient(UNIT, target, [target.element(1)])
    with pytest.raises(QuotientError):
        pi.apply(ZZ.element(3))
    assert pi.apply(ZZ.element(3), word_hint=[1, 1, 1]).payload == 3


def test_word_apply_rejects_bad_hint():
    target = Cyclic(6)
    pi = word_quotient(UNIT, target, [target.element(1)])
    with pytest.raises(QuotientError):
        pi.apply(ZZ.element(3), word_hint=[1, 1])


def test_apply_constant_across_words():
    target = Cyclic(6)
    pi = word_quotient(UNIT, target, [target.element(1)])
    rng = random.Random(11)
    for value in range(-6, 7):
        base = [1] * value if value >= 0 else [-1] * (-value)
        padded = list(base)
        for _ in range(rng.randrange(1, 4)):
            pos = rng.randrange(len(padded) + 1)
            padded[pos:pos] = [1, -1]
        first = pi.apply(ZZ.element(value), word_hint=base)
        second = pi.apply(ZZ.element(value), word_hint=padded)
        assert first == second


def test_surjectivity_enforced():
    with pytest.raises(SurjectivityError):
        cyclic_quotient(GeneratingSet([ZZ.element(2)]), 10)
    # 2 generates C_9 (gcd 1), so this is fine
    cyclic_quotient(GeneratingSet([ZZ.element(2)]), 9)


def test_homomorphism_check_native_and_word():
    check_homomorphism(cyclic_quotient(UNIT, 10))
    target = Cyclic(6)
    check_homomorphism(word_quotient(UNIT, target, [target.element(1)]))


def test_homomorphism_check_rejects_bad_images():
    # Lamplighter -> C_3 sending the shift to 1 and the toggle to 1 is not
    # a homomorphism (the toggle is an involution, 1 has order 3).
    lamp = Lamplighter()
    gens = standard_gens(lamp)
    target = Cyclic(3)
    pi = word_quotient(gens, target, [target.element(1), target.element(1)])
    with pytest.raises(HomomorphismError):
        check_homomorphism(pi, max_word_len=4)


def test_lamp_parity_quotient_is_well_defined():
    # Lamplighter -> C_2 by lamp-count parity: shift -> 0, toggle -> 1.
    lamp = Lamplighter()
    gens = standard_gens(lamp)
    target = Cyclic(2)
    pi = word_quotient(gens, target, [target.element(0), target.element(1)])
    check_homomorphism(pi, max_word_len=6)
    image_gens, section = pi.image_genset()
    assert [e.payload for e in image_gens.entries] == [1]
    assert section == (1,)


# -- diameter --------------------------------------------------------------------


def test_diameter_cyclic_examples():
    for m, expected in [(10, 5), (11, 5), (243, 121)]:
        group = Cyclic(m)
        report = diameter(group, GeneratingSet([group.element(1)]))
        assert report.diameter == expected
        assert report.order == m
        assert sum(report.sphere_sizes) == m
    report = diameter(Cyclic(10), GeneratingSet([Cyclic(10).element(1)]))
    assert report.witness.payload == 5


def test_diameter_matches_brute_force():
    rng = random.Random(3)
    for m in range(2, 30):
        group = Cyclic(m)
        payloads = [1]
        if m > 4 and rng.random() < 0.5:
            payloads.append(rng.randrange(2, m - 1))
        gens = GeneratingSet([group.element(p) for p in dict.fromkeys(payloads)])
        try:
            report = diameter(group, gens)
        except SurjectivityError:
            continue
        assert report.diameter == brute_force_diameter(group, gens)
    for m in range(3, 9):
        group = Dihedral(m)
        gens = standard_gens(group)
        report = diameter(group, gens)
        assert report.diameter == brute_force_diameter(group, gens)


def test_diameter_errors_when_gens_do_not_generate():
    group = Cyclic(10)
    with pytest.raises(SurjectivityError):
        diameter(group, GeneratingSet([group.element(2)]))


def test_diameter_witness_max_length_invariant():
    report = diameter(Cyclic(17), GeneratingSet([Cyclic(17).element(1)]))
    assert report.sphere_sizes[report.diameter] >= 1
    assert len(report.sphere_sizes) == report.diameter + 1


def test_diameter_report_json():
    report = diameter(Cyclic(10), GeneratingSet([Cyclic(10).element(1)]))
    doc = report.to_json()
    assert doc["schema"] == "diameter-report.v1"
    assert doc["order"] == 10
    assert doc["diameter"] == 5
    assert doc["witness"] == "5"


# -- counting bound -----------------------------------------------------------------


def test_counting_bound_examples():
    r10 = diameter(Cyclic(10), GeneratingSet([Cyclic(10).element(1)]))
    assert counting_bound_check(r10, a=1)
    r3 = diameter(Cyclic(3), GeneratingSet([Cyclic(3).element(1)]))
    assert r3.diameter == 1
    assert counting_bound_check(r3, a=1)
    r243 = diameter(Cyclic(243), GeneratingSet([Cyclic(243).element(1)]))
    assert counting_bound_check(r243, a=1)


def test_counting_bound_as_diameter_lower_bound_sampled():
    # floor(m/2) >= log_3(m), equivalently 3^floor(m/2) >= m, for the
    # cyclic family; exhaustive sweep happens in the acceptance suite.
    for m in itertools.chain(range(2, 200), [243, 1000, 3**10]):
        assert 3 ** (m // 2) >= m


# -- find_quotient --------------------------------------------------------------------


def test_find_quotient_paper_safe():
    pi, report = find_quotient(cyclic_family(UNIT), n_prime=5, mode="paper_safe")
    assert pi.target.modulus == 243
    assert report.diameter == 121
    assert report.diameter >= 5


def test_find_quotient_greedy():
    pi, report = find_quotient(cyclic_family(UNIT), n_prime=5, mode="greedy")
    assert pi.target.modulus == 10
    assert report.diameter == 5


def test_find_quotient_greedy_minimal_target():
    pi, report = find_quotient(cyclic_family(UNIT), n_prime=1, mode="greedy")
    assert pi.target.modulus == 2
    assert report.diameter == 1


def test_find_quotient_family_exhausted():
    with pytest.raises(FamilyExhaustedError):
        find_quotient(cyclic_family(UNIT, stop=5), n_prime=50, mode="greedy")


def test_find_quotient_modes_meet_target():
    for mode in ("paper_safe", "greedy"):
        for n_prime in (1, 2, 3, 4):
            _, report = find_quotient(cyclic_family(UNIT), n_prime, mode=mode)
            assert report.diameter >= n_prime


def test_cyclic_family_skips_non_surjective():
    gens = GeneratingSet([ZZ.element(2)])
    members = list(cyclic_family(gens, stop=10))
    assert [pi.target.modulus for pi in members] == [3, 5, 7, 9]
