"""Dead-end depth: examples, oracle equivalence, cap semantics, regression."""

from __future__ import annotations

import pytest

from conftest import random_table_groups
from deadend.cayley import ball
from deadend.depth import DepthValue, depth, depth_oracle, depth_profile
from deadend.groups import (
    Cyclic,
    Dihedral,
    GeneratingSet,
    IntegerLine,
    Lamplighter,
    standard_gens,
)

ZZ = IntegerLine()


def unit_gens(group):
    return GeneratingSet([group.element(1)])


# -- basic examples -------------------------------------------------------------


def test_line_depth_is_one():
    b = ball(ZZ, unit_gens(ZZ), 10)
    assert depth(b, ZZ.element(5), cap=5) == DepthValue.finite(1)


def test_cyclic_extremal_element_is_infinite():
    c10 = Cyclic(10)
    b = ball(c10, unit_gens(c10), 10)
    assert depth(b, c10.element(5), cap=10) == DepthValue.infinite()


def test_cyclic_two_nonidentity_infinite():
    c2 = Cyclic(2)
    b = ball(c2, unit_gens(c2), 2)
    assert depth(b, c2.element(1), cap=4) == DepthValue.infinite()


def test_identity_depth_finite_one_in_nontrivial_group():
    b = ball(ZZ, unit_gens(ZZ), 5)
    assert depth(b, ZZ.identity(), cap=3) == DepthValue.finite(1)


def test_trivial_group_identity_depth_infinite():
    c1 = Cyclic(1)
    b = ball(c1, GeneratingSet.empty(c1), 3)
    assert depth(b, c1.identity(), cap=3) == DepthValue.infinite()


def test_depth_precondition_ball_too_small():
    b = ball(ZZ, unit_gens(ZZ), 5)
    with pytest.raises(ValueError):
        depth(b, ZZ.element(9), cap=2)  # norm 5 elements fine, 9 unrecorded
    gens2 = GeneratingSet([ZZ.element(2), ZZ.element(3)])
    wide = ball(ZZ, gens2, 4)
    narrow_elem = ZZ.element(11)  # norm 4 under {2,3}
    assert wide.norm(narrow_elem) == 4
    assert depth(wide, narrow_elem, cap=3).is_finite


# -- cap semantics -----------------------------------------------------------------


def test_cap_reports_at_least():
    lamp = Lamplighter()
    gens = standard_gens(lamp)
    b = ball(lamp, gens, 8)
    deep = lamp.element(((-1, 0, 1), 0))
    assert depth(b, deep, cap=10) == DepthValue.finite(3)
    assert depth(b, deep, cap=2) == DepthValue.at_least(2)
    assert depth(b, deep, cap=1) == DepthValue.at_least(1)


def test_monotone_consistency():
    # Finite(k) at a generous cap implies AtLeast(k-1) at cap k-1.
    lamp = Lamplighter()
    gens = standard_gens(lamp)
    b = ball(lamp, gens, 6)
    for x in b.elements():
        dv = depth(b, x, cap=32)
        assert dv.is_finite
        if dv.value > 1:
            assert depth(b, x, cap=dv.value - 1) == DepthValue.at_least(dv.value - 1)


def test_depth_at_least_one_everywhere():
    d6 = Dihedral(6)
    gens = standard_gens(d6)
    b = ball(d6, gens, 12)
    for x in b.elements():
        dv = depth(b, x, cap=20)
        assert dv.is_infinite or dv.value >= 1


# -- profiles ------------------------------------------------------------------------


def test_line_profile_all_depth_one():
    b = ball(ZZ, unit_gens(ZZ), 50)
    prof = depth_profile(b, cap=5)
    for _, _, dv in prof.rows():
        assert dv == DepthValue.finite(1)


def test_cyclic_eleven_profile():
    c11 = Cyclic(11)
    b = ball(c11, unit_gens(c11), 11)
    prof = depth_profile(b, cap=11)
    for payload, norm, dv in prof.rows():
        if norm == 5:
            assert dv.is_infinite
        else:
            assert dv.is_finite and dv.value >= 1


def test_profile_summary_and_csv(tmp_path):
    c10 = Cyclic(10)
    b = ball(c10, unit_gens(c10), 10)
    prof = depth_profile(b, cap=10)
    doc = prof.summary_json()
    assert doc["schema"] == "depth-profile-summary.v1"
    assert doc["elements"] == 10
    assert doc["overall_max"] == "inf"
    assert doc["max_finite_depth"] == 1
    path = tmp_path / "profile.csv"
    prof.to_csv(path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "element,norm,depth"
    assert len(lines) == 11
    assert "5,5,inf" in lines


# -- oracle equivalence ----------------------------------------------------------------


def assert_profiles_equal(profile, oracle):
    left = {p: (n, dv) for p, n, dv in profile.rows()}
    right = {p: (n, dv) for p, n, dv in oracle.rows()}
    assert left == right


@pytest.mark.parametrize("m", [2, 5, 10, 11, 24, 50])
def test_oracle_equivalence_cyclic(m):
    group = Cyclic(m)
    gens = unit_gens(group)
    b = ball(group, gens, m)
    assert_profiles_equal(depth_profile(b, cap=m + 1), depth_oracle(group, gens))


@pytest.mark.parametrize("m", [3, 6, 12])
def test_oracle_equivalence_dihedral(m):
    group = Dihedral(m)
    gens = standard_gens(group)
    b = ball(group, gens, 2 * m)
    assert_profiles_equal(depth_profile(b, cap=2 * m + 1), depth_oracle(group, gens))


def test_oracle_equivalence_random_tables():
    for group, gens in random_table_groups(5, seed=7):
        b = ball(group, gens, group.order())
        assert_profiles_equal(
            depth_profile(b, cap=group.order() + 1), depth_oracle(group, gens)
        )


def test_oracle_rejects_infinite_or_huge():
    with pytest.raises(ValueError):
        depth_oracle(ZZ, unit_gens(ZZ))
    big = Cyclic(20001)
    with pytest.raises(ValueError):
        depth_oracle(big, unit_gens(big))


# -- lamplighter regression ---------------------------------------------------------------


def test_lamplighter_radius8_regression():
    # Pinned after the first brute-force computation: the deepest
    # finite-depth element within radius 8 is the three-lamps-around-home
    # configuration at norm 7, with depth exactly 3.
    lamp = Lamplighter()
    gens = standard_gens(lamp)
    b = ball(lamp, gens, 8)
    assert len(b) == 490
    assert b.sphere_sizes == (1, 3, 6, 12, 22, 40, 71, 123, 212)
    prof = depth_profile(b, cap=64)
    assert prof.max_finite_depth() == 3
    assert [dv.render() for dv in prof.max_depth_by_norm()] == [
        "1", "1", "1", "1", "1", "1", "1", "3", "1",
    ]
    deepest = [
        (p, n) for p, n, dv in prof.rows() if dv == DepthValue.finite(3)
    ]
    assert deepest == [(((-1, 0, 1), 0), 7)]
