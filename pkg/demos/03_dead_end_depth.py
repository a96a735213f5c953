#!/usr/bin/env python3
"""Dead-end depth: how far must you walk before you can leave the ball?

An element g is a dead end when no single generator step increases its
distance from the identity.  Its depth is the Cayley-graph distance from
g to the complement of the closed ball of radius norm(g).  Ordinary
elements have depth 1; extremal elements of a finite group can never
escape, so their depth is infinite.
"""

from deadend import (
    Cyclic,
    Dihedral,
    GeneratingSet,
    IntegerLine,
    ball,
    depth,
    depth_oracle,
    depth_profile,
    standard_gens,
)


def main():
    zz = IntegerLine()
    unit = GeneratingSet([zz.element(1)])

    print("== the integers: every element escapes immediately ==")
    b = ball(zz, unit, 20)
    for g in (0, 1, 7, 20):
        print(f"depth({g:>2}) = {depth(b, zz.element(g), cap=5)}")

    print()
    print("== a finite group: the far side is a bottomless pocket ==")
    c10 = Cyclic(10)
    cb = ball(c10, GeneratingSet([c10.element(1)]), 10)
    for g in (1, 4, 5):
        print(f"C_10 depth({g}) = {depth(cb, c10.element(g), cap=10)}")

    print()
    print("== profile of a dihedral group, cross-checked by brute force ==")
    d6 = Dihedral(6)
    gens = standard_gens(d6)
    prof = depth_profile(ball(d6, gens, 12), cap=13)
    oracle = depth_oracle(d6, gens)
    agree = all(
        prof.depth_of(x) == oracle.depth_of(x)
        for x in (d6.element(p) for p, _, _ in prof.rows())
    )
    print(f"max depth by norm: {[dv.render() for dv in prof.max_depth_by_norm()]}")
    print(f"profile agrees with the all-pairs oracle: {agree}")


if __name__ == "__main__":
    main()
