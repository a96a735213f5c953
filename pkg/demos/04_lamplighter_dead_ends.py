#!/usr/bin/env python3
"""Dead ends in the lamplighter group.

The lamplighter group (an infinite wreath product: a line of lamps with
a moving cursor) is the classical home of dead ends.  Light the three
lamps around the origin and walk home: any further generator step only
revisits ground already inside the ball, so the element is a dead end,
and here its depth is 3.
"""

from deadend import Lamplighter, ball, depth, depth_profile, standard_gens


def main():
    lamp = Lamplighter()
    gens = standard_gens(lamp)  # t shifts the cursor, a toggles the lamp under it

    print("== ball growth under {t, a} ==")
    b = ball(lamp, gens, 8)
    print(f"radius 8 ball: {len(b)} elements, spheres {b.sphere_sizes}")

    print()
    print("== the deepest element within radius 8 ==")
    prof = depth_profile(b, cap=64)
    print(f"max depth per norm: {[dv.render() for dv in prof.max_depth_by_norm()]}")
    deep = lamp.element(((-1, 0, 1), 0))
    print(f"element {deep}: norm {b.norm(deep)}, depth {depth(b, deep, cap=64)}")
    word = b.geodesic(deep)
    print("one geodesic: " + " ".join(gens.letter_label(letter) for letter in word))
    print("every neighbor of this element stays at norm <= 7; the nearest")
    print("norm-8 element is three steps away")


if __name__ == "__main__":
    main()
