#!/usr/bin/env python3
"""Tour of word metrics: balls, norms, geodesics, growth.

The word norm of a group element is the length of the shortest way to
spell it with generators and their inverses; the ball enumeration below
computes it exactly by breadth-first search over the implicit Cayley
graph.
"""

from deadend import GeneratingSet, IntegerGrid, IntegerLine, ball, evaluate_word


def main():
    zz = IntegerLine()
    unit = GeneratingSet([zz.element(1)])

    print("== the integers with generator {1} ==")
    b = ball(zz, unit, 5)
    print(f"ball of radius 5 holds {len(b)} elements: " +
          ", ".join(str(x) for x in b.elements()))
    print(f"sphere sizes: {b.sphere_sizes}  (two new elements per radius)")

    print()
    print("== the integers with generators {2, 3} ==")
    gens = GeneratingSet([zz.element(2), zz.element(3)])
    b = ball(zz, gens, 4)
    one = zz.element(1)
    word = b.geodesic(one)
    letters = " ".join(gens.letter_label(letter) for letter in word)
    print(f"norm of 1 is {b.norm(one)}; a geodesic spelling: {letters}")
    print(f"check: the word evaluates to {evaluate_word(word, gens)}")
    print(f"growth under {{2,3}}: {b.sphere_sizes}")

    print()
    print("== the rank-2 grid ==")
    grid = IntegerGrid(2)
    gens = GeneratingSet([grid.element((1, 0)), grid.element((0, 1))], ["x", "y"])
    b = ball(grid, gens, 6)
    print(f"sphere sizes (taxicab circles): {b.sphere_sizes}")
    corner = grid.element((3, -2))
    print(f"norm of (3,-2): {b.norm(corner)}  geodesic: "
          + " ".join(gens.letter_label(letter) for letter in b.geodesic(corner)))


if __name__ == "__main__":
    main()
