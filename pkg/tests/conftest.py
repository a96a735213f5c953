"""Shared test helpers: random permutation-closure table groups."""

from __future__ import annotations

import random

from deadend.groups import GeneratingSet, TableGroup


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply q first, then p
    return tuple(p[q[i]] for i in range(len(p)))


def random_table_groups(count: int, max_order: int = 64, seed: int = 2024,
                        degree: int = 4, n_gens: int = 3):
    """Deterministic stream of (TableGroup, GeneratingSet) pairs.

    Each group is the closure of a few random permutations; closures
    larger than max_order are skipped, so the stream is reproducible for
    a fixed seed.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        perms = []
        for _ in range(n_gens):
            p = list(range(degree))
            rng.shuffle(p)
            perms.append(tuple(p))
        identity = tuple(range(degree))
        elements = [identity]
        index = {identity: 0}
        frontier = [identity]
        too_big = False
        while frontier and not too_big:
            nxt = []
            for x in frontier:
                for p in perms:
                    y = _compose(x, p)
                    if y not in index:
                        if len(elements) >= max_order:
                            too_big = True
                            break
                        index[y] = len(elements)
                        elements.append(y)
                        nxt.append(y)
                if too_big:
                    break
            frontier = nxt
        if too_big:
            continue
        m = len(elements)
        table = [[index[_compose(elements[i], elements[j])] for j in range(m)] for i in range(m)]
        group = TableGroup(table, identity_id=0, name=f"perm{degree}-{len(out)}")
        gen_ids = sorted({index[p] for p in perms} - {0})
        if not gen_ids:
            continue
        gens = GeneratingSet([group.element(i) for i in gen_ids])
        out.append((group, gens))
    return out
