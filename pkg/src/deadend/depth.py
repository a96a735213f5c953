"""Dead-end depth of group elements, ball-wide profiles, and a brute-force oracle.

The depth of g is its Cayley-graph distance to the complement of the
closed ball of radius norm(g) about the identity.  Working inside a
precomputed ball of radius >= norm(g) is enough: a path leaving that
closed ball hits the complement at its first exit, and any element absent
from the ball necessarily lies in the complement.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterator, Optional, Union

from .cayley import Ball, Budget, DEFAULT_BUDGET, ball
from .groups import GeneratingSet, Group, GroupElement

__all__ = [
    "DepthValue",
    "DepthProfile",
    "depth",
    "depth_profile",
    "depth_oracle",
    "ORACLE_ORDER_LIMIT",
]

ORACLE_ORDER_LIMIT = 10_000

_FINITE = "finite"
_AT_LEAST = "at_least"
_INFINITE = "infinite"


@dataclass(frozen=True)
class DepthValue:
    """Finite(k), AtLeast(k) (search capped), or Infinite (empty complement)."""

    kind: str
    value: Optional[int] = None

    @classmethod
    def finite(cls, k: int) -> "DepthValue":
        if k < 1:
            raise ValueError(f"finite depth must be >= 1, got {k}")
        return cls(_FINITE, k)

    @classmethod
    def at_least(cls, k: int) -> "DepthValue":
        return cls(_AT_LEAST, k)

    @classmethod
    def infinite(cls) -> "DepthValue":
        return cls(_INFINITE)

    @property
    def is_finite(self) -> bool:
        return self.kind == _FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == _INFINITE

    @property
    def is_truncated(self) -> bool:
        return self.kind == _AT_LEAST

    def sort_key(self) -> tuple[int, int]:
        if self.kind == _INFINITE:
            return (2, 0)
        if self.kind == _AT_LEAST:
            return (1, self.value)
        return (0, self.value)

    def render(self) -> str:
        if self.kind == _INFINITE:
            return "inf"
        if self.kind == _AT_LEAST:
            return f">={self.value}"
        return str(self.value)

    def __str__(self) -> str:
        return self.render()


def depth(b: Ball, g: GroupElement, cap: int) -> DepthValue:
    """Dead-end depth of g, searched outward up to ``cap`` layers.

    Requires b.radius >= norm(g) so that membership in the closed ball of
    radius norm(g) is decidable from b alone.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    norm_g = b.norm(g)
    if norm_g is None:
        raise ValueError("element not recorded in the ball")
    if b.radius < norm_g:
        raise ValueError(
            f"ball radius {b.radius} is smaller than norm {norm_g}; depth undecidable"
        )
    group = b.group
    mul = group.mul_payload
    letters = b.gens.symmetrized_letters()
    lookup = b.norm_payload
    visited = {g.payload}
    layer = [g.payload]
    for dist in range(1, cap + 1):
        nxt = []
        for x in layer:
            for _, step in letters:
                y = mul(x, step)
                if y in visited:
                    continue
                visited.add(y)
                norm_y = lookup(y)
                if norm_y is None or norm_y > norm_g:
                    return DepthValue.finite(dist)
                nxt.append(y)
        if not nxt:
            # Whole group explored without leaving the closed ball.
            return DepthValue.infinite()
        layer = nxt
    return DepthValue.at_least(cap)


class DepthProfile:
    """Per-element depth over a closed ball, in BFS discovery order."""

    def __init__(self, group: Group, gens: GeneratingSet, radius: int,
                 entries: dict, cap: int):
        self.group = group
        self.gens = gens
        self.radius = radius
        self.cap = cap
        self._entries = entries  # payload -> (norm, DepthValue)

    def __len__(self) -> int:
        return len(self._entries)

    def depth_of(self, x: GroupElement) -> DepthValue:
        return self._entries[x.payload][1]

    def norm_of(self, x: GroupElement) -> int:
        return self._entries[x.payload][0]

    def rows(self) -> Iterator[tuple[Any, int, DepthValue]]:
        for payload, (norm, dv) in self._entries.items():
            yield payload, norm, dv

    def max_depth_by_norm(self) -> list[DepthValue]:
        out: list[Optional[DepthValue]] = [None] * (self.radius + 1)
        for _, (norm, dv) in self._entries.items():
            cur = out[norm]
            if cur is None or dv.sort_key() > cur.sort_key():
                out[norm] = dv
        return [dv for dv in out if dv is not None]

    def overall_max(self) -> DepthValue:
        return max((dv for _, (_, dv) in self._entries.items()), key=DepthValue.sort_key)

    def max_finite_depth(self) -> Optional[int]:
        values = [dv.value for _, (_, dv) in self._entries.items() if dv.is_finite]
        return max(values) if values else None

    def to_csv(self, path: Union[str, Path]) -> None:
        fmt = self.group.format_payload
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["element", "norm", "depth"])
            for payload, (norm, dv) in self._entries.items():
                writer.writerow([fmt(payload), norm, dv.render()])

    def summary_json(self) -> dict:
        return {
            "schema": "depth-profile-summary.v1",
            "radius": self.radius,
            "cap": self.cap,
            "elements": len(self._entries),
            "max_depth_by_norm": [dv.render() for dv in self.max_depth_by_norm()],
            "max_finite_depth": self.max_finite_depth(),
            "overall_max": self.overall_max().render(),
        }


def depth_profile(b: Ball, cap: int) -> DepthProfile:
    """Depth of every element recorded in the ball (cap per element)."""
    entries: dict = {}
    for payload in b.payloads():
        x = GroupElement(b.group, payload)
        entries[payload] = (b.norm_payload(payload), depth(b, x, cap))
    return DepthProfile(b.group, b.gens, b.radius, entries, cap)


def depth_oracle(
    group: Group, gens: GeneratingSet, budget: Budget = DEFAULT_BUDGET
) -> DepthProfile:
    """Ground-truth depth profile for a small finite group.

    Computes all-pairs Cayley distances by running a fresh unrestricted
    BFS from every element; the depth of g is the least distance to any
    element of strictly larger norm.  Independent of depth()'s
    closed-ball search, hence usable as an oracle against it.
    """
    order = group.order()
    if order is None:
        raise ValueError("the brute-force oracle requires a finite group")
    if order > ORACLE_ORDER_LIMIT:
        raise ValueError(f"group order {order} exceeds oracle limit {ORACLE_ORDER_LIMIT}")
    b = ball(group, gens, radius=order, budget=budget)
    if len(b) != order:
        raise ValueError(f"generators reach only {len(b)} of {order} elements")
    norms = {payload: b.norm_payload(payload) for payload in b.payloads()}
    mul = group.mul_payload
    letters = gens.symmetrized_letters()
    entries: dict = {}
    for payload in b.payloads():
        norm_g = norms[payload]
        # Complete distance map from this element, no ball restriction.
        dist = {payload: 0}
        layer = [payload]
        d = 0
        while layer:
            d += 1
            nxt = []
            for x in layer:
                for _, step in letters:
                    y = mul(x, step)
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
            layer = nxt
        candidates = [dx for y, dx in dist.items() if norms[y] > norm_g]
        if candidates:
            entries[payload] = (norm_g, DepthValue.finite(min(candidates)))
        else:
            entries[payload] = (norm_g, DepthValue.infinite())
    return DepthProfile(group, gens, b.radius, entries, cap=order + 1)
