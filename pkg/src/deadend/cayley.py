"""Exact closed balls, word norms, and geodesics in Cayley graphs.

The ball BFS explores the implicit Cayley graph of a group under the
symmetrized view of a generating set.  BFS order is deterministic:
frontier FIFO, neighbors per generator in listed order, positive sign
before negative.  Distances are exact; parent letters make geodesic
recovery O(length).
"""

from __future__ import annotations

import csv
import hashlib
import struct
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterator, Optional, Union

from .groups import GeneratingSet, Group, GroupElement, Word
from .serialize import dumps, genset_to_json, group_to_json

__all__ = [
    "Budget",
    "DEFAULT_BUDGET",
    "Ball",
    "BudgetExceededError",
    "ball",
    "ball_cached",
    "norm",
    "geodesic",
    "save_ball",
    "load_ball",
    "ball_content_hash",
    "ball_to_csv",
]

CACHE_MAGIC = b"DECB"
CACHE_VERSION = 1


@dataclass(frozen=True)
class Budget:
    """Resource ceilings for ball construction."""

    max_elements: int = 10_000_000
    max_radius: int = 10_000
    max_seconds: float = 600.0

    def __post_init__(self):
        if self.max_elements <= 0 or self.max_radius <= 0 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = Budget()


class BudgetExceededError(Exception):
    """Raised when a ball computation hits its budget; partial work is discarded."""

    def __init__(self, message: str, radius_reached: int, elements_seen: int):
        super().__init__(message)
        self.radius_reached = radius_reached
        self.elements_seen = elements_seen


class Ball:
    """Closed ball about the identity: exact distances plus parent links.

    Immutable once built; iteration follows BFS discovery order.
    """

    def __init__(
        self,
        group: Group,
        gens: GeneratingSet,
        radius: int,
        dist: dict,
        parent: dict,
        sphere_sizes: tuple[int, ...],
    ):
        self.group = group
        self.gens = gens
        self.radius = radius
        self._dist = dist
        self._parent = parent
        self.sphere_sizes = sphere_sizes

    def __len__(self) -> int:
        return len(self._dist)

    def __contains__(self, x: GroupElement) -> bool:
        return x.payload in self._dist

    def norm_payload(self, payload: Any) -> Optional[int]:
        return self._dist.get(payload)

    def norm(self, x: GroupElement) -> Optional[int]:
        """Exact word norm of x, or None when x lies outside the ball."""
        return self._dist.get(x.payload)

    def elements(self) -> Iterator[GroupElement]:
        for payload in self._dist:
            yield GroupElement(self.group, payload)

    def payloads(self) -> Iterator[Any]:
        return iter(self._dist)

    def first_payload_at(self, distance: int) -> Any:
        """First payload at the given distance in BFS order."""
        if not 0 <= distance < len(self.sphere_sizes) or self.sphere_sizes[distance] == 0:
            raise ValueError(f"no elements at distance {distance}")
        for payload, d in self._dist.items():
            if d == distance:
                return payload
        raise AssertionError("sphere sizes inconsistent with distance table")

    def geodesic_payload(self, payload: Any) -> Word:
        if payload not in self._dist:
            raise ValueError("element not recorded in this ball")
        group = self.group
        letters: list[int] = []
        current = payload
        while True:
            letter = self._parent[current]
            if letter == 0:
                break
            letters.append(letter)
            step = self.gens.letter_payload(-letter)
            current = group.mul_payload(current, step)
        letters.reverse()
        return tuple(letters)

    def geodesic(self, x: GroupElement) -> Word:
        """Word of length exactly norm(x) evaluating to x (first-parent rule)."""
        return self.geodesic_payload(x.payload)


def ball(
    group: Group,
    gens: GeneratingSet,
    radius: int,
    budget: Budget = DEFAULT_BUDGET,
) -> Ball:
    """Exact closed ball of the given radius under the symmetrized generators."""
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    if len(gens) == 0 and group.order() != 1:
        raise ValueError("empty generating set only generates the trivial group")
    if radius > budget.max_radius:
        raise BudgetExceededError(
            f"requested radius {radius} exceeds budget radius {budget.max_radius}",
            radius_reached=0,
            elements_seen=1,
        )
    letters = gens.symmetrized_letters()
    mul = group.mul_payload
    identity = group.identity_payload()
    dist: dict = {identity: 0}
    parent: dict = {identity: 0}
    spheres = [1]
    layer = [identity]
    deadline = time.monotonic() + budget.max_seconds
    checked = 0
    for r in range(1, radius + 1):
        next_layer: list = []
        for x in layer:
            for letter, step in letters:
                y = mul(x, step)
                if y not in dist:
                    dist[y] = r
                    parent[y] = letter
                    next_layer.append(y)
            checked += 1
            if (checked & 0x3FF) == 0:
                if len(dist) > budget.max_elements:
                    raise BudgetExceededError(
                        f"element budget {budget.max_elements} exceeded",
                        radius_reached=r - 1,
                        elements_seen=len(dist),
                    )
                if time.monotonic() > deadline:
                    raise BudgetExceededError(
                        f"time budget {budget.max_seconds}s exceeded",
                        radius_reached=r - 1,
                        elements_seen=len(dist),
                    )
        if len(dist) > budget.max_elements:
            raise BudgetExceededError(
                f"element budget {budget.max_elements} exceeded",
                radius_reached=r - 1,
                elements_seen=len(dist),
            )
        if not next_layer:
            break
        spheres.append(len(next_layer))
        layer = next_layer
    return Ball(group, gens, radius, dist, parent, tuple(spheres))


def norm(b: Ball, x: GroupElement) -> Optional[int]:
    return b.norm(x)


def geodesic(b: Ball, x: GroupElement) -> Word:
    return b.geodesic(x)


# ---------------------------------------------------------------------------
# Disk cache
# ---------------------------------------------------------------------------


def ball_content_hash(group: Group, gens: GeneratingSet, radius: int) -> str:
    doc = {
        "group": group_to_json(group),
        "gens": genset_to_json(gens),
        "radius": str(radius),
    }
    return hashlib.sha256(dumps(doc).encode("utf-8")).hexdigest()


def save_ball(b: Ball, path: Union[str, Path]) -> None:
    """Write a ball to disk: header (magic, version, content hash), records."""
    digest = bytes.fromhex(ball_content_hash(b.group, b.gens, b.radius))
    encode = b.group.encode_payload
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack(">H", CACHE_VERSION))
        fh.write(digest)
        fh.write(struct.pack(">IQ", b.radius, len(b._dist)))
        for payload, d in b._dist.items():
            enc = encode(payload)
            fh.write(struct.pack(">H", len(enc)))
            fh.write(enc)
            fh.write(struct.pack(">Ii", d, b._parent[payload]))


def load_ball(path: Union[str, Path], group: Group, gens: GeneratingSet) -> Ball:
    """Reload a cached ball; the stored content hash must match (group, gens, R)."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:4] != CACHE_MAGIC:
        raise ValueError(f"not a ball cache file: {path}")
    (version,) = struct.unpack_from(">H", data, 4)
    if version != CACHE_VERSION:
        raise ValueError(f"unsupported ball cache version {version}")
    digest = data[6:38].hex()
    radius, count = struct.unpack_from(">IQ", data, 38)
    if digest != ball_content_hash(group, gens, radius):
        raise ValueError("ball cache content hash does not match (group, gens, radius)")
    decode = group.decode_payload
    dist: dict = {}
    parent: dict = {}
    offset = 50
    for _ in range(count):
        (enc_len,) = struct.unpack_from(">H", data, offset)
        offset += 2
        payload = decode(data[offset : offset + enc_len])
        offset += enc_len
        d, letter = struct.unpack_from(">Ii", data, offset)
        offset += 8
        dist[payload] = d
        parent[payload] = letter
    spheres = [0] * (max(dist.values()) + 1 if dist else 1)
    for d in dist.values():
        spheres[d] += 1
    return Ball(group, gens, radius, dist, parent, tuple(spheres))


def ball_cached(
    group: Group,
    gens: GeneratingSet,
    radius: int,
    cache_dir: Union[str, Path],
    budget: Budget = DEFAULT_BUDGET,
) -> Ball:
    """Compute a ball or reload it from ``cache_dir``, keyed by content hash."""
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    key = ball_content_hash(group, gens, radius)
    path = cache_dir / f"ball-{key[:24]}.bin"
    if path.exists():
        return load_ball(path, group, gens)
    b = ball(group, gens, radius, budget)
    save_ball(b, path)
    return b


def ball_to_csv(b: Ball, path: Union[str, Path]) -> None:
    """CSV export of (element, norm) pairs in BFS order."""
    fmt = b.group.format_payload
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["element", "norm"])
        for payload, d in b._dist.items():
            writer.writerow([fmt(payload), d])
