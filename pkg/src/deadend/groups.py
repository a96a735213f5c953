"""Element algebra for a fixed menu of finitely generated groups.

Every group object owns a canonical payload encoding for its elements:
equal elements have identical payloads (and identical byte encodings via
``encode_payload``), so payloads can key hash tables directly.  All
arithmetic is exact; integer payloads are capped at a configurable bit
width and overflow is a hard error, never a silent wrap.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, ClassVar, Iterator, Optional, Sequence

__all__ = [
    "Group",
    "GroupElement",
    "GeneratingSet",
    "Word",
    "IntegerLine",
    "IntegerGrid",
    "Cyclic",
    "Dihedral",
    "Lamplighter",
    "TableGroup",
    "GroupError",
    "MixedGroupError",
    "RangeOverflowError",
    "InvalidElementError",
    "TableGroupError",
    "multiply",
    "invert",
    "evaluate_word",
    "invert_word",
    "validate_word",
    "standard_gens",
]

# A word is a sequence of signed 1-based generator indices: letter +k means
# the k-th generator, -k its inverse.
Word = tuple[int, ...]


class GroupError(Exception):
    """Base class for group algebra errors."""


class MixedGroupError(GroupError):
    """Operands belong to different groups."""


class RangeOverflowError(GroupError):
    """Exact integer arithmetic exceeded the configured bit-width cap."""


class InvalidElementError(GroupError):
    """A raw payload does not describe an element of the group."""


class TableGroupError(GroupError):
    """A multiplication table violates the group axioms."""


def _check_bits(bits: int) -> int:
    if not isinstance(bits, int) or bits < 8 or bits > 1024 or bits % 8:
        raise ValueError(f"bit-width cap must be a multiple of 8 in [8, 1024], got {bits}")
    return bits


class Group(ABC):
    """Descriptor plus element algebra for one concrete group.

    Subclasses operate on canonical payloads (hashable Python values).
    ``mul_payload``/``inv_payload`` assume canonical inputs and return
    canonical outputs; arbitrary input enters through ``canonical_payload``.
    """

    variant: ClassVar[str]

    @abstractmethod
    def order(self) -> Optional[int]:
        """Group order, or None for infinite groups."""

    @abstractmethod
    def identity_payload(self) -> Any: ...

    @abstractmethod
    def canonical_payload(self, raw: Any) -> Any: ...

    @abstractmethod
    def mul_payload(self, p: Any, q: Any) -> Any: ...

    @abstractmethod
    def inv_payload(self, p: Any) -> Any: ...

    @abstractmethod
    def encode_payload(self, p: Any) -> bytes: ...

    @abstractmethod
    def decode_payload(self, data: bytes) -> Any: ...

    @abstractmethod
    def format_payload(self, p: Any) -> str: ...

    @abstractmethod
    def _key(self) -> tuple: ...

    @property
    def is_finite(self) -> bool:
        return self.order() is not None

    def elements(self) -> Iterator["GroupElement"]:
        """All elements in canonical enumeration order (finite groups only)."""
        raise GroupError(f"cannot enumerate an infinite group ({self.variant})")

    def identity(self) -> "GroupElement":
        return GroupElement(self, self.identity_payload())

    def element(self, raw: Any) -> "GroupElement":
        return GroupElement(self, self.canonical_payload(raw))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return isinstance(other, Group) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class GroupElement:
    """Immutable element of a concrete group, hashable and comparable."""

    __slots__ = ("group", "payload", "_hash")

    def __init__(self, group: Group, payload: Any):
        self.group = group
        self.payload = payload
        self._hash = hash((group, payload))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.payload == other.payload and (
            self.group is other.group or self.group == other.group
        )

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, self.group.inv_payload(self.payload))

    def is_identity(self) -> bool:
        return self.payload == self.group.identity_payload()

    def encode(self) -> bytes:
        return self.group.encode_payload(self.payload)

    def __str__(self) -> str:
        return self.group.format_payload(self.payload)

    def __repr__(self) -> str:
        return f"<{self.group.variant} {self}>"


def _same_group(x: GroupElement, y: GroupElement) -> None:
    if x.group is not y.group and x.group != y.group:
        raise MixedGroupError(f"operands from different groups: {x.group!r} vs {y.group!r}")


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    """Canonical product x*y; operands must share a group."""
    _same_group(x, y)
    return GroupElement(x.group, x.group.mul_payload(x.payload, y.payload))


def invert(x: GroupElement) -> GroupElement:
    return x.inverse()


class GeneratingSet:
    """Ordered list of distinct non-identity elements with display labels.

    Entries are stored exactly as given; metric computations always work
    with the symmetrized view (entries plus their inverses).
    """

    __slots__ = ("group", "entries", "labels", "_letters")

    def __init__(self, entries: Sequence[GroupElement], labels: Optional[Sequence[str]] = None):
        entries = tuple(entries)
        if not entries:
            raise ValueError("generating set needs at least one entry (trivial groups excepted)")
        group = entries[0].group
        seen: set = set()
        for e in entries:
            if e.group is not group and e.group != group:
                raise MixedGroupError("generating set entries belong to different groups")
            if e.is_identity():
                raise ValueError("generating set must not contain the identity")
            if e.payload in seen:
                raise ValueError(f"duplicate generating set entry {e}")
            seen.add(e.payload)
        self.group = group
        self.entries = entries
        if labels is None:
            labels = tuple(group.format_payload(e.payload) for e in entries)
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != len(entries):
                raise ValueError("labels length does not match entries")
        self.labels = labels
        self._letters: Optional[tuple[tuple[int, Any], ...]] = None

    @classmethod
    def empty(cls, group: Group) -> "GeneratingSet":
        """Empty generating set; valid only for the trivial group."""
        if group.order() != 1:
            raise ValueError("only the trivial group is generated by the empty set")
        obj = object.__new__(cls)
        obj.group = group
        obj.entries = ()
        obj.labels = ()
        obj._letters = ()
        return obj

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.entries)

    def symmetrized_letters(self) -> tuple[tuple[int, Any], ...]:
        """(signed letter, payload) pairs in deterministic neighbor order.

        Per entry the positive letter comes before the negative one; the
        BFS code relies on this order for reproducible parents.
        """
        if self._letters is None:
            letters = []
            for i, e in enumerate(self.entries):
                letters.append((i + 1, e.payload))
                letters.append((-(i + 1), self.group.inv_payload(e.payload)))
            self._letters = tuple(letters)
        return self._letters

    def letter_payload(self, letter: int) -> Any:
        idx = abs(letter) - 1
        if letter == 0 or idx >= len(self.entries):
            raise ValueError(f"letter {letter} out of range for {len(self.entries)} generators")
        p = self.entries[idx].payload
        return p if letter > 0 else self.group.inv_payload(p)

    def letter_label(self, letter: int) -> str:
        idx = abs(letter) - 1
        base = self.labels[idx]
        return base if letter > 0 else base + "^-1"

    def symmetrized_payloads(self) -> frozenset:
        """Set of payloads of entries and their inverses."""
        return frozenset(p for _, p in self.symmetrized_letters())


def validate_word(word: Sequence[int], gens: GeneratingSet) -> Word:
    w = tuple(int(x) for x in word)
    n = len(gens.entries)
    for letter in w:
        if letter == 0 or abs(letter) > n:
            raise ValueError(f"word letter {letter} out of range for {n} generators")
    return w


def evaluate_word(word: Sequence[int], gens: GeneratingSet) -> GroupElement:
    """Product of the indicated generators/inverses, left to right."""
    w = validate_word(word, gens)
    group = gens.group
    acc = group.identity_payload()
    for letter in w:
        acc = group.mul_payload(acc, gens.letter_payload(letter))
    return GroupElement(group, acc)


def invert_word(word: Sequence[int]) -> Word:
    return tuple(-letter for letter in reversed(word))


# ---------------------------------------------------------------------------
# Concrete groups
# ---------------------------------------------------------------------------


class IntegerLine(Group):
    """The integers under addition, with a symmetric range cap."""

    variant = "integer_line"

    def __init__(self, bits: int = 64):
        self.bits = _check_bits(bits)
        self._cap = (1 << (bits - 1)) - 1
        self._width = bits // 8

    def order(self) -> Optional[int]:
        return None

    def identity_payload(self) -> int:
        return 0

    def canonical_payload(self, raw: Any) -> int:
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise InvalidElementError(f"integer payload required, got {raw!r}")
        if abs(raw) > self._cap:
            raise RangeOverflowError(f"|{raw}| exceeds the {self.bits}-bit cap")
        return raw

    def mul_payload(self, p: int, q: int) -> int:
        r = p + q
        if abs(r) > self._cap:
            raise RangeOverflowError(f"sum {p} + {q} exceeds the {self.bits}-bit cap")
        return r

    def inv_payload(self, p: int) -> int:
        return -p

    def encode_payload(self, p: int) -> bytes:
        return p.to_bytes(self._width, "big", signed=True)

    def decode_payload(self, data: bytes) -> int:
        return int.from_bytes(data, "big", signed=True)

    def format_payload(self, p: int) -> str:
        return str(p)

    def _key(self) -> tuple:
        return (self.variant, self.bits)

    def __repr__(self) -> str:
        return f"IntegerLine(bits={self.bits})"


class IntegerGrid(Group):
    """Free abelian group of finite rank (integer vectors under addition)."""

    variant = "integer_grid"

    def __init__(self, rank: int, bits: int = 64):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive integer, got {rank}")
        self.rank = rank
        self.bits = _check_bits(bits)
        self._cap = (1 << (bits - 1)) - 1
        self._width = bits // 8

    def order(self) -> Optional[int]:
        return None

    def identity_payload(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def canonical_payload(self, raw: Any) -> tuple[int, ...]:
        try:
            vec = tuple(raw)
        except TypeError:
            raise InvalidElementError(f"integer vector required, got {raw!r}") from None
        if len(vec) != self.rank:
            raise InvalidElementError(f"vector of rank {self.rank} required, got {raw!r}")
        out = []
        for c in vec:
            if isinstance(c, bool) or not isinstance(c, int):
                raise InvalidElementError(f"integer coordinates required, got {raw!r}")
            if abs(c) > self._cap:
                raise RangeOverflowError(f"|{c}| exceeds the {self.bits}-bit cap")
            out.append(c)
        return tuple(out)

    def mul_payload(self, p: tuple, q: tuple) -> tuple:
        out = []
        for a, b in zip(p, q):
            c = a + b
            if abs(c) > self._cap:
                raise RangeOverflowError(
                    f"coordinate sum {a} + {b} exceeds the {self.bits}-bit cap"
                )
            out.append(c)
        return tuple(out)

    def inv_payload(self, p: tuple) -> tuple:
        return tuple(-c for c in p)

    def encode_payload(self, p: tuple) -> bytes:
        return b"".join(c.to_bytes(self._width, "big", signed=True) for c in p)

    def decode_payload(self, data: bytes) -> tuple:
        w = self._width
        return tuple(
            int.from_bytes(data[i * w : (i + 1) * w], "big", signed=True) for i in range(self.rank)
        )

    def format_payload(self, p: tuple) -> str:
        return "(" + ",".join(str(c) for c in p) + ")"

    def _key(self) -> tuple:
        return (self.variant, self.rank, self.bits)

    def __repr__(self) -> str:
        return f"IntegerGrid(rank={self.rank}, bits={self.bits})"


class Cyclic(Group):
    """Cyclic group of order m, additive notation on residues 0..m-1."""

    variant = "cyclic"

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 1:
            raise ValueError(f"modulus must be a positive integer, got {modulus}")
        if modulus.bit_length() > 63:
            raise ValueError(f"modulus {modulus} too large")
        self.modulus = modulus

    def order(self) -> Optional[int]:
        return self.modulus

    def elements(self) -> Iterator[GroupElement]:
        for r in range(self.modulus):
            yield GroupElement(self, r)

    def identity_payload(self) -> int:
        return 0

    def canonical_payload(self, raw: Any) -> int:
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise InvalidElementError(f"integer payload required, got {raw!r}")
        return raw % self.modulus

    def mul_payload(self, p: int, q: int) -> int:
        return (p + q) % self.modulus

    def inv_payload(self, p: int) -> int:
        return (-p) % self.modulus

    def encode_payload(self, p: int) -> bytes:
        return p.to_bytes(8, "big")

    def decode_payload(self, data: bytes) -> int:
        return int.from_bytes(data, "big")

    def format_payload(self, p: int) -> str:
        return str(p)

    def _key(self) -> tuple:
        return (self.variant, self.modulus)

    def __repr__(self) -> str:
        return f"Cyclic({self.modulus})"


class Dihedral(Group):
    """Dihedral group of order 2m: payload (rotation residue, reflection bit).

    (r, s) stands for rho^r * sigma^s with sigma rho sigma = rho^-1.
    """

    variant = "dihedral"

    def __init__(self, m: int):
        if not isinstance(m, int) or m < 3:
            raise ValueError(f"dihedral parameter must be an integer >= 3, got {m}")
        self.m = m

    def order(self) -> Optional[int]:
        return 2 * self.m

    def elements(self) -> Iterator[GroupElement]:
        for s in (0, 1):
            for r in range(self.m):
                yield GroupElement(self, (r, s))

    def identity_payload(self) -> tuple[int, int]:
        return (0, 0)

    def canonical_payload(self, raw: Any) -> tuple[int, int]:
        try:
            r, s = raw
        except (TypeError, ValueError):
            raise InvalidElementError(
                f"(rotation, reflection) pair required, got {raw!r}"
            ) from None
        if any(isinstance(x, bool) or not isinstance(x, int) for x in (r, s)):
            raise InvalidElementError(f"integer pair required, got {raw!r}")
        if s not in (0, 1):
            raise InvalidElementError(f"reflection bit must be 0 or 1, got {s}")
        return (r % self.m, s)

    def mul_payload(self, p: tuple, q: tuple) -> tuple:
        r1, s1 = p
        r2, s2 = q
        r = (r1 + (r2 if s1 == 0 else -r2)) % self.m
        return (r, s1 ^ s2)

    def inv_payload(self, p: tuple) -> tuple:
        r, s = p
        if s:
            return p
        return ((-r) % self.m, 0)

    def encode_payload(self, p: tuple) -> bytes:
        r, s = p
        return r.to_bytes(8, "big") + bytes([s])

    def decode_payload(self, data: bytes) -> tuple:
        return (int.from_bytes(data[:8], "big"), data[8])

    def format_payload(self, p: tuple) -> str:
        r, s = p
        if r == 0 and s == 0:
            return "e"
        rot = f"r{r}" if r else ""
        return (rot + ("s" if s else "")) or "e"

    def _key(self) -> tuple:
        return (self.variant, self.m)

    def __repr__(self) -> str:
        return f"Dihedral({self.m})"


class Lamplighter(Group):
    """Wreath product of the order-2 group by the integers.

    Payload is (lamps, cursor): a strictly sorted tuple of lit lamp
    positions and the cursor position.  Right multiplication by the
    standard generators shifts the cursor (t) or toggles the lamp under
    the cursor (a).
    """

    variant = "lamplighter"

    def __init__(self, bits: int = 64):
        self.bits = _check_bits(bits)
        self._cap = (1 << (bits - 1)) - 1
        self._width = bits // 8

    def order(self) -> Optional[int]:
        return None

    def identity_payload(self) -> tuple:
        return ((), 0)

    def canonical_payload(self, raw: Any) -> tuple:
        try:
            lamps, cursor = raw
        except (TypeError, ValueError):
            raise InvalidElementError(f"(lamps, cursor) pair required, got {raw!r}") from None
        if isinstance(cursor, bool) or not isinstance(cursor, int):
            raise InvalidElementError(f"integer cursor required, got {raw!r}")
        if abs(cursor) > self._cap:
            raise RangeOverflowError(f"|cursor {cursor}| exceeds the {self.bits}-bit cap")
        positions = []
        for p in lamps:
            if isinstance(p, bool) or not isinstance(p, int):
                raise InvalidElementError(f"integer lamp positions required, got {raw!r}")
            if abs(p) > self._cap:
                raise RangeOverflowError(f"|lamp {p}| exceeds the {self.bits}-bit cap")
            positions.append(p)
        canon = tuple(sorted(set(positions)))
        if len(canon) != len(positions):
            raise InvalidElementError(f"duplicate lamp positions in {raw!r}")
        return (canon, cursor)

    def mul_payload(self, p: tuple, q: tuple) -> tuple:
        lamps1, c1 = p
        lamps2, c2 = q
        cursor = c1 + c2
        if abs(cursor) > self._cap:
            raise RangeOverflowError(f"cursor sum {c1} + {c2} exceeds the {self.bits}-bit cap")
        shifted = []
        for pos in lamps2:
            s = pos + c1
            if abs(s) > self._cap:
                raise RangeOverflowError(
                    f"lamp position {pos} + {c1} exceeds the {self.bits}-bit cap"
                )
            shifted.append(s)
        lamps = tuple(sorted(set(lamps1).symmetric_difference(shifted)))
        return (lamps, cursor)

    def inv_payload(self, p: tuple) -> tuple:
        lamps, c = p
        return (tuple(sorted(pos - c for pos in lamps)), -c)

    def encode_payload(self, p: tuple) -> bytes:
        lamps, c = p
        w = self._width
        parts = [c.to_bytes(w, "big", signed=True), len(lamps).to_bytes(4, "big")]
        parts.extend(pos.to_bytes(w, "big", signed=True) for pos in lamps)
        return b"".join(parts)

    def decode_payload(self, data: bytes) -> tuple:
        w = self._width
        cursor = int.from_bytes(data[:w], "big", signed=True)
        n = int.from_bytes(data[w : w + 4], "big")
        lamps = tuple(
            int.from_bytes(data[w + 4 + i * w : w + 4 + (i + 1) * w], "big", signed=True)
            for i in range(n)
        )
        return (lamps, cursor)

    def format_payload(self, p: tuple) -> str:
        lamps, c = p
        return "{" + " ".join(str(x) for x in lamps) + "}@" + str(c)

    def _key(self) -> tuple:
        return (self.variant, self.bits)

    def __repr__(self) -> str:
        return f"Lamplighter(bits={self.bits})"


class TableGroup(Group):
    """Finite group given by an explicit multiplication table on ids 0..m-1.

    The table is verified on load: identity, Latin-square closure,
    inverses, and associativity (conclusively via Light's test for
    m <= 512, by random sampling above).
    """

    variant = "table"

    _EXHAUSTIVE_LIMIT = 512
    _SAMPLES = 20000

    def __init__(self, table: Sequence[Sequence[int]], identity_id: int, name: str = "table"):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        m = len(rows)
        if m == 0:
            raise TableGroupError("empty multiplication table")
        if any(len(row) != m for row in rows):
            raise TableGroupError("multiplication table must be square")
        for row in rows:
            for x in row:
                if x < 0 or x >= m:
                    raise TableGroupError(f"table entry {x} out of range 0..{m - 1}")
        if not 0 <= identity_id < m:
            raise TableGroupError(f"identity id {identity_id} out of range")
        self.table = rows
        self.identity_id = identity_id
        self.name = str(name)
        self._m = m
        self._validate_axioms()
        self._inverse = self._compute_inverses()
        self._hash = hash((self.variant, rows, identity_id))

    def _validate_axioms(self) -> None:
        m, e, t = self._m, self.identity_id, self.table
        all_ids = frozenset(range(m))
        for x in range(m):
            if t[e][x] != x or t[x][e] != x:
                raise TableGroupError(f"id {e} is not a two-sided identity")
        for x in range(m):
            if frozenset(t[x]) != all_ids:
                raise TableGroupError(f"row {x} is not a permutation")
            if frozenset(t[y][x] for y in range(m)) != all_ids:
                raise TableGroupError(f"column {x} is not a permutation")
        if m <= self._EXHAUSTIVE_LIMIT:
            self._light_associativity()
        else:
            self._sampled_associativity()

    def _light_associativity(self) -> None:
        # Light's test: associativity on a generating set is conclusive.
        m, t = self._m, self.table
        gens: list[int] = []
        closure = {self.identity_id}
        for cand in range(m):
            if cand in closure:
                continue
            gens.append(cand)
            frontier = [cand]
            closure.add(cand)
            while frontier:
                nxt = []
                for x in frontier:
                    for g in list(closure):
                        for prod in (t[x][g], t[g][x]):
                            if prod not in closure:
                                closure.add(prod)
                                nxt.append(prod)
                frontier = nxt
            if len(closure) == m:
                break
        for g in gens:
            tg = t[g]
            for x in range(m):
                txg = t[x][g]
                row_x = t[x]
                row_txg = t[txg]
                for y in range(m):
                    if row_x[tg[y]] != row_txg[y]:
                        raise TableGroupError(
                            f"associativity fails at ({x}, {g}, {y})"
                        )

    def _sampled_associativity(self) -> None:
        import random

        rng = random.Random(0xA5)
        m, t = self._m, self.table
        for _ in range(self._SAMPLES):
            x, y, z = rng.randrange(m), rng.randrange(m), rng.randrange(m)
            if t[t[x][y]][z] != t[x][t[y][z]]:
                raise TableGroupError(f"associativity fails at ({x}, {y}, {z})")

    def _compute_inverses(self) -> tuple[int, ...]:
        inv = [0] * self._m
        for x in range(self._m):
            row = self.table[x]
            try:
                inv[x] = row.index(self.identity_id)
            except ValueError:
                raise TableGroupError(f"element {x} has no inverse") from None
            if self.table[inv[x]][x] != self.identity_id:
                raise TableGroupError(f"element {x} has no two-sided inverse")
        return tuple(inv)

    def order(self) -> Optional[int]:
        return self._m

    def elements(self) -> Iterator[GroupElement]:
        for x in range(self._m):
            yield GroupElement(self, x)

    def identity_payload(self) -> int:
        return self.identity_id

    def canonical_payload(self, raw: Any) -> int:
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise InvalidElementError(f"element id required, got {raw!r}")
        if not 0 <= raw < self._m:
            raise InvalidElementError(f"element id {raw} out of range 0..{self._m - 1}")
        return raw

    def mul_payload(self, p: int, q: int) -> int:
        return self.table[p][q]

    def inv_payload(self, p: int) -> int:
        return self._inverse[p]

    def encode_payload(self, p: int) -> bytes:
        return p.to_bytes(4, "big")

    def decode_payload(self, data: bytes) -> int:
        return int.from_bytes(data, "big")

    def format_payload(self, p: int) -> str:
        return str(p)

    def _key(self) -> tuple:
        return (self.variant, self.table, self.identity_id)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, TableGroup)
            and self.table == other.table
            and self.identity_id == other.identity_id
        )

    def __repr__(self) -> str:
        return f"TableGroup({self.name!r}, order={self._m})"


def standard_gens(group: Group) -> GeneratingSet:
    """Conventional generating set for groups that have one."""
    if isinstance(group, IntegerLine):
        return GeneratingSet([group.element(1)], ["1"])
    if isinstance(group, IntegerGrid):
        entries = []
        for i in range(group.rank):
            vec = [0] * group.rank
            vec[i] = 1
            entries.append(group.element(vec))
        return GeneratingSet(entries, [f"e{i + 1}" for i in range(group.rank)])
    if isinstance(group, Cyclic):
        if group.modulus == 1:
            return GeneratingSet.empty(group)
        return GeneratingSet([group.element(1)], ["1"])
    if isinstance(group, Dihedral):
        return GeneratingSet([group.element((1, 0)), group.element((0, 1))], ["r", "s"])
    if isinstance(group, Lamplighter):
        return GeneratingSet(
            [group.element(((), 1)), group.element(((0,), 0))], ["t", "a"]
        )
    raise ValueError(f"no standard generating set for {group!r}")
