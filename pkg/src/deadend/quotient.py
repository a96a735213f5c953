"""Quotient maps onto finite groups, diameters, and diameter-targeted search.

A quotient map is described by generator images.  Native maps (integer
reduction mod m) evaluate any element directly; word-based maps need an
S-word for the argument.  Surjectivity is verified on construction by
closing the images under multiplication.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Optional, Sequence

from .cayley import Ball, Budget, DEFAULT_BUDGET, ball
from .groups import (
    Cyclic,
    GeneratingSet,
    Group,
    GroupElement,
    GroupError,
    IntegerLine,
    evaluate_word,
    validate_word,
)
from .serialize import payload_to_json

__all__ = [
    "QuotientMap",
    "DiameterReport",
    "QuotientError",
    "SurjectivityError",
    "HomomorphismError",
    "FamilyExhaustedError",
    "cyclic_quotient",
    "word_quotient",
    "check_homomorphism",
    "group_ball",
    "diameter",
    "counting_bound_check",
    "find_quotient",
    "cyclic_family",
]


class QuotientError(GroupError):
    """Base class for quotient map errors."""


class SurjectivityError(QuotientError):
    """Generator images fail to generate the target."""


class HomomorphismError(QuotientError):
    """The declared images do not define a homomorphism."""


class FamilyExhaustedError(QuotientError):
    """No member of the quotient family meets the requested target."""


class QuotientMap:
    """Surjection from a source group onto a finite target group.

    ``images[i]`` is the image of ``source_gens.entries[i]``.  Mode
    "native" evaluates arbitrary elements directly (built-in reduction);
    mode "word" requires an S-word witnessing the argument.
    """

    def __init__(
        self,
        source_gens: GeneratingSet,
        target: Group,
        images: Sequence[GroupElement],
        mode: str = "word",
    ):
        if mode not in ("native", "word"):
            raise ValueError(f"mode must be 'native' or 'word', got {mode!r}")
        if target.order() is None:
            raise ValueError("quotient target must be finite")
        images = tuple(images)
        if len(images) != len(source_gens.entries):
            raise ValueError("one image per source generator required")
        for im in images:
            if im.group is not target and im.group != target:
                raise ValueError("images must lie in the target group")
        self.source_gens = source_gens
        self.source = source_gens.group
        self.target = target
        self.images = images
        self.mode = mode
        self._check_surjective()

    def _check_surjective(self) -> None:
        order = self.target.order()
        mul = self.target.mul_payload
        inv = self.target.inv_payload
        seen = {self.target.identity_payload()}
        frontier = list(seen)
        steps = []
        for im in self.images:
            steps.append(im.payload)
            steps.append(inv(im.payload))
        while frontier:
            nxt = []
            for x in frontier:
                for s in steps:
                    y = mul(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(seen) != order:
            raise SurjectivityError(
                f"images generate only {len(seen)} of {order} target elements"
            )

    def apply_payload(self, payload: Any) -> Any:
        """Native-mode image of a payload; raises in word mode."""
        if self.mode != "native":
            raise QuotientError("word-based quotient needs a word hint; use apply()")
        return self._native_payload(payload)

    def _native_payload(self, payload: Any) -> Any:
        raise NotImplementedError

    def apply(self, g: GroupElement, word_hint: Optional[Sequence[int]] = None) -> GroupElement:
        """Image of g; word-based maps require a hint word evaluating to g."""
        if g.group is not self.source and g.group != self.source:
            raise QuotientError("argument does not belong to the source group")
        if self.mode == "native":
            return GroupElement(self.target, self._native_payload(g.payload))
        if word_hint is None:
            raise QuotientError("word-based quotient requires a word hint")
        word = validate_word(word_hint, self.source_gens)
        if evaluate_word(word, self.source_gens) != g:
            raise QuotientError("word hint does not evaluate to the argument")
        return self.apply_word(word)

    def apply_word(self, word: Sequence[int]) -> GroupElement:
        """Image of the element spelled by an S-word (letters map to images)."""
        word = validate_word(word, self.source_gens)
        mul = self.target.mul_payload
        inv = self.target.inv_payload
        acc = self.target.identity_payload()
        for letter in word:
            p = self.images[abs(letter) - 1].payload
            acc = mul(acc, p if letter > 0 else inv(p))
        return GroupElement(self.target, acc)

    def image_set(self) -> frozenset:
        """Payloads of all generator images (the un-symmetrized image set)."""
        return frozenset(im.payload for im in self.images)

    def image_genset(self) -> tuple[GeneratingSet, tuple[int, ...]]:
        """Distinct non-identity images as a generating set, plus a section.

        ``section[j]`` is the least source-generator index mapping onto
        entry j, fixing a deterministic lift for target letters.
        """
        identity = self.target.identity_payload()
        entries: list[GroupElement] = []
        labels: list[str] = []
        section: list[int] = []
        seen: set = set()
        for i, im in enumerate(self.images):
            if im.payload == identity or im.payload in seen:
                continue
            seen.add(im.payload)
            entries.append(im)
            labels.append(self.source_gens.labels[i])
            section.append(i)
        if not entries:
            raise SurjectivityError("all generator images are the target identity")
        return GeneratingSet(entries, labels), tuple(section)

    def __repr__(self) -> str:
        return f"QuotientMap({self.source!r} -> {self.target!r}, mode={self.mode!r})"


class _IntModQuotient(QuotientMap):
    """Built-in reduction of the integer line modulo m."""

    def __init__(self, source_gens: GeneratingSet, m: int):
        if not isinstance(source_gens.group, IntegerLine):
            raise ValueError("native cyclic quotient requires an IntegerLine source")
        target = Cyclic(m)
        images = [target.element(e.payload) for e in source_gens.entries]
        super().__init__(source_gens, target, images, mode="native")

    def _native_payload(self, payload: Any) -> Any:
        return payload % self.target.modulus


def cyclic_quotient(source_gens: GeneratingSet, m: int) -> QuotientMap:
    """Native quotient of the integers onto the cyclic group of order m."""
    return _IntModQuotient(source_gens, m)


def word_quotient(
    source_gens: GeneratingSet, target: Group, images: Sequence[GroupElement]
) -> QuotientMap:
    """Word-based quotient defined purely by generator images."""
    return QuotientMap(source_gens, target, images, mode="word")


def check_homomorphism(
    pi: QuotientMap,
    samples: int = 10_000,
    seed: int = 0,
    max_word_len: int = 8,
) -> None:
    """Verify the homomorphism law; raises HomomorphismError on failure.

    Native maps on infinite sources are checked on random element pairs.
    Word-based maps are checked for well-definedness: enumerate all short
    words, group them by the source element they spell, and require every
    class to share one image.  Exhaustive on finite sources (all pairs).
    """
    if pi.mode == "native":
        order = pi.source.order()
        if order is not None:
            elems = [e.payload for e in pi.source.elements()]
            mul_s = pi.source.mul_payload
            mul_t = pi.target.mul_payload
            for x in elems:
                fx = pi._native_payload(x)
                for y in elems:
                    if pi._native_payload(mul_s(x, y)) != mul_t(fx, pi._native_payload(y)):
                        raise HomomorphismError(f"law fails at ({x!r}, {y!r})")
            return
        rng = random.Random(seed)
        mul_s = pi.source.mul_payload
        mul_t = pi.target.mul_payload
        span = 1 << 32
        for _ in range(samples):
            x = rng.randrange(-span, span)
            y = rng.randrange(-span, span)
            left = pi._native_payload(mul_s(x, y))
            right = mul_t(pi._native_payload(x), pi._native_payload(y))
            if left != right:
                raise HomomorphismError(f"law fails at ({x!r}, {y!r})")
        return
    # Word mode: well-definedness over all words up to max_word_len.
    gens = pi.source_gens
    letters = list(range(1, len(gens.entries) + 1))
    letters += [-x for x in letters]
    image_of: dict = {}
    layer: list[tuple[Any, Any]] = [(gens.group.identity_payload(), pi.target.identity_payload())]
    image_of[gens.group.identity_payload()] = pi.target.identity_payload()
    mul_s = gens.group.mul_payload
    mul_t = pi.target.mul_payload
    for _ in range(max_word_len):
        nxt = []
        for src, img in layer:
            for letter in letters:
                s2 = mul_s(src, gens.letter_payload(letter))
                p = pi.images[abs(letter) - 1].payload
                i2 = mul_t(img, p if letter > 0 else pi.target.inv_payload(p))
                known = image_of.get(s2)
                if known is None:
                    image_of[s2] = i2
                    nxt.append((s2, i2))
                elif known != i2:
                    raise HomomorphismError(
                        f"two words for {s2!r} map to different images"
                    )
        layer = nxt


@dataclass(frozen=True)
class DiameterReport:
    """Diameter of a finite group under a generating set, with witness."""

    order: int
    diameter: int
    witness: GroupElement
    sphere_sizes: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "schema": "diameter-report.v1",
            "order": self.order,
            "diameter": self.diameter,
            "witness": payload_to_json(self.witness.group, self.witness.payload),
            "witness_str": str(self.witness),
            "sphere_sizes": list(self.sphere_sizes),
        }


def group_ball(target: Group, gens: GeneratingSet, budget: Budget = DEFAULT_BUDGET) -> Ball:
    """Ball covering a whole finite group; errors if gens do not generate."""
    order = target.order()
    if order is None:
        raise ValueError("a full group ball requires a finite group")
    b = ball(target, gens, radius=order, budget=budget)
    if len(b) != order:
        raise SurjectivityError(f"generators reach only {len(b)} of {order} elements")
    return b


def diameter(
    target: Group, gens: GeneratingSet, budget: Budget = DEFAULT_BUDGET
) -> DiameterReport:
    """Exact diameter via full BFS; witness is the first maximal element."""
    b = group_ball(target, gens, budget)
    n = len(b.sphere_sizes) - 1
    witness = GroupElement(target, b.first_payload_at(n))
    return DiameterReport(target.order(), n, witness, b.sphere_sizes)


def counting_bound_check(report: DiameterReport, a: int) -> bool:
    """Self-test of the word-counting bound: (2a+1)^diameter >= order."""
    return (2 * a + 1) ** report.diameter >= report.order


def find_quotient(
    family: Iterable[QuotientMap],
    n_prime: int,
    mode: str = "greedy",
    budget: Budget = DEFAULT_BUDGET,
) -> tuple[QuotientMap, DiameterReport]:
    """First family member whose diameter meets the length target n'.

    mode "paper_safe" picks the first member of order >= (2a+1)^n', which
    the counting bound guarantees has diameter >= n'.  mode "greedy"
    measures diameters in family order and returns the first that
    reaches n'.  Raises FamilyExhaustedError when no member qualifies.
    """
    if mode not in ("paper_safe", "greedy"):
        raise ValueError(f"mode must be 'paper_safe' or 'greedy', got {mode!r}")
    if n_prime < 1:
        raise ValueError(f"length target must be >= 1, got {n_prime}")
    for pi in family:
        gens, _ = pi.image_genset()
        if mode == "paper_safe":
            a = len(pi.source_gens.entries)
            if pi.target.order() < (2 * a + 1) ** n_prime:
                continue
        report = diameter(pi.target, gens, budget)
        if report.diameter >= n_prime:
            return pi, report
        if mode == "paper_safe":
            raise AssertionError(
                "counting bound violated: "
                f"order {report.order} has diameter {report.diameter} < {n_prime}"
            )
    raise FamilyExhaustedError(f"no family member reaches diameter {n_prime}")


def cyclic_family(
    source_gens: GeneratingSet, start: int = 2, stop: Optional[int] = None
) -> Iterator[QuotientMap]:
    """Lazily enumerated native quotients Z -> C_m for m = start, start+1, ...

    Members whose images fail to generate (for example m sharing a factor
    with every generator) are skipped.
    """
    m = start
    while stop is None or m <= stop:
        try:
            yield cyclic_quotient(source_gens, m)
        except SurjectivityError:
            pass
        except ValueError:
            raise
        m += 1
