"""Deep generating sets from finite quotients, with verifiable certificates.

Pipeline: given source generators S, a quotient pi onto a finite group of
diameter n, a depth slack d with n > 2d, and a ball radius N meeting the
bound, the generating set A collects every element of the radius-N S-ball
whose image is a generator image.  The maximal-length quotient element
lifts to a witness g_n with norm_A(g_n) = n, and every element within
A-distance d of g_n stays inside the closed radius-n ball, which makes
g_n a dead end of depth at least d+1.  Each membership claim is backed
twice: by BFS and by an explicit factorization certificate.
"""

from __future__ import annotations

import hashlib
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from .cayley import Ball, Budget, DEFAULT_BUDGET, ball, ball_cached
from .depth import DepthValue, depth
from .groups import (
    GeneratingSet,
    GroupElement,
    GroupError,
    Word,
    evaluate_word,
    invert_word,
    validate_word,
)
from .quotient import DiameterReport, QuotientMap, diameter, group_ball
from .serialize import dumps, payload_to_json

__all__ = [
    "ConstructionError",
    "CertificateError",
    "VerificationError",
    "ConstructionParams",
    "ConstructedGenSet",
    "DeadEndWitness",
    "Certificate",
    "ConstructionReport",
    "Construction",
    "required_n",
    "required_N",
    "bound_inequality_holds",
    "constructed_genset",
    "build_generating_set",
    "phi_table",
    "find_witness",
    "factorize",
    "validate_certificate",
    "verify_construction",
]

BOUND_MODES = ("paper", "tight")


class ConstructionError(GroupError):
    """A construction step failed or was given inconsistent inputs."""


class CertificateError(ConstructionError):
    """A factorization certificate failed validation."""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message if index is None else f"factor {index}: {message}")
        self.index = index


class VerificationError(ConstructionError):
    """The exhaustive construction check found a counterexample (a bug)."""

    def __init__(self, message: str, failures: Sequence[str] = ()):
        super().__init__(message)
        self.failures = tuple(failures)


def required_n(d: int) -> int:
    """Least quotient diameter admitting depth slack d (the bound n > 2d)."""
    if d < 1:
        raise ValueError(f"depth slack must be >= 1, got {d}")
    return 2 * d + 1


def _ceil_div(p: int, q: int) -> int:
    return -(-p // q)


def required_N(n: int, d: int, mode: str = "paper") -> int:
    """Minimal ball radius N for parameters (n, d) under the chosen bound.

    "paper" evaluates the headline bound (2n^2+2nd+2n-d)/(n-2d); "tight"
    clears denominators in (n+dN)/(n-d)+2n+1 <= N directly, which yields
    the smaller numerator (2n^2-2nd+2n-d).  Both are sufficient; the
    runtime re-check lives in bound_inequality_holds().
    """
    if mode not in BOUND_MODES:
        raise ValueError(f"bound mode must be one of {BOUND_MODES}, got {mode!r}")
    if d < 1 or n <= 2 * d:
        raise ValueError(f"need n > 2d >= 2, got n={n}, d={d}")
    if mode == "paper":
        numerator = 2 * n * n + 2 * n * d + 2 * n - d
    else:
        numerator = 2 * n * n - 2 * n * d + 2 * n - d
    return _ceil_div(numerator, n - 2 * d)


def bound_inequality_holds(n: int, d: int, N: int) -> bool:
    """Exact check of (n + d*N)/(n - d) + 2n + 1 <= N."""
    if d < 1 or n <= d:
        raise ValueError(f"need n > d >= 1, got n={n}, d={d}")
    return Fraction(n + d * N, n - d) + 2 * n + 1 <= N


@dataclass(frozen=True)
class ConstructionParams:
    """Validated parameter bundle: target depth D, slack d=D-1, n > 2d, N."""

    target_depth: int
    d: int
    n: int
    N: int
    bound_mode: str = "paper"

    def __post_init__(self):
        if self.target_depth < 2:
            raise ValueError(f"target depth must be >= 2, got {self.target_depth}")
        if self.d != self.target_depth - 1:
            raise ValueError(f"d must equal target_depth - 1, got d={self.d}")
        if self.n <= 2 * self.d:
            raise ValueError(f"need n > 2d (n={self.n}, d={self.d})")
        minimum = required_N(self.n, self.d, self.bound_mode)
        if self.N < minimum:
            raise ValueError(
                f"N={self.N} below required_N={minimum} for mode {self.bound_mode!r}"
            )

    @classmethod
    def derive(cls, target_depth: int, n: int, bound_mode: str = "paper") -> "ConstructionParams":
        d = target_depth - 1
        return cls(target_depth, d, n, required_N(n, d, bound_mode), bound_mode)

    def to_json(self) -> dict:
        return {
            "target_depth": self.target_depth,
            "d": self.d,
            "n": self.n,
            "N": self.N,
            "bound_mode": self.bound_mode,
        }


class ConstructedGenSet:
    """The generating set A with its provenance (S, quotient, N, S-ball)."""

    def __init__(
        self,
        genset: GeneratingSet,
        source_gens: GeneratingSet,
        pi: QuotientMap,
        N: int,
        s_ball: Ball,
    ):
        self.genset = genset
        self.source_gens = source_gens
        self.pi = pi
        self.N = N
        self.s_ball = s_ball
        self.symmetrized = genset.symmetrized_payloads()

    def __len__(self) -> int:
        return len(self.genset)

    def contains_symmetrized(self, payload: Any) -> bool:
        return payload in self.symmetrized


def constructed_genset(
    source_gens: GeneratingSet,
    pi: QuotientMap,
    N: int,
    budget: Budget = DEFAULT_BUDGET,
    cache_dir: Optional[Union[str, Path]] = None,
) -> ConstructedGenSet:
    """Intersect the radius-N S-ball with the generator-image preimage.

    Entries come out in deterministic BFS order.  The identity is dropped
    with a warning if some generator image is the target identity; when
    both an element and its inverse qualify, only the BFS-first one is
    stored (metric code symmetrizes anyway).
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    group = source_gens.group
    if cache_dir is not None:
        s_ball = ball_cached(group, source_gens, N, cache_dir, budget)
    else:
        s_ball = ball(group, source_gens, N, budget)
    tset = pi.image_set()
    identity = group.identity_payload()
    native = pi.mode == "native"
    entries: list[GroupElement] = []
    kept: set = set()
    for payload in s_ball.payloads():
        if native:
            image = pi._native_payload(payload)
        else:
            image = pi.apply_word(s_ball.geodesic_payload(payload)).payload
        if image not in tset:
            continue
        if payload == identity:
            warnings.warn(
                "identity lies in the preimage of the generator images; dropped from A"
            )
            continue
        if group.inv_payload(payload) in kept:
            continue
        kept.add(payload)
        entries.append(GroupElement(group, payload))
    built = ConstructedGenSet(GeneratingSet(entries), source_gens, pi, N, s_ball)
    for s in source_gens.entries:
        if not built.contains_symmetrized(s.payload):
            raise ConstructionError(f"source generator {s} missing from constructed set")
    return built


def build_generating_set(
    source_gens: GeneratingSet,
    pi: QuotientMap,
    params: ConstructionParams,
    budget: Budget = DEFAULT_BUDGET,
    cache_dir: Optional[Union[str, Path]] = None,
) -> ConstructedGenSet:
    """Parameter-validated wrapper around constructed_genset."""
    if not bound_inequality_holds(params.n, params.d, params.N):
        raise ConstructionError(
            f"N={params.N} fails the sufficiency inequality for n={params.n}, d={params.d}"
        )
    return constructed_genset(source_gens, pi, params.N, budget, cache_dir)


def phi_table(pi: QuotientMap, budget: Budget = DEFAULT_BUDGET) -> dict:
    """Minimal lift per target element: payload -> (S-word, lifted payload).

    The S-word arises from the target geodesic through the canonical
    section (least source index per image), so its length equals the
    target norm of the element.
    """
    image_gens, section = pi.image_genset()
    tb = group_ball(pi.target, image_gens, budget)
    phi: dict = {}
    for h in tb.payloads():
        t_word = tb.geodesic_payload(h)
        s_word = tuple(
            (section[abs(letter) - 1] + 1) * (1 if letter > 0 else -1) for letter in t_word
        )
        lift = evaluate_word(s_word, pi.source_gens)
        phi[h] = (s_word, lift.payload)
    return phi


@dataclass(frozen=True)
class DeadEndWitness:
    """Lifted maximal-length element g_n with its certified depth bound."""

    element: GroupElement
    n: int
    depth_lower_bound: Optional[int]
    s_word: Word

    def to_json(self) -> dict:
        return {
            "element": payload_to_json(self.element.group, self.element.payload),
            "element_str": str(self.element),
            "n": self.n,
            "depth_lower_bound": self.depth_lower_bound,
            "s_word_length": len(self.s_word),
        }


def find_witness(
    built: ConstructedGenSet,
    report: DiameterReport,
    claimed_depth: Optional[int] = None,
    budget: Budget = DEFAULT_BUDGET,
    a_ball: Optional[Ball] = None,
) -> DeadEndWitness:
    """Lift the diameter witness through the canonical section and verify
    that its word norm under the constructed set equals the diameter."""
    pi = built.pi
    source_gens = built.source_gens
    n = report.diameter
    image_gens, section = pi.image_genset()
    tb = group_ball(pi.target, image_gens, budget)
    t_word = tb.geodesic_payload(report.witness.payload)
    s_word = tuple(
        (section[abs(letter) - 1] + 1) * (1 if letter > 0 else -1) for letter in t_word
    )
    g_n = evaluate_word(s_word, source_gens)
    if pi.apply_word(s_word) != report.witness:
        raise ConstructionError("lifted witness does not map onto the diameter witness")
    if a_ball is None:
        a_ball = ball(source_gens.group, built.genset, n, budget)
    found = a_ball.norm(g_n)
    if found != n:
        raise ConstructionError(
            f"witness norm under A is {found}, expected the diameter {n}; "
            "this indicates a construction bug"
        )
    return DeadEndWitness(g_n, n, claimed_depth, s_word)


@dataclass(frozen=True)
class Certificate:
    """Factorization g = v_1 ... v_k with every factor in A or its inverses.

    A validating certificate witnesses norm_A(g) <= k without BFS.  The
    degenerate flag marks arguments mapping to the target identity, where
    no factorization into generator-image preimages exists.
    """

    target: GroupElement
    k: int
    u_words: tuple[Word, ...]
    t_letters: Word
    v_payloads: tuple[Any, ...]
    v_words: tuple[Word, ...]
    degenerate: bool = False

    def to_json(self) -> dict:
        group = self.target.group
        return {
            "schema": "certificate.v1",
            "target": payload_to_json(group, self.target.payload),
            "k": self.k,
            "degenerate": self.degenerate,
            "u_lengths": [len(w) for w in self.u_words],
            "t_letters": list(self.t_letters),
            "v_factors": [payload_to_json(group, p) for p in self.v_payloads],
            "v_word_lengths": [len(w) for w in self.v_words],
        }

    def digest(self) -> str:
        return hashlib.sha256(dumps(self.to_json()).encode("utf-8")).hexdigest()[:16]


class Construction:
    """Full pipeline state: quotient, parameters, A, witness, lift table."""

    def __init__(
        self,
        source_gens: GeneratingSet,
        pi: QuotientMap,
        params: ConstructionParams,
        report: DiameterReport,
        budget: Budget = DEFAULT_BUDGET,
        cache_dir: Optional[Union[str, Path]] = None,
    ):
        if report.diameter != params.n:
            raise ConstructionError(
                f"params.n={params.n} does not match quotient diameter {report.diameter}"
            )
        self.source_gens = source_gens
        self.pi = pi
        self.params = params
        self.report = report
        self.budget = budget
        self.image_gens, self.section = pi.image_genset()
        self.target_ball = group_ball(pi.target, self.image_gens, budget)
        self.built = build_generating_set(source_gens, pi, params, budget, cache_dir)
        self.phi = phi_table(pi, budget)
        if cache_dir is not None:
            self.a_ball = ball_cached(
                source_gens.group, self.built.genset, params.n, cache_dir, budget
            )
        else:
            self.a_ball = ball(source_gens.group, self.built.genset, params.n, budget)
        self.witness = find_witness(
            self.built, report, params.d + 1, budget, a_ball=self.a_ball
        )

    @classmethod
    def build(
        cls,
        source_gens: GeneratingSet,
        pi: QuotientMap,
        target_depth: int,
        bound_mode: str = "paper",
        budget: Budget = DEFAULT_BUDGET,
        cache_dir: Optional[Union[str, Path]] = None,
    ) -> "Construction":
        """Measure the quotient diameter and derive parameters from it."""
        image_gens, _ = pi.image_genset()
        report = diameter(pi.target, image_gens, budget)
        params = ConstructionParams.derive(target_depth, report.diameter, bound_mode)
        return cls(source_gens, pi, params, report, budget, cache_dir)

    # -- S-words -----------------------------------------------------------

    def a_letter_s_word(self, letter: int) -> Word:
        """S-geodesic of the A-generator named by a signed letter."""
        payload = self.built.genset.entries[abs(letter) - 1].payload
        word = self.built.s_ball.geodesic_payload(payload)
        return word if letter > 0 else invert_word(word)

    def witness_neighborhood(self) -> list[tuple[GroupElement, Word]]:
        """Every g within A-distance d of the witness, with an S-word for it.

        The S-word concatenates the witness lift with S-geodesics of the
        A-steps walked, so its length is at most n + d*N.
        """
        group = self.source_gens.group
        mul = group.mul_payload
        letters = self.built.genset.symmetrized_letters()
        start = self.witness.element.payload
        words: dict = {start: self.witness.s_word}
        out = [(self.witness.element, self.witness.s_word)]
        layer = [start]
        for _ in range(self.params.d):
            nxt = []
            for x in layer:
                base = words[x]
                for letter, step in letters:
                    y = mul(x, step)
                    if y in words:
                        continue
                    words[y] = base + self.a_letter_s_word(letter)
                    out.append((GroupElement(group, y), words[y]))
                    nxt.append(y)
            layer = nxt
        return out

    def s_word_for(self, g: GroupElement) -> Word:
        """Some S-word of length <= n + d*N for g, if one is derivable."""
        if g == self.witness.element:
            return self.witness.s_word
        n_s = self.built.s_ball.norm(g)
        if n_s is not None:
            return self.built.s_ball.geodesic(g)
        for h, word in self.witness_neighborhood():
            if h == g:
                return word
        raise ConstructionError(
            "no S-word available: element is outside the S-ball and the witness neighborhood"
        )

    def certify(self, g: GroupElement, s_word: Optional[Sequence[int]] = None) -> Certificate:
        if s_word is None:
            s_word = self.s_word_for(g)
        cert = factorize(self, g, s_word)
        if not cert.degenerate:
            validate_certificate(self, cert)
        return cert

    def verify(self) -> "ConstructionReport":
        return verify_construction(self)


def factorize(ctx: Construction, g: GroupElement, s_word: Sequence[int]) -> Certificate:
    """Split an S-word for g along a target geodesic into certified factors.

    The word splits into k = norm(pi(g)) near-equal pieces u_i; every
    piece is corrected by lifts of quotient discrepancies so the factors
    v_i multiply to g while each maps onto one geodesic letter.
    """
    params = ctx.params
    s_word = validate_word(s_word, ctx.source_gens)
    if evaluate_word(s_word, ctx.source_gens) != g:
        raise CertificateError("provided S-word does not evaluate to the element")
    L = len(s_word)
    limit = params.n + params.d * params.N
    if L > limit:
        raise CertificateError(f"S-word length {L} exceeds n + d*N = {limit}")
    pi_g = ctx.pi.apply_word(s_word)
    k = ctx.target_ball.norm_payload(pi_g.payload)
    if k is None:
        raise CertificateError("image norm unavailable; target ball incomplete")
    if k == 0:
        return Certificate(g, 0, (), (), (), (), degenerate=True)
    t_letters = ctx.target_ball.geodesic_payload(pi_g.payload)
    base, extra = divmod(L, k)
    sizes = [base + 1] * extra + [base] * (k - extra)
    u_words: list[Word] = []
    pos = 0
    for size in sizes:
        u_words.append(s_word[pos : pos + size])
        pos += size
    target = ctx.pi.target
    mul_t = target.mul_payload
    # Prefix images P_i = pi(u_1..u_i) and geodesic prefixes Q_i = t_1..t_i.
    prefix_image = target.identity_payload()
    prefix_geo = target.identity_payload()
    correction_words: list[Word] = []  # phi-word for P_i^-1 Q_i, i = 1..k-1
    for i in range(k - 1):
        prefix_image = mul_t(prefix_image, ctx.pi.apply_word(u_words[i]).payload)
        prefix_geo = mul_t(prefix_geo, ctx.image_gens.letter_payload(t_letters[i]))
        mismatch = mul_t(target.inv_payload(prefix_image), prefix_geo)
        correction_words.append(ctx.phi[mismatch][0])
    v_words: list[Word] = []
    v_payloads: list[Any] = []
    for i in range(k):
        before: Word = invert_word(correction_words[i - 1]) if i > 0 else ()
        after: Word = correction_words[i] if i < k - 1 else ()
        word = before + u_words[i] + after
        v_words.append(word)
        v_payloads.append(evaluate_word(word, ctx.source_gens).payload)
    return Certificate(g, k, tuple(u_words), t_letters, tuple(v_payloads), tuple(v_words))


def validate_certificate(
    ctx: Construction,
    cert: Certificate,
    near_witness: bool = False,
) -> None:
    """Re-check every claim a certificate makes; raise CertificateError if any fails.

    With near_witness=True the triangle-inequality lower bound
    k >= n - d is enforced as well.
    """
    params = ctx.params
    if cert.degenerate:
        raise CertificateError("degenerate certificate (image is the identity) cannot validate")
    group = ctx.source_gens.group
    target = ctx.pi.target
    mul = group.mul_payload
    mul_t = target.mul_payload
    k = cert.k
    if k != len(cert.u_words) or k != len(cert.v_words) or k != len(cert.t_letters):
        raise CertificateError("piece counts disagree with k")
    # Piece split: contiguous, near-equal, longer pieces first.
    joined: tuple[int, ...] = ()
    for w in cert.u_words:
        if not w:
            raise CertificateError("empty piece")
        joined += w
    lengths = [len(w) for w in cert.u_words]
    if max(lengths) - min(lengths) > 1 or sorted(lengths, reverse=True) != lengths:
        raise CertificateError("piece lengths are not an as-equal-as-possible split")
    bound = Fraction(params.n + params.d * params.N, k) + 1
    for i, w in enumerate(cert.u_words):
        if not Fraction(len(w)) < bound:
            raise CertificateError(f"|u| = {len(w)} not < (n+dN)/k + 1", index=i)
    # Image norm consistency.
    pi_g = ctx.pi.apply_word(joined)
    if ctx.target_ball.norm_payload(pi_g.payload) != k:
        raise CertificateError("k is not the target norm of the image")
    # Geodesic letters must spell the image.
    acc = target.identity_payload()
    for letter in cert.t_letters:
        acc = mul_t(acc, ctx.image_gens.letter_payload(letter))
    if acc != pi_g.payload:
        raise CertificateError("target geodesic does not spell the image")
    # Factor-level checks.
    product = group.identity_payload()
    for i in range(k):
        v_word = cert.v_words[i]
        v_payload = cert.v_payloads[i]
        if evaluate_word(v_word, ctx.source_gens).payload != v_payload:
            raise CertificateError("factor word does not evaluate to the factor", index=i)
        if len(v_word) > len(cert.u_words[i]) + 2 * params.n:
            raise CertificateError("factor word longer than |u| + 2n", index=i)
        t_i = ctx.image_gens.letter_payload(cert.t_letters[i])
        if ctx.pi.apply_word(v_word).payload != t_i:
            raise CertificateError("factor image is not the geodesic letter", index=i)
        s_norm = ctx.built.s_ball.norm_payload(v_payload)
        if s_norm is None or s_norm > params.N:
            raise CertificateError("factor norm under S exceeds N", index=i)
        if not ctx.built.contains_symmetrized(v_payload):
            raise CertificateError("factor is not in A or its inverses", index=i)
        product = mul(product, v_payload)
    if product != cert.target.payload:
        raise CertificateError("factors do not multiply to the element")
    _telescoping_checks(ctx, cert)
    if k > params.n:
        raise CertificateError(f"k = {k} exceeds the diameter n = {params.n}")
    if near_witness and k < params.n - params.d:
        raise CertificateError(f"k = {k} below the triangle bound n - d = {params.n - params.d}")


def _telescoping_checks(ctx: Construction, cert: Certificate) -> None:
    """Reproduce, step by step, the two image computations that show
    each factor maps onto its geodesic letter."""
    target = ctx.pi.target
    mul_t = target.mul_payload
    inv_t = target.inv_payload
    k = cert.k
    t_elems = [ctx.image_gens.letter_payload(letter) for letter in cert.t_letters]
    u_images = [ctx.pi.apply_word(w).payload for w in cert.u_words]
    for i in range(1, k + 1):
        # t_{i-1}^-1 ... t_1^-1
        acc = target.identity_payload()
        for j in range(i - 1, 0, -1):
            acc = mul_t(acc, inv_t(t_elems[j - 1]))
        # * pi(u_1 ... u_{i-1})
        prefix = target.identity_payload()
        for j in range(i - 1):
            prefix = mul_t(prefix, u_images[j])
        acc = mul_t(acc, prefix)
        # * pi(u_i)
        acc = mul_t(acc, u_images[i - 1])
        if i < k:
            # * pi(u_1 ... u_i)^-1 * t_1 ... t_i
            prefix_i = mul_t(prefix, u_images[i - 1])
            acc = mul_t(acc, inv_t(prefix_i))
            geo = target.identity_payload()
            for j in range(i):
                geo = mul_t(geo, t_elems[j])
            acc = mul_t(acc, geo)
        if acc != t_elems[i - 1]:
            raise CertificateError("telescoped image differs from the geodesic letter", index=i - 1)


@dataclass
class ConstructionReport:
    """Outcome of the exhaustive witness-neighborhood verification."""

    params: ConstructionParams
    quotient_order: int
    a_size: int
    a_entries: tuple[str, ...]
    witness: DeadEndWitness
    neighborhood_size: int
    rows: tuple[dict, ...]
    depth_value: DepthValue
    passed: bool

    def to_json(self) -> dict:
        return {
            "schema": "construction-report.v1",
            "params": self.params.to_json(),
            "quotient_order": self.quotient_order,
            "generating_set_size": self.a_size,
            "generating_set": list(self.a_entries),
            "witness": self.witness.to_json(),
            "neighborhood_size": self.neighborhood_size,
            "verification_table": list(self.rows),
            "witness_depth_search": self.depth_value.render(),
            "depth_lower_bound": self.params.d + 1,
            "passed": self.passed,
        }


def verify_construction(ctx: Construction) -> ConstructionReport:
    """Exhaustively confirm that everything within A-distance d of the
    witness stays inside the closed radius-n ball, certifying depth >= d+1.

    Each neighbor is checked twice: its BFS norm under A must be <= n,
    and its factorization certificate must validate with k <= n.  Any
    failure aborts loudly; a false claim here would be a bug.
    """
    params = ctx.params
    n = params.n
    failures: list[str] = []
    rows: list[dict] = []
    neighborhood = ctx.witness_neighborhood()
    for element, s_word in neighborhood:
        label = str(element)
        norm_bfs = ctx.a_ball.norm(element)
        cert_ok = False
        cert_k = None
        cert_digest = None
        try:
            cert = factorize(ctx, element, s_word)
            if cert.degenerate:
                raise CertificateError("degenerate certificate inside the witness neighborhood")
            validate_certificate(ctx, cert, near_witness=True)
            cert_ok = True
            cert_k = cert.k
            cert_digest = cert.digest()
        except CertificateError as exc:
            failures.append(f"{label}: certificate failed: {exc}")
        if norm_bfs is None or norm_bfs > n:
            failures.append(f"{label}: BFS norm {norm_bfs} not <= n = {n}")
        rows.append(
            {
                "element": label,
                "norm_A": norm_bfs,
                "certificate_k": cert_k,
                "certificate_ok": cert_ok,
                "certificate_digest": cert_digest,
            }
        )
    dv = depth(ctx.a_ball, ctx.witness.element, cap=params.d + 1)
    if dv.is_finite and dv.value <= params.d:
        failures.append(
            f"depth search found an escape at distance {dv.value} <= d = {params.d}"
        )
    if failures:
        raise VerificationError(
            f"construction verification failed for {len(failures)} case(s)", failures
        )
    return ConstructionReport(
        params=params,
        quotient_order=ctx.report.order,
        a_size=len(ctx.built.genset),
        a_entries=tuple(str(e) for e in ctx.built.genset.entries),
        witness=ctx.witness,
        neighborhood_size=len(neighborhood),
        rows=tuple(rows),
        depth_value=dv,
        passed=True,
    )
