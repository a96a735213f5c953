"""Command-line front end: constructions, depth queries, balls, reports.

Subcommands: construct, verify, certify, depth, profile, ball, diameter.
Every run writes a JSON report (stdout or --out) that echoes the exact
inputs and parameters, so any claim in a report can be re-checked from
the report alone.  Exit codes: 0 all checks passed, 2 parse/validation
error, 3 budget exhausted, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__
from .cayley import Budget, BudgetExceededError, ball, ball_cached, ball_to_csv
from .construction import (
    CertificateError,
    Construction,
    ConstructionError,
    VerificationError,
    required_n,
)
from .depth import depth, depth_profile
from .groups import (
    Cyclic,
    Dihedral,
    GeneratingSet,
    Group,
    GroupElement,
    GroupError,
    IntegerGrid,
    IntegerLine,
    Lamplighter,
    standard_gens,
)
from .quotient import (
    QuotientMap,
    cyclic_family,
    cyclic_quotient,
    diameter,
    find_quotient,
    word_quotient,
)
from .serialize import (
    content_hash,
    genset_from_json,
    group_from_json,
    payload_from_json,
)

REPORT_SCHEMA = "run-report.v1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_VERIFICATION = 4


class UsageError(Exception):
    """Bad flag values, unreadable files, malformed specs."""


# -- input parsing -----------------------------------------------------------


def parse_group(spec: str) -> Group:
    spec = spec.strip()
    if spec in ("zz", "z", "int", "line"):
        return IntegerLine()
    if spec == "lamplighter":
        return Lamplighter()
    if ":" in spec:
        kind, _, arg = spec.partition(":")
        if kind == "grid":
            return IntegerGrid(int(arg))
        if kind == "cyclic":
            return Cyclic(int(arg))
        if kind == "dihedral":
            return Dihedral(int(arg))
        if kind == "table":
            return group_from_json(_read_json(arg))
    raise UsageError(f"unrecognized group spec {spec!r}")


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from exc


def parse_element(group: Group, token: str) -> GroupElement:
    token = token.strip()
    try:
        if isinstance(group, (IntegerLine, Cyclic)):
            return group.element(int(token))
        if isinstance(group, IntegerGrid):
            return group.element([int(c) for c in token.split(",")])
        if isinstance(group, Dihedral):
            return _parse_dihedral(group, token)
        if isinstance(group, Lamplighter):
            return _parse_lamp(group, token)
        return group.element(int(token))  # table groups use ids
    except (ValueError, GroupError) as exc:
        raise UsageError(f"bad element token {token!r}: {exc}") from exc


def _parse_dihedral(group: Dihedral, token: str) -> GroupElement:
    # grammar: "r" / "r3" / "s" / "r2s"
    rot, ref = 0, 0
    rest = token
    if rest.startswith("r"):
        rest = rest[1:]
        digits = ""
        while rest and (rest[0].isdigit() or rest[0] == "-"):
            digits += rest[0]
            rest = rest[1:]
        rot = int(digits) if digits else 1
    if rest == "s":
        ref, rest = 1, ""
    if rest:
        raise ValueError(f"cannot parse dihedral token {token!r}")
    return group.element((rot, ref))


def _parse_lamp(group: Lamplighter, token: str) -> GroupElement:
    if token == "t":
        return group.element(((), 1))
    if token == "a":
        return group.element(((0,), 0))
    # grammar: "lamps@cursor", lamps dot-separated, e.g. "-1.0.1@0"
    lamps_part, _, cursor = token.partition("@")
    lamps = tuple(int(x) for x in lamps_part.split(".") if x != "")
    return group.element((lamps, int(cursor or "0")))


def parse_gens(group: Group, spec: Optional[str]) -> GeneratingSet:
    if spec is None:
        try:
            return standard_gens(group)
        except ValueError as exc:
            raise UsageError("this group needs an explicit --gens") from exc
    spec = spec.strip()
    if spec.startswith("@"):
        gens = genset_from_json(_read_json(spec[1:]))
        if gens.group != group:
            raise UsageError("--gens file group does not match --group")
        return gens
    sep = ";" if isinstance(group, IntegerGrid) else None
    tokens = spec.split(sep) if sep else spec.replace(";", ",").split(",")
    try:
        return GeneratingSet([parse_element(group, t) for t in tokens if t.strip()])
    except (ValueError, GroupError) as exc:
        raise UsageError(f"bad generating set {spec!r}: {exc}") from exc


def parse_quotient(spec: str, source_gens: GeneratingSet):
    """Returns either a QuotientMap (fixed) or a family iterator spec tuple."""
    spec = spec.strip()
    if spec == "cyclic":
        return ("family", "cyclic")
    if spec.startswith("cyclic:"):
        try:
            return cyclic_quotient(source_gens, int(spec.split(":", 1)[1]))
        except (ValueError, GroupError) as exc:
            raise UsageError(f"bad quotient {spec!r}: {exc}") from exc
    if spec.startswith("@"):
        doc = _read_json(spec[1:])
        if not isinstance(doc, dict) or doc.get("schema") != "quotient.v1":
            raise UsageError("quotient file must carry schema quotient.v1")
        target = group_from_json(doc["target"])
        images = [
            GroupElement(target, payload_from_json(target, obj)) for obj in doc["images"]
        ]
        try:
            return word_quotient(source_gens, target, images)
        except GroupError as exc:
            raise UsageError(f"bad quotient file: {exc}") from exc
    raise UsageError(f"unrecognized quotient spec {spec!r}")


_CONFIG_ALIASES = {"family": "quotient", "max_m": "quotient_max"}


def load_config(path: str) -> dict[str, str]:
    """Flat key = value file mirroring the flags; '#' starts a comment.

    Quotient families may also be spelled with the keys ``family`` and
    ``max_m`` (e.g. ``family = "cyclic"``, ``max_m = 100000``).
    """
    out: dict[str, str] = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        key = _CONFIG_ALIASES.get(key, key)
        value = value.strip().strip("\"'")
        out[key] = value
    return out


# -- report plumbing ------------------------------------------------------------


def _write_report(report: dict, out: Optional[str]) -> None:
    text = json.dumps(report, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _report(command: str, inputs: dict, results: dict, started: float) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "tool": {"name": "deadend", "version": __version__},
        "command": command,
        "inputs": inputs,
        "inputs_digest": content_hash(inputs),
        "results": results,
        "timing": {"seconds": round(time.monotonic() - started, 6)},
    }


def _budget_from_args(args) -> Budget:
    return Budget(
        max_elements=args.budget_elements,
        max_radius=args.budget_radius,
        max_seconds=args.budget_seconds,
    )


# -- subcommand implementations ----------------------------------------------------


def _build_construction(args) -> tuple[Construction, dict]:
    group = parse_group(args.group)
    if args.target_depth is None:
        raise UsageError("--target-depth is required")
    gens = parse_gens(group, args.gens)
    budget = _budget_from_args(args)
    quotient_spec = args.quotient or "cyclic"
    parsed = parse_quotient(quotient_spec, gens)
    if isinstance(parsed, QuotientMap):
        pi = parsed
    else:
        if not isinstance(group, IntegerLine):
            raise UsageError("the cyclic quotient family needs an integer-line group")
        n_prime = required_n(args.target_depth - 1)
        family = cyclic_family(gens, stop=args.quotient_max)
        pi, _ = find_quotient(family, n_prime, mode=args.quotient_mode, budget=budget)
    ctx = Construction.build(
        gens,
        pi,
        target_depth=args.target_depth,
        bound_mode=args.bound_mode,
        budget=budget,
        cache_dir=args.cache_dir,
    )
    inputs = {
        "group": args.group,
        "gens": args.gens,
        "quotient": quotient_spec,
        "quotient_order": pi.target.order(),
        "target_depth": args.target_depth,
        "bound_mode": args.bound_mode,
        "params": ctx.params.to_json(),
    }
    return ctx, inputs


def cmd_construct(args, full_table: bool = False) -> tuple[dict, dict, int]:
    ctx, inputs = _build_construction(args)
    report = ctx.verify()
    doc = report.to_json()
    if not full_table:
        doc.pop("verification_table")
    return inputs, doc, EXIT_OK if report.passed else EXIT_VERIFICATION


def cmd_certify(args) -> tuple[dict, dict, int]:
    ctx, inputs = _build_construction(args)
    if args.element is None:
        element = ctx.witness.element
    else:
        element = parse_element(ctx.source_gens.group, args.element)
    cert = ctx.certify(element)
    inputs["element"] = str(element)
    results = {
        "certificate": cert.to_json(),
        "digest": cert.digest(),
        "norm_upper_bound": None if cert.degenerate else cert.k,
    }
    return inputs, results, EXIT_OK


def cmd_depth(args) -> tuple[dict, dict, int]:
    group = parse_group(args.group)
    gens = parse_gens(group, args.gens)
    if args.element is None:
        raise UsageError("--element is required")
    element = parse_element(group, args.element)
    radius = args.radius
    if radius is None:
        raise UsageError("--radius is required")
    b = _make_ball(group, gens, radius, args)
    if b.norm(element) is None:
        raise UsageError(f"element {element} lies outside the radius-{radius} ball")
    value = depth(b, element, cap=args.cap)
    inputs = {
        "group": args.group,
        "gens": args.gens,
        "element": str(element),
        "radius": radius,
        "cap": args.cap,
    }
    results = {"norm": b.norm(element), "depth": value.render()}
    return inputs, results, EXIT_OK


def cmd_profile(args) -> tuple[dict, dict, int]:
    group = parse_group(args.group)
    gens = parse_gens(group, args.gens)
    if args.radius is None:
        raise UsageError("--radius is required")
    b = _make_ball(group, gens, args.radius, args)
    prof = depth_profile(b, cap=args.cap)
    if args.csv:
        prof.to_csv(args.csv)
    inputs = {
        "group": args.group,
        "gens": args.gens,
        "radius": args.radius,
        "cap": args.cap,
    }
    return inputs, prof.summary_json(), EXIT_OK


def cmd_ball(args) -> tuple[dict, dict, int]:
    group = parse_group(args.group)
    gens = parse_gens(group, args.gens)
    if args.radius is None:
        raise UsageError("--radius is required")
    b = _make_ball(group, gens, args.radius, args)
    if args.csv:
        ball_to_csv(b, args.csv)
    inputs = {"group": args.group, "gens": args.gens, "radius": args.radius}
    results = {
        "elements": len(b),
        "sphere_sizes": list(b.sphere_sizes),
        "radius": b.radius,
    }
    return inputs, results, EXIT_OK


def cmd_diameter(args) -> tuple[dict, dict, int]:
    group = parse_group(args.group)
    if group.order() is None:
        raise UsageError("diameter needs a finite group")
    gens = parse_gens(group, args.gens)
    report = diameter(group, gens, _budget_from_args(args))
    inputs = {"group": args.group, "gens": args.gens}
    return inputs, report.to_json(), EXIT_OK


def _make_ball(group, gens, radius, args):
    budget = _budget_from_args(args)
    if args.cache_dir:
        return ball_cached(group, gens, radius, args.cache_dir, budget)
    return ball(group, gens, radius, budget)


# -- argument plumbing ----------------------------------------------------------------


_DEFAULTS = {
    "gens": None,
    "quotient": None,
    "quotient_mode": "greedy",
    "quotient_max": 1_000_000,
    "target_depth": None,
    "bound_mode": "paper",
    "element": None,
    "radius": None,
    "cap": 32,
    "csv": None,
    "out": None,
    "cache_dir": None,
    "budget_elements": 10_000_000,
    "budget_radius": 10_000,
    "budget_seconds": 600.0,
}

_INT_KEYS = {"quotient_max", "target_depth", "radius", "cap", "budget_elements", "budget_radius"}
_FLOAT_KEYS = {"budget_seconds"}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--group", required=True,
        help="zz | grid:R | cyclic:M | dihedral:M | lamplighter | table:FILE",
    )
    parser.add_argument("--gens", help="comma-separated entries, or @FILE (genset.v1 JSON)")
    parser.add_argument("--config", help="flat key = value file; flags override")
    parser.add_argument("--out", help="write the JSON report here instead of stdout")
    parser.add_argument("--cache-dir", dest="cache_dir", help="ball cache directory")
    parser.add_argument("--budget-elements", dest="budget_elements", type=int)
    parser.add_argument("--budget-radius", dest="budget_radius", type=int)
    parser.add_argument("--budget-seconds", dest="budget_seconds", type=float)


def _add_construction_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--quotient", help="cyclic:M | cyclic (family search) | @FILE (quotient.v1)"
    )
    parser.add_argument("--quotient-mode", dest="quotient_mode", choices=["greedy", "paper_safe"])
    parser.add_argument("--quotient-max", dest="quotient_max", type=int)
    parser.add_argument("--target-depth", dest="target_depth", type=int)
    parser.add_argument("--bound-mode", dest="bound_mode", choices=["paper", "tight"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deadend",
        description="Word metrics, dead-end depth, and quotient-built deep generating sets.",
    )
    parser.add_argument("--version", action="version", version=f"deadend {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a deep generating set and verify it")
    _add_common(p)
    _add_construction_flags(p)

    p = sub.add_parser("verify", help="construct plus the full per-element verification table")
    _add_common(p)
    _add_construction_flags(p)

    p = sub.add_parser("certify", help="factorization certificate for one element")
    _add_common(p)
    _add_construction_flags(p)
    p.add_argument("--element", help="element token; defaults to the witness")

    p = sub.add_parser("depth", help="dead-end depth of one element")
    _add_common(p)
    p.add_argument("--element", help="element token")
    p.add_argument("--radius", type=int, help="ball radius (must cover the element)")
    p.add_argument("--cap", type=int, help="depth search cap (default 32)")

    p = sub.add_parser("profile", help="depth of every element within a radius")
    _add_common(p)
    p.add_argument("--radius", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--csv", help="also write (element, norm, depth) rows here")

    p = sub.add_parser("ball", help="closed ball: sizes and optional CSV export")
    _add_common(p)
    p.add_argument("--radius", type=int)
    p.add_argument("--csv", help="write (element, norm) rows here")

    p = sub.add_parser("diameter", help="diameter of a finite group under gens")
    _add_common(p)
    return parser


def _merge_config(args: argparse.Namespace) -> argparse.Namespace:
    config = load_config(args.config) if getattr(args, "config", None) else {}
    for key, value in config.items():
        if key not in _DEFAULTS and key != "group":
            raise UsageError(f"unknown config key {key!r}")
        if getattr(args, key, None) is None:
            if key in _INT_KEYS:
                parsed: Any = int(value)
            elif key in _FLOAT_KEYS:
                parsed = float(value)
            else:
                parsed = value
            setattr(args, key, parsed)
    for key, default in _DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, default)
    return args


_HANDLERS = {
    "construct": lambda args: cmd_construct(args, full_table=False),
    "verify": lambda args: cmd_construct(args, full_table=True),
    "certify": cmd_certify,
    "depth": cmd_depth,
    "profile": cmd_profile,
    "ball": cmd_ball,
    "diameter": cmd_diameter,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        args = _merge_config(args)
        inputs, results, code = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (VerificationError, CertificateError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write_report(_report(args.command, inputs, results, started), args.out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
