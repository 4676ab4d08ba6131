"""Command-line front door.

Commands: ``to-spp`` (indicator set to profile set), ``to-mbti`` (profile
to indicator set), ``verify`` (randomized law suites), ``precompute`` /
``lookup`` (polarity table on disk), ``interp`` (inspect or validate
interpretation documents).  Human-readable output is the default;
``--format machine`` prints one JSON object with stable field names, in
which profiles, indicator sets, and boxes use the same text grammars the
parsers accept.

Exit codes: 0 success, 2 parse/usage errors, 3 verification or
interpretation-validation failures, 4 cache errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path
from typing import Sequence

from .cache import CacheError, PolarityCache, open_cache, write_cache
from .connection import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    left_polarity,
    right_polarity,
    run_verification,
)
from .core import (
    GrammarError,
    TypeIndicator,
    parse_indicator_set,
    parse_profile,
    render_indicator_set,
)
from .boxes import ProfileSet
from .interpret import (
    Interpretation,
    InterpretationError,
    builtin_interpretation,
    dominance_consistent,
    load_interpretation,
)
from .logic import render_formula

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_CACHE = 4


def _read_text(path: str, kind: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GrammarError(f"cannot read {kind} {path}: {exc}") from exc


def _active_interpretation(args) -> Interpretation:
    if getattr(args, "interp", None):
        return load_interpretation(_read_text(args.interp, "interpretation document"))
    return builtin_interpretation()


def _open_cache(path: str) -> PolarityCache:
    try:
        return open_cache(path)
    except OSError as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from exc


def _emit(args, payload: dict, human_lines: list[str]) -> None:
    if args.format_ == "machine":
        print(json.dumps(payload))
    else:
        print("\n".join(human_lines))


def _profile_set_output(
    args, payload: dict, lines: list[str], result: ProfileSet
) -> None:
    """Shared count/sample/boxes rendering for to-spp and lookup."""
    payload["count"] = result.count()
    lines.append(f"count: {result.count()}")
    if getattr(args, "boxes", False):
        boxes = result.to_payload()["boxes"]
        payload["boxes"] = boxes
        lines.append(f"boxes: {len(boxes)}")
        for position, tokens in enumerate(boxes, start=1):
            lines.append(f"  box {position}: {' '.join(tokens)}")
    if getattr(args, "sample", 0):
        rng = random.Random(args.seed)
        drawn = result.sample(rng, args.sample)
        payload["seed"] = args.seed
        payload["sample"] = [str(p) for p in drawn]
        lines.append(f"sample ({len(drawn)} profiles, seed {args.seed}):")
        lines.extend(f"  {p}" for p in drawn)
    target = getattr(args, "enumerate_to", None)
    if target:
        written = 0
        with open(target, "w", encoding="utf-8") as handle:
            for profile in result.iter_profiles():
                handle.write(str(profile) + "\n")
                written += 1
        payload["enumerated_to"] = target
        payload["enumerated"] = written
        lines.append(f"enumerated {written} profiles to {target}")


def _cmd_to_spp(args) -> int:
    interp = _active_interpretation(args)
    indicators = parse_indicator_set(args.indicators)
    start = time.perf_counter()
    result = right_polarity(interp, indicators)
    elapsed_ms = (time.perf_counter() - start) * 1000
    rendered = render_indicator_set(indicators)
    payload = {"command": "to-spp", "indicators": rendered}
    lines = [f"indicators: {rendered}"]
    _profile_set_output(args, payload, lines, result)
    payload["elapsed_ms"] = round(elapsed_ms, 3)
    lines.append(f"elapsed: {elapsed_ms:.1f} ms")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_to_mbti(args) -> int:
    interp = _active_interpretation(args)
    profile = parse_profile(args.profile)
    start = time.perf_counter()
    indicators = left_polarity(interp, [profile])
    elapsed_ms = (time.perf_counter() - start) * 1000
    rendered = render_indicator_set(indicators)
    payload = {
        "command": "to-mbti",
        "profile": str(profile),
        "indicators": rendered,
        "count": len(indicators),
        "elapsed_ms": round(elapsed_ms, 3),
    }
    lines = [
        f"profile: {profile}",
        f"indicators: {rendered}",
        f"elapsed: {elapsed_ms:.1f} ms",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_verify(args) -> int:
    interp = _active_interpretation(args)
    report = run_verification(interp, args.suite, args.trials, args.seed)
    if args.format_ == "machine":
        payload = report.to_payload()
        payload["command"] = "verify"
        print(json.dumps(payload))
    else:
        print(report.render())
    return EXIT_OK if report.passed else EXIT_VERIFY


def _cmd_precompute(args) -> int:
    interp = _active_interpretation(args)
    start = time.perf_counter()
    path = write_cache(args.cache, interp, progress=(args.format_ == "human"))
    elapsed_ms = (time.perf_counter() - start) * 1000
    payload = {
        "command": "precompute",
        "path": str(path),
        "entries": 1 << 16,
        "fingerprint": interp.fingerprint(),
        "elapsed_ms": round(elapsed_ms, 3),
    }
    lines = [
        f"wrote polarity table: {path}",
        f"entries: {1 << 16}",
        f"fingerprint: {interp.fingerprint()}",
        f"elapsed: {elapsed_ms / 1000:.1f} s",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_lookup(args) -> int:
    interp = _active_interpretation(args)
    indicators = parse_indicator_set(args.indicators)
    cache = _open_cache(args.cache)
    cache.check_fingerprint(interp)
    start = time.perf_counter()
    result = cache.lookup(indicators)
    elapsed_ms = (time.perf_counter() - start) * 1000
    rendered = render_indicator_set(indicators)
    payload = {
        "command": "lookup",
        "indicators": rendered,
        "cache": str(cache.path),
    }
    lines = [f"indicators: {rendered}", f"cache: {cache.path}"]
    _profile_set_output(args, payload, lines, result)
    payload["elapsed_ms"] = round(elapsed_ms, 3)
    lines.append(f"elapsed: {elapsed_ms:.1f} ms")
    _emit(args, payload, lines)
    return EXIT_OK


def _interp_summary(interp: Interpretation, source: str) -> tuple[dict, list[str]]:
    if interp.basic is not None:
        mode = "builtin" if source == "builtin" else "basic"
    else:
        mode = "rows"
    dominance = dominance_consistent(interp) if interp.basic is not None else None
    payload = {
        "command": "interp",
        "source": source,
        "mode": mode,
        "fingerprint": interp.fingerprint(),
        "negation_free": interp.negation_free,
        "dominance_consistent": dominance,
        "warnings": list(interp.warnings),
    }
    lines = [
        f"source: {source}",
        f"mode: {mode}",
        f"fingerprint: {interp.fingerprint()}",
        f"negation-free: {'yes' if interp.negation_free else 'no'}",
    ]
    if dominance is None:
        lines.append("dominance rule: not checkable (explicit rows, no basic entries)")
    else:
        lines.append(f"dominance rule: {'consistent' if dominance else 'INCONSISTENT'}")
    for warning in interp.warnings:
        lines.append(f"warning: {warning}")
    return payload, lines


def _cmd_interp(args) -> int:
    if args.action in {"load", "check"} and args.path:
        interp = load_interpretation(_read_text(args.path, "interpretation document"))
        source = args.path
    elif args.action == "load":
        raise GrammarError("interp load requires a document path")
    else:
        interp = _active_interpretation(args)
        source = getattr(args, "interp", None) or "builtin"

    if args.action == "show":
        payload, _ = _interp_summary(interp, source)
        payload["action"] = "show"
        payload["rows"] = {
            ind.name: render_formula(interp.row(ind)) for ind in TypeIndicator
        }
        if args.format_ == "machine":
            print(json.dumps(payload))
        else:
            print(interp.document(), end="")
        return EXIT_OK

    payload, lines = _interp_summary(interp, source)
    payload["action"] = args.action
    passed = payload["dominance_consistent"] in (True, None)
    payload["ok"] = passed
    lines.insert(0, "interpretation document is valid")
    _emit(args, payload, lines)
    return EXIT_OK if passed else EXIT_VERIFY


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--interp",
        metavar="PATH",
        help="use this interpretation document instead of the built-in translation",
    )
    parser.add_argument(
        "--format",
        dest="format_",
        choices=("human", "machine"),
        default="human",
        help="output style; machine prints one JSON object",
    )


def _add_set_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--sample",
        type=int,
        default=0,
        metavar="N",
        help="print N profiles drawn from the result (deterministic per seed)",
    )
    parser.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="random seed for sampling"
    )
    parser.add_argument(
        "--boxes", action="store_true", help="print the result's signature boxes"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbti-szondi",
        description=(
            "Translate between Myers-Briggs type-indicator sets and Szondi "
            "personality-profile sets via their Galois connection."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser(
        "to-spp", help="profiles satisfying an indicator set's translation"
    )
    p.add_argument(
        "indicators", help='indicator set, e.g. "ISTJ", "istj,estp", or "{}"'
    )
    _add_set_output_flags(p)
    p.add_argument(
        "--enumerate-to",
        metavar="PATH",
        help="write every member profile to PATH, one per line",
    )
    _add_common(p)
    p.set_defaults(handler=_cmd_to_spp)

    p = sub.add_parser(
        "to-mbti", help="indicators whose translation a profile satisfies"
    )
    p.add_argument(
        "profile", help='profile, e.g. "h+ s+ e- hy- k- p- d+ m+"'
    )
    _add_common(p)
    p.set_defaults(handler=_cmd_to_mbti)

    p = sub.add_parser("verify", help="run the randomized verification suites")
    p.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=("facts", "lemma", "theorem", "all"),
        help="which suite to run (default: all)",
    )
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "precompute", help="compute all 65,536 polarities into a table file"
    )
    p.add_argument("--cache", metavar="PATH", required=True, help="output path")
    _add_common(p)
    p.set_defaults(handler=_cmd_precompute)

    p = sub.add_parser("lookup", help="answer to-spp queries from a table file")
    p.add_argument("indicators", help="indicator set to look up")
    p.add_argument("--cache", metavar="PATH", required=True, help="table file")
    _add_set_output_flags(p)
    _add_common(p)
    p.set_defaults(handler=_cmd_lookup)

    p = sub.add_parser("interp", help="inspect or validate interpretations")
    p.add_argument(
        "action",
        choices=("show", "check", "load"),
        help="show the active rows, or validate a document",
    )
    p.add_argument("path", nargs="?", help="interpretation document for check/load")
    _add_common(p)
    p.set_defaults(handler=_cmd_interp)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.handler(args)
    except GrammarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InterpretationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except CacheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
