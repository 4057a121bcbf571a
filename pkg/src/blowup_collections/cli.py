"""Command-line interface for the collection-enumeration engine.

Subcommands
-----------

=============  ======================================================
``chi``        Euler characteristic of one divisor class
``vanish``     three-valued cohomology-vanishing verdict
``pairs-table``certified pairwise-compatibility table of a variety
``enumerate``  exhaustive length-6 collection search over a window
``classify``   match a collection (JSON) against the type catalogue
``rotate``     helix rotation of a normalized length-6 collection
``transpose``  transposition of completely orthogonal neighbours
``augment``    lift a length-4 collection from projective 3-space
``dioph``      solve the conic Diophantine system (cubic model)
``verify``     run one named end-to-end check (or ``all``)
=============  ======================================================

Collections are exchanged as JSON objects
``{"variety": "point"|"line"|"cubic", "entries": [[a, b], ...]}``.

Exit status: 0 on success, 1 when a ``verify`` check fails, 2 on usage
errors.  All output is plain UTF-8 text with deterministic ordering; no
ANSI color is ever emitted, so ``NO_COLOR`` is honored trivially.
"""

from __future__ import annotations

import argparse
import json
import sys
from enum import Enum
from typing import Optional, Sequence

from .geometry import DivisorClass, euler_char, euler_char_closed, variety_model
from .vanishing import coh_zero
from .sequences import (
    Collection,
    augment_point_blowup,
    helix_rotate_left,
    helix_rotate_right,
    normalize,
    transpose_orthogonal,
)
from .families import matching_type_labels
from .enumeration import enumerate_collections
from .tables import pair_table
from .diophantine import solve_claim_6_3
from .verify import VERIFY_TOKENS, check_augmentation, check_chi_agreement, run_check

__all__ = ["OutputFormat", "main", "build_parser"]


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    MARKDOWN = "markdown"


class _UsageError(Exception):
    """Invalid input detected after argument parsing."""


def _parse_divisor(text: str) -> DivisorClass:
    parts = text.split(",")
    if len(parts) != 2:
        raise _UsageError(f"expected a divisor as 'a,b', got {text!r}")
    try:
        return DivisorClass(int(parts[0]), int(parts[1]))
    except ValueError:
        raise _UsageError(f"divisor coordinates must be integers, got {text!r}") from None


def _parse_degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _UsageError(f"expected comma-separated integers, got {text!r}") from None


def _read_collection(path: str) -> Collection:
    if path == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                raw = handle.read()
        except OSError as exc:
            raise _UsageError(f"cannot read {path}: {exc}") from None
    try:
        return Collection.from_json(raw)
    except (ValueError, json.JSONDecodeError) as exc:
        raise _UsageError(f"invalid collection JSON in {path}: {exc}") from None


def _dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join value-taking flags with their (possibly negative) values.

    ``--divisor -1,2`` would otherwise be read by ``argparse`` as a flag
    followed by an unknown option; rewriting it to ``--divisor=-1,2``
    sidesteps that without forbidding negative coordinates.
    """
    joined: list[str] = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in ("--divisor", "--degrees") and i + 1 < len(argv):
            joined.append(f"{token}={argv[i + 1]}")
            skip = True
        else:
            joined.append(token)
    return joined


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blowup-collections",
        description=(
            "Exact enumeration and verification of exceptional collections of "
            "line bundles on the blow-up of projective 3-space at a point, a "
            "line, or a twisted cubic curve."
        ),
        epilog="All output is plain text without ANSI color.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_variety(p, required=True):
        p.add_argument(
            "--variety",
            choices=("point", "line", "cubic"),
            required=required,
            help="which blow-up model to use",
        )

    def add_format(p, choices, default):
        p.add_argument(
            "--format",
            choices=[c.value for c in choices],
            default=default.value,
            help=f"output format (default: {default.value})",
        )

    p_chi = sub.add_parser("chi", help="Euler characteristic of a divisor class")
    add_variety(p_chi)
    p_chi.add_argument("--divisor", required=True, help="divisor class as 'a,b'")
    add_format(p_chi, (OutputFormat.TEXT, OutputFormat.JSON), OutputFormat.TEXT)

    p_van = sub.add_parser("vanish", help="cohomology-vanishing verdict")
    add_variety(p_van)
    p_van.add_argument("--divisor", required=True, help="divisor class as 'a,b'")
    add_format(p_van, (OutputFormat.TEXT, OutputFormat.JSON), OutputFormat.TEXT)

    p_tab = sub.add_parser("pairs-table", help="pairwise-compatibility table")
    add_variety(p_tab)
    p_tab.add_argument(
        "--window", type=int, default=15,
        help="parameter half-width of the certification scan (default: 15)",
    )
    add_format(
        p_tab,
        (OutputFormat.MARKDOWN, OutputFormat.CSV, OutputFormat.JSON),
        OutputFormat.MARKDOWN,
    )

    p_enum = sub.add_parser("enumerate", help="exhaustive length-6 search")
    add_variety(p_enum)
    p_enum.add_argument(
        "--window", type=int, default=15,
        help="coordinate half-width of the search window (default: 15)",
    )
    add_format(p_enum, (OutputFormat.JSON, OutputFormat.TEXT), OutputFormat.JSON)

    p_cls = sub.add_parser("classify", help="match a collection against the catalogue")
    add_variety(p_cls, required=False)
    p_cls.add_argument(
        "--input", required=True,
        help="path of a collection JSON file, or '-' for stdin",
    )
    add_format(p_cls, (OutputFormat.TEXT, OutputFormat.JSON), OutputFormat.TEXT)

    p_rot = sub.add_parser("rotate", help="helix rotation of a collection")
    add_variety(p_rot, required=False)
    p_rot.add_argument("--input", required=True, help="collection JSON file or '-'")
    p_rot.add_argument(
        "--direction", choices=("right", "left"), default="right",
        help="rotation direction (default: right)",
    )
    add_format(p_rot, (OutputFormat.JSON, OutputFormat.TEXT), OutputFormat.JSON)

    p_tr = sub.add_parser("transpose", help="swap completely orthogonal neighbours")
    add_variety(p_tr, required=False)
    p_tr.add_argument("--input", required=True, help="collection JSON file or '-'")
    p_tr.add_argument(
        "--index", type=int, required=True,
        help="1-based position of the left member of the swapped pair",
    )
    add_format(p_tr, (OutputFormat.JSON, OutputFormat.TEXT), OutputFormat.JSON)

    p_aug = sub.add_parser("augment", help="lift a length-4 collection (point model)")
    p_aug.add_argument(
        "--degrees", required=True,
        help="the four twists downstairs, e.g. '0,1,2,3'",
    )
    p_aug.add_argument(
        "--index", type=int, required=True,
        help="1-based pivot position (2..4)",
    )
    add_format(p_aug, (OutputFormat.JSON, OutputFormat.TEXT), OutputFormat.JSON)

    p_dio = sub.add_parser("dioph", help="solve the conic Diophantine system")
    p_dio.add_argument(
        "--window", type=int, default=50,
        help="coordinate bound on solutions (default: 50)",
    )
    add_format(p_dio, (OutputFormat.TEXT, OutputFormat.JSON), OutputFormat.TEXT)

    p_ver = sub.add_parser("verify", help="run a named end-to-end check")
    p_ver.add_argument(
        "token",
        choices=VERIFY_TOKENS + ("all",),
        help="which check to run",
    )
    p_ver.add_argument("--window", type=int, default=None, help="override scan window")
    p_ver.add_argument(
        "--param-range", type=int, default=None,
        help="override the relations parameter range",
    )
    return parser


def _collection_payload(seq: Collection, model) -> dict:
    labels = ()
    if len(seq.entries) == 6 and seq.is_normalized:
        labels = matching_type_labels(model, seq)
    return {
        "collection": seq.to_json_dict(),
        "types": [label.to_json_dict() for label in labels],
    }


def _emit_collection(seq: Collection, fmt: str) -> None:
    if fmt == OutputFormat.TEXT.value:
        print(seq)
    else:
        print(_dump_json(seq.to_json_dict()))


def _model_for(args, seq: Optional[Collection] = None):
    variety = getattr(args, "variety", None)
    if variety is None:
        if seq is None:
            raise _UsageError("--variety is required here")
        variety = seq.variety
    if seq is not None and seq.variety != variety:
        raise _UsageError(
            f"collection is tagged {seq.variety!r} but --variety says {variety!r}"
        )
    return variety_model(variety)


def _cmd_chi(args) -> int:
    model = _model_for(args)
    d = _parse_divisor(args.divisor)
    value = euler_char(model, d)
    closed = euler_char_closed(model, d)
    if value != closed:  # pragma: no cover - the test-suite pins agreement
        raise AssertionError(f"chi routes disagree at {d}: {value} vs {closed}")
    if args.format == OutputFormat.JSON.value:
        print(_dump_json({"variety": model.tag, "divisor": [d.a, d.b], "chi": value}))
    else:
        print(value)
    return 0


def _cmd_vanish(args) -> int:
    model = _model_for(args)
    d = _parse_divisor(args.divisor)
    verdict = coh_zero(model, d)
    if args.format == OutputFormat.JSON.value:
        print(
            _dump_json(
                {
                    "variety": model.tag,
                    "divisor": [d.a, d.b],
                    "verdict": verdict.value,
                }
            )
        )
    else:
        print(verdict.value)
    return 0


def _cmd_pairs_table(args) -> int:
    model = _model_for(args)
    table = pair_table(model, args.window)
    if args.format == OutputFormat.JSON.value:
        print(_dump_json(table.to_json_dict()))
    elif args.format == OutputFormat.CSV.value:
        print(table.to_csv(), end="")
    else:
        print(table.to_markdown())
    return 0


def _cmd_enumerate(args) -> int:
    model = _model_for(args)
    report = enumerate_collections(model, args.window)
    if args.format == OutputFormat.TEXT.value:
        print(report.summary())
        for seq, label in report.confirmed:
            print(f"{label.render()}: {seq}")
        for seq in report.undetermined:
            print(f"undetermined: {seq}")
    else:
        print(_dump_json(report.to_json_dict()))
    return 0


def _cmd_classify(args) -> int:
    seq = _read_collection(args.input)
    model = _model_for(args, seq)
    normalized = normalize(seq)
    if len(normalized.entries) != 6:
        raise _UsageError("classification needs a length-6 collection")
    labels = matching_type_labels(model, normalized)
    if args.format == OutputFormat.JSON.value:
        print(
            _dump_json(
                {
                    "collection": seq.to_json_dict(),
                    "normalized": normalized.to_json_dict(),
                    "types": [label.to_json_dict() for label in labels],
                }
            )
        )
    elif labels:
        for label in labels:
            print(label.render())
    else:
        print("no matching type")
    return 0


def _cmd_rotate(args) -> int:
    seq = _read_collection(args.input)
    model = _model_for(args, seq)
    try:
        if args.direction == "left":
            result = helix_rotate_left(model, normalize(seq))
        else:
            result = helix_rotate_right(model, normalize(seq))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _emit_collection(result, args.format)
    return 0


def _cmd_transpose(args) -> int:
    seq = _read_collection(args.input)
    model = _model_for(args, seq)
    if args.index < 1:
        raise _UsageError("--index is 1-based and must be positive")
    try:
        result = transpose_orthogonal(model, seq, args.index - 1)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _emit_collection(result, args.format)
    return 0


def _cmd_augment(args) -> int:
    degrees = _parse_degrees(args.degrees)
    try:
        result = augment_point_blowup(degrees, args.index)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if args.format == OutputFormat.TEXT.value:
        print(result)
    else:
        model = variety_model("point")
        print(_dump_json(_collection_payload(normalize(result), model) | {
            "lift": result.to_json_dict(),
        }))
    return 0


def _cmd_dioph(args) -> int:
    try:
        solutions = solve_claim_6_3(args.window)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if args.format == OutputFormat.JSON.value:
        print(
            _dump_json(
                {"window": args.window, "solutions": [list(s) for s in solutions]}
            )
        )
    else:
        for sol in solutions:
            print(",".join(str(x) for x in sol))
    return 0


def _cmd_verify(args) -> int:
    if args.token == "all":
        tokens = list(VERIFY_TOKENS)
        results = [run_check(t, args.window, args.param_range) for t in tokens]
        results.append(check_chi_agreement(args.window if args.window else 30))
        results.append(check_augmentation())
    else:
        results = [run_check(args.token, args.window, args.param_range)]
    ok = True
    for result in results:
        print(result.status_line())
        if not result.ok:
            ok = False
            for line in result.details:
                print(f"  {line}")
    return 0 if ok else 1


_COMMANDS = {
    "chi": _cmd_chi,
    "vanish": _cmd_vanish,
    "pairs-table": _cmd_pairs_table,
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "rotate": _cmd_rotate,
    "transpose": _cmd_transpose,
    "augment": _cmd_augment,
    "dioph": _cmd_dioph,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_merge_negative_values(raw))
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
