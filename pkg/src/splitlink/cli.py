"""Command-line entry point.

Usage::

    splitlink states
    splitlink analyze star --format json
    splitlink analyze --file psi.json --semantics necessitarian
    splitlink measure star --qubit 2 --outcome 0
    splitlink schmidt ghz --left 0 --right 1,2

Exit codes: 0 on success, 1 for unreadable or malformed input files,
2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .classify import CutSemantics, classify, matching_models
from .errors import SplitLinkError
from .io import REPORT_FORMATS, ReportDocument, read_state_file, render_report
from .measure import measure_computational
from .profile import build_profile
from .schmidt import Bipartition, schmidt_decompose
from .state import (
    CanonicalState,
    PureState,
    construct_canonical,
    definition_string,
    ket_string,
    qubit_label,
)

CANONICAL_NAMES = [c.value for c in CanonicalState]


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def _add_selector(p: argparse.ArgumentParser) -> None:
    p.add_argument("name", nargs="?", choices=CANONICAL_NAMES, help="canonical state")
    p.add_argument("--file", help="JSON state file instead of a canonical name")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitlink",
        description="Single-qubit measurement splitting profiles and their link analogues.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full splitting profile and classification")
    _add_selector(p)
    p.add_argument("--format", choices=REPORT_FORMATS, default="table")
    p.add_argument(
        "--semantics", choices=[s.value for s in CutSemantics], default="possibilistic"
    )

    p = sub.add_parser("measure", help="one computational-basis measurement outcome")
    _add_selector(p)
    p.add_argument("--qubit", type=int, required=True)
    p.add_argument("--outcome", type=int, choices=(0, 1), required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("schmidt", help="Schmidt decomposition across a bipartition")
    _add_selector(p)
    p.add_argument("--left", required=True, help="comma-separated qubit indices")
    p.add_argument("--right", required=True, help="comma-separated qubit indices")
    p.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("states", help="list canonical states")
    return parser


def _load(args) -> tuple[str, PureState]:
    if (args.name is None) == (args.file is None):
        raise UsageError("give exactly one of a canonical state name or --file")
    if args.name is not None:
        return args.name, construct_canonical(args.name)
    try:
        return args.file, read_state_file(args.file)
    except OSError as exc:
        raise InputError(f"cannot read state file {args.file}: {exc.strerror or exc}") from None
    except (SplitLinkError, ValueError) as exc:
        raise InputError(f"invalid state file {args.file}: {exc}") from None


def _indices(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated qubit indices, got {text!r}") from None


def cmd_analyze(args) -> str:
    label, state = _load(args)
    if state.num_qubits != 3:
        raise UsageError(f"analyze needs a 3-qubit state, {label} has {state.num_qubits}")
    profile = build_profile(state, label)
    result = classify(profile)
    matches = [m.title for m in matching_models(profile, args.semantics)]
    note = f"cut-consistent models ({args.semantics}): " + (", ".join(matches) or "none")
    result = type(result)(
        result.primary_analogue, result.center, result.borromean_outcomes, result.notes + (note,)
    )
    doc = ReportDocument(label, profile, result, __version__)
    return render_report(doc, args.format)


def cmd_measure(args) -> str:
    label, state = _load(args)
    if not 0 <= args.qubit < state.num_qubits:
        raise UsageError(f"qubit {args.qubit} out of range for {state.num_qubits}-qubit {label}")
    if state.num_qubits < 2:
        raise UsageError("measurement needs at least two qubits")
    rec = measure_computational(state, args.qubit)[args.outcome]
    rest = "".join(qubit_label(q) for q in range(state.num_qubits) if q != args.qubit)
    if args.format == "json":
        return json.dumps(
            {
                "qubit": qubit_label(rec.qubit),
                "outcome": rec.outcome,
                "probability": rec.probability,
                "post_state": None if rec.post_state is None else ket_string(rec.post_state),
                "remaining": rest,
            },
            sort_keys=True,
            indent=2,
        ) + "\n"
    post = "none (outcome never occurs)" if rec.post_state is None else (
        f"({ket_string(rec.post_state)})_{rest}"
    )
    return (
        f"state: {label}\nqubit: {qubit_label(rec.qubit)}\noutcome: {rec.outcome}\n"
        f"probability: {rec.probability!r}\npost_state: {post}\n"
    )


def cmd_schmidt(args) -> str:
    label, state = _load(args)
    partition = Bipartition(_indices(args.left), _indices(args.right))
    try:
        res = schmidt_decompose(state, partition)
    except SplitLinkError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return json.dumps(
            {
                "left": list(partition.left),
                "right": list(partition.right),
                "coefficients": list(res.coefficients),
                "gram_eigenvalues": list(res.gram_eigenvalues),
                "rank": res.rank,
                "maximally_entangled": res.maximally_entangled,
            },
            sort_keys=True,
            indent=2,
        ) + "\n"
    fmt = lambda xs: ", ".join(f"{x:.12g}" for x in xs)  # noqa: E731
    return (
        f"state: {label}\npartition: {list(partition.left)} | {list(partition.right)}\n"
        f"coefficients: {fmt(res.coefficients)}\n"
        f"gram_eigenvalues: {fmt(res.gram_eigenvalues)}\n"
        f"rank: {res.rank}\nmaximally_entangled: {str(res.maximally_entangled).lower()}\n"
    )


def cmd_states(args) -> str:
    return "".join(f"{c.value} = {definition_string(c)}\n" for c in CanonicalState)


COMMANDS = {
    "analyze": cmd_analyze,
    "measure": cmd_measure,
    "schmidt": cmd_schmidt,
    "states": cmd_states,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        sys.stdout.write(COMMANDS[args.command](args))
    except UsageError as exc:
        print(f"splitlink {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"splitlink {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
