"""State files in, reports out.

State file::

    {"num_qubits": 2, "amplitudes": [[1, 0], [0, 0], [0, 0], [1, 0]]}

Amplitudes are ``[re, im]`` pairs in big-endian basis order and are
normalized on load.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
import os
from dataclasses import dataclass
from typing import Any

import numpy as np

from .classify import Analogue, ClassificationResult
from .errors import LengthMismatch, ParseError, SchemaError
from .profile import SplittingEntry, SplittingProfile
from .state import PureState, from_amplitudes, ket_string, qubit_index, qubit_label

REPORT_FORMATS = ("table", "json", "csv")


@dataclass(frozen=True)
class ReportDocument:
    state_label: str
    profile: SplittingProfile
    classification: ClassificationResult
    tool_version: str


# -- state files ---------------------------------------------------------------


def parse_state(text: str, source: str = "<string>") -> PureState:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise SchemaError(f"{source}: top level must be an object")
    missing = [k for k in ("num_qubits", "amplitudes") if k not in doc]
    if missing:
        raise SchemaError(f"{source}: missing key(s) {', '.join(missing)}")
    n, raw = doc["num_qubits"], doc["amplitudes"]
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= 10:
        raise SchemaError(f"{source}: num_qubits must be an integer in 1..10, got {n!r}")
    if not isinstance(raw, list):
        raise SchemaError(f"{source}: amplitudes must be an array")
    amps = []
    for i, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
            or not all(math.isfinite(x) for x in pair)
        ):
            raise SchemaError(f"{source}: amplitude {i} must be a [re, im] pair of finite numbers")
        amps.append(complex(pair[0], pair[1]))
    try:
        return from_amplitudes(n, amps)
    except LengthMismatch as exc:
        raise SchemaError(f"{source}: {exc}") from None


def read_state_file(path: str | os.PathLike) -> PureState:
    """Load and normalize a state file. ``OSError`` propagates for unreadable paths."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_state(text, source=os.fspath(path))


def state_to_json(state: PureState) -> dict[str, Any]:
    return {
        "num_qubits": state.num_qubits,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }


def write_state_file(path: str | os.PathLike, state: PureState) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(state_to_json(state), fh)
        fh.write("\n")


# -- reports -------------------------------------------------------------------


def _entry_to_json(e: SplittingEntry) -> dict[str, Any]:
    return {
        "qubit": qubit_label(e.qubit),
        "outcome": e.outcome,
        "probability": e.probability,
        "rank": e.rank,
        "gram_eigenvalues": None if e.gram_eigenvalues is None else list(e.gram_eigenvalues),
        "post_state": None if e.post_state is None else state_to_json(e.post_state),
    }


def _entry_from_json(row: dict[str, Any]) -> SplittingEntry:
    post = row.get("post_state")
    if post is not None:
        post = PureState(
            post["num_qubits"], np.array([complex(re, im) for re, im in post["amplitudes"]])
        )
    gram = row.get("gram_eigenvalues")
    return SplittingEntry(
        qubit=qubit_index(row["qubit"]),
        outcome=int(row["outcome"]),
        probability=float(row["probability"]),
        rank=row["rank"],
        gram_eigenvalues=None if gram is None else tuple(float(x) for x in gram),
        post_state=post,
    )


def report_to_json(doc: ReportDocument) -> dict[str, Any]:
    c = doc.classification
    return {
        "state_label": doc.state_label,
        "profile": [_entry_to_json(e) for e in doc.profile.entries],
        "classification": {
            "primary_analogue": c.primary_analogue.value,
            "center": None if c.center is None else qubit_label(c.center),
            "borromean_outcomes": [[qubit_label(q), k] for q, k in c.borromean_outcomes],
            "notes": list(c.notes),
        },
        "tool_version": doc.tool_version,
    }


def parse_report(text: str) -> ReportDocument:
    """Inverse of ``render_report(doc, "json")``."""
    try:
        raw = json.loads(text)
        entries = tuple(_entry_from_json(r) for r in raw["profile"])
        c = raw["classification"]
        classification = ClassificationResult(
            primary_analogue=Analogue(c["primary_analogue"]),
            center=None if c["center"] is None else qubit_index(c["center"]),
            borromean_outcomes=tuple((qubit_index(q), int(k)) for q, k in c["borromean_outcomes"]),
            notes=tuple(c["notes"]),
        )
        profile = SplittingProfile(raw["state_label"], len(entries) // 2, entries)
        return ReportDocument(raw["state_label"], profile, classification, raw["tool_version"])
    except json.JSONDecodeError as exc:
        raise ParseError(f"report is not valid JSON ({exc})") from None
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed report: {exc!r}") from None


def _post_state_cell(e: SplittingEntry, num_qubits: int) -> str:
    if e.post_state is None:
        return "-"
    rest = "".join(qubit_label(q) for q in range(num_qubits) if q != e.qubit)
    return f"({ket_string(e.post_state)})_{rest}"


def _render_table(doc: ReportDocument) -> str:
    header = ["Qubit Measured", "Outcome", "Probability", "Post-Measurement State", "Schmidt Rank"]
    rows = [
        [
            qubit_label(e.qubit),
            f"|{e.outcome}>",
            f"{e.probability:.4f}",
            _post_state_cell(e, doc.profile.num_qubits),
            "-" if e.rank is None else str(e.rank),
        ]
        for e in doc.profile.entries
    ]
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]

    def line(cells):
        return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    out = [f"state: {doc.state_label}", line(header), "-+-".join("-" * w for w in widths)]
    out += [line(r) for r in rows]
    c = doc.classification
    out.append("")
    out.append(f"analogue: {c.primary_analogue.value}")
    if c.center is not None:
        out.append(f"center: {qubit_label(c.center)}")
        out.append(
            "borromean outcomes: "
            + (", ".join(f"|{k}>_{qubit_label(q)}" for q, k in c.borromean_outcomes) or "none")
        )
    out += [f"  {n}" for n in c.notes]
    return "\n".join(out) + "\n"


def _render_csv(doc: ReportDocument) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["qubit", "outcome", "probability", "rank"])
    for e in doc.profile.entries:
        writer.writerow(
            [qubit_label(e.qubit), e.outcome, repr(e.probability), "" if e.rank is None else e.rank]
        )
    return buf.getvalue()


def render_report(doc: ReportDocument, fmt: str = "table") -> str:
    if fmt == "json":
        return json.dumps(report_to_json(doc), sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(doc)
    if fmt == "table":
        return _render_table(doc)
    raise ValueError(f"unknown report format {fmt!r}; expected one of {REPORT_FORMATS}")
