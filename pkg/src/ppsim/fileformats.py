"""Readers and writers for every artifact the pipelines exchange.

All JSON output is deterministic (sorted keys, trailing newline) and every
loader raises FormatError on malformed content, so the command-line front
end can map parse failures to a single exit code. Field dumps serialize
floats with full repr precision and therefore round-trip bit-exactly.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .algorithms import GroverDatabase
from .demod import ModeStatusMatrix
from .errors import FormatError
from .fields import ClassicalField
from .gates import (
    Combine,
    GateArray,
    Input,
    ModeGate,
    Node,
    Output,
    PhaseFlip,
    PlacementTable,
    Split,
    Unitary,
    parse_cell,
)
from .reconstruct import SimulatedState
from .sequences import HALF_PI, PI, PpsSet
from .symbolic import SymbolicField


def _write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _write_json(path, obj) -> None:
    _write_text(path, json.dumps(obj, sort_keys=True) + "\n")


def _read_json(path):
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from None


def _format_mapping(phase: float) -> str:
    if math.isclose(phase, PI, rel_tol=0, abs_tol=1e-15):
        return "pi"
    if math.isclose(phase, HALF_PI, rel_tol=0, abs_tol=1e-15):
        return "pi/2"
    return repr(float(phase))


def _parse_mapping_text(token: str) -> float:
    text = token.strip().lower()
    if text == "pi":
        return PI
    if text == "pi/2":
        return HALF_PI
    return float(text)


def save_pps_set(pset: PpsSet, path) -> None:
    """Text format: degree/polynomial/mapping headers, then one bit row per line."""
    lines = [
        f"degree: {pset.degree}",
        "polynomial: " + ",".join(str(int(c)) for c in pset.polynomial),
        "mapping: " + _format_mapping(pset.mapping_phase),
    ]
    lines += [",".join(str(int(b)) for b in row) for row in pset.bit_rows]
    _write_text(path, "\n".join(lines) + "\n")


def load_pps_set(path) -> PpsSet:
    text = Path(path).read_text(encoding="utf-8")
    header: dict[str, str] = {}
    row_lines: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" in line:
            key, _, value = line.partition(":")
            header[key.strip().lower()] = value.strip()
        else:
            row_lines.append(line)
    try:
        degree = int(header["degree"])
        polynomial = tuple(int(t) for t in header["polynomial"].split(","))
        mapping = _parse_mapping_text(header["mapping"])
        rows = np.array(
            [[int(t) for t in line.split(",")] for line in row_lines], dtype=np.uint8
        )
    except (KeyError, ValueError) as exc:
        raise FormatError(f"{path}: bad PPS set file ({exc})") from None
    n = 1 << degree
    if rows.shape != (n, n):
        raise FormatError(
            f"{path}: expected {n} rows of {n} bits, got shape {rows.shape}"
        )
    if not np.all((rows == 0) | (rows == 1)):
        raise FormatError(f"{path}: bit rows must contain only 0 and 1")
    return PpsSet(degree, polynomial, mapping, rows)


def save_fields(fields: list[ClassicalField], path) -> None:
    """JSON field dump: slot_count plus per-slot [re, im] pairs per mode."""
    if not fields:
        raise ValueError("nothing to save: empty field list")
    obj = {
        "slot_count": fields[0].slot_count,
        "fields": [
            {
                "mode0": [[z.real, z.imag] for z in fld.samples[:, 0]],
                "mode1": [[z.real, z.imag] for z in fld.samples[:, 1]],
            }
            for fld in fields
        ],
    }
    _write_json(path, obj)


def load_fields(path) -> list[ClassicalField]:
    obj = _read_json(path)
    try:
        slot_count = int(obj["slot_count"])
        out = []
        for entry in obj["fields"]:
            samples = np.empty((slot_count, 2), dtype=np.complex128)
            for mode, key in enumerate(("mode0", "mode1")):
                pairs = entry[key]
                if len(pairs) != slot_count:
                    raise ValueError(f"{key} has {len(pairs)} slots, not {slot_count}")
                samples[:, mode] = [complex(float(re), float(im)) for re, im in pairs]
            out.append(ClassicalField(samples))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: bad field dump ({exc})") from None
    if not out:
        raise FormatError(f"{path}: field dump holds no fields")
    return out


def _grid_strings(obj) -> list[list[str]]:
    if isinstance(obj, PlacementTable):
        return obj.to_strings()
    if isinstance(obj, ModeStatusMatrix):
        return obj.cell_strings()
    raise TypeError(f"cannot serialize {type(obj).__name__} as a status grid")


def save_matrix(obj, path, fmt: str | None = None) -> None:
    """Write a status matrix or placement table as a JSON or CSV cell grid.

    Format follows `fmt` ("json"/"csv") or, when omitted, the file suffix.
    """
    rows = _grid_strings(obj)
    chosen = fmt or ("csv" if str(path).lower().endswith(".csv") else "json")
    if chosen == "csv":
        with open(path, "w", newline="", encoding="utf-8") as fh:
            csv.writer(fh).writerows(rows)
    elif chosen == "json":
        _write_json(path, {"cells": rows})
    else:
        raise ValueError(f"unknown matrix format {fmt!r}")


def load_matrix_cells(path) -> list[list[str]]:
    """Raw cell-string grid from a JSON or CSV matrix file."""
    if str(path).lower().endswith(".csv"):
        with open(path, newline="", encoding="utf-8") as fh:
            rows = [row for row in csv.reader(fh) if row]
    else:
        obj = _read_json(path)
        try:
            rows = [[str(c) for c in row] for row in obj["cells"]]
        except (KeyError, TypeError) as exc:
            raise FormatError(f"{path}: bad matrix file ({exc})") from None
    if not rows or any(len(row) != len(rows[0]) for row in rows):
        raise FormatError(f"{path}: matrix rows are empty or ragged")
    return rows


def load_matrix(path) -> ModeStatusMatrix:
    rows = load_matrix_cells(path)
    try:
        pairs = [[parse_cell(cell) for cell in row] for row in rows]
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None
    return ModeStatusMatrix.from_pairs(pairs)


def load_placement(path) -> PlacementTable:
    rows = load_matrix_cells(path)
    try:
        return PlacementTable.from_strings(rows)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def save_state(state: SimulatedState, path) -> None:
    """JSON list of {bitstring, coefficient}, sorted by bitstring."""
    _write_json(
        path,
        [{"bitstring": b, "coefficient": c} for b, c in state.sorted_terms()],
    )


def load_state(path) -> SimulatedState:
    obj = _read_json(path)
    try:
        terms = {str(e["bitstring"]): int(e["coefficient"]) for e in obj}
        width = len(next(iter(terms))) if terms else 0
        return SimulatedState(width, terms)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: bad state file ({exc})") from None


def _node_obj(nid: str, node: Node) -> dict:
    if isinstance(node, Input):
        return {"id": nid, "kind": "input", "index": node.index}
    if isinstance(node, Output):
        return {"id": nid, "kind": "output", "index": node.index}
    if isinstance(node, Split):
        obj = {"id": nid, "kind": "split", "fanout": node.fanout}
        if node.gains is not None:
            obj["gains"] = list(node.gains)
        return obj
    if isinstance(node, ModeGate):
        return {"id": nid, "kind": "gate", "gate": node.kind}
    if isinstance(node, Unitary):
        return {"id": nid, "kind": "unitary", "chi": node.chi, "theta": node.theta}
    if isinstance(node, PhaseFlip):
        return {"id": nid, "kind": "flip"}
    if isinstance(node, Combine):
        return {"id": nid, "kind": "combine", "fanin": node.fanin}
    raise TypeError(f"cannot serialize node {type(node).__name__}")


def _node_from_obj(entry: dict) -> Node:
    kind = str(entry["kind"]).lower()
    if kind == "input":
        return Input(int(entry["index"]))
    if kind == "output":
        return Output(int(entry["index"]))
    if kind == "split":
        gains = entry.get("gains")
        return Split(
            int(entry["fanout"]),
            None if gains is None else tuple(float(g) for g in gains),
        )
    if kind == "gate":
        return ModeGate(str(entry["gate"]).upper())
    if kind == "unitary":
        return Unitary(float(entry["chi"]), float(entry["theta"]))
    if kind == "flip":
        return PhaseFlip()
    if kind == "combine":
        return Combine(int(entry["fanin"]))
    raise ValueError(f"unknown node kind {entry['kind']!r}")


def save_circuit(array: GateArray, path) -> None:
    """Circuit JSON: node list (id, kind, parameters) plus [from, to] edges."""
    obj = {
        "nodes": [_node_obj(nid, node) for nid, node in array.nodes.items()],
        "edges": [[src, dst] for src, dst in array.edges],
    }
    _write_json(path, obj)


def load_circuit(path) -> GateArray:
    obj = _read_json(path)
    try:
        nodes = {str(entry["id"]): _node_from_obj(entry) for entry in obj["nodes"]}
        edges = [(str(src), str(dst)) for src, dst in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: bad circuit file ({exc})") from None
    try:
        return GateArray(nodes, edges)
    except ValueError as exc:
        raise FormatError(f"{path}: invalid circuit ({exc})") from None


def save_symbolic_field(sf: SymbolicField, path) -> None:
    """Symbolic field JSON: per-mode lists of {pps, re, im}."""
    obj = {
        key: [
            {"pps": j, "re": c.real, "im": c.imag}
            for j, c in sorted(coeffs.items())
        ]
        for key, coeffs in (("mode0", sf.mode0), ("mode1", sf.mode1))
    }
    _write_json(path, obj)


def load_symbolic_field(path) -> SymbolicField:
    obj = _read_json(path)
    try:
        maps = {}
        for key in ("mode0", "mode1"):
            maps[key] = {
                int(e["pps"]): complex(float(e["re"]), float(e["im"]))
                for e in obj.get(key, [])
            }
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: bad symbolic field file ({exc})") from None
    return SymbolicField(maps["mode0"], maps["mode1"])


def save_grover_db(db: GroverDatabase, path) -> None:
    """Database JSON: width and entry list, plus the rotation map if explicit."""
    obj: dict = {"width": db.width, "entries": list(db.entries)}
    if db.rotations is not None:
        obj["rotations"] = {str(k): v for k, v in sorted(db.rotations.items())}
    _write_json(path, obj)


def load_grover_db(path) -> GroverDatabase:
    """Accepts the object form or a bare JSON list of integers.

    For a bare list the width is the bit length of the largest entry.
    """
    obj = _read_json(path)
    try:
        if isinstance(obj, list):
            entries = tuple(int(x) for x in obj)
            width = max((x.bit_length() for x in entries), default=1)
            return GroverDatabase(max(width, 1), entries)
        entries = tuple(int(x) for x in obj["entries"])
        fallback = max(max((x.bit_length() for x in entries), default=1), 1)
        width = int(obj.get("width", fallback))
        rotations = obj.get("rotations")
        if rotations is not None:
            rotations = {int(k): int(v) for k, v in rotations.items()}
        return GroverDatabase(width, entries, rotations)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: bad database file ({exc})") from None
