"""Gate arrays: directed graphs of optical processing nodes.

An array routes classical two-mode fields from inputs to outputs through
mode gates, splits, unitary rotations, phase flips, and combiners. Arrays
are built three ways: by hand (node and edge lists), by the named state
builders (bell_array, ghz_array, w_array), or compiled from a placement
table that records which sequence rides which mode of which output field.

Mode gate semantics: gate A blocks both modes, gate B passes only mode 0,
gate C passes only mode 1, gate D passes both unchanged.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter

import numpy as np

from .errors import DimensionMismatchError
from .fields import ClassicalField, Unitary2
from .sequences import PpsSet

GATE_KINDS = ("A", "B", "C", "D")

# transmission factors (mode 0, mode 1) per gate kind
_GATE_MASKS = {
    "A": np.array([0.0, 0.0], dtype=np.complex128),
    "B": np.array([1.0, 0.0], dtype=np.complex128),
    "C": np.array([0.0, 1.0], dtype=np.complex128),
    "D": np.array([1.0, 1.0], dtype=np.complex128),
}


def apply_mode_gate(fld: ClassicalField, kind: str) -> ClassicalField:
    """Block, select, or pass the modes of a field (gate kinds A/B/C/D)."""
    if kind not in _GATE_MASKS:
        raise ValueError(f"unknown mode gate kind {kind!r}")
    return ClassicalField(fld.samples * _GATE_MASKS[kind])


@dataclass(frozen=True)
class Input:
    """Array entry point carrying external field `index` (0-based)."""

    index: int


@dataclass(frozen=True)
class Output:
    """Array exit point delivering result field `index` (0-based)."""

    index: int


@dataclass(frozen=True)
class Split:
    """Fan one field out to `fanout` branches scaled by amplitude gains.

    Gains default to unit amplitude on every branch, which keeps compiled
    arrays exactly round-trippable; power-dividing splits pass explicit
    gains. Branch k feeds the k-th declared out-edge.
    """

    fanout: int
    gains: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.fanout < 2:
            raise ValueError("split fanout must be at least 2")
        if self.gains is not None and len(self.gains) != self.fanout:
            raise ValueError("gain count must match fanout")

    def branch_gains(self) -> tuple[float, ...]:
        return (1.0,) * self.fanout if self.gains is None else self.gains


@dataclass(frozen=True)
class ModeGate:
    """Mode selector of kind A, B, C, or D."""

    kind: str

    def __post_init__(self):
        if self.kind not in _GATE_MASKS:
            raise ValueError(f"unknown mode gate kind {self.kind!r}")


@dataclass(frozen=True)
class Unitary:
    """Two-mode rotation node parameterized like Unitary2(chi, theta)."""

    chi: float
    theta: float


@dataclass(frozen=True)
class PhaseFlip:
    """Sign inversion of both modes (pi phase shift of the whole field)."""


@dataclass(frozen=True)
class Combine:
    """Coherent sum of `fanin` incoming fields."""

    fanin: int

    def __post_init__(self):
        if self.fanin < 2:
            raise ValueError("combine fanin must be at least 2")


Node = Input | Output | Split | ModeGate | Unitary | PhaseFlip | Combine


def _degrees(node: Node) -> tuple[int, int]:
    """Required (in, out) edge counts for a node."""
    if isinstance(node, Input):
        return (0, 1)
    if isinstance(node, Output):
        return (1, 0)
    if isinstance(node, Split):
        return (1, node.fanout)
    if isinstance(node, Combine):
        return (node.fanin, 1)
    return (1, 1)


@dataclass(eq=False)
class GateArray:
    """Directed acyclic graph of processing nodes.

    `nodes` maps string ids to node objects; `edges` lists (src, dst) id
    pairs. Every node must have exactly the edge degrees its kind demands,
    input and output indexes must each cover 0..k-1 exactly once, and the
    graph must be acyclic. Split branch order follows edge declaration
    order.
    """

    nodes: dict[str, Node]
    edges: list[tuple[str, str]]

    def __post_init__(self):
        for src, dst in self.edges:
            if src not in self.nodes or dst not in self.nodes:
                raise ValueError(f"edge references unknown node: {(src, dst)!r}")
        self._in_edges: dict[str, list[int]] = {nid: [] for nid in self.nodes}
        self._out_edges: dict[str, list[int]] = {nid: [] for nid in self.nodes}
        for ei, (src, dst) in enumerate(self.edges):
            self._out_edges[src].append(ei)
            self._in_edges[dst].append(ei)
        for nid, node in self.nodes.items():
            want_in, want_out = _degrees(node)
            have_in, have_out = len(self._in_edges[nid]), len(self._out_edges[nid])
            if (have_in, have_out) != (want_in, want_out):
                raise ValueError(
                    f"node {nid!r} ({type(node).__name__}) has {have_in} in /"
                    f" {have_out} out edges, expected {want_in}/{want_out}"
                )
        in_idx = sorted(n.index for n in self.nodes.values() if isinstance(n, Input))
        out_idx = sorted(n.index for n in self.nodes.values() if isinstance(n, Output))
        if not in_idx or not out_idx:
            raise ValueError("array needs at least one input and one output")
        if in_idx != list(range(len(in_idx))):
            raise ValueError("input indexes must cover 0..n-1 exactly once")
        if out_idx != list(range(len(out_idx))):
            raise ValueError("output indexes must cover 0..n-1 exactly once")
        graph: dict[str, set[str]] = {nid: set() for nid in self.nodes}
        for src, dst in self.edges:
            graph[dst].add(src)
        try:
            self._order = tuple(TopologicalSorter(graph).static_order())
        except CycleError as exc:
            raise ValueError("array graph contains a cycle") from exc

    @property
    def input_count(self) -> int:
        return sum(1 for n in self.nodes.values() if isinstance(n, Input))

    @property
    def output_count(self) -> int:
        return sum(1 for n in self.nodes.values() if isinstance(n, Output))

    def node_counts(self) -> dict[str, int]:
        """Node tally by kind name (resource accounting)."""
        counts = Counter(type(n).__name__ for n in self.nodes.values())
        return dict(sorted(counts.items()))

    def run(self, inputs: list[ClassicalField]) -> list[ClassicalField]:
        """Propagate input fields through the graph; outputs by index."""
        if len(inputs) != self.input_count:
            raise DimensionMismatchError(
                f"array has {self.input_count} inputs, got {len(inputs)} fields"
            )
        if len({f.slot_count for f in inputs}) > 1:
            raise DimensionMismatchError("input fields differ in length")
        edge_values: list[np.ndarray | None] = [None] * len(self.edges)
        results: list[ClassicalField | None] = [None] * self.output_count
        for nid in self._order:
            node = self.nodes[nid]
            taken = [edge_values[ei] for ei in self._in_edges[nid]]
            if isinstance(node, Input):
                value = inputs[node.index].samples
            elif isinstance(node, Output):
                results[node.index] = ClassicalField(taken[0].copy())
                continue
            elif isinstance(node, Split):
                for gain, ei in zip(node.branch_gains(), self._out_edges[nid]):
                    edge_values[ei] = taken[0] * gain
                continue
            elif isinstance(node, ModeGate):
                value = taken[0] * _GATE_MASKS[node.kind]
            elif isinstance(node, Unitary):
                value = taken[0] @ Unitary2(node.chi, node.theta).matrix.T
            elif isinstance(node, PhaseFlip):
                value = -taken[0]
            else:
                value = np.sum(taken, axis=0)
            edge_values[self._out_edges[nid][0]] = value
        return results


def run_array(array: GateArray, inputs: list[ClassicalField]) -> list[ClassicalField]:
    """Functional alias for GateArray.run."""
    return array.run(inputs)


_CELL_RE = re.compile(r"\(\s*(-?[01])\s*,\s*(-?[01])\s*\)")


def parse_cell(text: str) -> tuple[int, int]:
    """Parse the cell grammar "0" or "(a,b)" with a, b in {-1, 0, 1}."""
    stripped = text.strip()
    if stripped == "0":
        return (0, 0)
    match = _CELL_RE.fullmatch(stripped)
    if match is None:
        raise ValueError(f"bad status cell {text!r}")
    return (int(match.group(1)), int(match.group(2)))


def format_cell(pair: tuple[int, int]) -> str:
    """Inverse of parse_cell; (0, 0) renders as "0"."""
    a, b = pair
    return "0" if a == 0 and b == 0 else f"({a},{b})"


@dataclass(eq=False)
class PlacementTable:
    """Square sign table: cell (i, j) places sequence j onto field i.

    cells[i-1, j-1] = (a, b) means sequence j rides mode 0 of output
    field i with sign a and mode 1 with sign b; (0, 0) means absent.
    """

    cells: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.cells, dtype=np.int8)
        if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != 2:
            raise DimensionMismatchError("placement cells must have shape (n, n, 2)")
        if not np.all(np.isin(arr, (-1, 0, 1))):
            raise ValueError("cell entries must be -1, 0, or +1")
        self.cells = arr

    @property
    def size(self) -> int:
        return int(self.cells.shape[0])

    def cell(self, i: int, j: int) -> tuple[int, int]:
        """Sign pair for field i, sequence j (both 1-based)."""
        a, b = self.cells[i - 1, j - 1]
        return (int(a), int(b))

    def to_strings(self) -> list[list[str]]:
        return [
            [format_cell(self.cell(i, j)) for j in range(1, self.size + 1)]
            for i in range(1, self.size + 1)
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlacementTable):
            return NotImplemented
        return np.array_equal(self.cells, other.cells)

    @classmethod
    def from_strings(cls, rows: list[list[str]]) -> "PlacementTable":
        return cls(np.array([[parse_cell(c) for c in row] for row in rows], dtype=np.int8))

    @classmethod
    def from_status_matrix(cls, matrix) -> "PlacementTable":
        """Adopt the quantized signs of a measured mode status matrix."""
        return cls(matrix.signs())


def compile_placement(table: PlacementTable, pset: PpsSet) -> GateArray:
    """Compile a placement table into a gate array.

    Input bus j carries sequence j on both modes (the canonical input).
    Each nonzero cell becomes a gate chain tapping that bus: equal signs
    use gate D, a lone mode-0 sign uses gate B, a lone mode-1 sign uses
    gate C, and opposite signs use a B branch plus a C branch. Negative
    signs append a phase flip. Buses with several consumers fan out
    through a unit-gain split; rows with several terms merge through a
    combiner. An empty row blocks its own bus with gate A; a bus no cell
    consumes is likewise terminated into gate A and its zero output joins
    the same-numbered row.
    """
    n = table.size
    if n > pset.usable_count:
        raise DimensionMismatchError(
            f"table needs {n} sequences, set provides {pset.usable_count}"
        )
    nodes: dict[str, Node] = {}
    edges: list[tuple[str, str]] = []
    bus_taps: dict[int, list[str]] = {j: [] for j in range(1, n + 1)}
    row_terms: dict[int, list[str]] = {i: [] for i in range(1, n + 1)}

    def add_chain(i: int, j: int, kind: str, negate: bool) -> None:
        gid = f"g{kind}_{i}_{j}"
        nodes[gid] = ModeGate(kind)
        tail = gid
        if negate:
            fid = f"flip{kind}_{i}_{j}"
            nodes[fid] = PhaseFlip()
            edges.append((gid, fid))
            tail = fid
        bus_taps[j].append(gid)
        row_terms[i].append(tail)

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            a, b = table.cell(i, j)
            if a == 0 and b == 0:
                continue
            if a == b:
                add_chain(i, j, "D", a < 0)
            elif a != 0 and b != 0:
                add_chain(i, j, "B", a < 0)
                add_chain(i, j, "C", b < 0)
            elif a != 0:
                add_chain(i, j, "B", a < 0)
            else:
                add_chain(i, j, "C", b < 0)
    # an empty row consumes its own bus through a blocking gate
    for i in range(1, n + 1):
        if not row_terms[i]:
            gid = f"gA_{i}_{i}"
            nodes[gid] = ModeGate("A")
            bus_taps[i].append(gid)
            row_terms[i].append(gid)
    # any bus still unconsumed is blocked and parked on its own row
    for j in range(1, n + 1):
        if not bus_taps[j]:
            gid = f"gA_{j}_{j}"
            nodes[gid] = ModeGate("A")
            bus_taps[j].append(gid)
            row_terms[j].append(gid)
    for j in range(1, n + 1):
        bid = f"in{j}"
        nodes[bid] = Input(j - 1)
        taps = bus_taps[j]
        if len(taps) == 1:
            edges.append((bid, taps[0]))
        else:
            sid = f"split{j}"
            nodes[sid] = Split(len(taps))
            edges.append((bid, sid))
            edges.extend((sid, tap) for tap in taps)
    for i in range(1, n + 1):
        oid = f"out{i}"
        nodes[oid] = Output(i - 1)
        terms = row_terms[i]
        if len(terms) == 1:
            edges.append((terms[0], oid))
        else:
            cid = f"comb{i}"
            nodes[cid] = Combine(len(terms))
            edges.extend((term, cid) for term in terms)
            edges.append((cid, oid))
    return GateArray(nodes, edges)


def product_array(n: int) -> GateArray:
    """n parallel pass-through gates: field i keeps sequence i on both modes."""
    if n < 1:
        raise ValueError("need at least one field")
    nodes: dict[str, Node] = {}
    edges: list[tuple[str, str]] = []
    for i in range(1, n + 1):
        nodes[f"in{i}"] = Input(i - 1)
        nodes[f"gD_{i}"] = ModeGate("D")
        nodes[f"out{i}"] = Output(i - 1)
        edges += [(f"in{i}", f"gD_{i}"), (f"gD_{i}", f"out{i}")]
    return GateArray(nodes, edges)


BELL_VARIANTS = ("psi+", "psi-", "phi+", "phi-")


def bell_array(variant: str = "psi+") -> GateArray:
    """Two-field array preparing one of the four maximally paired states.

    psi variants cross-route the inputs (field 1 gets sequence 1 on mode 0
    and sequence 2 on mode 1, field 2 the reverse); phi variants duplicate
    the same composition onto both outputs. The minus variants flip the
    sign of the sequence-1 branch of field 2.
    """
    v = variant.strip().lower()
    if v not in BELL_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {BELL_VARIANTS}")
    nodes: dict[str, Node] = {
        "in1": Input(0),
        "in2": Input(1),
        "split1": Split(2),
        "split2": Split(2),
        "gB1": ModeGate("B"),
        "gC1": ModeGate("C"),
        "gB2": ModeGate("B"),
        "gC2": ModeGate("C"),
        "comb1": Combine(2),
        "comb2": Combine(2),
        "out1": Output(0),
        "out2": Output(1),
    }
    edges: list[tuple[str, str]] = [("in1", "split1"), ("in2", "split2")]
    if v.startswith("psi"):
        # out1 = B(in1) + C(in2); out2 = B(in2) + [flip] C(in1)
        edges += [
            ("split1", "gB1"),
            ("split2", "gC1"),
            ("split2", "gB2"),
            ("split1", "gC2"),
            ("gB1", "comb1"),
            ("gC1", "comb1"),
            ("gB2", "comb2"),
        ]
        tail = "gC2"
        if v == "psi-":
            nodes["flip2"] = PhaseFlip()
            edges.append(("gC2", "flip2"))
            tail = "flip2"
        edges.append((tail, "comb2"))
    else:
        # out1 = B(in1) + C(in2); out2 = [flip] B(in1) + C(in2)
        edges += [
            ("split1", "gB1"),
            ("split1", "gB2"),
            ("split2", "gC1"),
            ("split2", "gC2"),
            ("gB1", "comb1"),
            ("gC1", "comb1"),
            ("gC2", "comb2"),
        ]
        tail = "gB2"
        if v == "phi-":
            nodes["flip2"] = PhaseFlip()
            edges.append(("gB2", "flip2"))
            tail = "flip2"
        edges.append((tail, "comb2"))
    edges += [("comb1", "out1"), ("comb2", "out2")]
    return GateArray(nodes, edges)


def ghz_array(n: int = 3) -> GateArray:
    """Cyclic chain: field i gets sequence i on mode 0, sequence i+1 on mode 1."""
    if n < 3:
        raise ValueError("chain needs at least 3 fields; use bell_array for pairs")
    nodes: dict[str, Node] = {}
    edges: list[tuple[str, str]] = []
    for i in range(1, n + 1):
        nodes[f"in{i}"] = Input(i - 1)
        nodes[f"split{i}"] = Split(2)
        nodes[f"gB{i}"] = ModeGate("B")
        nodes[f"gC{i}"] = ModeGate("C")
        nodes[f"comb{i}"] = Combine(2)
        nodes[f"out{i}"] = Output(i - 1)
        edges.append((f"in{i}", f"split{i}"))
    for i in range(1, n + 1):
        nxt = i % n + 1
        edges += [
            (f"split{i}", f"gB{i}"),
            (f"split{nxt}", f"gC{i}"),
            (f"gB{i}", f"comb{i}"),
            (f"gC{i}", f"comb{i}"),
            (f"comb{i}", f"out{i}"),
        ]
    return GateArray(nodes, edges)


def w_array(n: int = 3) -> GateArray:
    """Single shared composition copied to n outputs through a split chain.

    One source field carries sequence 1 on mode 1 and sequences 2..n on
    mode 0; a chain of n-1 two-way splits delivers a copy to every output.
    """
    if n < 2:
        raise ValueError("need at least 2 fields")
    nodes: dict[str, Node] = {}
    edges: list[tuple[str, str]] = []
    for i in range(1, n + 1):
        nodes[f"in{i}"] = Input(i - 1)
    nodes["gC1"] = ModeGate("C")
    edges.append(("in1", "gC1"))
    terms = ["gC1"]
    for i in range(2, n + 1):
        nodes[f"gB{i}"] = ModeGate("B")
        edges.append((f"in{i}", f"gB{i}"))
        terms.append(f"gB{i}")
    nodes["source"] = Combine(n)
    edges.extend((term, "source") for term in terms)
    prev = "source"
    for k in range(1, n):
        nodes[f"split{k}"] = Split(2)
        nodes[f"out{k}"] = Output(k - 1)
        edges += [(prev, f"split{k}"), (f"split{k}", f"out{k}")]
        prev = f"split{k}"
    nodes[f"out{n}"] = Output(n - 1)
    edges.append((prev, f"out{n}"))
    return GateArray(nodes, edges)
