"""End-to-end simulations: typical states, factoring, and membership search.

The factoring pipeline encodes x and f(x) = a^x mod N bit-by-bit onto
placement-table cells, one cyclic rotation per residue class of f, then
runs encode -> compile -> run -> demodulate -> reconstruct and reads the
period off the reconstructed state. The membership pipeline stores each
database entry on one rotation and tests a query by gating every field to
the query's bit pattern and looking for a rotation whose statuses survive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .demod import DEFAULT_THRESHOLD, ModeStatusMatrix, mode_status_matrix
from .errors import DimensionMismatchError, PeriodUnusableError
from .fields import ClassicalField, canonical_inputs
from .gates import (
    GateArray,
    PlacementTable,
    apply_mode_gate,
    bell_array,
    compile_placement,
    ghz_array,
    product_array,
    w_array,
)
from .reconstruct import (
    SequencePermutation,
    SimulatedState,
    cyclic_permutations,
    reconstruct,
)
from .sequences import PpsSet
from .symbolic import SymbolicField, to_waveform


def _bit(value: int, k: int, width: int) -> int:
    """Bit k (1-based, MSB first) of a width-bit integer."""
    return (value >> (width - k)) & 1


@dataclass
class ShorInstance:
    """A factoring instance: find the period of f(x) = base^x mod modulus.

    Register widths default to ceil(log2(modulus)) bits each; register 1
    spans all 2**x_bits arguments, register 2 holds the function values.
    """

    modulus: int
    base: int
    x_bits: int | None = None
    f_bits: int | None = None

    def __post_init__(self):
        if self.modulus < 4:
            raise ValueError("modulus must be a composite integer >= 4")
        if not 1 < self.base < self.modulus:
            raise ValueError("base must satisfy 1 < base < modulus")
        if math.gcd(self.base, self.modulus) != 1:
            raise ValueError("base shares a factor with the modulus; pick a coprime base")
        default_bits = max(1, (self.modulus - 1).bit_length())
        if self.x_bits is None:
            self.x_bits = default_bits
        if self.f_bits is None:
            self.f_bits = default_bits
        if self.x_bits < 1 or self.f_bits < 1:
            raise ValueError("register widths must be positive")
        if (1 << self.x_bits) < self.modulus:
            raise ValueError("2**x_bits must reach the modulus")

    @property
    def register_width(self) -> int:
        return self.x_bits + self.f_bits

    def f(self, x: int) -> int:
        return pow(self.base, x, self.modulus)


def shor_encode(inst: ShorInstance, pset: PpsSet) -> PlacementTable:
    """Placement table carrying every joint ket |x>|f(x)> of the instance.

    Arguments x are grouped by f(x) in order of first appearance; group g
    uses rotation R_g, so the joint bits of each member x land on cell
    (i, R_g(i)) of the table, mode chosen by bit i of x||f(x) (MSB first).
    Contributions aggregate: a cell touched on both modes reads (1, 1).
    """
    n = inst.register_width
    if n > pset.usable_count:
        raise DimensionMismatchError(
            f"instance needs {n} sequences, set provides {pset.usable_count}"
        )
    groups: dict[int, int] = {}
    for x in range(1 << inst.x_bits):
        value = inst.f(x)
        if value not in groups:
            groups[value] = len(groups) + 1
    if len(groups) > n:
        raise DimensionMismatchError("more residue classes than table rotations")
    cells = np.zeros((n, n, 2), dtype=np.int8)
    for x in range(1 << inst.x_bits):
        rotation = SequencePermutation(n, groups[inst.f(x)])
        joint = (x << inst.f_bits) | inst.f(x)
        for i in range(1, n + 1):
            j = rotation.column_for(i)
            cells[i - 1, j - 1, _bit(joint, i, n)] = 1
    return PlacementTable(cells)


@dataclass
class ShorResult:
    """Factoring outcome plus the intermediate evidence."""

    factors: tuple[int, int]
    period: int
    matrix: ModeStatusMatrix
    state: SimulatedState


def period_from_state(state: SimulatedState, f_bits: int) -> int:
    """Number of distinct function-register kets in a reconstructed state."""
    return len({bits[-f_bits:] for bits in state.terms})


def shor_factor(
    inst: ShorInstance, pset: PpsSet, tau: float = DEFAULT_THRESHOLD
) -> ShorResult:
    """Run the whole factoring pipeline and extract the factors.

    The period r is the count of distinct function kets in the
    reconstructed state; no Fourier step is involved. An odd period, or
    base**(r/2) = -1 (mod modulus), or a trivial gcd, aborts with the
    retry error.
    """
    table = shor_encode(inst, pset)
    array = compile_placement(table, pset)
    outputs = array.run(canonical_inputs(pset, inst.register_width))
    matrix = mode_status_matrix(outputs, pset=pset, tau=tau)
    state = reconstruct(matrix)
    period = period_from_state(state, inst.f_bits)
    if period % 2:
        raise PeriodUnusableError("period unusable, retry with different a")
    half = pow(inst.base, period // 2, inst.modulus)
    low = math.gcd(half - 1, inst.modulus)
    high = math.gcd(half + 1, inst.modulus)
    factors = tuple(sorted((low, high)))
    if factors[0] <= 1 or factors[1] >= inst.modulus:
        raise PeriodUnusableError("period unusable, retry with different a")
    return ShorResult(factors, period, matrix, state)


@dataclass
class GroverDatabase:
    """Stored set of distinct width-bit integers, one rotation per entry.

    Without an explicit assignment, entry k (0-based position) takes
    rotation (k mod width) + 1; reuse is allowed and mirrors storing more
    entries than there are rotations.
    """

    width: int
    entries: tuple[int, ...]
    rotations: dict[int, int] | None = None

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("width must be positive")
        self.entries = tuple(int(x) for x in self.entries)
        if len(set(self.entries)) != len(self.entries):
            raise ValueError("entries must be distinct")
        for x in self.entries:
            if not 0 <= x < (1 << self.width):
                raise ValueError(f"entry {x} does not fit in {self.width} bits")
        if self.rotations is not None:
            self.rotations = {int(k): int(r) for k, r in self.rotations.items()}
            missing = set(self.entries) - set(self.rotations)
            if missing:
                raise ValueError(f"rotation map misses entries {sorted(missing)}")
            for r in self.rotations.values():
                if not 1 <= r <= self.width:
                    raise ValueError(f"rotation {r} out of range 1..{self.width}")

    def rotation_for(self, entry: int) -> int:
        if self.rotations is not None:
            return self.rotations[entry]
        return self.entries.index(entry) % self.width + 1

    def assignment(self) -> dict[int, int]:
        return {x: self.rotation_for(x) for x in self.entries}


def grover_symbolic(db: GroverDatabase) -> list[SymbolicField]:
    """Symbolic encoded fields: field k holds, per entry x with rotation
    R_r, sequence R_r(k) on mode bit_k(x); duplicates collapse to 1."""
    fields = [SymbolicField() for _ in range(db.width)]
    for x in db.entries:
        rotation = SequencePermutation(db.width, db.rotation_for(x))
        for k in range(1, db.width + 1):
            j = rotation.column_for(k)
            target = fields[k - 1].mode1 if _bit(x, k, db.width) else fields[k - 1].mode0
            target[j] = 1.0
    return fields


def grover_encode(db: GroverDatabase, pset: PpsSet) -> list[ClassicalField]:
    """Sampled-waveform realization of the encoded database fields."""
    if db.width > pset.usable_count:
        raise DimensionMismatchError(
            f"database needs {db.width} sequences, set provides {pset.usable_count}"
        )
    return [to_waveform(sf, pset) for sf in grover_symbolic(db)]


@dataclass
class GroverResult:
    """Membership verdict plus the gated evidence matrix."""

    found: bool
    witness: int | None
    matrix: ModeStatusMatrix


def grover_search(
    db: GroverDatabase,
    query: int,
    pset: PpsSet,
    tau: float = DEFAULT_THRESHOLD,
) -> GroverResult:
    """Test a query by mode-gating the encoded fields to its bit pattern.

    Query bit 0 keeps mode 0 (gate B), bit 1 keeps mode 1 (gate C). The
    query is a member iff some rotation R_r leaves a nonzero status at
    every cell (i, R_r(i)); the witness is the first such rotation.
    """
    if not 0 <= query < (1 << db.width):
        raise ValueError(f"query {query} does not fit in {db.width} bits")
    encoded = grover_encode(db, pset)
    gated = [
        apply_mode_gate(fld, "C" if _bit(query, k, db.width) else "B")
        for k, fld in enumerate(encoded, start=1)
    ]
    matrix = mode_status_matrix(gated, pset=pset, tau=tau)
    witness = None
    for perm in cyclic_permutations(db.width):
        if all(
            not matrix.status(i, perm.column_for(i)).is_zero
            for i in range(1, db.width + 1)
        ):
            witness = perm.rotation
            break
    return GroverResult(witness is not None, witness, matrix)


@dataclass
class TypicalState:
    """Builder output: the fields, their status matrix, and the state."""

    fields: list[ClassicalField]
    matrix: ModeStatusMatrix
    state: SimulatedState


TYPICAL_KINDS = ("product", "psi+", "psi-", "phi+", "phi-", "ghz", "w")


def typical_state(kind: str, pset: PpsSet, n: int | None = None) -> TypicalState:
    """Build, demodulate, and reconstruct one of the named constructions.

    `kind` is one of product / psi+ / psi- / phi+ / phi- / ghz / w; `n`
    sets the field count for product, ghz, and w (defaults 2, 3, 3).
    """
    token = kind.strip().lower()
    if token.startswith("bell"):
        token = token[4:].lstrip(" -:")
    if token in ("psi+", "psi-", "phi+", "phi-"):
        array = bell_array(token)
        size = 2
    elif token == "ghz":
        size = 3 if n is None else n
        array = ghz_array(size)
    elif token == "w":
        size = 3 if n is None else n
        array = w_array(size)
    elif token == "product":
        size = 2 if n is None else n
        array = product_array(size)
    else:
        raise ValueError(f"unknown kind {kind!r}; choose from {TYPICAL_KINDS}")
    outputs = array.run(canonical_inputs(pset, size))
    matrix = mode_status_matrix(outputs, pset=pset)
    return TypicalState(outputs, matrix, reconstruct(matrix))


def builder_for(kind: str, n: int | None = None) -> GateArray:
    """The gate array a typical_state call would run, without running it."""
    token = kind.strip().lower()
    if token.startswith("bell"):
        token = token[4:].lstrip(" -:")
    if token in ("psi+", "psi-", "phi+", "phi-"):
        return bell_array(token)
    if token == "ghz":
        return ghz_array(3 if n is None else n)
    if token == "w":
        return w_array(3 if n is None else n)
    if token == "product":
        return product_array(2 if n is None else n)
    raise ValueError(f"unknown kind {kind!r}; choose from {TYPICAL_KINDS}")
