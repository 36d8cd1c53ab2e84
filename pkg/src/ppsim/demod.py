"""Quadrature demodulation of fields against reference sequences.

Each mode of a field is correlated coherently against a reference carrier;
the real part of the correlation is the decision statistic. Quantizing both
modes gives a mode status (a, b) with a, b in {-1, 0, +1}; the statuses of
n fields against n references form the mode status matrix that downstream
reconstruction consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .fields import MODE0, MODE1, ClassicalField
from .sequences import PhaseSequence, PpsSet

DEFAULT_THRESHOLD = 0.5


def demodulate_mode(fld: ClassicalField, mode: int, ref: PhaseSequence) -> complex:
    """Correlation (1/N) sum samples[k, mode] e^{-i lambda_k} for one mode."""
    if fld.slot_count != len(ref):
        raise DimensionMismatchError(
            f"field has {fld.slot_count} slots, reference has {len(ref)} units"
        )
    return complex(np.vdot(ref.carrier, fld.samples[:, mode]) / fld.slot_count)


def quantize(raw: complex, tau: float = DEFAULT_THRESHOLD) -> int:
    """Map a raw correlation to -1/0/+1 by thresholding its real part."""
    re = raw.real
    if abs(re) < tau:
        return 0
    return 1 if re > 0 else -1


@dataclass(frozen=True)
class ModeStatus:
    """Quantized demodulation result of one field against one reference."""

    a_tilde: int
    b_tilde: int
    raw: tuple[complex, complex] = (0j, 0j)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a_tilde, self.b_tilde)

    @property
    def is_zero(self) -> bool:
        return self.a_tilde == 0 and self.b_tilde == 0

    def as_string(self) -> str:
        """Cell grammar used by files and displays: "0" or "(a,b)"."""
        if self.is_zero:
            return "0"
        return f"({self.a_tilde},{self.b_tilde})"


def mode_status(
    fld: ClassicalField, ref: PhaseSequence, tau: float = DEFAULT_THRESHOLD
) -> ModeStatus:
    """Demodulate both modes of one field and quantize."""
    if tau <= 0:
        raise ValueError("threshold must be positive")
    raw0 = demodulate_mode(fld, MODE0, ref)
    raw1 = demodulate_mode(fld, MODE1, ref)
    return ModeStatus(quantize(raw0, tau), quantize(raw1, tau), (raw0, raw1))


@dataclass(eq=False)
class ModeStatusMatrix:
    """Grid of statuses: rows index fields, columns index references."""

    statuses: list[list[ModeStatus]]

    @property
    def field_count(self) -> int:
        return len(self.statuses)

    @property
    def reference_count(self) -> int:
        return len(self.statuses[0]) if self.statuses else 0

    def status(self, i: int, j: int) -> ModeStatus:
        """Cell for field i against reference j (both 1-based)."""
        return self.statuses[i - 1][j - 1]

    def signs(self) -> np.ndarray:
        """(fields, references, 2) int8 array of quantized pairs."""
        return np.array(
            [[cell.pair for cell in row] for row in self.statuses], dtype=np.int8
        )

    def cell_strings(self) -> list[list[str]]:
        return [[cell.as_string() for cell in row] for row in self.statuses]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModeStatusMatrix):
            return NotImplemented
        if (
            self.field_count != other.field_count
            or self.reference_count != other.reference_count
        ):
            return False
        return bool(np.array_equal(self.signs(), other.signs()))

    @classmethod
    def from_pairs(cls, pairs: list[list[tuple[int, int]]]) -> "ModeStatusMatrix":
        """Build a matrix from quantized pairs alone (raws set to the pair)."""
        return cls(
            [
                [ModeStatus(int(a), int(b), (complex(a), complex(b))) for a, b in row]
                for row in pairs
            ]
        )


def mode_status_matrix(
    fields: list[ClassicalField],
    refs: list[PhaseSequence] | PpsSet | None = None,
    tau: float = DEFAULT_THRESHOLD,
    pset: PpsSet | None = None,
) -> ModeStatusMatrix:
    """Demodulate every field against every reference.

    `refs` may be an explicit list of sequences or a sequence set, in which
    case references 1..len(fields) are used (the canonical square matrix).
    """
    if refs is None:
        refs = pset
    if isinstance(refs, PpsSet):
        if len(fields) > refs.usable_count:
            raise DimensionMismatchError(
                f"{len(fields)} fields but set has {refs.usable_count} usable references"
            )
        refs = [refs.sequence(j) for j in range(1, len(fields) + 1)]
    if not fields or not refs:
        raise DimensionMismatchError("need at least one field and one reference")
    slot_count = fields[0].slot_count
    stack = np.stack([f.samples for f in fields])  # (nf, N, 2)
    carriers = np.stack([r.carrier for r in refs])  # (nr, N)
    if carriers.shape[1] != slot_count:
        raise DimensionMismatchError("reference length differs from field length")
    raw = np.einsum("fkm,rk->frm", stack, carriers.conj()) / slot_count
    grid = []
    for fi in range(len(fields)):
        row = []
        for rj in range(len(refs)):
            r0, r1 = complex(raw[fi, rj, 0]), complex(raw[fi, rj, 1])
            row.append(ModeStatus(quantize(r0, tau), quantize(r1, tau), (r0, r1)))
        grid.append(row)
    return ModeStatusMatrix(grid)
