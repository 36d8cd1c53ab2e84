"""Exact symbolic field model: per-mode sequence-index bookkeeping.

A symbolic field stores, for each mode, the complex coefficient attached
to each sequence index. Synthesis (to_waveform) and exact demodulation by
coefficient lookup make this the independent oracle against which the
sampled-waveform pipeline is checked: with the pi mapping, distinct
carriers are exactly orthogonal, so waveform demodulation must agree with
the lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fields import ClassicalField
from .sequences import PpsSet, sequence_product


@dataclass
class SymbolicField:
    """Coefficient maps {sequence index: complex} for modes 0 and 1.

    Zero coefficients are never stored; an empty pair of maps is the zero
    field.
    """

    mode0: dict[int, complex] = field(default_factory=dict)
    mode1: dict[int, complex] = field(default_factory=dict)

    def __post_init__(self):
        self.mode0 = {int(j): complex(c) for j, c in self.mode0.items() if complex(c)}
        self.mode1 = {int(j): complex(c) for j, c in self.mode1.items() if complex(c)}

    def indices(self) -> set[int]:
        """All sequence indices present on either mode."""
        return set(self.mode0) | set(self.mode1)


def to_waveform(sf: SymbolicField, pset: PpsSet) -> ClassicalField:
    """Synthesize the sampled waveform: mode m slot k = sum_j c_j e^{i lambda_k^(j)}."""
    n = pset.length
    for j in sf.indices():
        if not 0 <= j < n:
            raise IndexError(f"sequence index {j} out of range 0..{n - 1}")
    samples = np.zeros((n, 2), dtype=np.complex128)
    for j, coeff in sf.mode0.items():
        samples[:, 0] += coeff * pset.carriers[j]
    for j, coeff in sf.mode1.items():
        samples[:, 1] += coeff * pset.carriers[j]
    return ClassicalField(samples)


def symbolic_demodulate(sf: SymbolicField, j: int) -> tuple[complex, complex]:
    """Exact demodulation against reference j: plain coefficient lookup."""
    return (sf.mode0.get(j, 0j), sf.mode1.get(j, 0j))


@dataclass
class ProductExpansion:
    """Joint expansion of two fields: e^{i lambda^(index)} sum amp[xy] |xy>."""

    index: int
    amplitudes: dict[str, complex]

    def __post_init__(self):
        for key in self.amplitudes:
            if key not in ("00", "01", "10", "11"):
                raise ValueError(f"bad joint ket label {key!r}")
        self.amplitudes = {k: complex(v) for k, v in self.amplitudes.items() if complex(v)}


def _single_index(sf: SymbolicField) -> int:
    indices = sf.indices()
    if len(indices) != 1:
        raise ValueError("direct product is defined for single-sequence fields")
    return indices.pop()


def direct_product(
    sf_a: SymbolicField, sf_b: SymbolicField, pset: PpsSet
) -> ProductExpansion:
    """Componentwise product of two single-sequence fields.

    The carriers multiply into the carrier of sequence_product(a, b); the
    mode amplitudes expand into the four joint terms alpha_a alpha_b |00>,
    alpha_a beta_b |01>, beta_a alpha_b |10>, beta_a beta_b |11>.
    """
    a = _single_index(sf_a)
    b = _single_index(sf_b)
    combined = sequence_product(a, b, pset)
    alpha_a, beta_a = sf_a.mode0.get(a, 0j), sf_a.mode1.get(a, 0j)
    alpha_b, beta_b = sf_b.mode0.get(b, 0j), sf_b.mode1.get(b, 0j)
    return ProductExpansion(
        combined,
        {
            "00": alpha_a * alpha_b,
            "01": alpha_a * beta_b,
            "10": beta_a * alpha_b,
            "11": beta_a * beta_b,
        },
    )
