"""Reconstruction of simulated states from mode status matrices.

A square status matrix is read along its cyclic diagonals: rotation r
pairs field i with reference column ((i + r - 2) mod n) + 1. Each rotation
whose statuses are all nonzero contributes one product term; the sum over
rotations, with integer coefficients reduced by their common factor, is
the simulated state.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .demod import ModeStatusMatrix
from .errors import DimensionMismatchError, UnrepresentableStateError


@dataclass(frozen=True)
class SequencePermutation:
    """Cyclic column rotation R_r acting on n reference columns."""

    order: int
    rotation: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if not 1 <= self.rotation <= self.order:
            raise ValueError("rotation must lie in 1..order")

    def column_for(self, i: int) -> int:
        """Reference column paired with field i (both 1-based)."""
        return (i + self.rotation - 2) % self.order + 1

    def columns0(self) -> np.ndarray:
        """0-based column indexes for fields 0..n-1."""
        return (np.arange(self.order) + self.rotation - 1) % self.order


def cyclic_permutations(n: int) -> list[SequencePermutation]:
    """All n cyclic rotations R_1 (identity) through R_n."""
    return [SequencePermutation(n, r) for r in range(1, n + 1)]


@dataclass
class SimulatedState:
    """Integer-coefficient superposition over n-digit binary kets.

    Coefficients are reduced by their greatest common factor on
    construction (signs are kept), so equal states compare equal.
    """

    width: int
    terms: dict[str, int]

    def __post_init__(self):
        cleaned: dict[str, int] = {}
        for bits, coeff in self.terms.items():
            if len(bits) != self.width or set(bits) - {"0", "1"}:
                raise ValueError(f"bad ket label {bits!r} for width {self.width}")
            if int(coeff) != coeff:
                raise ValueError("coefficients must be integers")
            if coeff:
                cleaned[bits] = int(coeff)
        common = math.gcd(*(abs(c) for c in cleaned.values())) if cleaned else 1
        self.terms = {bits: c // common for bits, c in sorted(cleaned.items())}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[str, int]]:
        return sorted(self.terms.items())

    def coefficient(self, bits: str) -> int:
        return self.terms.get(bits, 0)

    def pretty(self) -> str:
        """Readable rendering such as "|00> + |11>" or "|01> - |10>"."""
        if self.is_zero:
            return "0"
        parts = []
        for bits, coeff in self.sorted_terms():
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = f"|{bits}>" if mag == 1 else f"{mag}|{bits}>"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def term_for_permutation(
    matrix: ModeStatusMatrix, perm: SequencePermutation
) -> dict[str, int]:
    """Product term of one rotation, expanded over ket labels.

    Field i contributes the factor (a|0> + b|1>) read from its rotated
    status; any zero status kills the whole term (empty result).
    """
    if matrix.field_count != perm.order:
        raise DimensionMismatchError("permutation order differs from matrix size")
    terms = {"": 1}
    for i in range(1, matrix.field_count + 1):
        a, b = matrix.status(i, perm.column_for(i)).pair
        if a == 0 and b == 0:
            return {}
        grown: dict[str, int] = {}
        for bits, coeff in terms.items():
            if a != 0:
                grown[bits + "0"] = coeff * a
            if b != 0:
                grown[bits + "1"] = coeff * b
        terms = grown
    return terms


def reconstruct(matrix: ModeStatusMatrix) -> SimulatedState:
    """Sum the product terms of every cyclic rotation of a square matrix."""
    n = matrix.field_count
    if matrix.reference_count != n:
        raise DimensionMismatchError(
            f"matrix is {n}x{matrix.reference_count}, reconstruction needs square"
        )
    total: Counter[str] = Counter()
    for perm in cyclic_permutations(n):
        for bits, coeff in term_for_permutation(matrix, perm).items():
            total[bits] += coeff
    return SimulatedState(n, {b: c for b, c in total.items() if c != 0})


def sample_measurement(
    matrix: ModeStatusMatrix, rng: np.random.Generator | int | None = None
) -> str:
    """Draw one ket label the way a projective readout would.

    A rotation is picked uniformly from those with no zero status, then
    each field resolves to 0 or 1: deterministically when only one mode is
    set, by fair coin when both are. Signs carry no probability weight.
    Raises UnrepresentableStateError when every rotation has a hole.
    """
    gen = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    n = matrix.field_count
    if matrix.reference_count != n:
        raise DimensionMismatchError(
            f"matrix is {n}x{matrix.reference_count}, sampling needs square"
        )
    usable = [
        perm
        for perm in cyclic_permutations(n)
        if all(
            not matrix.status(i, perm.column_for(i)).is_zero
            for i in range(1, n + 1)
        )
    ]
    if not usable:
        raise UnrepresentableStateError("unrepresentable state")
    perm = usable[int(gen.integers(len(usable)))]
    digits = []
    for i in range(1, n + 1):
        a, b = matrix.status(i, perm.column_for(i)).pair
        if a != 0 and b != 0:
            digits.append("01"[int(gen.integers(2))])
        elif a != 0:
            digits.append("0")
        else:
            digits.append("1")
    return "".join(digits)
