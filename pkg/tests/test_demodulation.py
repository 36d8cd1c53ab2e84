"""Quadrature demodulation and mode-status quantization."""
import itertools

import numpy as np
import pytest

from ppsim import (
    ClassicalField,
    DimensionMismatchError,
    ModeStatus,
    ModeStatusMatrix,
    canonical_inputs,
    demodulate_mode,
    make_single_pps_field,
    mode_status,
    mode_status_matrix,
    quantize,
    zero_field,
)


def _field_from_sets(pset, mode0_idx, mode1_idx, coeffs=None):
    """Sum of unit carriers per mode; coeffs maps (mode, j) to a weight."""
    samples = np.zeros((pset.length, 2), dtype=np.complex128)
    for j in mode0_idx:
        samples[:, 0] += (coeffs or {}).get((0, j), 1.0) * pset.carriers[j]
    for j in mode1_idx:
        samples[:, 1] += (coeffs or {}).get((1, j), 1.0) * pset.carriers[j]
    return ClassicalField(samples)


def test_demodulate_recovers_coefficients(set3):
    fld = _field_from_sets(
        set3, [1, 2], [3], coeffs={(0, 1): 0.3, (0, 2): -1.0, (1, 3): 2.5j}
    )
    assert demodulate_mode(fld, 0, set3.sequence(1)) == pytest.approx(0.3, abs=1e-12)
    assert demodulate_mode(fld, 0, set3.sequence(2)) == pytest.approx(-1.0, abs=1e-12)
    assert demodulate_mode(fld, 0, set3.sequence(3)) == pytest.approx(0.0, abs=1e-12)
    assert demodulate_mode(fld, 1, set3.sequence(3)) == pytest.approx(2.5j, abs=1e-12)


def test_demodulate_length_mismatch(set3, set4):
    fld = zero_field(8)
    with pytest.raises(DimensionMismatchError):
        demodulate_mode(fld, 0, set4.sequence(1))


def test_quantize_thresholds():
    assert quantize(0.9) == 1
    assert quantize(-0.9) == -1
    assert quantize(0.3) == 0
    assert quantize(0.5) == 1  # boundary counts as a hit
    assert quantize(-0.5) == -1
    assert quantize(0.4 + 9j) == 0  # decision reads the real part only
    assert quantize(0.3, tau=0.25) == 1


def test_mode_status_and_strings(set3):
    fld = make_single_pps_field(set3, 2, mode_weights=(1.0, -1.0))
    status = mode_status(fld, set3.sequence(2))
    assert status.pair == (1, -1)
    assert status.as_string() == "(1,-1)"
    off = mode_status(fld, set3.sequence(5))
    assert off.is_zero and off.as_string() == "0"
    with pytest.raises(ValueError):
        mode_status(fld, set3.sequence(2), tau=0.0)


def test_separability_all_subsets(set3):
    # every subset on mode0 (complement on mode1) demodulates exactly
    indices = range(1, 8)
    for size in range(8):
        for subset in itertools.combinations(indices, size):
            chosen = set(subset)
            rest = [j for j in indices if j not in chosen]
            fld = _field_from_sets(set3, sorted(chosen), rest)
            for j in indices:
                status = mode_status(fld, set3.sequence(j))
                expect = (1, 0) if j in chosen else (0, 1)
                assert status.pair == expect


def test_matrix_construction_and_access(set3):
    fields = canonical_inputs(set3, 3)
    matrix = mode_status_matrix(fields, pset=set3)
    assert matrix.field_count == 3 and matrix.reference_count == 3
    for i in range(1, 4):
        for j in range(1, 4):
            assert matrix.status(i, j).pair == ((1, 1) if i == j else (0, 0))
    assert matrix.cell_strings()[0] == ["(1,1)", "0", "0"]


def test_matrix_against_explicit_references(set3):
    fields = canonical_inputs(set3, 2)
    refs = [set3.sequence(1), set3.sequence(2), set3.sequence(3)]
    matrix = mode_status_matrix(fields, refs=refs)
    assert matrix.field_count == 2 and matrix.reference_count == 3
    assert matrix.status(1, 1).pair == (1, 1)
    assert matrix.status(2, 3).pair == (0, 0)


def test_matrix_equality_and_from_pairs(set3):
    fields = canonical_inputs(set3, 2)
    m1 = mode_status_matrix(fields, pset=set3)
    m2 = ModeStatusMatrix.from_pairs([[(1, 1), (0, 0)], [(0, 0), (1, 1)]])
    m3 = ModeStatusMatrix.from_pairs([[(1, 1), (0, 0)], [(0, 0), (-1, 1)]])
    assert m1 == m2
    assert m1 != m3
    assert m1 != ModeStatusMatrix.from_pairs([[(1, 1)]])
    assert (m1 == "nope") is False


def test_threshold_robustness(set3):
    fields = canonical_inputs(set3, 4)
    baseline = mode_status_matrix(fields, pset=set3, tau=0.5)
    for tau in (0.25, 0.4, 0.6, 0.75):
        assert mode_status_matrix(fields, pset=set3, tau=tau) == baseline


def test_too_many_fields_for_set(set3):
    fields = [zero_field(8) for _ in range(8)]
    with pytest.raises(DimensionMismatchError):
        mode_status_matrix(fields, pset=set3)


def test_matrix_slot_mismatch(set3):
    with pytest.raises(DimensionMismatchError):
        mode_status_matrix([zero_field(4)], pset=set3)


def test_mode_status_raw_retained(set3):
    fld = _field_from_sets(set3, [2], [], coeffs={(0, 2): 0.75})
    status = mode_status(fld, set3.sequence(2))
    assert status.pair == (1, 0)
    assert status.raw[0] == pytest.approx(0.75, abs=1e-12)
    frozen = ModeStatus(1, 0)
    assert frozen.pair == (1, 0) and frozen.raw == (0j, 0j)
