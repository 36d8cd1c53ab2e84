"""Two-mode fields: construction, modulation, rotations, splitting."""
import numpy as np
import pytest

from ppsim import (
    MODE0,
    MODE1,
    ClassicalField,
    DimensionMismatchError,
    Unitary2,
    apply_unitary,
    beam_split,
    canonical_inputs,
    combine,
    field_inner_product,
    make_single_pps_field,
    mode_split,
    modulate,
    sequence_product,
    zero_field,
)


def _power(fld):
    return float(np.sum(np.abs(fld.samples) ** 2))


def test_field_validation():
    with pytest.raises(DimensionMismatchError):
        ClassicalField(np.zeros((4, 3)))
    with pytest.raises(DimensionMismatchError):
        ClassicalField(np.zeros(4))
    with pytest.raises(ValueError):
        ClassicalField(np.full((4, 2), np.nan))


def test_zero_field_and_copy():
    fld = zero_field(6)
    assert fld.slot_count == 6 and not fld.samples.any()
    dup = fld.copy()
    dup.samples[0, 0] = 1.0
    assert fld.samples[0, 0] == 0.0


def test_unitary_random_sweep():
    rng = np.random.default_rng(2)
    eye = np.eye(2)
    for _ in range(100):
        chi = float(rng.uniform(-2 * np.pi, 2 * np.pi))
        theta = float(rng.uniform(-2 * np.pi, 2 * np.pi))
        u = Unitary2(chi, theta).matrix
        assert np.abs(u @ u.conj().T - eye).max() < 1e-12
        assert abs(np.linalg.det(u) - 1.0) < 1e-12


def test_unitary_basis_action():
    u = Unitary2(0.3, 0.9)
    col = u.matrix[:, 0]
    assert col[0] == pytest.approx(np.cos(0.3), abs=1e-12)
    assert col[1] == pytest.approx(1j * np.exp(-0.9j) * np.sin(0.3), abs=1e-12)


def test_half_turn_squares_to_minus_identity():
    rng = np.random.default_rng(3)
    for _ in range(20):
        theta = float(rng.uniform(-np.pi, np.pi))
        u = Unitary2(np.pi / 2, theta).matrix
        assert np.abs(u @ u + np.eye(2)).max() < 1e-12


def test_apply_unitary_matches_matrix(set3):
    fld = make_single_pps_field(set3, 2, mode_weights=(0.5, -1.25j))
    u = Unitary2(1.1, -0.4)
    out = apply_unitary(fld, u)
    assert np.allclose(out.samples, fld.samples @ u.matrix.T, atol=1e-12)
    assert _power(out) == pytest.approx(_power(fld), abs=1e-9)


def test_make_single_pps_field(set3):
    fld = make_single_pps_field(set3, 3, mode_weights=(2.0, 1j))
    assert np.allclose(fld.samples[:, MODE0], 2.0 * set3.carriers[3])
    assert np.allclose(fld.samples[:, MODE1], 1j * set3.carriers[3])


def test_canonical_inputs(set3):
    fields = canonical_inputs(set3, 4)
    assert len(fields) == 4
    for k, fld in enumerate(fields, start=1):
        assert np.allclose(fld.samples[:, MODE0], set3.carriers[k])
        assert np.allclose(fld.samples[:, MODE1], set3.carriers[k])
    with pytest.raises(DimensionMismatchError):
        canonical_inputs(set3, 8)


def test_modulate_is_group_action(set3):
    fld = canonical_inputs(set3, 1)[0]
    double = modulate(modulate(fld, set3.sequence(2)), set3.sequence(5))
    k = sequence_product(2, 5, set3)
    direct = modulate(fld, set3.sequence(k))
    assert np.allclose(double.samples, direct.samples, atol=1e-12)


def test_modulate_mismatch(set3, set4):
    fld = canonical_inputs(set3, 1)[0]
    with pytest.raises(DimensionMismatchError):
        modulate(fld, set4.sequence(1))


def test_beam_split_power_and_ratio(set3):
    fld = make_single_pps_field(set3, 1, mode_weights=(1.0, 0.5))
    out_a, out_b = beam_split(fld, power_ratio=(0.25, 0.75))
    assert _power(out_a) + _power(out_b) == pytest.approx(_power(fld), abs=1e-9)
    assert _power(out_a) / _power(out_b) == pytest.approx(1 / 3, abs=1e-9)
    with pytest.raises(ValueError):
        beam_split(fld, power_ratio=(0.0, 0.0))
    with pytest.raises(ValueError):
        beam_split(fld, power_ratio=(-1.0, 2.0))


def test_beam_split_extra_phase(set3):
    fld = make_single_pps_field(set3, 1)
    out_a, _ = beam_split(fld, extra_phases=(np.pi, 0.0))
    expect = fld.samples.copy() / np.sqrt(2)
    expect[:, MODE1] *= -1
    assert np.allclose(out_a.samples, expect, atol=1e-12)


def test_mode_split_and_combine(set3):
    fld = make_single_pps_field(set3, 4, mode_weights=(0.8, -0.6j))
    only0, only1 = mode_split(fld)
    assert not only0.samples[:, MODE1].any()
    assert not only1.samples[:, MODE0].any()
    back = combine([only0, only1])
    assert np.allclose(back.samples, fld.samples, atol=1e-12)


def test_combine_errors(set3):
    with pytest.raises(DimensionMismatchError):
        combine([])
    with pytest.raises(DimensionMismatchError):
        combine([zero_field(8), zero_field(4)])


def test_field_inner_product_orthogonality(set3):
    fields = canonical_inputs(set3, 7)
    for i in range(7):
        for j in range(7):
            value = field_inner_product(fields[i], fields[j])
            expect = 2.0 if i == j else 0.0  # both modes contribute
            assert value == pytest.approx(expect, abs=1e-12)
    with pytest.raises(DimensionMismatchError):
        field_inner_product(fields[0], zero_field(4))
