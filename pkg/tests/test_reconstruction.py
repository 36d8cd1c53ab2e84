"""State reconstruction from mode-status matrices and measurement sampling."""
from collections import Counter

import numpy as np
import pytest

from ppsim import (
    DimensionMismatchError,
    ModeStatusMatrix,
    SequencePermutation,
    SimulatedState,
    UnrepresentableStateError,
    cyclic_permutations,
    reconstruct,
    sample_measurement,
    term_for_permutation,
)
from ppsim.fixtures import typical_reference


def _matrix(rows):
    return ModeStatusMatrix.from_pairs(rows)


def test_permutation_columns():
    r1 = SequencePermutation(8, 1)
    assert [r1.column_for(i) for i in range(1, 9)] == [1, 2, 3, 4, 5, 6, 7, 8]
    r2 = SequencePermutation(8, 2)
    assert [r2.column_for(i) for i in range(1, 9)] == [2, 3, 4, 5, 6, 7, 8, 1]
    r8 = SequencePermutation(8, 8)
    assert r8.column_for(1) == 8 and r8.column_for(2) == 1
    assert list(SequencePermutation(4, 3).columns0()) == [2, 3, 0, 1]
    with pytest.raises(ValueError):
        SequencePermutation(4, 0)
    with pytest.raises(ValueError):
        SequencePermutation(4, 5)


def test_cyclic_permutations():
    perms = cyclic_permutations(5)
    assert [p.rotation for p in perms] == [1, 2, 3, 4, 5]
    assert all(p.order == 5 for p in perms)


def test_term_for_permutation_ghz():
    matrix = typical_reference("ghz3").matrix
    perms = cyclic_permutations(3)
    assert term_for_permutation(matrix, perms[0]) == {"000": 1}
    assert term_for_permutation(matrix, perms[1]) == {"111": 1}
    assert term_for_permutation(matrix, perms[2]) == {}
    with pytest.raises(DimensionMismatchError):
        term_for_permutation(matrix, SequencePermutation(4, 1))


def test_term_expands_mixed_cells():
    matrix = _matrix([[(1, -1), (0, 0)], [(0, 0), (1, 1)]])
    term = term_for_permutation(matrix, SequencePermutation(2, 1))
    assert term == {"00": 1, "01": 1, "10": -1, "11": -1}


def test_reconstruct_diagonal_full_superposition():
    # all-diagonal (1,1) cells: rotation 1 contributes every ket once
    n = 3
    rows = [[(1, 1) if i == j else (0, 0) for j in range(n)] for i in range(n)]
    state = reconstruct(_matrix(rows))
    assert state.terms == {format(v, "03b"): 1 for v in range(8)}


def test_reconstruct_applies_common_factor():
    # both rotations contribute |00> once; the pair reduces to coefficient 1
    rows = [[(1, 0), (1, 0)], [(1, 0), (1, 0)]]
    state = reconstruct(_matrix(rows))
    assert state.terms == {"00": 1}


def test_reconstruct_cancellation():
    # R1 gives +|00>, R2 gives -|00> + |10>: the |00> terms cancel
    rows = [[(1, 0), (-1, 1)], [(1, 0), (1, 0)]]
    state = reconstruct(_matrix(rows))
    assert state.terms == {"10": 1}


def test_reconstruct_requires_square():
    with pytest.raises(DimensionMismatchError):
        reconstruct(_matrix([[(1, 0), (0, 1), (0, 0)], [(1, 0), (0, 1), (0, 0)]]))


def test_reconstruct_signs():
    ref = typical_reference("psi-")
    state = reconstruct(ref.matrix)
    assert state == ref.state
    assert state.coefficient("11") == -1
    assert state.pretty() == "|00> - |11>"


def test_simulated_state_api():
    state = SimulatedState(2, {"00": 2, "11": -2, "01": 0})
    assert state.terms == {"00": 1, "11": -1}  # pruned and reduced
    assert state.coefficient("01") == 0
    assert not state.is_zero
    assert SimulatedState(2, {}).is_zero
    assert SimulatedState(2, {}).pretty() == "0"
    assert SimulatedState(1, {"1": -3}).pretty() == "-|1>"
    assert SimulatedState(1, {"0": 2, "1": 4}).pretty() == "|0> + 2|1>"
    with pytest.raises(ValueError):
        SimulatedState(2, {"012": 1})
    with pytest.raises(ValueError):
        SimulatedState(2, {"00": 0.5})


def test_sampling_deterministic_and_supported():
    matrix = typical_reference("psi+").matrix
    draws = [sample_measurement(matrix, np.random.default_rng(1)) for _ in range(5)]
    assert len(set(draws)) == 1  # fresh generator with equal seed repeats
    gen = np.random.default_rng(9)
    seen = Counter(sample_measurement(matrix, gen) for _ in range(300))
    assert set(seen) == {"00", "11"}


def test_sampling_accepts_int_seed():
    matrix = typical_reference("psi+").matrix
    assert sample_measurement(matrix, 42) == sample_measurement(matrix, 42)


def test_sampling_w_collapse():
    matrix = typical_reference("w3").matrix
    gen = np.random.default_rng(4)
    for _ in range(200):
        draw = sample_measurement(matrix, gen)
        assert draw.count("1") == 1
        if draw[0] == "1":
            assert draw[1:] == "00"


def test_sampling_mixed_cells_cover_product_kets():
    matrix = typical_reference("product2").matrix
    gen = np.random.default_rng(8)
    seen = Counter(sample_measurement(matrix, gen) for _ in range(400))
    assert set(seen) == {"00", "01", "10", "11"}


def test_sampling_ignores_signs():
    plus = typical_reference("psi+").matrix
    minus = typical_reference("psi-").matrix
    draws_plus = [sample_measurement(plus, np.random.default_rng(s)) for s in range(40)]
    draws_minus = [sample_measurement(minus, np.random.default_rng(s)) for s in range(40)]
    assert draws_plus == draws_minus


def test_sampling_unrepresentable():
    rows = [[(0, 0), (0, 0)], [(1, 0), (1, 0)]]
    with pytest.raises(UnrepresentableStateError, match="unrepresentable state"):
        sample_measurement(_matrix(rows), 0)


def test_sampling_requires_square():
    with pytest.raises(DimensionMismatchError):
        sample_measurement(_matrix([[(1, 0), (0, 1), (1, 1)]]), 0)
