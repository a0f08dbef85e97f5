import numpy as np
import pytest

from staremit import (
    StarModel,
    aggregate_degenerate,
    build_hamiltonian,
    check_hermitian,
    eigh,
    reconstruct,
)

from helpers import random_hermitian

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]])


def test_check_hermitian_coupled_pair():
    assert check_hermitian(np.array([[2.0, 0.5], [0.5, 2.0]]), 1e-12)


@pytest.mark.parametrize("dim", [1, 2, 5, 8])
def test_check_hermitian_identity(dim):
    assert check_hermitian(np.eye(dim), 1e-12)


def test_check_hermitian_rejects_asymmetric():
    assert not check_hermitian(np.array([[0.0, 1.0], [2.0, 0.0]]), 1e-12)


def test_check_hermitian_complex_offdiagonal():
    a = 0.3 + 0.4j
    assert check_hermitian(np.array([[1.0, np.conj(a)], [a, -1.0]]), 1e-12)
    # symmetric but not conjugate-symmetric
    assert not check_hermitian(np.array([[0.0, a], [a, 0.0]]), 1e-12)


def test_check_hermitian_requires_square():
    with pytest.raises(ValueError):
        check_hermitian(np.zeros((2, 3)), 1e-12)


def test_eigh_pauli_x():
    d = eigh(PAULI_X)
    assert np.allclose(d.eigenvalues, [-1.0, 1.0], atol=1e-14)


def test_eigh_coupled_pair():
    # characteristic equation of [[e0, a], [a, e0]] gives e0 +- |a|
    d = eigh(np.array([[2.0, 0.5], [0.5, 2.0]]))
    assert np.allclose(d.eigenvalues, [1.5, 2.5], atol=1e-14)


def test_eigh_identical_modes_spectrum():
    # four identical unit couplings: exact spectrum is -2, 0 (x3), +2
    m = StarModel(eps=np.zeros(5), alpha=np.ones(4, dtype=complex))
    d = eigh(build_hamiltonian(m))
    assert np.allclose(d.eigenvalues, [-2.0, 0.0, 0.0, 0.0, 2.0], atol=1e-12)


def test_eigh_rejects_nonhermitian():
    with pytest.raises(ValueError):
        eigh(np.array([[0.0, 1.0], [2.0, 0.0]]))


def test_eigh_rejects_nonfinite():
    with pytest.raises(ValueError):
        eigh(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_eigh_deterministic():
    rng = np.random.default_rng(11)
    h = random_hermitian(rng, 7)
    d1, d2 = eigh(h), eigh(h)
    assert np.array_equal(d1.eigenvalues, d2.eigenvalues)
    assert np.array_equal(d1.eigenvectors, d2.eigenvectors)


def test_eigh_invariants_random():
    rng = np.random.default_rng(42)
    for _ in range(25):
        dim = int(rng.integers(2, 10))
        h = random_hermitian(rng, dim)
        d = eigh(h)
        fro = np.linalg.norm(h)
        assert np.all(np.diff(d.eigenvalues) >= 0)
        gram = d.eigenvectors.conj().T @ d.eigenvectors
        assert np.abs(gram - np.eye(dim)).max() < 1e-10
        assert abs(d.eigenvalues.sum() - np.trace(h).real) <= 1e-10 * max(fro, 1.0)
        assert abs(d.zero_overlaps.sum() - 1.0) <= 1e-12


def test_eigenvalues_invariant_under_mode_permutation():
    rng = np.random.default_rng(5)
    for _ in range(10):
        dim = int(rng.integers(3, 9))
        h = random_hermitian(rng, dim)
        perm = np.concatenate(([0], 1 + rng.permutation(dim - 1)))
        hp = h[np.ix_(perm, perm)]
        assert np.abs(eigh(h).eigenvalues - eigh(hp).eigenvalues).max() < 1e-10


def test_reconstruct_identity():
    assert np.allclose(reconstruct(eigh(np.eye(3))), np.eye(3), atol=1e-14)


def test_reconstruct_pauli_x():
    assert np.abs(reconstruct(eigh(PAULI_X)) - PAULI_X).max() < 1e-12


def test_reconstruct_random_round_trip():
    rng = np.random.default_rng(99)
    for _ in range(25):
        h = random_hermitian(rng, 8)
        rec = reconstruct(eigh(h))
        assert np.abs(rec - h).max() <= 1e-10 * np.linalg.norm(h)
        assert check_hermitian(rec, 1e-12)


def test_aggregate_degenerate_merges_dark_levels():
    m = StarModel(eps=np.zeros(5), alpha=np.ones(4, dtype=complex))
    d = eigh(build_hamiltonian(m))
    levels, weights = aggregate_degenerate(d.eigenvalues, d.zero_overlaps)
    assert np.allclose(levels, [-2.0, 0.0, 2.0], atol=1e-12)
    assert np.allclose(weights, [0.5, 0.0, 0.5], atol=1e-12)


def test_aggregate_degenerate_keeps_distinct_levels():
    levels, weights = aggregate_degenerate([0.0, 1.0, 2.0], [0.2, 0.3, 0.5])
    assert np.array_equal(levels, [0.0, 1.0, 2.0])
    assert np.array_equal(weights, [0.2, 0.3, 0.5])


def test_aggregate_degenerate_validates_input():
    with pytest.raises(ValueError):
        aggregate_degenerate([1.0, 0.0], [0.5, 0.5])
    with pytest.raises(ValueError):
        aggregate_degenerate([0.0, 1.0], [1.0])
