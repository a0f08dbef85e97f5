"""Shared generators for randomized tests."""

import numpy as np

from staremit import StarModel


def random_star_model(rng: np.random.Generator, dim: int | None = None, max_dim: int = 9) -> StarModel:
    if dim is None:
        dim = int(rng.integers(2, max_dim + 1))
    eps = rng.uniform(-1.0, 1.0, dim)
    alpha = rng.uniform(-1.0, 1.0, dim - 1) + 1j * rng.uniform(-1.0, 1.0, dim - 1)
    return StarModel(eps=eps, alpha=alpha)


def random_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    a = rng.uniform(-1.0, 1.0, (dim, dim)) + 1j * rng.uniform(-1.0, 1.0, (dim, dim))
    return 0.5 * (a + a.conj().T)
