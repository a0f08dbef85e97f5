"""Construct a star Hamiltonian realizing a prescribed spectral profile.

Any strictly positive set of initial-state weights summing to one,
together with the equally spaced level ladder, is realizable by an
arrowhead Hamiltonian. The construction works entirely in the eigenbasis
of the target operator, where the operator is ``diag(E_m)`` and the
initial state can be written with real positive components
``sqrt(overlaps)``; a change of basis headed by that state exposes the
arrowhead parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateProfile, DimensionMismatch, NonConvergence
from .hermitian import aggregate_degenerate, eigh
from .model import StarModel, build_hamiltonian

# Overlap weights must sum to one within this tolerance.
PROFILE_SUM_TOL = 1e-12

# Candidate vectors shrinking below this during orthogonalization mean
# the profile cannot span the full space.
ORTHOGONALIZATION_TOL = 1e-12


def equally_spaced_spectrum(m_half: int, eps0: float, d_width: float) -> np.ndarray:
    """Level ladder ``eps0 + (m/M) d_width`` for ``m = -M..M``, ascending."""
    if m_half < 1:
        raise ValueError("m_half must be >= 1")
    if not d_width > 0:
        raise ValueError("d_width must be positive")
    m = np.arange(-m_half, m_half + 1, dtype=float)
    return eps0 + (m / m_half) * d_width


@dataclass(frozen=True)
class SpectralProfile:
    """Inverse-problem input: level ladder plus initial-state weights.

    The ``2*m_half + 1`` eigenvalues are implied, equally spaced across
    ``eps0 +- d_width``. ``overlaps[i]`` is the weight ``|<0|e_m>|^2`` at
    ``m = i - m_half``; weights must be strictly positive and sum to one.
    """

    m_half: int
    eps0: float
    d_width: float
    overlaps: np.ndarray

    def __post_init__(self):
        if self.m_half < 1:
            raise ValueError("m_half must be >= 1")
        if not (np.isfinite(self.d_width) and self.d_width > 0):
            raise ValueError("d_width must be positive and finite")
        w = np.asarray(self.overlaps, dtype=float)
        if w.shape != (2 * self.m_half + 1,):
            raise ValueError(
                f"expected {2 * self.m_half + 1} overlaps, got shape {w.shape}"
            )
        if not np.all(np.isfinite(w)) or np.any(w <= 0):
            raise ValueError("overlaps must be finite and strictly positive")
        if abs(w.sum() - 1.0) > PROFILE_SUM_TOL:
            raise ValueError("overlaps must sum to one")
        object.__setattr__(self, "overlaps", w)

    @property
    def dim(self) -> int:
        return 2 * self.m_half + 1

    def eigenvalues(self) -> np.ndarray:
        return equally_spaced_spectrum(self.m_half, self.eps0, self.d_width)

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        """Whether the weights mirror around ``m = 0`` within ``tol``."""
        return bool(np.abs(self.overlaps - self.overlaps[::-1]).max() < tol)

    def to_dict(self) -> dict:
        return {
            "m_half": self.m_half,
            "eps0": self.eps0,
            "d_width": self.d_width,
            "overlaps": self.overlaps.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SpectralProfile":
        return cls(
            m_half=int(data["m_half"]),
            eps0=float(data["eps0"]),
            d_width=float(data["d_width"]),
            overlaps=np.asarray(data["overlaps"], dtype=float),
        )


def flat_profile(m_half: int, eps0: float, d_width: float) -> SpectralProfile:
    """Equal weight ``1/(2M+1)`` on every level.

    The flattest weight distribution concentrates the survival amplitude
    near multiples of the revival period, which is what makes the decay
    look irreversible between revivals.
    """
    dim = 2 * m_half + 1
    return SpectralProfile(m_half, eps0, d_width, np.full(dim, 1.0 / dim))


def random_profile(
    m_half: int,
    eps0: float,
    d_width: float,
    rng: np.random.Generator,
    symmetric: bool = False,
) -> SpectralProfile:
    """Random profile: positive weights drawn uniformly, then normalized.

    With ``symmetric=True`` the weights mirror around ``m = 0`` so the
    cosine expansion of the amplitude applies.
    """
    if symmetric:
        half = rng.uniform(0.0, 1.0, m_half + 1)  # m = 0..M
        w = np.concatenate([half[:0:-1], half])
    else:
        w = rng.uniform(0.0, 1.0, 2 * m_half + 1)
    return SpectralProfile(m_half, eps0, d_width, w / w.sum())


def construct_hamiltonian(profile: SpectralProfile) -> StarModel:
    """Find diagonal energies and couplings realizing a spectral profile.

    In the eigenbasis of the target operator the initial state has
    components ``sqrt(overlaps)``. The construction:

    1. orthonormalize (initial state, then the eigenbasis unit vectors
       excluding ``m = 0``) by modified Gram-Schmidt, initial state first;
    2. express the operator in that basis;
    3. diagonalize the block orthogonal to the initial state and rotate
       those coordinates onto its eigenvectors, after which the operator
       is an arrowhead headed by the initial state;
    4. read off the diagonal energies and the first-column couplings.

    All arithmetic is real, so the couplings come out real; their signs
    are a per-mode gauge and are fixed to ``alpha_k >= 0``. Modes are
    ordered by descending coupling, ties by ascending energy. Identical
    profiles yield bitwise-identical output.

    Raises
    ------
    DegenerateProfile
        If orthogonalization collapses (candidate norm below
        ``ORTHOGONALIZATION_TOL``), i.e. the profile does not span the
        space; in practice a weight numerically indistinguishable from 0.
    """
    energies = profile.eigenvalues()
    dim = profile.dim
    head = np.sqrt(profile.overlaps)
    head /= np.linalg.norm(head)

    basis = np.zeros((dim, dim))
    basis[:, 0] = head
    col = 1
    for idx in range(dim):
        if idx == profile.m_half:  # m = 0: covered by the initial state
            continue
        y = np.zeros(dim)
        y[idx] = 1.0
        # modified Gram-Schmidt; the second pass restores orthogonality
        # lost to cancellation
        for _ in range(2):
            for j in range(col):
                y -= (basis[:, j] @ y) * basis[:, j]
        norm = np.linalg.norm(y)
        if norm < ORTHOGONALIZATION_TOL:
            raise DegenerateProfile(
                f"orthogonalization broke down at column {col}; "
                "an overlap weight is numerically zero"
            )
        basis[:, col] = y / norm
        col += 1

    transformed = basis.T @ (energies[:, None] * basis)
    head_energy = transformed[0, 0]
    try:
        mode_energies, rot = np.linalg.eigh(transformed[1:, 1:])
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathological input
        raise NonConvergence(f"reduced block diagonalization failed: {exc}") from exc
    couplings = np.abs(rot.T @ transformed[1:, 0])  # gauge: alpha_k >= 0
    order = np.lexsort((mode_energies, -couplings))
    return StarModel(
        eps=np.concatenate(([head_energy], mode_energies[order])),
        alpha=couplings[order],
    )


@dataclass(frozen=True)
class RoundTripReport:
    """Outcome of re-diagonalizing a constructed model against its target."""

    max_eigenvalue_error: float
    max_overlap_error: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "max_eigenvalue_error": self.max_eigenvalue_error,
            "max_overlap_error": self.max_overlap_error,
            "passed": self.passed,
        }


def verify_round_trip(
    model: StarModel, profile: SpectralProfile, tol: float
) -> RoundTripReport:
    """Re-diagonalize ``model`` and compare against ``profile``.

    Eigenvalues are compared sorted, elementwise. Overlap weights are
    summed per distinct level on both sides first, so basis choices
    inside degenerate subspaces cannot affect the verdict; weight sitting
    on a level matching no target level counts as error in full.
    """
    target_e = profile.eigenvalues()
    if model.dim != profile.dim:
        raise DimensionMismatch(
            f"model dimension {model.dim} != profile dimension {profile.dim}"
        )
    d = eigh(build_hamiltonian(model))
    eig_err = float(np.abs(d.eigenvalues - target_e).max())

    got_levels, got_weights = aggregate_degenerate(d.eigenvalues, d.zero_overlaps)
    want_levels, want_weights = aggregate_degenerate(target_e, profile.overlaps)
    window = 0.5 * np.diff(want_levels).min() if want_levels.size > 1 else np.inf
    assigned = np.zeros_like(want_weights)
    stray = 0.0
    for level, weight in zip(got_levels, got_weights):
        j = int(np.argmin(np.abs(want_levels - level)))
        if abs(want_levels[j] - level) <= window:
            assigned[j] += weight
        else:
            stray = max(stray, weight)
    overlap_err = float(max(np.abs(assigned - want_weights).max(), stray))
    return RoundTripReport(
        max_eigenvalue_error=eig_err,
        max_overlap_error=overlap_err,
        passed=bool(eig_err <= tol and overlap_err <= tol),
    )
