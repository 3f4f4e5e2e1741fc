"""Gamma-matrix algebra on dense complex 4x4 matrices.

Two bases are supported: the standard representation (diagonal gamma^0) and
the Weyl or chiral representation (diagonal gamma^5).  The metric signature
is (+, -, -, -) throughout, and hbar = c = 1.  Every matrix is built from the
exact literals {0, +-1, +-i, +-1/sqrt(2)}; derived members (alpha = gamma^0
gamma, alpha^5 = gamma^0 gamma^5, the spin block Sigma = alpha gamma^5) are
single exact products of those.

All arrays returned by this module are read-only; operations are pure
functions and safe for unrestricted concurrent use.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

_ID2 = np.eye(2, dtype=complex)
_ZERO2 = np.zeros((2, 2), dtype=complex)


class Representation(enum.Enum):
    STANDARD = "standard"
    WEYL = "weyl"


def _blocks(a, b, c, d) -> np.ndarray:
    m = np.block([[a, b], [c, d]]).astype(complex)
    m.setflags(write=False)
    return m


def _frozen(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class GammaSet:
    """The four gamma matrices of one representation plus derived members.

    ``gammas[mu]`` carries an upper index; lowering is by the diagonal
    metric.  ``sigma_spin`` holds the three components of the 4x4 spin
    operator Sigma = alpha gamma^5, block-diagonal Pauli matrices in both
    representations.
    """

    rep: Representation
    gammas: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    gamma5: np.ndarray
    alpha: tuple[np.ndarray, np.ndarray, np.ndarray]
    alpha5: np.ndarray
    sigma_spin: tuple[np.ndarray, np.ndarray, np.ndarray]

    @property
    def metric(self) -> np.ndarray:
        return METRIC

    def gamma(self, mu: int) -> np.ndarray:
        """gamma^mu for mu in 0..3."""
        if mu not in (0, 1, 2, 3):
            raise IndexError(f"gamma index must be 0..3, got {mu}")
        return self.gammas[mu]

    def gamma_lower(self, mu: int) -> np.ndarray:
        """gamma_mu = g_{mu mu} gamma^mu (diagonal metric)."""
        return _frozen(METRIC[mu, mu] * self.gamma(mu))


@functools.lru_cache(maxsize=None)
def gamma_set(rep: Representation) -> GammaSet:
    """Construct the gamma matrices of the requested representation."""
    if rep is Representation.STANDARD:
        g0 = _blocks(_ID2, _ZERO2, _ZERO2, -_ID2)
        gk = tuple(_blocks(_ZERO2, s, -s, _ZERO2) for s in PAULI)
        g5 = _blocks(_ZERO2, _ID2, _ID2, _ZERO2)
    elif rep is Representation.WEYL:
        g0 = _blocks(_ZERO2, _ID2, _ID2, _ZERO2)
        gk = tuple(_blocks(_ZERO2, -s, s, _ZERO2) for s in PAULI)
        g5 = _blocks(_ID2, _ZERO2, _ZERO2, -_ID2)
    else:
        raise ValueError(f"unknown representation {rep!r}")
    alpha = tuple(_frozen(g0 @ g) for g in gk)
    alpha5 = _frozen(g0 @ g5)
    sigma_spin = tuple(_frozen(a @ g5) for a in alpha)
    return GammaSet(rep=rep, gammas=(g0, *gk), gamma5=g5, alpha=alpha,
                    alpha5=alpha5, sigma_spin=sigma_spin)


def _four_components(p) -> np.ndarray:
    if hasattr(p, "as_array"):
        return p.as_array()
    arr = np.asarray(p, dtype=float)
    if arr.shape != (4,):
        raise ValueError(f"expected a four-vector, got shape {arr.shape}")
    return arr


def slash(gs: GammaSet, p) -> np.ndarray:
    """Contraction p_mu gamma^mu = e gamma^0 - p.gamma for p = (e; p)."""
    e, px, py, pz = _four_components(p)
    g = gs.gammas
    return e * g[0] - px * g[1] - py * g[2] - pz * g[3]


def sigma_tensor(gs: GammaSet, mu: int, nu: int) -> np.ndarray:
    """Antisymmetric spin tensor sigma_{mu nu} = (i/2)[gamma_mu, gamma_nu]."""
    gm = gs.gamma_lower(mu)
    gn = gs.gamma_lower(nu)
    return 0.5j * (gm @ gn - gn @ gm)


def representation_change() -> np.ndarray:
    """Unitary map from Weyl-basis bispinors to standard-basis bispinors.

    Sends (xi; eta) to ((xi + eta)/sqrt(2); (xi - eta)/sqrt(2)).  The matrix
    is hermitian and involutive, so it is its own inverse, and it conjugates
    the Weyl gamma matrices into the standard ones.
    """
    w = _blocks(_ID2, _ID2, _ID2, -_ID2) / np.sqrt(2.0)
    w.setflags(write=False)
    return w


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.asarray(a) + np.asarray(b)


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.asarray(a) @ np.asarray(b)


def scale(c: complex, m: np.ndarray) -> np.ndarray:
    return c * np.asarray(m)


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def frobenius_norm(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def apply(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix times bispinor."""
    return np.asarray(m) @ np.asarray(v)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a
