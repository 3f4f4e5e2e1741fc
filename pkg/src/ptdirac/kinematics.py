"""Four-vector arithmetic, mass shells, dual momentum, dispersion speeds, boosts.

Three families of free particles are covered: bradyons (eps^2 = k^2 + m^2),
pseudotachyons (eps^2 = k^2 - m^2, which forces |p| >= m in every frame), and
massless luxons (eps = k).  The pseudotachyon point eps = 0, k = m (the
"transcendent" state) is fully supported.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

# Relative slack for shell checks: |m * nhat| can land a couple of ulp below
# m, which must still count as an admissible pseudotachyon momentum.
SHELL_RTOL = 1e-12


class NonPhysicalMomentum(ValueError):
    """Pseudotachyon momentum below the mass: no such state in any frame."""


class MassNotZero(ValueError):
    """Luxon constructed with a nonzero mass."""


class ZeroMomentum(ValueError):
    """Vanishing momentum where a direction is required."""


class Species(enum.Enum):
    BRADYON = "bradyon"
    PSEUDOTACHYON = "pseudotachyon"
    LUXON = "luxon"


@dataclass(frozen=True)
class FourVector:
    """Energy-momentum vector (e; px, py, pz) with metric (+, -, -, -)."""

    e: float
    px: float
    py: float
    pz: float

    def __post_init__(self):
        for name in ("e", "px", "py", "pz"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"non-finite four-vector component {name}")

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz])

    @property
    def k(self) -> float:
        """Spatial magnitude |p|."""
        return float(np.linalg.norm(self.spatial))

    def as_array(self) -> np.ndarray:
        return np.array([self.e, self.px, self.py, self.pz])

    @classmethod
    def from_array(cls, arr) -> "FourVector":
        e, px, py, pz = np.asarray(arr, dtype=float)
        return cls(float(e), float(px), float(py), float(pz))


def minkowski_dot(a: FourVector, b: FourVector) -> float:
    return a.e * b.e - a.px * b.px - a.py * b.py - a.pz * b.pz


def energy_from_momentum(species: Species, k: float, m: float) -> float:
    """Positive energy on the shell of the given species.

    The pseudotachyon branch is evaluated as sqrt(k - m) * sqrt(k + m), which
    is exact at the transcendent point k = m and avoids the cancellation in
    sqrt(k^2 - m^2) near it.
    """
    if k < 0 or m < 0:
        raise ValueError("k and m must be non-negative")
    if species is Species.BRADYON:
        return math.hypot(k, m)
    if species is Species.LUXON:
        if m != 0.0:
            raise MassNotZero(f"luxon requires m = 0, got m = {m}")
        return k
    if species is Species.PSEUDOTACHYON:
        if k < m * (1.0 - SHELL_RTOL):
            raise NonPhysicalMomentum(f"|p| = {k} < m = {m}")
        return math.sqrt(max(k - m, 0.0)) * math.sqrt(k + m)
    raise ValueError(f"unknown species {species!r}")


@dataclass(frozen=True)
class MassShell:
    """A validated (species, m, k, eps) point."""

    species: Species
    m: float
    k: float
    epsilon: float

    @classmethod
    def from_momentum(cls, species: Species, k: float, m: float) -> "MassShell":
        return cls(species, m, k, energy_from_momentum(species, k, m))


def dual_momentum(p: FourVector) -> FourVector:
    """The dual (k; eps p / k) of p = (eps; p), swapping eps and k.

    Satisfies p.dual(p) = 0 and dual(p)^2 = -p^2.  The definition is
    componentwise in the given frame; it is not claimed (nor tested) to
    transform as a four-vector under boosts that are not collinear with p.
    """
    k = p.k
    if k == 0.0:
        raise ZeroMomentum("dual momentum undefined at |p| = 0")
    scale = p.e / k
    return FourVector(k, scale * p.px, scale * p.py, scale * p.pz)


class SpeedTriple(NamedTuple):
    """Dispersion-law speeds at fixed energy, in units of c.

    u: bradyon speed k/eps (absent below the rest energy), v: pseudotachyon
    mean speed eps/k, w: classical tachyon speed k/eps (absent at eps = 0).
    """

    u: Optional[float]
    v: float
    w: Optional[float]


def speeds(epsilon: float, m: float) -> SpeedTriple:
    if epsilon < 0 or m < 0:
        raise ValueError("epsilon and m must be non-negative")
    if epsilon == 0.0:
        # v -> 0 on any massive shell; the massless point is the luxon c.
        v = 1.0 if m == 0.0 else 0.0
        return SpeedTriple(u=None, v=v, w=None)
    if m == 0.0:
        return SpeedTriple(u=1.0, v=1.0, w=1.0)
    v = epsilon / math.hypot(epsilon, m)
    w = math.hypot(epsilon, m) / epsilon
    if epsilon >= m:
        u = math.sqrt(max(epsilon - m, 0.0)) * math.sqrt(epsilon + m) / epsilon
    else:
        u = None
    return SpeedTriple(u=u, v=v, w=w)


def _unit_axis(axis) -> np.ndarray:
    n = np.asarray(axis, dtype=float)
    if n.shape != (3,):
        raise ValueError("axis must be a 3-vector")
    norm = np.linalg.norm(n)
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"axis must be a unit vector, |axis| = {norm}")
    return n / norm


def boost(p: FourVector, axis, rapidity: float) -> FourVector:
    """Proper Lorentz boost with rapidity zeta along a unit axis.

    Sign convention: e' = e cosh(zeta) - p_par sinh(zeta), so boosting a rest
    frame along +z gives p_z' = -m sinh(zeta).  Composition along one axis is
    additive in the rapidity.
    """
    n = _unit_axis(axis)
    ch, sh = math.cosh(rapidity), math.sinh(rapidity)
    pv = p.spatial
    p_par = float(pv @ n)
    perp = pv - p_par * n
    e2 = p.e * ch - p_par * sh
    par2 = p_par * ch - p.e * sh
    out = perp + par2 * n
    return FourVector(e2, float(out[0]), float(out[1]), float(out[2]))


def boost_matrix(axis, rapidity: float) -> np.ndarray:
    """The 4x4 matrix of `boost` acting on (e; p) columns."""
    n = _unit_axis(axis)
    ch, sh = math.cosh(rapidity), math.sinh(rapidity)
    L = np.eye(4)
    L[0, 0] = ch
    L[0, 1:] = -sh * n
    L[1:, 0] = -sh * n
    L[1:, 1:] = np.eye(3) + (ch - 1.0) * np.outer(n, n)
    return L


class DispersionRow(NamedTuple):
    epsilon: float
    u: Optional[float]
    v: float
    w: Optional[float]


def dispersion_table(m: float, eps_min: float, eps_max: float,
                     steps: int) -> list[DispersionRow]:
    """Evenly spaced energy grid with the three dispersion-law speeds."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if not (0 <= eps_min < eps_max):
        raise ValueError(f"need 0 <= eps_min < eps_max, got [{eps_min}, {eps_max}]")
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    rows = []
    for eps in np.linspace(eps_min, eps_max, steps):
        s = speeds(float(eps), m)
        rows.append(DispersionRow(float(eps), s.u, s.v, s.w))
    return rows
