"""Closed-form plane-wave bispinor amplitudes and the operators they solve.

Positive-energy amplitudes u and negative-energy amplitudes v satisfy, in
momentum space,

    (pslash - m gamma^5) u = 0,   (pslash + m gamma^5) v = 0   (pseudotachyon)
    (pslash - m) u = 0,           (pslash + m) v = 0            (bradyon)

with pslash = eps gamma^0 - p.gamma and eps >= 0 on the species shell.
Luxons are the massless limit of either family.  Helicity eigenstates are
labelled by lambda = +-1 (twice the helicity); v_{p,lambda} carries the
helicity eigenvalue -lambda.

Amplitudes are normalized to w^dag w = 2k (pseudotachyons, luxons) or 2 eps
(bradyons) and are fixed here up to the phase convention of the helicity
spinors below; comparisons against differently phased forms should use
``proportionality_defect``.  The square-root component factors are arranged
so that the transcendent point k = m and the massless chiral limit are exact,
with no 0/0 anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .clifford import PAULI, Representation, gamma_set, representation_change, slash
from .kinematics import FourVector, Species, ZeroMomentum, energy_from_momentum


class TranscendentDivision(ZeroDivisionError, ValueError):
    """The general-spinor parameterization divides by eps, singular at eps = 0."""


def helicity_spinor(direction, lam: int) -> np.ndarray:
    """Unit Pauli spinor with (n.sigma) theta = lam theta along a unit direction.

    Phase convention for polar angles (theta, phi) of the direction:
    theta_{+1} = (cos t/2, e^{i phi} sin t/2) and
    theta_{-1} = (-e^{-i phi} sin t/2, cos t/2), reducing to the canonical
    basis at +z.  On the z-axis the azimuth is fixed to phi = 0.
    """
    if lam not in (1, -1):
        raise ValueError(f"lam must be +1 or -1, got {lam}")
    n = np.asarray(direction, dtype=float)
    if n.shape != (3,):
        raise ValueError("direction must be a 3-vector")
    norm = np.linalg.norm(n)
    if norm == 0.0:
        raise ZeroMomentum("helicity spinor undefined for zero direction")
    n = n / norm
    z = min(1.0, max(-1.0, n[2]))
    rho = math.hypot(n[0], n[1])
    # recover the small half-angle factor from rho = 2 c s rather than from
    # 1 -+ z, which rounds away near the poles
    if z >= 0.0:
        c = math.sqrt((1.0 + z) / 2.0)
        s = rho / (2.0 * c)
    else:
        s = math.sqrt((1.0 - z) / 2.0)
        c = rho / (2.0 * s)
    # componentwise division (complex/complex would square a possibly
    # subnormal rho and underflow to nan), then renormalize so the unit-norm
    # invariant survives subnormal transverse components
    if rho > 0.0:
        px, py = n[0] / rho, n[1] / rho
        h = math.hypot(px, py)
        phase = complex(px / h, py / h)
    else:
        phase = complex(1.0)
    if lam == 1:
        return np.array([c, phase * s], dtype=complex)
    return np.array([-np.conj(phase) * s, c], dtype=complex)


@dataclass(frozen=True)
class NormalizationContext:
    """Quantization volume for the one-particle-in-V normalization."""

    volume: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.volume) and self.volume > 0):
            raise ValueError(f"volume must be finite and positive, got {self.volume}")


@dataclass(frozen=True)
class PlaneWaveSpec:
    """Labels one exact plane-wave solution.

    ``energy_sign`` +1 selects the u-amplitude (wave e^{-ipx}), -1 the
    v-amplitude (wave e^{+ipx}, physical momentum -p).  ``helicity`` is the
    label lambda; the actual helicity eigenvalue of the amplitude is
    ``helicity_eigenvalue`` = energy_sign * helicity.
    """

    species: Species
    energy_sign: int
    momentum: tuple[float, float, float]
    mass: float
    helicity: int
    rep: Representation = Representation.STANDARD

    def __post_init__(self):
        if self.energy_sign not in (1, -1):
            raise ValueError(f"energy_sign must be +1 or -1, got {self.energy_sign}")
        if self.helicity not in (1, -1):
            raise ValueError(f"helicity must be +1 or -1, got {self.helicity}")
        object.__setattr__(self, "momentum", tuple(float(c) for c in self.momentum))
        if len(self.momentum) != 3 or not all(math.isfinite(c) for c in self.momentum):
            raise ValueError("momentum must be three finite components")
        if not (math.isfinite(self.mass) and self.mass >= 0):
            raise ValueError(f"mass must be finite and non-negative, got {self.mass}")
        if self.k == 0.0:
            raise ZeroMomentum("plane-wave spec needs |p| > 0 (helicity direction)")
        # shell validation (raises NonPhysicalMomentum / MassNotZero)
        energy_from_momentum(self.species, self.k, self.mass)

    @property
    def k(self) -> float:
        return float(np.linalg.norm(self.momentum))

    @property
    def epsilon(self) -> float:
        return energy_from_momentum(self.species, self.k, self.mass)

    @property
    def direction(self) -> np.ndarray:
        return np.asarray(self.momentum) / self.k

    @property
    def four_momentum(self) -> FourVector:
        return FourVector(self.epsilon, *self.momentum)

    @property
    def helicity_eigenvalue(self) -> int:
        return self.energy_sign * self.helicity


def _component_factors(spec: PlaneWaveSpec) -> tuple[float, float]:
    """Stable square-root factors (upper, lower) of the u-amplitude blocks.

    For tachyonic species in the standard basis these are sqrt(k +- m lam);
    k - m is exact by Sterbenz whenever k <= 2m, so no special casing is
    needed.  The chiral-basis pair sqrt(k +- eps lam) and the bradyon pairs
    sqrt(eps +- m), sqrt(eps +- k lam) each contain one difference that does
    cancel, and is replaced by the identity small = (product of roots)/big.
    """
    k, m, lam = spec.k, spec.mass, spec.helicity
    tachyonic = spec.species is not Species.BRADYON
    eps = spec.epsilon
    if tachyonic:
        if spec.rep is Representation.STANDARD:
            # |p| may land an ulp below m at the transcendent point
            return (math.sqrt(max(k + m * lam, 0.0)),
                    math.sqrt(max(k - m * lam, 0.0)))
        big = math.sqrt(k + eps)
        small = m / big if big > 0.0 else 0.0
        return (big, small) if lam == 1 else (small, big)
    if spec.rep is Representation.STANDARD:
        big = math.sqrt(eps + m)
        return big, k / big
    big = math.sqrt(eps + k)
    small = m / big
    return (big, small) if lam == 1 else (small, big)


def amplitude(spec: PlaneWaveSpec) -> np.ndarray:
    """The helicity bispinor amplitude of the given plane wave."""
    lam = spec.helicity
    theta = helicity_spinor(spec.direction, spec.helicity_eigenvalue)
    a, b = _component_factors(spec)
    tachyonic = spec.species is not Species.BRADYON
    positive = spec.energy_sign == 1
    if spec.rep is Representation.STANDARD:
        if tachyonic:
            upper, lower = (a, lam * b) if positive else (-lam * a, b)
        else:
            upper, lower = (a, lam * b) if positive else (-lam * b, a)
    else:
        if tachyonic:
            upper, lower = (a, lam * b) if positive else (lam * b, a)
        else:
            upper, lower = (a, b) if positive else (-b, a)
    return np.concatenate([upper * theta, lower * theta])


def amplitude_from_spinor(species: Species, energy_sign: int, momentum, mass: float,
                          chi_or_phi: np.ndarray, rep: Representation) -> np.ndarray:
    """Bispinor from an arbitrary two-spinor via the general solution forms.

    Standard basis: u = (phi; (p.sigma - m)/eps phi) for pseudotachyons,
    u = (phi; p.sigma/(eps + m) phi) for bradyons, and the mirrored forms for
    v built from chi.  These divide by eps (pseudotachyons) so the
    transcendent point must go through ``amplitude`` instead.  The chiral
    forms divide by m, so massless amplitudes exist only via ``amplitude``.
    """
    if energy_sign not in (1, -1):
        raise ValueError(f"energy_sign must be +1 or -1, got {energy_sign}")
    p = np.asarray(momentum, dtype=float)
    k = float(np.linalg.norm(p))
    if k == 0.0:
        raise ZeroMomentum("plane-wave amplitude needs |p| > 0")
    eps = energy_from_momentum(species, k, mass)
    two = np.asarray(chi_or_phi, dtype=complex)
    if two.shape != (2,):
        raise ValueError("chi_or_phi must be a two-component spinor")
    psig = sum(p[i] * PAULI[i] for i in range(3))
    tachyonic = species is not Species.BRADYON
    if rep is Representation.STANDARD:
        if tachyonic:
            if eps == 0.0:
                raise TranscendentDivision(
                    "the general-spinor form divides by eps; "
                    "use amplitude() at the transcendent point")
            linked = (psig - mass * np.eye(2)) @ two / eps
        else:
            linked = psig @ two / (eps + mass)
        if energy_sign == 1:
            return np.concatenate([two, linked])
        return np.concatenate([linked, two])
    if mass == 0.0:
        raise ValueError("massless chiral amplitudes are not parameterized by a "
                         "single two-spinor; use amplitude()")
    if tachyonic:
        if energy_sign == 1:
            linked = (psig - eps * np.eye(2)) @ two / mass
            return np.concatenate([two, linked])
        linked = -(psig + eps * np.eye(2)) @ two / mass
        return np.concatenate([linked, two])
    if energy_sign == 1:
        linked = (eps * np.eye(2) - psig) @ two / mass
        return np.concatenate([two, linked])
    linked = -(eps * np.eye(2) + psig) @ two / mass
    return np.concatenate([linked, two])


def dirac_operator(spec: PlaneWaveSpec) -> np.ndarray:
    """Momentum-space operator annihilating the amplitude of ``spec``."""
    gs = gamma_set(spec.rep)
    ps = slash(gs, spec.four_momentum)
    if spec.species is Species.BRADYON:
        mass_term = spec.mass * np.eye(4)
    else:
        mass_term = spec.mass * gs.gamma5
    return ps - spec.energy_sign * mass_term


def solution_residual(spec: PlaneWaveSpec, w: Optional[np.ndarray] = None) -> float:
    """Relative residual |D w| / |w| of an amplitude under its own operator."""
    if w is None:
        w = amplitude(spec)
    return float(np.linalg.norm(dirac_operator(spec) @ w) / np.linalg.norm(w))


def norm_convention(spec: PlaneWaveSpec) -> float:
    """The target amplitude norm w^dag w: 2k (tachyonic) or 2 eps (bradyon)."""
    if spec.species is Species.BRADYON:
        return 2.0 * spec.epsilon
    return 2.0 * spec.k


def normalization_factor(spec: PlaneWaveSpec,
                         ctx: NormalizationContext = NormalizationContext()) -> float:
    """N with N^2 (w^dag w) = 1/V: 1/sqrt(2kV) tachyonic, 1/sqrt(2 eps V) bradyon."""
    return 1.0 / math.sqrt(norm_convention(spec) * ctx.volume)


def convert_representation(b: np.ndarray, from_rep: Representation,
                           to_rep: Representation) -> np.ndarray:
    """Map a bispinor between the Weyl and standard bases (involutive)."""
    b = np.asarray(b, dtype=complex)
    if from_rep is to_rep:
        return b.copy()
    return representation_change() @ b


def proportionality_defect(a: np.ndarray, b: np.ndarray) -> float:
    """sin of the angle between the rays of a and b; zero iff parallel.

    Equals sqrt(|a|^2 |b|^2 - |a^dag b|^2) / (|a| |b|), evaluated as the norm
    of the Gram-Schmidt rejection, which does not cancel catastrophically for
    nearly parallel vectors.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise ValueError("proportionality defect undefined for zero vectors")
    ah, bh = a / na, b / nb
    return float(np.linalg.norm(bh - ah * (ah.conj() @ bh)))
