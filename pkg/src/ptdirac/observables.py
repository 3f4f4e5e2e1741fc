"""Hamiltonians, plane-wave expectation values, and kinematic constraints.

The velocity operator of both theories is alpha, so mean velocities are the
bilinears w^dag alpha w / (w^dag w).  For bradyons this reproduces p/eps; for
pseudotachyons it gives the dual velocity eps p / k^2, whose magnitude is the
reciprocal of the superluminal classical speed k/eps and is therefore below c.

Mean four-velocity and four-polarization come from the vector and
pseudovector bilinears wbar gamma^mu w and wbar gamma^mu gamma^5 w.  With the
quantization volume cancelled analytically, both species reduce to the same
normalization wbar O w / (2m), so no volume ever enters the numbers here.
Closed forms (h is the helicity eigenvalue of the state, +-lambda for u/v):

    bradyon:        vbar = p/m,        sbar = h dual(p)/m
    pseudotachyon:  vbar = dual(p)/m,  sbar = h p/m

and in both cases vbar^2 = 1, sbar^2 = -1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import Representation, dagger, gamma_set
from .kinematics import FourVector, Species, dual_momentum, minkowski_dot
from .spinors import PlaneWaveSpec, amplitude


class MasslessSpecies(ValueError):
    """Mean four-velocity and four-polarization divide by the mass."""


@dataclass(frozen=True)
class ExpectationReport:
    """Every plane-wave expectation value of one spec, plus shell residuals."""

    mean_velocity: tuple[float, float, float]
    mean_four_velocity: FourVector
    mean_spin_four_vector: FourVector
    constraint_residuals: dict[str, float]


def hamiltonian(species: Species, momentum, mass: float,
                rep: Representation = Representation.STANDARD) -> np.ndarray:
    """Momentum-space hamiltonian alpha.p plus the species mass term.

    The mass term is m gamma^0 for bradyons (hermitian H) and m alpha^5 for
    tachyonic species; since (alpha^5)^2 = -1 that term is anti-hermitian and
    H is only gamma^5 pseudo-hermitian, g5 H g5 = H^dag, yet its spectrum
    +-sqrt(k^2 - m^2) is real on the physical shell |p| >= m.  In both cases
    H^2 is the squared shell energy times the identity.
    """
    gs = gamma_set(rep)
    p = np.asarray(momentum, dtype=float)
    h = sum(p[i] * gs.alpha[i] for i in range(3))
    if species is Species.BRADYON:
        return h + mass * gs.gammas[0]
    if species is Species.LUXON:
        return h
    return h + mass * gs.alpha5


def energy_eigencheck(spec: PlaneWaveSpec) -> float:
    """Relative residual of H w = E w for the physical wave of the spec.

    The inferior-sign wave e^{+ipx} carries physical momentum -p and energy
    -eps, so v-amplitudes are checked against H(-p) v = -eps v.
    """
    w = amplitude(spec)
    p = spec.energy_sign * np.asarray(spec.momentum)
    h = hamiltonian(spec.species, p, spec.mass, spec.rep)
    target = spec.energy_sign * spec.epsilon
    return float(np.linalg.norm(h @ w - target * w) / np.linalg.norm(w))


def mean_velocity(spec: PlaneWaveSpec) -> np.ndarray:
    """w^dag alpha w / (w^dag w), identical for both energy signs."""
    gs = gamma_set(spec.rep)
    w = amplitude(spec)
    n2 = float(np.real(np.vdot(w, w)))
    return np.array([float(np.real(np.vdot(w, gs.alpha[i] @ w))) for i in range(3)]) / n2


def _vector_bilinear(spec: PlaneWaveSpec, pseudo: bool) -> np.ndarray:
    gs = gamma_set(spec.rep)
    w = amplitude(spec)
    wbar = dagger(w) @ gs.gammas[0]
    out = np.empty(4)
    for mu in range(4):
        m = gs.gammas[mu] @ gs.gamma5 if pseudo else gs.gammas[mu]
        out[mu] = float(np.real(wbar @ m @ w))
    return out


def _require_massive(spec: PlaneWaveSpec):
    if spec.mass == 0.0:
        raise MasslessSpecies("mean four-velocity/polarization divide by the mass")


def mean_four_velocity(spec: PlaneWaveSpec) -> FourVector:
    """wbar gamma^mu w / (2m); equals p/m (bradyon) or dual(p)/m (pseudotachyon)."""
    _require_massive(spec)
    return FourVector.from_array(_vector_bilinear(spec, pseudo=False) / (2.0 * spec.mass))


def mean_spin_four_vector(spec: PlaneWaveSpec) -> FourVector:
    """wbar gamma^mu gamma^5 w / (2m); h dual(p)/m (bradyon) or h p/m (pseudotachyon)."""
    _require_massive(spec)
    return FourVector.from_array(_vector_bilinear(spec, pseudo=True) / (2.0 * spec.mass))


def mean_velocity_closed_form(spec: PlaneWaveSpec) -> np.ndarray:
    """p/eps for bradyons, eps p / k^2 (the dual velocity) for tachyonic species."""
    p = np.asarray(spec.momentum)
    if spec.species is Species.BRADYON:
        return p / spec.epsilon
    return spec.epsilon * p / spec.k**2


def mean_four_velocity_closed_form(spec: PlaneWaveSpec) -> FourVector:
    _require_massive(spec)
    p4 = spec.four_momentum
    if spec.species is Species.BRADYON:
        return FourVector.from_array(p4.as_array() / spec.mass)
    return FourVector.from_array(dual_momentum(p4).as_array() / spec.mass)


def mean_spin_four_vector_closed_form(spec: PlaneWaveSpec) -> FourVector:
    _require_massive(spec)
    h = spec.helicity_eigenvalue
    p4 = spec.four_momentum
    if spec.species is Species.BRADYON:
        return FourVector.from_array(h * dual_momentum(p4).as_array() / spec.mass)
    return FourVector.from_array(h * p4.as_array() / spec.mass)


def constraint_residuals(spec: PlaneWaveSpec) -> dict[str, float]:
    """Residuals of the constraints linking p, vbar, sbar, m on each shell.

    Bradyons: p^2 = m^2, p.vbar = m, p.sbar = 0.  Pseudotachyons:
    p^2 = -m^2, p.vbar = 0, p.sbar = -m h with h the helicity eigenvalue of
    the state.  All entries vanish identically for amplitudes produced here.
    """
    _require_massive(spec)
    p4 = spec.four_momentum
    vbar = mean_four_velocity(spec)
    sbar = mean_spin_four_vector(spec)
    m = spec.mass
    h = spec.helicity_eigenvalue
    p2 = minkowski_dot(p4, p4)
    pv = minkowski_dot(p4, vbar)
    ps = minkowski_dot(p4, sbar)
    if spec.species is Species.BRADYON:
        return {
            "p2_minus_m2": p2 - m * m,
            "p_dot_v_minus_m": pv - m,
            "p_dot_s": ps,
        }
    return {
        "p2_plus_m2": p2 + m * m,
        "p_dot_v": pv,
        "p_dot_s_plus_m_lambda": ps + m * h,
    }


def expectation_report(spec: PlaneWaveSpec) -> ExpectationReport:
    v = mean_velocity(spec)
    return ExpectationReport(
        mean_velocity=(float(v[0]), float(v[1]), float(v[2])),
        mean_four_velocity=mean_four_velocity(spec),
        mean_spin_four_vector=mean_spin_four_vector(spec),
        constraint_residuals=constraint_residuals(spec),
    )
