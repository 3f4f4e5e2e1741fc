"""Plane-wave mechanics of spin-1/2 pseudotachyons and ordinary Dirac particles.

Pseudotachyons carry a spacelike four-momentum (p^2 = -m^2) yet move at
subluminal mean velocity: the velocity operator is alpha, and its plane-wave
expectation is the dual eps p / k^2 of the classical p/eps, with magnitude
below c.  The package constructs every closed-form plane-wave amplitude of
both theories in the standard and Weyl bases, their discrete symmetry
operators, Lorentz spinor maps, expectation values, and dispersion laws, each
backed by machine-verifiable residual suites (see ``ptdirac.verify`` and the
``ptdirac`` command line).
"""
from .clifford import (
    METRIC,
    GammaSet,
    Representation,
    gamma_set,
    representation_change,
    sigma_tensor,
    slash,
)
from .kinematics import (
    FourVector,
    MassNotZero,
    MassShell,
    NonPhysicalMomentum,
    Species,
    SpeedTriple,
    ZeroMomentum,
    boost,
    dispersion_table,
    dual_momentum,
    energy_from_momentum,
    minkowski_dot,
    speeds,
)
from .observables import (
    ExpectationReport,
    MasslessSpecies,
    constraint_residuals,
    energy_eigencheck,
    expectation_report,
    hamiltonian,
    mean_four_velocity,
    mean_spin_four_vector,
    mean_velocity,
)
from .spinors import (
    NormalizationContext,
    PlaneWaveSpec,
    TranscendentDivision,
    amplitude,
    amplitude_from_spinor,
    convert_representation,
    dirac_operator,
    helicity_spinor,
    normalization_factor,
    proportionality_defect,
    solution_residual,
)
from .symmetries import (
    DiscreteKind,
    Sector,
    SymmetryMatrix,
    apply_boost,
    apply_discrete,
    discrete_operator,
    first_order_covariance_residual,
    lorentz_boost_spinor,
    lorentz_generator,
    pct_phase,
    pct_product,
    run_symmetry_suite,
)

__version__ = "0.1.0"
