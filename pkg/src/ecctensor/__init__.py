"""Eccentricity/moment tensors, Welch-type bounds, frame potential
minimization and energy functionals on spheres."""

from ecctensor.backend import BACKEND
from ecctensor.collection import UnitVectorCollection, load_collection
from ecctensor.energy import (
    DiscreteMeasure,
    EnergyResult,
    antipodal_energy,
    euclidean_energy,
    geodesic_energy,
    phase_transition_experiment,
    series_energy,
    uniform_energy,
)
from ecctensor.optimize import (
    OptimizeConfig,
    OptimizeResult,
    brute_force_potential_min,
    minimize_potential,
    potential_gradient,
)
from ecctensor.series import (
    PowerSeries,
    series_arccos,
    series_compose_pow_arccos,
    series_euclid_pow,
    series_pow,
    tail_bound,
    verify_sign_lemma,
)
from ecctensor.sphere import (
    RngSeed,
    SphereSpec,
    complex_spherical_moment,
    monte_carlo_moment,
    sample_sphere,
    spherical_moment,
    uniform_sphere_moment_tensor,
)
from ecctensor.tensor import (
    SymmetricTensor,
    eccentricity_norm_sq,
    moment_tensor,
    polynomial_energy,
    power_tensor,
    tensor_inner,
)
from ecctensor.welch import (
    BoundReport,
    coherence,
    evaluate,
    frame_potential,
    welch_average_bound,
    welch_cmax_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundReport",
    "DiscreteMeasure",
    "EnergyResult",
    "OptimizeConfig",
    "OptimizeResult",
    "PowerSeries",
    "RngSeed",
    "SphereSpec",
    "SymmetricTensor",
    "UnitVectorCollection",
    "antipodal_energy",
    "brute_force_potential_min",
    "coherence",
    "complex_spherical_moment",
    "eccentricity_norm_sq",
    "euclidean_energy",
    "evaluate",
    "frame_potential",
    "geodesic_energy",
    "load_collection",
    "minimize_potential",
    "moment_tensor",
    "monte_carlo_moment",
    "phase_transition_experiment",
    "polynomial_energy",
    "potential_gradient",
    "power_tensor",
    "sample_sphere",
    "series_arccos",
    "series_compose_pow_arccos",
    "series_energy",
    "series_euclid_pow",
    "series_pow",
    "spherical_moment",
    "tail_bound",
    "tensor_inner",
    "uniform_energy",
    "uniform_sphere_moment_tensor",
    "verify_sign_lemma",
    "welch_average_bound",
    "welch_cmax_bound",
]
