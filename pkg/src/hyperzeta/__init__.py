"""hyperzeta: the half-line Mellin transform as a unitary change of basis.

Positions x > 0 map to the log axis eta = ln x; the conjugate "hyperbolic
momentum" representation of a wavefunction is its Mellin transform on the
line s = 1/2 - i p_eta.  The package builds, transforms and verifies
states whose momentum profiles carry the Lerch transcendent family and, in
particular, the Riemann zeta function on the critical line, along with the
matching phase-space quasi-probability and a semiclassical model of an
indirect momentum measurement.
"""
from ._backend import BACKEND
from .accel import AccelConfig, alternating_sum
from .errors import (ConvergenceError, DomainError, EvaluationError,
                     HyperzetaError, PoleError, QuadratureError, SchemaError,
                     SingularityError, StepError, TruncationError)
from .hyperbolic import (Axis, GridSpec, QuadConfig, WaveGrid,
                         default_eta_spec, mellin_critical,
                         mellin_integral_direct, mellin_values_at,
                         parseval_check, renormalized, to_eta_representation)
from .specialfn import (ComplexSample, LerchParams, dirichlet_beta,
                        dirichlet_eta, dirichlet_partial_sum, gamma_complex,
                        lerch_integrand, lerch_phi, zeta_critical)
from .zetawave import (LerchWave, PotentialKind, PotentialProfile, SigmaWave,
                       boundary_kappa, chi_momentum_closed, g_family_eval,
                       g_mellin_closed, potential_eval, psi_lerch_eval,
                       psi_zeta_momentum_closed, psi_zeta_wave,
                       schrodinger_residual, sigma_eval, sigma_unnormalized,
                       sigma_wavefunction, zero_scan)
from .wigner import (WignerGrid, marginal_eta, marginal_p,
                     wigner_default_specs, wigner_from_state)
from .dposim import (DpoConfig, DpoState, Trajectory, central_potential_check,
                     dpo_init, dpo_integrate, dpo_rhs)

__version__ = "0.1.0"
