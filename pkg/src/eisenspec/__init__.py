"""Verification-grade tooling for the K-invariant spectral decomposition of
GL(2) and GL(3) Eisenstein series: completed-zeta intertwining scalars,
type-A root combinatorics, truncated inner products, the GL(3) residue
matrix, and the contour-shift Parseval identities."""

from .errors import DomainError, NonConvergence, PoleProximity
from .roots import (RHO_CHECK, AssociationClass, RootDatum, StandardParabolic,
                    Weight, WeylElement, association_classes, inversion_set,
                    pairing, tau_hat, transporters, truncation_terms,
                    weyl_act)
from .zeta import (DEFAULT_CONFIG, EvaluatorConfig, completed_L, gamma_fn,
                   local_L, ratio_L, residue_at, zeta)
from .intertwine import (ScalarIntertwiner, cocycle_check, m_scalar,
                         su3_local_factor, unitarity_check)
from .gl3 import (GL3, delta_weight, double_residue_table, lambda_line,
                  line_direction, multiplicativity_residual, n_entry,
                  n_matrix, rank_one_residual, sigma, symmetry_residual,
                  transverse_residue, volume_constant, volume_factors)
from .truncation import (EisensteinParams, QuadratureResult, QuadratureSpec,
                         TruncationParam, UpperHalfPoint, constant_term,
                         eisenstein, eisenstein_tail_bound, eisenstein_theta,
                         inner_product_fd, maass_selberg_convergence_study,
                         maass_selberg_record, omega_rank1, truncate,
                         truncated_eisenstein, truncated_eisenstein_direct)
from .parseval import (ContourSpec, PaleyWienerGaussian, SpectralReport,
                       contribution_A, contribution_B, contribution_C,
                       decomposed_norm_gl2, measure_constants,
                       parseval_check_gl3, shifted_norm_gl2,
                       shifted_norm_gl3)

__version__ = "0.1.0"
