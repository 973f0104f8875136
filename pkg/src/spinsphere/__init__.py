"""Exact spectra of higher spin Dirac operators on round spheres.

Everything is computed in exact rational arithmetic and cross-validated:
closed-form eigenvalue/multiplicity tables against the Weyl dimension
formula, the telescoped spectral function, and an explicit Clifford-algebra
realization of the ladder decomposition of spinor-valued forms.
"""

from .errors import (
    AnnihilationFailure,
    CapExceeded,
    DegenerateCasimir,
    DimensionMismatch,
    NonIntegerMultiplicity,
    NotDominant,
    OutOfRange,
    PoleArgument,
    SpinSphereError,
)
from .exact import (
    ComplexRational,
    ExactMatrix,
    HalfInt,
    Rational,
    binomial,
    double_factorial,
    lagrange_projectors,
    rank_and_kernel,
)
from .reptheory import (
    DecompositionReport,
    GroupId,
    Weight,
    branch_down,
    branch_up,
    casimir_scalar,
    parse_weight,
    rho,
    spinor_form_components,
    tensor_spinor,
    tensor_vector,
    weight_from_doubled,
    weyl_dim,
)
from .spectra import (
    ConsistencyReport,
    KTypeLabel,
    SpectrumEntry,
    dirac_spectrum,
    higher_spin_spectrum,
    ktype_weight,
    transfer_factor,
    verify_consistency,
    z_function,
)
from .clifford import (
    CliffordRep,
    FormSpinorSpace,
    casimir_matrix,
    ekj_projectors,
    epsilon_matrix,
    gamma_matrices,
    run_oracle,
    so_action,
    symbol_nontrivial,
    y_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
