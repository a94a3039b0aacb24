"""Covariant operator measures on the circle, realized on finite index windows.

Each measure is determined by an infinite complex structure matrix; on
a window its value on a Borel arc union is the Schur product of the
structure matrix with the Toeplitz matrix of Fourier coefficients of
the indicator.  The package provides the matrix substrate and norms
(:mod:`covop.core`), exact arc-set algebra (:mod:`covop.borel`),
structure-matrix families (:mod:`covop.structure`), the measure itself
with its decompositions (:mod:`covop.gom`), moments and the exponential
transform (:mod:`covop.moments`), Cesaro reconstruction
(:mod:`covop.reconstruct`), norm and extensibility diagnostics
(:mod:`covop.diagnostics`), and a CLI (:mod:`covop.cli`).
"""

from ._kernels import NUMBA_ENABLED, PURE_NUMPY
from .borel import (
    EMPTY,
    FULL,
    BorelSet,
    complement,
    intersect,
    interval_matrix,
    measure,
    normalize,
    shift,
    union,
)
from .core import (
    FiniteVector,
    WindowMatrix,
    conjugate_by_phase,
    is_psd,
    operator_norm,
    pq_norm,
    schur_product,
    vector_p_norm,
)
from .diagnostics import (
    ExtensibilityReport,
    NormReport,
    SweepResult,
    alpha,
    extensibility_report,
    first_moment_norm,
    multiplier_bounds,
    norm_report,
    observable_norm_estimate,
    order_check,
    sup_entry,
    sweep,
)
from .errors import (
    CovopError,
    EmptyArc,
    NoConvergence,
    NotObservableMatrix,
    OutsideDisk,
    OverlappingPieces,
    RadiusExceeded,
    UnknownFamily,
    UnknownQuantity,
    UnsupportedNormPair,
    WindowMismatch,
)
from .gom import (
    StepFunction,
    TrigPolynomial,
    density,
    factorization_decompose,
    form_value,
    gom_matrix,
    integrate_step,
    integrate_trig,
    polarization,
    rank_one_sum,
    row_decompose,
)
from .moments import (
    MomentCoefficientTable,
    aux_matrix,
    basis_moment_coefficient,
    cyclic_moment,
    exp_transform,
    moment_matrix,
    moment_matrix_from_aux,
)
from .reconstruct import cesaro_density, cesaro_operator, fejer_kernel, reconstruction_sweep
from .structure import (
    GeneralizedVector,
    StructureMatrix,
    builtin,
    dense,
    gram,
    identity,
    log_counterexample,
    ones,
    parse_family_spec,
    phase_matrix,
    rank_one,
    realize,
    sign_counterexample,
)

__version__ = "0.1.0"
