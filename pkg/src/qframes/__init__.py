"""Frames on finite-dimensional right quaternionic Hilbert spaces.

Computes frame bounds, frame operators, canonical duals, Parseval-izations,
reconstructions, and perturbation stability certificates, all reduced to
Hermitian spectral theory on the complex adjoint image of quaternionic
matrices.
"""

from .errors import (
    BadDimension,
    ConvergenceFailure,
    DimensionMismatch,
    DivisionByZero,
    InadmissiblePerturbation,
    NotAFrame,
    NotHermitian,
    NotPositiveDefinite,
    SchemaError,
    StructureViolation,
    ZeroScalar,
)
from .frames import (
    Frame,
    FrameReport,
    analysis,
    bessel_bound,
    canonical_dual,
    frame_bounds,
    frame_operator,
    gen_example,
    parsevalize,
    random_frame,
    reconstruct,
    scale_frame,
    surjectivity_check,
    synthesis,
)
from .perturbation import (
    PerturbReport,
    check_condition,
    circulant_eigenvalues,
    circulant_example,
    deviation_certificate,
    predicted_bounds,
)
from .qlinalg import (
    QMatrix,
    QVector,
    dagger,
    embed,
    embed_vector,
    herm_eig,
    inner,
    jacobi_eigh,
    mat_fn,
    matvec,
    op_norm,
    unembed,
    unembed_vector,
    vnorm,
)
from .quaternion import Quaternion, as_quaternion, conj, inv, mul

__version__ = "0.1.0"

__all__ = [
    "Quaternion",
    "mul",
    "conj",
    "inv",
    "as_quaternion",
    "QVector",
    "QMatrix",
    "inner",
    "vnorm",
    "matvec",
    "dagger",
    "embed",
    "embed_vector",
    "unembed",
    "unembed_vector",
    "jacobi_eigh",
    "herm_eig",
    "mat_fn",
    "op_norm",
    "Frame",
    "FrameReport",
    "synthesis",
    "analysis",
    "frame_operator",
    "frame_bounds",
    "bessel_bound",
    "canonical_dual",
    "parsevalize",
    "reconstruct",
    "scale_frame",
    "surjectivity_check",
    "gen_example",
    "random_frame",
    "PerturbReport",
    "predicted_bounds",
    "deviation_certificate",
    "check_condition",
    "circulant_example",
    "circulant_eigenvalues",
    "DimensionMismatch",
    "DivisionByZero",
    "NotHermitian",
    "ConvergenceFailure",
    "NotPositiveDefinite",
    "StructureViolation",
    "NotAFrame",
    "ZeroScalar",
    "BadDimension",
    "InadmissiblePerturbation",
    "SchemaError",
    "__version__",
]
