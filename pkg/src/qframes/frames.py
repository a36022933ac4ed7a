"""Finite frames for H^n: detection, bounds, duals, and reconstructions.

A frame is a finite family {u_i} in H^n satisfying

    A * ||u||^2  <=  sum_i |<u_i|u>|^2  <=  B * ||u||^2      for all u,

with 0 < A <= B.  All operations reduce to the frame operator
S = U U* (U the synthesis matrix whose columns are the u_i): the optimal
bounds are the extreme eigenvalues of S, the canonical dual applies S^-1
to each vector, and Parseval-ization applies S^-1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadDimension, DimensionMismatch, NotAFrame, ZeroScalar
from .qlinalg import QMatrix, QVector, herm_eig, mat_fn, op_norm
from .quaternion import Quaternion

# A family counts as a frame when lambda_min(S) > FRAME_TOL * lambda_max(S);
# relative, so rescaling every vector cannot flip the verdict.
FRAME_TOL = 1e-10
REPORT_TOL = 1e-9


@dataclass(frozen=True)
class Frame:
    """Ordered finite family of vectors in H^dim."""

    dim: int
    vectors: tuple[QVector, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vectors", tuple(self.vectors))
        if self.dim < 1:
            raise ValueError("ambient dimension must be positive")
        if len(self.vectors) < 1:
            raise ValueError("a frame needs at least one vector")
        for v in self.vectors:
            if len(v) != self.dim:
                raise DimensionMismatch(
                    f"vector of length {len(v)} in ambient dimension {self.dim}"
                )

    @property
    def m(self) -> int:
        return len(self.vectors)

    def synthesis_matrix(self) -> QMatrix:
        """The dim x m matrix whose i-th column is the i-th frame vector."""
        return QMatrix.from_columns(list(self.vectors))

    def isclose(self, other: "Frame", atol: float = 1e-12) -> bool:
        return (
            self.dim == other.dim
            and self.m == other.m
            and all(u.isclose(v, atol) for u, v in zip(self.vectors, other.vectors))
        )


@dataclass(frozen=True)
class FrameReport:
    """Optimal frame bounds plus the derived flags."""

    A: float
    B: float
    is_frame: bool
    is_tight: bool
    is_parseval: bool
    is_exact: bool
    condition: float
    tol: float


def synthesis(F: Frame, q: QVector) -> QVector:
    """Map coefficients {q_i} to sum_i u_i * q_i."""
    if len(q) != F.m:
        raise DimensionMismatch(f"need {F.m} coefficients, got {len(q)}")
    return F.synthesis_matrix() @ q


def analysis(F: Frame, u: QVector) -> QVector:
    """Coefficient sequence {<u_i|u>}_i, the adjoint of synthesis."""
    if len(u) != F.dim:
        raise DimensionMismatch(f"need a vector of length {F.dim}, got {len(u)}")
    return F.synthesis_matrix().dagger() @ u


def frame_operator(F: Frame) -> QMatrix:
    """S = U U*, symmetrized; Hermitian positive semidefinite."""
    U = F.synthesis_matrix()
    S = U @ U.dagger()
    return (S + S.dagger()) * 0.5


def frame_bounds(F: Frame, tol: float = REPORT_TOL) -> FrameReport:
    """Tightest constants in the frame inequality: the spectral range of S.

    `tol` (relative) drives the tight/Parseval flags and is echoed in the
    report; the frame decision itself uses the fixed scale-invariant
    threshold lambda_min > FRAME_TOL * lambda_max.
    """
    w, _ = herm_eig(frame_operator(F))
    A = float(w[0])
    B = float(w[-1])
    is_frame = B > 0.0 and A > FRAME_TOL * B
    is_tight = is_frame and abs(B - A) <= tol * B
    is_parseval = is_tight and abs(A - 1.0) <= tol and abs(B - 1.0) <= tol
    is_exact = is_frame and F.m == F.dim
    condition = B / A if is_frame else math.inf
    return FrameReport(A, B, is_frame, is_tight, is_parseval, is_exact, condition, tol)


def bessel_bound(F: Frame) -> float:
    """Squared norm of the synthesis operator; equals the upper frame bound."""
    return op_norm(F.synthesis_matrix()) ** 2


def _require_frame(F: Frame) -> FrameReport:
    report = frame_bounds(F)
    if not report.is_frame:
        raise NotAFrame(f"lower bound {report.A:.3e} vanishes relative to {report.B:.3e}")
    return report


def canonical_dual(F: Frame) -> Frame:
    """The frame {S^-1 u_i}; its bounds are (1/B, 1/A) and its operator S^-1."""
    _require_frame(F)
    S_inv = mat_fn(frame_operator(F), "inverse")
    return Frame(F.dim, tuple(S_inv @ v for v in F.vectors))


def parsevalize(F: Frame) -> Frame:
    """The Parseval frame {S^-1/2 u_i}; its frame operator is the identity."""
    _require_frame(F)
    S_inv_sqrt = mat_fn(frame_operator(F), "inv_sqrt")
    return Frame(F.dim, tuple(S_inv_sqrt @ v for v in F.vectors))


def reconstruct(F: Frame, u: QVector) -> tuple[QVector, float]:
    """Expand u against the canonical dual: u_hat = sum_i (S^-1 u_i) <u_i|u>.

    Returns (u_hat, relative residual ||u - u_hat|| / ||u||).
    """
    if len(u) != F.dim:
        raise DimensionMismatch(f"need a vector of length {F.dim}, got {len(u)}")
    dual = canonical_dual(F)
    u_hat = synthesis(dual, analysis(F, u))
    nu = u.norm()
    residual = (u - u_hat).norm() / nu if nu > 0.0 else u_hat.norm()
    return u_hat, residual


def scale_frame(F: Frame, scalars: list[Quaternion]) -> Frame:
    """Right-scale each vector: {u_i * q_i}; every q_i must be nonzero."""
    if len(scalars) != F.m:
        raise DimensionMismatch(f"need {F.m} scalars, got {len(scalars)}")
    for k, q in enumerate(scalars):
        if abs(q) == 0.0:
            raise ZeroScalar(f"scalar {k} is zero")
    return Frame(F.dim, tuple(v * q for v, q in zip(F.vectors, scalars)))


def surjectivity_check(F: Frame) -> tuple[bool, float, float]:
    """Is the synthesis operator onto H^dim?

    Equivalent to full spectral rank of S.  When onto, returns the bounds
    pair (1/||T_pinv||^2, ||T||^2) built from the operator
    T_pinv = U* S^-1, which satisfies lower <= A and upper = B.
    """
    U = F.synthesis_matrix()
    w, _ = herm_eig(frame_operator(F))
    B = float(w[-1])
    onto = B > 0.0 and float(w[0]) > FRAME_TOL * B
    upper = op_norm(U) ** 2
    if not onto:
        return False, 0.0, upper
    pinv = U.dagger() @ mat_fn(frame_operator(F), "inverse")
    lower = 1.0 / op_norm(pinv) ** 2
    return True, lower, upper


def gen_example(kind: str, n: int) -> Frame:
    """Reference families in H^n.

    dup_onb       every standard basis vector twice (tight, bounds (2, 2))
    shifted       e1 doubled, then the rest of the basis (bounds (1, 2))
    multiplicity  k copies of e_k/sqrt(k) for k = 1..n (Parseval)
    onb           the standard basis itself (exact)
    """
    if n < 2:
        raise BadDimension("generators need n >= 2")
    e = [QVector.basis(n, k) for k in range(n)]
    if kind == "dup_onb":
        vectors = [v for v in e for _ in range(2)]
    elif kind == "shifted":
        vectors = [e[0]] + e
    elif kind == "multiplicity":
        vectors = [e[k] / math.sqrt(k + 1) for k in range(n) for _ in range(k + 1)]
    elif kind == "onb":
        vectors = list(e)
    else:
        raise ValueError(f"unknown example kind {kind!r}")
    return Frame(n, tuple(vectors))


def random_frame(n: int, m: int, rng) -> Frame:
    """Frame of m standard Gaussian vectors in H^n (all 4m*n components iid)."""
    rng = np.random.default_rng(rng)
    data = rng.standard_normal((m, n, 4))
    return Frame(n, tuple(QVector(data[i]) for i in range(m)))


__all__ = [
    "Frame",
    "FrameReport",
    "FRAME_TOL",
    "REPORT_TOL",
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
]
