"""Stability of frames under vectorwise perturbation.

The perturbed family {v_i} inherits frame bounds from {u_i} whenever there
are lambda, mu >= 0 with lambda + mu/sqrt(A) < 1 such that

    ||sum (u_i - v_i) q_i||  <=  lambda ||sum u_i q_i|| + mu (sum |q_i|^2)^(1/2)    (*)

for all coefficient sequences; the new bounds are then

    A (1 - (lambda + mu/sqrt(A)))^2   and   B (1 + (lambda + mu/sqrt(B)))^2.

In finite dimension (*) is a sup over the coefficient unit sphere of a
non-convex function, so the checker is three-tier: a deterministic operator
certificate (sufficient), a randomized falsifier (sound, returns a witness),
and `undetermined` otherwise.  The checker never certifies beyond what the
operator inequalities actually guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InadmissiblePerturbation
from .frames import FRAME_TOL, Frame, frame_bounds, gen_example
from .qlinalg import QMatrix, QVector, herm_eig, op_norm
from .quaternion import as_quaternion

# slack for the certificate comparisons and the falsification margin
CERT_TOL = 1e-12
VIOLATION_TOL = 1e-9


@dataclass(frozen=True)
class PerturbReport:
    """Outcome of a perturbation check.

    predicted_A/predicted_B are the closed-form bounds for the perturbed
    family and are only populated when the pair (lambda, mu) is admissible;
    exact_A/exact_B are the spectral bounds actually attained by it.
    """

    lam: float
    mu: float
    admissible: bool
    status: str  # "certified" | "falsified" | "undetermined"
    witness: QVector | None
    predicted_A: float | None
    predicted_B: float | None
    exact_A: float
    exact_B: float


def predicted_bounds(A: float, B: float, lam: float, mu: float) -> tuple[float, float]:
    """Closed-form bounds for an admissible perturbation of an (A, B) frame."""
    if A <= 0.0 or B <= 0.0:
        raise ValueError("frame bounds must be positive")
    if lam < 0.0 or mu < 0.0:
        raise ValueError("lambda and mu must be nonnegative")
    if lam + mu / math.sqrt(A) >= 1.0:
        raise InadmissiblePerturbation(
            f"lambda + mu/sqrt(A) = {lam + mu / math.sqrt(A):.6g} >= 1"
        )
    A_new = A * (1.0 - (lam + mu / math.sqrt(A))) ** 2
    B_new = B * (1.0 + (lam + mu / math.sqrt(B))) ** 2
    return A_new, B_new


def _check_shapes(U_frame: Frame, V_frame: Frame) -> None:
    if U_frame.dim != V_frame.dim or U_frame.m != V_frame.m:
        raise DimensionMismatch(
            f"families differ in shape: ({U_frame.dim}, {U_frame.m}) vs "
            f"({V_frame.dim}, {V_frame.m})"
        )


def _admissible(A: float, lam: float, mu: float) -> bool:
    return A > 0.0 and lam + mu / math.sqrt(A) < 1.0


def _predicted_or_none(A: float, B: float, lam: float, mu: float):
    if not _admissible(A, lam, mu):
        return None, None
    return predicted_bounds(A, B, lam, mu)


def deviation_certificate(U_frame: Frame, V_frame: Frame) -> PerturbReport:
    """Certify (*) with lambda = 0 and mu = ||U - V|| (operator norm).

    The bound ||(U - V) q|| <= ||U - V|| ||q|| makes the condition hold by
    definition, so the status is always `certified`; the pair is admissible
    exactly when mu < sqrt(A), and then the perturbed family is a frame with
    bounds (sqrt(A) - mu)^2 and (sqrt(B) + mu)^2.
    """
    _check_shapes(U_frame, V_frame)
    mu = op_norm(U_frame.synthesis_matrix() - V_frame.synthesis_matrix())
    base = frame_bounds(U_frame)
    exact = frame_bounds(V_frame)
    predicted_A, predicted_B = _predicted_or_none(base.A, base.B, 0.0, mu)
    return PerturbReport(
        lam=0.0,
        mu=mu,
        admissible=_admissible(base.A, 0.0, mu),
        status="certified",
        witness=None,
        predicted_A=predicted_A,
        predicted_B=predicted_B,
        exact_A=exact.A,
        exact_B=exact.B,
    )


def _condition_margin(D: QMatrix, U: QMatrix, lam: float, mu: float, q: QVector) -> float:
    """lhs - rhs of (*) at one coefficient vector."""
    lhs = (D @ q).norm()
    rhs = lam * (U @ q).norm() + mu * q.norm()
    return lhs - rhs


def _certificate(D: QMatrix, U: QMatrix, lam: float, mu: float) -> bool:
    """Deterministic sufficient conditions for (*) to hold everywhere.

    Quadratic route: D*D <= lam^2 U*U + mu^2 I as operators implies (*)
    because the cross term of the squared right side is nonnegative; this
    stays sound on the kernel of U.  Norm route (only when U has trivial
    kernel): ||D|| <= lam * sigma_min(U) + mu.
    """
    m = D.shape[1]
    dnorm = op_norm(D)
    slack = CERT_TOL * max(1.0, dnorm)
    if dnorm <= mu + slack:
        return True
    Q = D.dagger() @ D - (U.dagger() @ U) * (lam * lam) - QMatrix.identity(m) * (mu * mu)
    wq, _ = herm_eig(Q)
    scale = max(1.0, dnorm * dnorm, abs(float(wq[0])), abs(float(wq[-1])))
    if float(wq[-1]) <= CERT_TOL * scale:
        return True
    if lam > 0.0:
        wu, _ = herm_eig(U.dagger() @ U)
        kernel_trivial = float(wu[-1]) > 0.0 and float(wu[0]) > FRAME_TOL * float(wu[-1])
        if kernel_trivial:
            sigma_min = math.sqrt(max(float(wu[0]), 0.0))
            if dnorm <= lam * sigma_min + mu + slack:
                return True
    return False


def check_condition(
    U_frame: Frame,
    V_frame: Frame,
    lam: float,
    mu: float,
    samples: int = 2000,
    seed: int = 0,
) -> PerturbReport:
    """Probe condition (*) for a given (lambda, mu).

    Candidates are `samples` coefficient vectors drawn uniformly from the
    unit sphere (normalized componentwise Gaussians over the 4m real
    coordinates, reproducible under `seed`) plus deterministic extremal
    directions: the right-singular vectors of U - V and of U.  Any violation
    by more than VIOLATION_TOL falsifies the condition and the worst
    offender is returned as witness; with no violation found, the status is
    `certified` only if a deterministic operator certificate holds, and
    `undetermined` otherwise.
    """
    _check_shapes(U_frame, V_frame)
    if samples < 0:
        raise ValueError("samples must be nonnegative")
    if lam < 0.0 or mu < 0.0:
        raise ValueError("lambda and mu must be nonnegative")
    U = U_frame.synthesis_matrix()
    V = V_frame.synthesis_matrix()
    D = U - V
    m = U_frame.m

    candidates: list[QVector] = []
    _, dirs_D = herm_eig(D.dagger() @ D)
    _, dirs_U = herm_eig(U.dagger() @ U)
    candidates.extend(dirs_D)
    candidates.extend(dirs_U)
    if samples > 0:
        rng = np.random.default_rng(seed)
        block = rng.standard_normal((samples, m, 4))
        norms = np.linalg.norm(block.reshape(samples, -1), axis=1)
        for row, nr in zip(block, norms):
            if nr > 1e-12:
                candidates.append(QVector(row / nr))

    witness = None
    worst = VIOLATION_TOL
    for q in candidates:
        margin = _condition_margin(D, U, lam, mu, q)
        if margin > worst:
            worst = margin
            witness = q

    if witness is not None:
        status = "falsified"
    elif _certificate(D, U, lam, mu):
        status = "certified"
    else:
        status = "undetermined"

    base = frame_bounds(U_frame)
    exact = frame_bounds(V_frame)
    predicted_A, predicted_B = _predicted_or_none(base.A, base.B, lam, mu)
    return PerturbReport(
        lam=float(lam),
        mu=float(mu),
        admissible=_admissible(base.A, lam, mu),
        status=status,
        witness=witness,
        predicted_A=predicted_A,
        predicted_B=predicted_B,
        exact_A=exact.A,
        exact_B=exact.B,
    )


def circulant_example(n: int, p) -> tuple[Frame, Frame]:
    """Standard basis plus its cyclically shifted perturbation v_i = e_i + e_{i+1} p.

    Uses wrap-around indexing so that, for real p, the perturbed frame
    operator is circulant with eigenvalues {|1 + p w|^2 : w^n = 1}; the
    window [(1-p)^2, (1+p)^2] is attained and the lower edge hits zero at
    p = 1 for even n (the family stops being a frame).
    """
    U_frame = gen_example("onb", n)
    q = as_quaternion(p)
    vectors = tuple(
        QVector.basis(n, k) + QVector.basis(n, (k + 1) % n) * q for k in range(n)
    )
    return U_frame, Frame(n, vectors)


def circulant_eigenvalues(n: int, p: float) -> np.ndarray:
    """Exact perturbed-operator spectrum {|1 + p w|^2 : w^n = 1} for real p."""
    omega = np.exp(2j * np.pi * np.arange(n) / n)
    return np.sort(np.abs(1.0 + p * omega) ** 2)


__all__ = [
    "PerturbReport",
    "predicted_bounds",
    "deviation_certificate",
    "check_condition",
    "circulant_example",
    "circulant_eigenvalues",
]
