"""Right-quaternionic vectors and matrices, and the spectral primitives behind them.

Vectors and matrices store their entries as float arrays with a trailing
axis of length 4 in (w, x, y, z) order.  All heavy lifting happens on the
complex adjoint image: a quaternionic matrix M = M1 + M2*j (complex split
M1 = W + X*i, M2 = Y + Z*i) maps to the 2n x 2m complex block matrix

    [[ M1,        M2       ],
     [-conj(M2),  conj(M1) ]]

which is a homomorphism of unital *-algebras, so Hermitian spectral theory
on the image answers every spectral question about M itself.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    NotHermitian,
    NotPositiveDefinite,
    StructureViolation,
)
from .quaternion import Quaternion

# Relative tolerances for the spectral layer (desk scale, n <= 64).
TOL_HERM = 1e-10
TOL_STRUCT = 1e-10
TOL_PD = 1e-12
JACOBI_SWEEPS = 30
JACOBI_TOL = 1e-13


def _as_components(data, ndim: int) -> np.ndarray:
    arr = np.asarray(data, dtype=np.float64)
    if arr.ndim != ndim or arr.shape[-1] != 4:
        raise ValueError(f"expected a shape (..., 4) array with {ndim} axes, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("entries must be finite")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


def _split(arr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Complex split q = (w + x*i) + (y + z*i)*j."""
    return arr[..., 0] + 1j * arr[..., 1], arr[..., 2] + 1j * arr[..., 3]


def _join(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.stack([a.real, a.imag, b.real, b.imag], axis=-1)


class QVector:
    """Vector in H^n under right scalar multiplication."""

    __slots__ = ("data",)

    def __init__(self, data):
        object.__setattr__(self, "data", _as_components(data, 2))
        if len(self) < 1:
            raise ValueError("vectors must have at least one entry")

    def __setattr__(self, name, value):
        raise AttributeError("QVector is immutable")

    @classmethod
    def from_quaternions(cls, qs: Iterable[Quaternion]) -> "QVector":
        return cls([q.components for q in qs])

    @classmethod
    def zeros(cls, n: int) -> "QVector":
        return cls(np.zeros((n, 4)))

    @classmethod
    def basis(cls, n: int, k: int) -> "QVector":
        data = np.zeros((n, 4))
        data[k, 0] = 1.0
        return cls(data)

    def __len__(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, k: int) -> Quaternion:
        return Quaternion(*self.data[k])

    def quaternions(self) -> list[Quaternion]:
        return [Quaternion(*row) for row in self.data]

    def __add__(self, other: "QVector") -> "QVector":
        if len(self) != len(other):
            raise DimensionMismatch("vector lengths differ")
        return QVector(self.data + other.data)

    def __sub__(self, other: "QVector") -> "QVector":
        if len(self) != len(other):
            raise DimensionMismatch("vector lengths differ")
        return QVector(self.data - other.data)

    def __neg__(self) -> "QVector":
        return QVector(-self.data)

    def __mul__(self, q) -> "QVector":
        """Right scalar action u * q; reals act componentwise."""
        if isinstance(q, (int, float)):
            return QVector(self.data * float(q))
        if isinstance(q, Quaternion):
            a, b = _split(self.data)
            alpha = complex(q.w, q.x)
            beta = complex(q.y, q.z)
            return QVector(_join(a * alpha - b * beta.conjugate(), a * beta + b * alpha.conjugate()))
        return NotImplemented

    def __truediv__(self, s) -> "QVector":
        if isinstance(s, (int, float)):
            return QVector(self.data / float(s))
        return NotImplemented

    def norm(self) -> float:
        return float(np.linalg.norm(self.data))

    def isclose(self, other: "QVector", atol: float = 1e-12) -> bool:
        return len(self) == len(other) and bool(np.max(np.abs(self.data - other.data)) <= atol)

    def __eq__(self, other) -> bool:
        return isinstance(other, QVector) and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        return f"QVector(n={len(self)})"


class QMatrix:
    """n x m matrix over the quaternions, acting right-linearly on QVectors."""

    __slots__ = ("data",)

    def __init__(self, data):
        object.__setattr__(self, "data", _as_components(data, 3))

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def from_quaternions(cls, rows: Sequence[Sequence[Quaternion]]) -> "QMatrix":
        return cls([[q.components for q in row] for row in rows])

    @classmethod
    def from_columns(cls, columns: Sequence[QVector]) -> "QMatrix":
        return cls(np.stack([v.data for v in columns], axis=1))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        data = np.zeros((n, n, 4))
        data[np.arange(n), np.arange(n), 0] = 1.0
        return cls(data)

    @classmethod
    def zeros(cls, n: int, m: int) -> "QMatrix":
        return cls(np.zeros((n, m, 4)))

    @classmethod
    def diag(cls, qs: Sequence[Quaternion]) -> "QMatrix":
        n = len(qs)
        data = np.zeros((n, n, 4))
        for k, q in enumerate(qs):
            data[k, k] = q.components
        return cls(data)

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape[0], self.data.shape[1]

    def __getitem__(self, key: tuple[int, int]) -> Quaternion:
        i, j = key
        return Quaternion(*self.data[i, j])

    def col(self, j: int) -> QVector:
        return QVector(self.data[:, j, :])

    def columns(self) -> list[QVector]:
        return [self.col(j) for j in range(self.shape[1])]

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch("matrix shapes differ")
        return QMatrix(self.data + other.data)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch("matrix shapes differ")
        return QMatrix(self.data - other.data)

    def __neg__(self) -> "QMatrix":
        return QMatrix(-self.data)

    def __mul__(self, q) -> "QMatrix":
        """Entrywise right scalar action M * q."""
        if isinstance(q, (int, float)):
            return QMatrix(self.data * float(q))
        if isinstance(q, Quaternion):
            a, b = _split(self.data)
            alpha = complex(q.w, q.x)
            beta = complex(q.y, q.z)
            return QMatrix(_join(a * alpha - b * beta.conjugate(), a * beta + b * alpha.conjugate()))
        return NotImplemented

    def __truediv__(self, s) -> "QMatrix":
        if isinstance(s, (int, float)):
            return QMatrix(self.data / float(s))
        return NotImplemented

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.shape[1] != other.shape[0]:
                raise DimensionMismatch(
                    f"cannot multiply {self.shape} by {other.shape}"
                )
            a, b = _split(self.data)
            c, d = _split(other.data)
            return QMatrix(_join(a @ c - b @ np.conj(d), a @ d + b @ np.conj(c)))
        if isinstance(other, QVector):
            return matvec(self, other)
        return NotImplemented

    def dagger(self) -> "QMatrix":
        """Conjugate transpose."""
        out = self.data.transpose(1, 0, 2) * np.array([1.0, -1.0, -1.0, -1.0])
        return QMatrix(out)

    def frobenius(self) -> float:
        return float(np.linalg.norm(self.data))

    def isclose(self, other: "QMatrix", atol: float = 1e-12) -> bool:
        return self.shape == other.shape and bool(np.max(np.abs(self.data - other.data)) <= atol)

    def __eq__(self, other) -> bool:
        return isinstance(other, QMatrix) and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        return f"QMatrix(shape={self.shape})"


def inner(u: QVector, v: QVector) -> Quaternion:
    """Hermitian inner product sum_k conj(u_k) * v_k, linear in the right slot."""
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths differ")
    a, b = _split(u.data)
    c, d = _split(v.data)
    alpha = np.vdot(a, c) + np.vdot(d, b)
    beta = np.vdot(a, d) - np.vdot(c, b)
    return Quaternion(alpha.real, alpha.imag, beta.real, beta.imag)


def vnorm(u: QVector) -> float:
    """Norm sqrt(<u|u>), the Euclidean norm of the 4n real components."""
    return u.norm()


def matvec(M: QMatrix, x: QVector) -> QVector:
    if M.shape[1] != len(x):
        raise DimensionMismatch(f"matrix has {M.shape[1]} columns, vector has {len(x)} entries")
    a, b = _split(M.data)
    c, d = _split(x.data)
    return QVector(_join(a @ c - b @ np.conj(d), a @ d + b @ np.conj(c)))


def dagger(M: QMatrix) -> QMatrix:
    return M.dagger()


def embed(M: QMatrix) -> np.ndarray:
    """Complex adjoint image of M as a 2n x 2m complex array."""
    a, b = _split(M.data)
    return np.block([[a, b], [-np.conj(b), np.conj(a)]])


def embed_vector(x: QVector) -> np.ndarray:
    a, b = _split(x.data)
    return np.concatenate([a, -np.conj(b)])


def unembed_vector(z: np.ndarray) -> QVector:
    z = np.asarray(z, dtype=np.complex128)
    if z.ndim != 1 or z.shape[0] % 2 != 0:
        raise StructureViolation("embedded vectors have even length")
    n = z.shape[0] // 2
    return QVector(_join(z[:n], -np.conj(z[n:])))


def unembed(X: np.ndarray, tol: float = TOL_STRUCT) -> QMatrix:
    """Invert `embed`, checking that the block symmetry survived.

    The two off-diagonal blocks of a genuine embedding determine each other;
    a residual above tol * ||X||_F means the matrix has drifted off the
    quaternionic subalgebra and is rejected.
    """
    X = np.asarray(X, dtype=np.complex128)
    if X.ndim != 2 or X.shape[0] % 2 != 0 or X.shape[1] % 2 != 0:
        raise StructureViolation("embedded matrices have even dimensions")
    n = X.shape[0] // 2
    m = X.shape[1] // 2
    a, b = X[:n, :m], X[:n, m:]
    c, d = X[n:, :m], X[n:, m:]
    scale = np.linalg.norm(X)
    residual = math.hypot(np.linalg.norm(c + np.conj(b)), np.linalg.norm(d - np.conj(a)))
    if residual > tol * max(scale, 1e-300):
        raise StructureViolation(
            f"block symmetry residual {residual:.3e} exceeds {tol:.1e} * ||X||"
        )
    a_avg = (a + np.conj(d)) / 2.0
    b_avg = (b - np.conj(c)) / 2.0
    return QMatrix(_join(a_avg, b_avg))


def _offdiag_norm(A: np.ndarray) -> float:
    off = A - np.diag(A.diagonal())
    return float(np.linalg.norm(off))


def jacobi_eigh(
    H: np.ndarray,
    max_sweeps: int = JACOBI_SWEEPS,
    tol_factor: float = JACOBI_TOL,
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigensolver for complex Hermitian matrices.

    Each pivot is annihilated by a plane rotation combined with the phase of
    the pivot entry.  Sweeps continue until the off-diagonal Frobenius mass
    falls below tol_factor * ||H||_F; running out of the sweep budget raises
    ConvergenceFailure.  Returns eigenvalues in ascending order and the
    matching unitary matrix of column eigenvectors.
    """
    A = np.array(H, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    N = A.shape[0]
    A = (A + A.conj().T) / 2.0
    V = np.eye(N, dtype=np.complex128)
    fro = float(np.linalg.norm(A))
    if N == 1 or fro == 0.0:
        w = A.diagonal().real.copy()
        order = np.argsort(w, kind="stable")
        return w[order], V[:, order]
    thresh = tol_factor * fro
    skip = thresh / N
    converged = False
    for _ in range(max_sweeps):
        if _offdiag_norm(A) <= thresh:
            converged = True
            break
        for p in range(N - 1):
            for q in range(p + 1, N):
                apq = A[p, q]
                mag = abs(apq)
                if mag <= skip:
                    continue
                theta = (A[q, q].real - A[p, p].real) / (2.0 * mag)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                phase = apq / mag
                rot = np.array(
                    [[c, s * phase], [-s * phase.conjugate(), c]], dtype=np.complex128
                )
                A[:, [p, q]] = A[:, [p, q]] @ rot
                A[[p, q], :] = rot.conj().T @ A[[p, q], :]
                A[p, q] = 0.0
                A[q, p] = 0.0
                V[:, [p, q]] = V[:, [p, q]] @ rot
    if not converged and _offdiag_norm(A) > thresh:
        raise ConvergenceFailure(f"off-diagonal mass above threshold after {max_sweeps} sweeps")
    w = A.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def _phi(z: np.ndarray) -> np.ndarray:
    """Antilinear partner of an embedded vector: the image of v -> v*j."""
    n = z.shape[0] // 2
    return np.concatenate([np.conj(z[n:]), -np.conj(z[:n])])


def _check_hermitian(M: QMatrix, tol: float) -> QMatrix:
    if M.shape[0] != M.shape[1]:
        raise NotHermitian("matrix is not square")
    scale = M.frobenius()
    gap = (M - M.dagger()).frobenius()
    if gap > tol * max(scale, 1e-300):
        raise NotHermitian(f"||M - M*|| = {gap:.3e} exceeds {tol:.1e} * ||M||")
    # symmetrize away roundoff drift before any spectral work
    return (M + M.dagger()) * 0.5


def herm_eig(M: QMatrix, tol_herm: float = TOL_HERM) -> tuple[np.ndarray, list[QVector]]:
    """Eigendecomposition of a Hermitian quaternionic matrix.

    Works on the complex adjoint image, where every quaternionic eigenvalue
    shows up twice; the doubled spectrum is deduplicated by sorting and
    keeping every second value.  Eigenvectors are rebuilt one per pair.
    Within a numerically degenerate cluster the complex eigenbasis is not
    automatically compatible with the quaternionic structure, so candidates
    are re-picked by largest residual against the span of the vectors already
    chosen together with their j-partners; this keeps the returned vectors
    quaternionically orthonormal even for repeated eigenvalues.

    Returns (ascending eigenvalues, unit eigenvectors), n of each.
    """
    Msym = _check_hermitian(M, tol_herm)
    n = Msym.shape[0]
    w2, V2 = jacobi_eigh(embed(Msym))
    scale = max(abs(w2[0]), abs(w2[-1]))
    gap = 1e-12 * max(scale, 1e-300)

    # cluster boundaries only at even offsets, so pairs never split
    bounds = [0]
    for i in range(1, 2 * n):
        if w2[i] - w2[i - 1] > gap and (i - bounds[-1]) % 2 == 0:
            bounds.append(i)
    bounds.append(2 * n)

    values: list[float] = []
    vectors: list[QVector] = []
    for a, b in zip(bounds[:-1], bounds[1:]):
        size = b - a
        cols = [V2[:, t].copy() for t in range(a, b)]
        basis: list[np.ndarray] = []
        for _ in range(size // 2):
            best, best_norm = None, -1.0
            for z in cols:
                r = z.astype(np.complex128).copy()
                for bb in basis:
                    r -= bb * np.vdot(bb, r)
                nr = float(np.linalg.norm(r))
                if nr > best_norm:
                    best_norm, best = nr, r
            zeta = best / best_norm
            basis.append(zeta)
            partner = _phi(zeta)
            for bb in basis:
                partner -= bb * np.vdot(bb, partner)
            basis.append(partner / np.linalg.norm(partner))
            vectors.append(unembed_vector(zeta))
        values.extend(w2[a:b:2])
    if len(values) != n:
        raise ConvergenceFailure("eigenvalue pairing failed")
    return np.asarray(values, dtype=np.float64), vectors


def mat_fn(M: QMatrix, fn: str, tol_pd: float = TOL_PD) -> QMatrix:
    """Spectral matrix function of a Hermitian positive definite matrix.

    fn is one of "inverse", "sqrt", "inv_sqrt".  The function is applied to
    the eigenvalues of the complex adjoint image and the result pulled back;
    a failed pull-back (StructureViolation) would signal that the spectral
    arithmetic lost the quaternionic block symmetry.
    """
    if fn not in ("inverse", "sqrt", "inv_sqrt"):
        raise ValueError(f"unknown matrix function {fn!r}")
    Msym = _check_hermitian(M, TOL_HERM)
    w, V = jacobi_eigh(embed(Msym))
    lam_max = float(w[-1])
    if lam_max <= 0.0 or float(w[0]) <= tol_pd * lam_max:
        raise NotPositiveDefinite(
            f"eigenvalues span [{w[0]:.3e}, {lam_max:.3e}]; need all > {tol_pd:.1e} * max"
        )
    if fn == "inverse":
        fw = 1.0 / w
    elif fn == "sqrt":
        fw = np.sqrt(w)
    else:
        fw = 1.0 / np.sqrt(w)
    Y = (V * fw) @ V.conj().T
    Y = (Y + Y.conj().T) / 2.0
    R = unembed(Y)
    return (R + R.dagger()) * 0.5


def op_norm(M: QMatrix) -> float:
    """Operator norm: the largest singular value, via sqrt(lambda_max(M* M))."""
    H = M.dagger() @ M
    w, _ = herm_eig(H)
    return math.sqrt(max(float(w[-1]), 0.0))
