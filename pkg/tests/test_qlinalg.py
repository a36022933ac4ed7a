"""Vectors, matrices, the complex adjoint image, and the spectral layer."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qframes.errors import (
    ConvergenceFailure,
    DimensionMismatch,
    NotHermitian,
    NotPositiveDefinite,
    StructureViolation,
)
from qframes.qlinalg import (
    QMatrix,
    QVector,
    dagger,
    embed,
    embed_vector,
    herm_eig,
    inner,
    jacobi_eigh,
    mat_fn,
    op_norm,
    unembed,
    unembed_vector,
    vnorm,
)
from qframes.quaternion import I, J, K, ONE, Quaternion

from oracles import inner_oracle, matmul_oracle, random_qmatrix_components

RNG = np.random.default_rng(20260810)


def rand_qmatrix(n, m, rng=RNG, scale=1.0):
    return QMatrix(random_qmatrix_components(rng, n, m, scale))


def rand_qvector(n, rng=RNG):
    return QVector(rng.standard_normal((n, 4)))


def rand_hermitian(n, rng=RNG):
    G = rand_qmatrix(n, n, rng)
    return (G + G.dagger()) * 0.5


def rand_posdef(n, rng=RNG):
    G = rand_qmatrix(n, n + 2, rng)
    return G @ G.dagger()


# ------------------------------------------------------------------ inner/norm

def test_inner_frozen_example():
    u = QVector.from_quaternions([ONE, I])
    v = QVector.from_quaternions([J, ONE])
    got = inner(u, v)
    want = inner_oracle(u.data, v.data)
    assert np.allclose(want, (0.0, -1.0, 1.0, 0.0))  # frozen: j - i
    assert np.allclose(got.components, want)


def test_inner_on_basis():
    e1 = QVector.basis(3, 0)
    assert inner(e1, e1).isclose(ONE)
    assert inner(e1, QVector.basis(3, 1)).isclose(Quaternion())


def test_inner_self_is_real_nonnegative():
    for _ in range(20):
        u = rand_qvector(5)
        q = inner(u, u)
        assert q.w >= 0.0
        assert max(abs(q.x), abs(q.y), abs(q.z)) <= 1e-12 * max(1.0, q.w)
        assert abs(q.w - u.norm() ** 2) <= 1e-12 * max(1.0, q.w)


def test_inner_hermitian_symmetry_and_right_linearity():
    for _ in range(20):
        u, v = rand_qvector(4), rand_qvector(4)
        q = Quaternion(*RNG.standard_normal(4))
        scale = max(1.0, u.norm() * v.norm() * max(1.0, abs(q)))
        assert inner(u, v).conj().isclose(inner(v, u), atol=1e-12 * scale)
        assert inner(u, v * q).isclose(inner(u, v) * q, atol=1e-12 * scale)
        # left slot picks up the conjugate
        assert inner(u * q, v).isclose(q.conj() * inner(u, v), atol=1e-12 * scale)


def test_inner_matches_direct_expansion_oracle():
    for _ in range(10):
        u, v = rand_qvector(6), rand_qvector(6)
        assert np.allclose(inner(u, v).components, inner_oracle(u.data, v.data), atol=1e-11)


def test_inner_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        inner(rand_qvector(3), rand_qvector(4))


def test_vnorm_examples():
    u = QVector.from_quaternions([Quaternion(1.0, 1.0, 0.0, 0.0), Quaternion()])
    assert abs(vnorm(u) - math.sqrt(2.0)) <= 1e-15


def test_vnorm_scaling_and_cauchy_schwarz():
    for _ in range(30):
        u, v = rand_qvector(5), rand_qvector(5)
        q = Quaternion(*RNG.standard_normal(4))
        assert abs(vnorm(u * q) - vnorm(u) * abs(q)) <= 1e-12 * max(1.0, vnorm(u) * abs(q))
        assert abs(inner(u, v)) <= vnorm(u) * vnorm(v) * (1.0 + 1e-12)


def test_right_module_law():
    u = rand_qvector(4)
    p = Quaternion(*RNG.standard_normal(4))
    q = Quaternion(*RNG.standard_normal(4))
    assert ((u * p) * q).isclose(u * (p * q), atol=1e-12 * max(1.0, u.norm() * abs(p) * abs(q)))


# ---------------------------------------------------------------- matvec/dagger

def test_matvec_identity_and_right_linearity():
    x = rand_qvector(4)
    assert (QMatrix.identity(4) @ x).isclose(x)
    M = rand_qmatrix(3, 4)
    q = Quaternion(*RNG.standard_normal(4))
    lhs = M @ (x * q)
    rhs = (M @ x) * q
    assert lhs.isclose(rhs, atol=1e-11 * max(1.0, x.norm() * abs(q)))


def test_matvec_scalar_example():
    # diag(j) acting on (i) in H^1 gives ji = -k
    M = QMatrix.diag([J])
    x = QVector.from_quaternions([I])
    assert (M @ x)[0].isclose(-K)


def test_matvec_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        rand_qmatrix(3, 4) @ rand_qvector(3)


def test_matmul_matches_structure_constant_oracle():
    M = rand_qmatrix(3, 4)
    N = rand_qmatrix(4, 2)
    got = (M @ N).data
    want = matmul_oracle(M.data, N.data)
    assert np.allclose(got, want, atol=1e-11 * max(1.0, np.abs(want).max()))


def test_dagger_identities():
    assert dagger(QMatrix.identity(3)) == QMatrix.identity(3)
    M = rand_qmatrix(3, 4)
    N = rand_qmatrix(4, 3)
    assert dagger(dagger(M)).isclose(M)
    scale = max(1.0, M.frobenius() * N.frobenius())
    assert dagger(M @ N).isclose(dagger(N) @ dagger(M), atol=1e-11 * scale)


def test_dagger_moves_across_inner():
    M = rand_qmatrix(4, 3)
    u, v = rand_qvector(4), rand_qvector(3)
    lhs = inner(u, M @ v)
    rhs = inner(dagger(M) @ u, v)
    assert lhs.isclose(rhs, atol=1e-11 * max(1.0, u.norm() * v.norm() * M.frobenius()))


# -------------------------------------------------------------- embed/unembed

def test_embed_scalar_j():
    M = QMatrix.diag([J])
    assert np.allclose(embed(M), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def test_embed_is_star_homomorphism():
    for _ in range(10):
        M = rand_qmatrix(3, 3)
        N = rand_qmatrix(3, 3)
        scale = max(1.0, M.frobenius() * N.frobenius())
        assert np.allclose(embed(M @ N), embed(M) @ embed(N), atol=1e-11 * scale)
        assert np.allclose(embed(M + N), embed(M) + embed(N))
        assert np.allclose(embed(dagger(M)), embed(M).conj().T)


def test_embed_vector_compatibility():
    M = rand_qmatrix(3, 4)
    x = rand_qvector(4)
    assert np.allclose(embed(M) @ embed_vector(x), embed_vector(M @ x), atol=1e-12 * max(1.0, x.norm() * M.frobenius()))


def test_unembed_roundtrip():
    M = rand_qmatrix(4, 3)
    assert unembed(embed(M)).isclose(M)
    x = rand_qvector(5)
    assert unembed_vector(embed_vector(x)).isclose(x)


def test_unembed_block_example():
    assert unembed(np.array([[0.0, 1.0], [-1.0, 0.0]]))[0, 0].isclose(J)


def test_unembed_rejects_broken_structure():
    M = rand_qmatrix(3, 3)
    X = embed(M).copy()
    X[0, 3] += 0.5 * max(1.0, np.abs(X).max())
    with pytest.raises(StructureViolation):
        unembed(X)
    with pytest.raises(StructureViolation):
        unembed(np.zeros((3, 3)))


# -------------------------------------------------------------------- spectral

def test_jacobi_matches_lapack_oracle():
    rng = np.random.default_rng(7)
    for _ in range(15):
        N = int(rng.integers(1, 20))
        G = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
        H = (G + G.conj().T) / 2.0
        w, V = jacobi_eigh(H)
        w_ref = np.linalg.eigvalsh(H)
        scale = max(1.0, np.abs(w_ref).max())
        assert np.allclose(w, w_ref, atol=1e-11 * scale)
        assert np.linalg.norm(H @ V - V * w) <= 1e-11 * scale
        assert np.linalg.norm(V.conj().T @ V - np.eye(N)) <= 1e-11


def test_jacobi_budget_exhaustion():
    rng = np.random.default_rng(3)
    G = rng.standard_normal((12, 12))
    H = (G + G.T) / 2.0
    with pytest.raises(ConvergenceFailure):
        jacobi_eigh(H, max_sweeps=0)


def test_herm_eig_identity_and_diagonal():
    w, vecs = herm_eig(QMatrix.identity(3))
    assert np.allclose(w, [1.0, 1.0, 1.0])
    assert len(vecs) == 3
    w2, _ = herm_eig(QMatrix.diag([Quaternion(2.0), ONE, ONE]))
    assert np.allclose(w2, [1.0, 1.0, 2.0])


def test_herm_eig_rejects_non_hermitian():
    M = QMatrix.diag([I, ONE])  # diag(i) is skew, not Hermitian
    with pytest.raises(NotHermitian):
        herm_eig(M)
    with pytest.raises(NotHermitian):
        herm_eig(rand_qmatrix(2, 3))


def test_herm_eig_residuals_orthogonality_and_oracle():
    rng = np.random.default_rng(11)
    for _ in range(10):
        n = int(rng.integers(1, 7))
        M = rand_hermitian(n, rng)
        w, vecs = herm_eig(M)
        norm = max(np.abs(w).max(), 1e-300)
        # independent spectrum oracle: LAPACK on the embedding, deduplicated
        w_ref = np.linalg.eigvalsh(embed(M))[::2]
        assert np.allclose(w, w_ref, atol=1e-10 * max(1.0, norm))
        for lam, v in zip(w, vecs):
            assert abs(v.norm() - 1.0) <= 1e-10
            residual = (M @ v - v * Quaternion(float(lam))).norm()
            assert residual <= 1e-9 * max(norm, 1e-12)
        for a in range(n):
            for b in range(a + 1, n):
                assert abs(inner(vecs[a], vecs[b])) <= 1e-9


def test_herm_eig_degenerate_spectrum_keeps_orthogonality():
    # identity has a fully degenerate spectrum: the embedded eigenbasis must
    # be recombined to stay quaternionically orthogonal
    for n in (2, 3, 5):
        w, vecs = herm_eig(QMatrix.identity(n))
        assert np.allclose(w, np.ones(n))
        for a in range(n):
            for b in range(a + 1, n):
                assert abs(inner(vecs[a], vecs[b])) <= 1e-12


def test_herm_eig_rayleigh_bracketing():
    rng = np.random.default_rng(13)
    M = rand_hermitian(5, rng)
    w, _ = herm_eig(M)
    for _ in range(50):
        u = rand_qvector(5, rng)
        u = u / u.norm()
        r = inner(u, M @ u)
        assert w[0] - 1e-10 <= r.w <= w[-1] + 1e-10
        assert max(abs(r.x), abs(r.y), abs(r.z)) <= 1e-10 * max(1.0, np.abs(w).max())


def test_mat_fn_trivial_cases():
    assert mat_fn(QMatrix.identity(3), "sqrt").isclose(QMatrix.identity(3), atol=1e-12)
    got = mat_fn(QMatrix.identity(2) * 2.0, "inv_sqrt")
    assert got.isclose(QMatrix.identity(2) * (1.0 / math.sqrt(2.0)), atol=1e-12)


def test_mat_fn_consistency():
    rng = np.random.default_rng(17)
    for _ in range(8):
        n = int(rng.integers(2, 6))
        S = rand_posdef(n, rng)
        eye = QMatrix.identity(n)
        scale = S.frobenius()
        inv = mat_fn(S, "inverse")
        root = mat_fn(S, "sqrt")
        inv_root = mat_fn(S, "inv_sqrt")
        assert (inv @ S).isclose(eye, atol=1e-9 * max(1.0, scale))
        assert (root @ root).isclose(S, atol=1e-9 * max(1.0, scale))
        assert (inv_root @ S @ inv_root).isclose(eye, atol=1e-9 * max(1.0, scale))
        assert inv_root.isclose(mat_fn(root, "inverse"), atol=1e-9 * max(1.0, scale))
        # results stay Hermitian
        assert (root - root.dagger()).frobenius() <= 1e-12 * max(1.0, scale)


def test_mat_fn_rejects_indefinite():
    M = QMatrix.diag([Quaternion(1.0), Quaternion(-1.0)])
    for fn in ("inverse", "sqrt", "inv_sqrt"):
        with pytest.raises(NotPositiveDefinite):
            mat_fn(M, fn)
    with pytest.raises(NotPositiveDefinite):
        mat_fn(QMatrix.zeros(2, 2), "sqrt")
    with pytest.raises(ValueError):
        mat_fn(QMatrix.identity(2), "log")


def test_op_norm_examples():
    assert abs(op_norm(QMatrix.identity(4)) - 1.0) <= 1e-12
    q = Quaternion(1.0, 2.0, -1.0, 0.5)
    M = QMatrix.identity(3) * q
    assert abs(op_norm(M) - abs(q)) <= 1e-10 * abs(q)


def test_op_norm_matches_svd_oracle():
    rng = np.random.default_rng(23)
    for _ in range(10):
        M = rand_qmatrix(int(rng.integers(1, 5)), int(rng.integers(1, 7)), rng)
        want = np.linalg.svd(embed(M), compute_uv=False)[0]
        assert abs(op_norm(M) - want) <= 1e-10 * max(1.0, want)


def test_op_norm_circulant_deviation():
    # columns e_{k+1} * 0.5 of the cyclic deviation have operator norm 0.5
    n = 4
    cols = [QVector.basis(n, (k + 1) % n) * Quaternion(0.5) for k in range(n)]
    D = QMatrix.from_columns(cols)
    assert abs(op_norm(D) - 0.5) <= 1e-12


# ------------------------------------------------------------------- hypothesis

small_component = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


@settings(max_examples=30, deadline=None)
@given(data=st.lists(st.tuples(small_component, small_component, small_component, small_component), min_size=2, max_size=4))
def test_embed_vector_roundtrip_hypothesis(data):
    x = QVector([list(t) for t in data])
    assert unembed_vector(embed_vector(x)).isclose(x, atol=1e-13)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_embed_homomorphism_hypothesis(seed):
    rng = np.random.default_rng(seed)
    M = QMatrix(rng.standard_normal((3, 2, 4)))
    N = QMatrix(rng.standard_normal((2, 3, 4)))
    scale = max(1.0, M.frobenius() * N.frobenius())
    assert np.allclose(embed(M @ N), embed(M) @ embed(N), atol=1e-11 * scale)
