import numpy as np
import pytest

from birkhoff_poisson import (
    NotPositiveDefinite,
    SingularInput,
    StratumAmbiguous,
    birkhoff_factor,
    inv_sqrt_hpd,
    iwasawa_factor,
    polar_factor,
    principal_minors,
)
from birkhoff_poisson.linalg import max_principal_angle, signed_permutation_matrix
from birkhoff_poisson.sampling import complex_normal, random_special_linear, random_special_unitary


def det_cofactor(m):
    """Independent determinant oracle by cofactor expansion along row 0."""
    n = m.shape[0]
    if n == 1:
        return m[0, 0]
    total = 0.0 + 0.0j
    for j in range(n):
        minor = np.delete(np.delete(m, 0, axis=0), j, axis=1)
        total += (-1) ** j * m[0, j] * det_cofactor(minor)
    return total


# ---------------------------------------------------------------------------
# birkhoff_factor


def test_birkhoff_identity():
    f = birkhoff_factor(np.eye(3, dtype=complex))
    assert f.perm == (0, 1, 2)
    np.testing.assert_allclose(f.l, np.eye(3), atol=1e-15)
    np.testing.assert_allclose(f.h, np.eye(3), atol=1e-15)
    np.testing.assert_allclose(f.u_plus, np.eye(3), atol=1e-15)


def test_birkhoff_signed_rotation():
    # g is itself the chosen signed-permutation representative
    g = np.array([[0, 1], [-1, 0]], dtype=complex)
    f = birkhoff_factor(g)
    assert f.perm == (1, 0)
    assert f.signs == (1, -1)
    np.testing.assert_allclose(f.l, np.eye(2), atol=1e-15)
    np.testing.assert_allclose(f.h, np.eye(2), atol=1e-15)
    np.testing.assert_allclose(f.u_plus, np.eye(2), atol=1e-15)
    np.testing.assert_allclose(f.w_matrix, g, atol=1e-15)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_birkhoff_roundtrip_random(n, rng):
    for _ in range(50):
        g = random_special_linear(n, rng)
        f = birkhoff_factor(g)
        assert f.is_identity_perm
        err = np.linalg.norm(f.reconstruct() - g)
        assert err <= 1e-10 * np.linalg.norm(g)
        assert abs(np.prod(np.diag(f.h)) - 1) < 1e-10


def test_birkhoff_factor_shapes(rng):
    f = birkhoff_factor(random_special_linear(4, rng))
    assert np.allclose(np.diag(f.l), 1) and np.allclose(np.triu(f.l, 1), 0)
    assert np.allclose(np.diag(f.u_plus), 1) and np.allclose(np.tril(f.u_plus, -1), 0)
    assert np.allclose(f.h, np.diag(np.diag(f.h)))


def test_birkhoff_recovers_engineered_permutation(rng):
    # build g = l W h u with a known nontrivial Weyl element; the structural
    # elimination must recover exactly that permutation
    n = 4
    perm = (2, 0, 3, 1)
    p_mat = np.zeros((n, n))
    for j, i in enumerate(perm):
        p_mat[i, j] = 1.0
    signs = [1, 1, 1, int(round(np.linalg.det(p_mat)))]
    w = signed_permutation_matrix(perm, tuple(signs))
    lo = np.eye(n, dtype=complex)
    lo[np.tril_indices(n, -1)] = complex_normal(rng, 6)
    up = np.eye(n, dtype=complex)
    up[np.triu_indices(n, 1)] = complex_normal(rng, 6)
    d = np.array([1.4, 0.6, 2.2, 1.0 / (1.4 * 0.6 * 2.2)], dtype=complex)
    g = lo @ w @ np.diag(d) @ up
    f = birkhoff_factor(g)
    assert f.perm == perm
    assert f.signs == tuple(signs)
    np.testing.assert_allclose(f.reconstruct(), g, atol=1e-12 * np.linalg.norm(g))


def test_birkhoff_singular_input():
    g = np.array([[1, 1], [1, 1]], dtype=complex)
    with pytest.raises(SingularInput):
        birkhoff_factor(g)


def test_birkhoff_non_unimodular_rejected():
    with pytest.raises(SingularInput):
        birkhoff_factor(2 * np.eye(2, dtype=complex))


def test_birkhoff_ambiguous_pivot():
    tol = 1e-9
    eps = 3e-9  # inside the ambiguity band (tol, 10 tol)
    g = np.array([[eps, 1], [-1, 0]], dtype=complex)
    g /= np.exp(np.log(np.linalg.det(g)) / 2)
    with pytest.raises(StratumAmbiguous):
        birkhoff_factor(g, tol)


# ---------------------------------------------------------------------------
# iwasawa_factor


def test_iwasawa_unitary_input(rng):
    g = random_special_unitary(3, rng)
    f = iwasawa_factor(g)
    np.testing.assert_allclose(f.l, np.eye(3), atol=1e-12)
    np.testing.assert_allclose(f.a, np.eye(3), atol=1e-12)
    np.testing.assert_allclose(f.u, g, atol=1e-12)


def test_iwasawa_positive_diagonal_input():
    g = np.diag([2.0, 0.5]).astype(complex)
    f = iwasawa_factor(g)
    np.testing.assert_allclose(f.l, np.eye(2), atol=1e-14)
    np.testing.assert_allclose(f.a, g, atol=1e-14)
    np.testing.assert_allclose(f.u, np.eye(2), atol=1e-14)


def test_iwasawa_roundtrip_and_invariants(rng):
    for _ in range(100):
        g = random_special_linear(3, rng)
        f = iwasawa_factor(g)
        assert np.linalg.norm(f.reconstruct() - g) <= 1e-11 * np.linalg.norm(g)
        a = np.diag(f.a)
        assert np.all(np.real(a) > 0) and np.allclose(np.imag(a), 0)
        assert abs(np.prod(np.real(a)) - 1) < 1e-9
        n = g.shape[0]
        assert np.linalg.norm(f.u @ f.u.conj().T - np.eye(n)) < 1e-12


def test_iwasawa_uniqueness_fixed_point(rng):
    g = random_special_linear(4, rng)
    f = iwasawa_factor(g)
    again = iwasawa_factor(f.reconstruct())
    np.testing.assert_allclose(again.l, f.l, atol=1e-10)
    np.testing.assert_allclose(again.a, f.a, atol=1e-10)
    np.testing.assert_allclose(again.u, f.u, atol=1e-10)


def test_iwasawa_singular():
    with pytest.raises(SingularInput):
        iwasawa_factor(np.array([[1, 0], [0, 0]], dtype=complex))


# ---------------------------------------------------------------------------
# inv_sqrt_hpd / polar_factor


def test_inv_sqrt_simple():
    np.testing.assert_allclose(inv_sqrt_hpd(np.eye(3, dtype=complex)), np.eye(3), atol=1e-14)
    np.testing.assert_allclose(
        inv_sqrt_hpd(np.diag([4.0, 1.0]).astype(complex)), np.diag([0.5, 1.0]), atol=1e-14
    )


def test_inv_sqrt_random_residual(rng):
    for _ in range(25):
        q = complex_normal(rng, (4, 4))
        p = q @ q.conj().T + 0.1 * np.eye(4)
        s = inv_sqrt_hpd(p)
        assert np.linalg.norm(s @ p @ s - np.eye(4)) <= 1e-11
        assert np.linalg.norm(s - s.conj().T) <= 1e-11


def test_inv_sqrt_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        inv_sqrt_hpd(np.diag([1.0, -1.0]).astype(complex))
    with pytest.raises(NotPositiveDefinite):
        inv_sqrt_hpd(np.array([[1, 1], [0, 1]], dtype=complex))


def test_polar_simple(rng):
    q = random_special_unitary(3, rng)
    pos, unit = polar_factor(q)
    np.testing.assert_allclose(pos, np.eye(3), atol=1e-12)
    np.testing.assert_allclose(unit, q, atol=1e-12)
    d = np.diag([3.0, 1 / 3.0]).astype(complex)
    pos, unit = polar_factor(d)
    np.testing.assert_allclose(pos, d, atol=1e-14)
    np.testing.assert_allclose(unit, np.eye(2), atol=1e-14)


def test_polar_random(rng):
    for _ in range(25):
        a = complex_normal(rng, (4, 4))
        pos, unit = polar_factor(a)
        assert np.linalg.norm(pos @ unit - a) <= 1e-11 * np.linalg.norm(a)
        assert np.linalg.norm(pos - pos.conj().T) <= 1e-11
        assert np.linalg.norm(unit @ unit.conj().T - np.eye(4)) <= 1e-12
        svals = np.linalg.svd(a, compute_uv=False)
        np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(pos)), np.sort(svals), atol=1e-10)


def test_polar_singular():
    with pytest.raises(SingularInput):
        polar_factor(np.array([[1, 0], [0, 0]], dtype=complex))


# ---------------------------------------------------------------------------
# principal_minors


def test_principal_minors_examples():
    np.testing.assert_allclose(principal_minors(np.eye(4, dtype=complex)), np.ones(4))
    np.testing.assert_allclose(
        principal_minors(np.array([[0, 1], [-1, 0]], dtype=complex)), [0.0, 1.0], atol=1e-15
    )


def test_principal_minors_against_cofactor_oracle(rng):
    for _ in range(10):
        g = complex_normal(rng, (5, 5))
        minors = principal_minors(g)
        for k in range(5):
            expected = det_cofactor(g[: k + 1, : k + 1])
            assert abs(minors[k] - expected) <= 1e-12 * max(1.0, abs(expected))


def test_principal_minors_unipotent(rng):
    n = 5
    lo = np.eye(n, dtype=complex)
    lo[np.tril_indices(n, -1)] = complex_normal(rng, 10)
    np.testing.assert_allclose(principal_minors(lo), np.ones(n), atol=1e-12)
    np.testing.assert_allclose(principal_minors(lo.conj().T), np.ones(n), atol=1e-12)


def test_max_principal_angle_basics():
    a = np.array([[1.0], [0.0], [0.0]])
    b = np.array([[0.0], [1.0], [0.0]])
    assert max_principal_angle(a, b) == pytest.approx(np.pi / 2)
    c = np.array([[1.0, 0.0], [0.0, np.cos(0.3)], [0.0, np.sin(0.3)]])
    d = np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]])
    assert max_principal_angle(c, d) == pytest.approx(0.3, abs=1e-12)
    with pytest.raises(ValueError):
        max_principal_angle(a, np.hstack([b, a]))
