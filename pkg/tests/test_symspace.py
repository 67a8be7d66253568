import numpy as np
import pytest

from birkhoff_poisson import (
    canonical_rep,
    cartan_embed,
    group_iso,
    parse_preset,
    project_ip,
    theta_g,
)
from birkhoff_poisson.sampling import (
    complex_normal,
    random_chart,
    random_ip,
    random_point,
    random_stabilizer,
    random_special_unitary,
)
from birkhoff_poisson.symspace import (
    chart_point,
    elem_norm,
    grassmannian,
    group_case,
    ip_basis,
    project_iu,
    project_k,
    projective_space,
    su_basis,
    torus_basis,
)


def test_preset_dimensions():
    g = grassmannian(2, 3)
    assert g.matrix_dim == 5
    assert g.dim_u == 24 and g.dim_k == 12 and g.dim_ip == 12
    gc = group_case(2)
    assert gc.dim_u == 6 and gc.dim_k == 3 and gc.dim_ip == 3
    assert projective_space(2).dim_ip == 4


def test_parse_preset_roundtrip():
    assert parse_preset("cp1") == projective_space(1)
    assert parse_preset("cp2") == projective_space(2)
    assert parse_preset("cpn:3") == projective_space(3)
    assert parse_preset("gr:2,2") == grassmannian(2, 2)
    assert parse_preset("group:su2") == group_case(2)
    with pytest.raises(ValueError):
        parse_preset("nope")


def test_theta_involution(rng, gr22, group2):
    g = random_point(gr22, rng)
    np.testing.assert_allclose(theta_g(theta_g(g, gr22), gr22), g, atol=1e-14)
    # off-diagonal blocks are negated
    x = random_ip(gr22, rng)
    np.testing.assert_allclose(theta_g(x, gr22), -x, atol=1e-14)
    pair = random_point(group2, rng)
    swapped = theta_g(pair, group2)
    np.testing.assert_array_equal(swapped[0], pair[1])
    np.testing.assert_array_equal(swapped[1], pair[0])


def test_theta_stabilizes_triangles(gr22):
    # conjugation by the block sign matrix preserves both strict triangles
    n = gr22.matrix_dim
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            e = np.zeros((n, n), dtype=complex)
            e[i, j] = 1.0
            image = theta_g(e, gr22)
            assert abs(image[i, j]) == 1.0 and np.count_nonzero(image) == 1


def test_cartan_embed_identity(cp1):
    np.testing.assert_allclose(
        cartan_embed(np.eye(2, dtype=complex), cp1), np.eye(2), atol=1e-15
    )


def test_cartan_embed_cp1_closed_form(cp1):
    z = 0.3 + 0.6j
    phi = cartan_embed(canonical_rep(np.array([[z]]), cp1), cp1)
    a = abs(z) ** 2
    expected = np.array([[1 - a, -2 * np.conj(z)], [2 * z, 1 - a]]) / (1 + a)
    np.testing.assert_allclose(phi, expected, atol=1e-14)


def test_cartan_embed_cp2_closed_form(cp2):
    z1, z2 = 0.4 - 0.2j, 0.55 + 0.35j
    u = canonical_rep(np.array([[z1], [z2]]), cp2)
    phi = cartan_embed(u, cp2)
    a1, a2 = abs(z1) ** 2, abs(z2) ** 2
    rho2 = a1 + a2
    expected = np.array(
        [
            [1 - rho2, -2 * np.conj(z1), -2 * np.conj(z2)],
            [2 * z1, 1 - a1 + a2, -2 * z1 * np.conj(z2)],
            [2 * z2, -2 * np.conj(z1) * z2, 1 + a1 - a2],
        ]
    ) / (1 + rho2)
    np.testing.assert_allclose(phi, expected, atol=1e-13)


@pytest.mark.parametrize("preset_name", ["cp1", "cp2", "gr:2,2", "group:su2"])
def test_cartan_embed_symmetry_and_coset_invariance(preset_name, rng):
    preset = parse_preset(preset_name)
    for _ in range(25):
        u = random_point(preset, rng)
        phi = cartan_embed(u, preset)
        if isinstance(phi, tuple):
            sym = elem_norm(
                (
                    phi[0].conj().T - theta_g(phi, preset)[0],
                    phi[1].conj().T - theta_g(phi, preset)[1],
                )
            )
            unit = np.linalg.norm(phi[0] @ phi[0].conj().T - np.eye(preset.n))
            k = random_stabilizer(preset, rng)
            moved = cartan_embed((u[0] @ k[0], u[1] @ k[1]), preset)
            coset = elem_norm((moved[0] - phi[0], moved[1] - phi[1]))
        else:
            sym = np.linalg.norm(phi.conj().T - theta_g(phi, preset))
            unit = np.linalg.norm(phi @ phi.conj().T - np.eye(preset.matrix_dim))
            moved = cartan_embed(u @ random_stabilizer(preset, rng), preset)
            coset = np.linalg.norm(moved - phi)
        assert sym <= 1e-10
        assert unit <= 1e-10
        assert coset <= 1e-10


def test_canonical_rep_origin(cp2):
    np.testing.assert_allclose(
        canonical_rep(np.zeros((2, 1)), cp2), np.eye(3), atol=1e-15
    )


def test_canonical_rep_properties(rng, gr22):
    for _ in range(25):
        z = random_chart(gr22, rng)
        u = canonical_rep(z, gr22)
        dim = gr22.matrix_dim
        assert np.linalg.norm(u @ u.conj().T - np.eye(dim)) <= 1e-11
        assert abs(np.linalg.det(u) - 1) <= 1e-11
        # positive definite diagonal blocks
        m = gr22.m
        for block in (u[:m, :m], u[m:, m:]):
            assert np.all(np.linalg.eigvalsh(0.5 * (block + block.conj().T)) > 0)
        # the first m columns span the graph of z
        span = u[:, :m]
        graph = np.vstack([np.eye(m), z])
        stacked = np.hstack([span, graph])
        assert np.linalg.matrix_rank(stacked, tol=1e-10) == m
        np.testing.assert_allclose(chart_point(u, gr22), z, atol=1e-10)


def test_project_ip_cases(rng, gr22, group2):
    x = random_ip(gr22, rng)
    np.testing.assert_allclose(project_ip(x, gr22), x, atol=1e-13)
    # even anti-Hermitian part dies
    k_blk = np.zeros((4, 4), dtype=complex)
    k_blk[:2, :2] = [[1j, 0.3 + 0.1j], [-0.3 + 0.1j, -2j]]
    k_blk[2:, 2:] = [[0.5j, 0], [0, 0.5j]]
    np.testing.assert_allclose(project_ip(k_blk, gr22), 0 * k_blk, atol=1e-14)
    herm = complex_normal(rng, (4, 4))
    herm = herm + herm.conj().T
    np.testing.assert_allclose(project_ip(herm, gr22), 0 * herm, atol=1e-13)
    # pairs: the anti-diagonal embedding is fixed
    xp = random_ip(group2, rng)
    got = project_ip(xp, group2)
    assert elem_norm((got[0] - xp[0], got[1] - xp[1])) <= 1e-13


def test_projection_partition(rng, gr22):
    z = complex_normal(rng, (4, 4))
    z -= (np.trace(z) / 4) * np.eye(4)
    total = project_ip(z, gr22) + project_k(z, gr22) + project_iu(z, gr22)
    np.testing.assert_allclose(total, z, atol=1e-13)


def test_group_iso(rng):
    k = random_special_unitary(2, rng)
    np.testing.assert_allclose(group_iso(k, k), np.eye(2), atol=1e-13)
    np.testing.assert_allclose(group_iso(k, np.eye(2, dtype=complex)), k, atol=1e-14)
    g = random_special_unitary(2, rng)
    np.testing.assert_allclose(group_iso(k @ g, k @ g), np.eye(2), atol=1e-13)
    k2 = random_special_unitary(2, rng)
    np.testing.assert_allclose(group_iso(k @ g, k2 @ g), group_iso(k, k2), atol=1e-13)


def test_bases_are_orthonormal(gr22, group2):
    for basis in (su_basis(3), torus_basis(4), ip_basis(gr22)):
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                expected = 1.0 if i == j else 0.0
                assert abs(np.real(np.vdot(a, b)) - expected) < 1e-12
    pair_basis = ip_basis(group2)
    assert len(pair_basis) == group2.dim_ip
    for i, a in enumerate(pair_basis):
        for j, b in enumerate(pair_basis):
            got = np.real(np.vdot(a[0], b[0]) + np.vdot(a[1], b[1]))
            assert abs(got - (1.0 if i == j else 0.0)) < 1e-12


def test_ip_basis_lives_in_ip(gr22, group2):
    for preset in (gr22, group2):
        for x in ip_basis(preset):
            moved = theta_g(x, preset)
            if isinstance(x, tuple):
                assert elem_norm((moved[0] + x[0], moved[1] + x[1])) < 1e-14
            else:
                assert np.linalg.norm(moved + x) < 1e-14
                assert np.linalg.norm(x + x.conj().T) < 1e-14
