"""The homogeneous Poisson bivector in equivariant form, the group-case
structures, and the local coordinate tensors with their cross-checks.

Equivariant side.  At a unitary coset representative u the bivector acts on
cotangent classes represented by odd anti-Hermitian matrices X, Y through a
skew operator: conjugate X up by u, apply the Hilbert transform, conjugate
back down and project to the odd subspace; the value is the invariant trace
form of the result against Y.

Coordinate side.  Explicit tensors in affine charts: the Grassmannian chart
formula (an R-linear operator L_Z followed by a trace pairing), its
projective-space specialization with explicit holomorphic/antiholomorphic
coefficients, the dimension-two symplectic form on the open leaf, the
one-dimensional family (homogeneous, projected Poisson-Lie, and
Kostant-Kirillov-Souriau structures), and the real-form chart of the
alternative presentation of the two-sphere.

A finite-difference chart-to-equivariant transfer ties the two sides
together; a single measured calibration constant certifies agreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidTangent, OnDegeneracyLocus
from .lie import hilbert_transform, trace_form
from .symspace import (
    KIND_GROUP,
    SymmetricSpacePreset,
    adjoint_act,
    canonical_rep,
    elem_norm,
    elem_real_inner,
    grassmannian,
    ip_basis,
    is_pair,
    project_ip,
    theta_g,
    trace_pairing,
)

REALITY_TOL = 1e-10
CHART_FD_STEP = 1e-6
JACOBI_FD_STEP = 1e-5


def _adjoint_inv(u, x, preset: SymmetricSpacePreset):
    """Ad(u^(-1)) x for unitary u."""
    if preset.kind == KIND_GROUP:
        return (u[0].conj().T @ x[0] @ u[0], u[1].conj().T @ x[1] @ u[1])
    return np.asarray(u).conj().T @ x @ u


def _hilbert(x, preset: SymmetricSpacePreset):
    if preset.kind == KIND_GROUP:
        return (hilbert_transform(x[0]), hilbert_transform(x[1]))
    return hilbert_transform(x)


def _validate_ip(x, preset: SymmetricSpacePreset, tol: float = REALITY_TOL) -> None:
    comps = x if is_pair(x) else (x,)
    scale = max(1.0, elem_norm(x))
    for comp in comps:
        if np.linalg.norm(comp + comp.conj().T) > tol * scale:
            raise InvalidTangent("tangent representative is not anti-Hermitian")
        if abs(np.trace(comp)) > tol * scale:
            raise InvalidTangent("tangent representative is not traceless")
    xt = theta_g(x, preset)
    defect = elem_norm(
        (xt[0] + x[0], xt[1] + x[1]) if is_pair(x) else xt + x
    )
    if defect > tol * scale:
        raise InvalidTangent("tangent representative is not odd under the involution")


def omega_apply(u, x, preset: SymmetricSpacePreset, validate: bool = True):
    """Skew operator of the bivector at u: project Ad(u^(-1)) H Ad(u) x to the
    odd anti-Hermitian subspace."""
    if validate:
        _validate_ip(x, preset)
    lifted = adjoint_act(u, x, preset)
    transformed = _hilbert(lifted, preset)
    return project_ip(_adjoint_inv(u, transformed, preset), preset)


def pi_eval(u, x, y, preset: SymmetricSpacePreset, validate: bool = True) -> float:
    """Bivector value on the cotangent classes [u, x], [u, y]."""
    if validate:
        _validate_ip(y, preset)
    val = trace_pairing(omega_apply(u, x, preset, validate=validate), y)
    scale = max(1.0, elem_norm(x) * elem_norm(y))
    if abs(val.imag) > REALITY_TOL * scale:
        raise InvalidTangent(f"pairing has imaginary residue {val.imag:.3e}")
    return float(val.real)


def matrix_of_omega(u, preset: SymmetricSpacePreset) -> np.ndarray:
    """Real matrix of the skew operator on the orthonormal basis of the odd
    anti-Hermitian subspace."""
    basis = ip_basis(preset)
    mat = np.zeros((len(basis), len(basis)))
    for r, e_r in enumerate(basis):
        image = omega_apply(u, e_r, preset, validate=False)
        for s, e_s in enumerate(basis):
            mat[s, r] = elem_real_inner(e_s, image)
    return mat


@dataclass(frozen=True)
class BivectorOperator:
    """Base point representative plus the matrix of the skew operator."""

    u: "np.ndarray | tuple[np.ndarray, np.ndarray]"
    matrix: np.ndarray

    @classmethod
    def at(cls, u, preset: SymmetricSpacePreset) -> "BivectorOperator":
        return cls(u=u, matrix=matrix_of_omega(u, preset))


def pi_rank(u, preset: SymmetricSpacePreset, tol: float = 1e-9) -> int:
    """Numerical rank of the bivector at u at the given absolute threshold."""
    return int(np.linalg.matrix_rank(matrix_of_omega(u, preset), tol=tol))


# ---------------------------------------------------------------------------
# group case: Poisson-Lie and homogeneous structures on a single factor


def su2_frame() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The (H, X, Y) basis of the 2 x 2 anti-Hermitian traceless matrices."""
    h = np.array([[1j, 0], [0, -1j]])
    x = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)
    y = np.array([[0, 1j], [1j, 0]])
    return h, x, y


def su2_from_sphere(a: complex, b: complex) -> np.ndarray:
    return np.array([[a, b], [-np.conj(b), np.conj(a)]])


def _check_compact(p: np.ndarray) -> None:
    scale = max(1.0, float(np.linalg.norm(p)))
    if np.linalg.norm(p + p.conj().T) > REALITY_TOL * scale or abs(np.trace(p)) > REALITY_TOL * scale:
        raise InvalidTangent("argument must be anti-Hermitian and traceless")


def pi_lw_group(k: np.ndarray, p: np.ndarray, q: np.ndarray) -> float:
    """Poisson-Lie group structure pairing (right trivialization):
    <(Ad(k) o H o Ad(k^-1) - H)(p), q>."""
    _check_compact(p)
    _check_compact(q)
    k = np.asarray(k, dtype=complex)
    moved = k @ hilbert_transform(k.conj().T @ p @ k) @ k.conj().T
    val = trace_form(moved - hilbert_transform(p), q)
    if abs(val.imag) > REALITY_TOL * max(1.0, abs(val.real), 1.0):
        raise InvalidTangent(f"pairing has imaginary residue {val.imag:.3e}")
    return float(val.real)


def pi_el_group(k: np.ndarray, p: np.ndarray, q: np.ndarray) -> float:
    """Homogeneous structure on the group itself (right trivialization):
    <(H + Ad(k) o H o Ad(k^-1))(p), q>."""
    _check_compact(p)
    _check_compact(q)
    k = np.asarray(k, dtype=complex)
    moved = k @ hilbert_transform(k.conj().T @ p @ k) @ k.conj().T
    val = trace_form(hilbert_transform(p) + moved, q)
    if abs(val.imag) > REALITY_TOL * max(1.0, abs(val.real), 1.0):
        raise InvalidTangent(f"pairing has imaginary residue {val.imag:.3e}")
    return float(val.real)


def su2_el_coefficients(k: np.ndarray) -> tuple[float, float, float]:
    """Wedge coefficients (X^Y, Y^H, H^X) of the homogeneous structure on the
    2 x 2 unitary group in the right trivialization.

    The basis elements have tr(e^2) = -2, and the wedge-to-pairing factor is
    -2, so each coefficient is minus half the raw pairing value.
    """
    h, x, y = su2_frame()
    return (
        -0.5 * pi_el_group(k, x, y),
        -0.5 * pi_el_group(k, y, h),
        -0.5 * pi_el_group(k, h, x),
    )


def su2_lw_coefficients(k: np.ndarray) -> tuple[float, float, float]:
    """Wedge coefficients (X^Y, Y^H, H^X) of the Poisson-Lie structure in the
    left trivialization (the conventional display for this group).

    Left and right trivializations of a multiplicative bivector differ by
    inversion of the base point and a sign, so this evaluates the raw pairing
    at k^(-1) with the compensating half factor.
    """
    h, x, y = su2_frame()
    kinv = np.asarray(k, dtype=complex).conj().T
    return (
        0.5 * pi_lw_group(kinv, x, y),
        0.5 * pi_lw_group(kinv, y, h),
        0.5 * pi_lw_group(kinv, h, x),
    )


def su2_el_matrix(k: np.ndarray) -> np.ndarray:
    """Raw pairing values of the homogeneous group structure on (H, X, Y)."""
    frame = su2_frame()
    mat = np.zeros((3, 3))
    for r, e_r in enumerate(frame):
        for s, e_s in enumerate(frame):
            if r != s:
                mat[r, s] = pi_el_group(k, e_r, e_s)
    return mat


# ---------------------------------------------------------------------------
# local coordinate tensors


def _strict_upper(m: np.ndarray) -> np.ndarray:
    return np.triu(m, 1)


def grassmann_l_operator(z: np.ndarray, v: np.ndarray) -> np.ndarray:
    """The R-linear chart operator applied to a cotangent representative.

    z is the n x m chart matrix, v an m x n cotangent representative.  The
    strict-upper-triangular corrections carry one factor of z* on the outside
    (left for the n x n bracket, right for the m x m bracket); each bracket is
    completed to a Hermitian matrix by adding its own conjugate transpose.
    """
    z = np.asarray(z, dtype=complex)
    v = np.asarray(v, dtype=complex)
    zs = z.conj().T
    t1 = v - zs @ z @ v @ z @ zs
    b2 = _strict_upper(z @ v - v.conj().T @ zs)
    t2 = zs @ (b2 + b2.conj().T)
    b3 = _strict_upper(zs @ v.conj().T - v @ z)
    t3 = (b3 + b3.conj().T) @ zs
    return t1 + t2 - t3


def grassmann_local_pi(z: np.ndarray, v: np.ndarray, w: np.ndarray) -> float:
    """Chart value of the bivector on cotangent representatives v, w:
    i [ tr((L_z v)* w) - tr((L_z v) w*) ]."""
    lzv = grassmann_l_operator(z, v)
    w = np.asarray(w, dtype=complex)
    val = 1j * (np.trace(lzv.conj().T @ w) - np.trace(lzv @ w.conj().T))
    return float(val.real)


@dataclass(frozen=True)
class CoordCoefficients:
    """Holomorphic-index coefficient matrices of a coordinate bivector.

    ``mixed[j, k]`` is the partial_j ^ conj(partial_k) coefficient and
    ``holo[j, k]`` the partial_j ^ partial_k coefficient; the antiholomorphic
    blocks follow by conjugation (the tensor is real).
    """

    mixed: np.ndarray
    holo: np.ndarray

    def complex_matrix(self) -> np.ndarray:
        return np.block(
            [[self.holo, self.mixed], [np.conj(self.mixed), np.conj(self.holo)]]
        )


def cpn_coeffs(zvec: np.ndarray) -> CoordCoefficients:
    """Projective-space chart coefficients.

    Diagonal mixed coefficients are -i S_j with
    S_j = 1 + sum_{k<j} |z_k|^2 - |z_j|^2 ||z||^2 - sum_{k>j} |z_k|^2;
    off-diagonal mixed entries are i z_j conj(z_k) ||z||^2 and the doubly
    holomorphic entries are -i z_j z_k (upper triangle, antisymmetrized).
    """
    z = np.asarray(zvec, dtype=complex).reshape(-1)
    n = z.size
    mods = np.abs(z) ** 2
    rho2 = float(np.sum(mods))
    mixed = np.zeros((n, n), dtype=complex)
    holo = np.zeros((n, n), dtype=complex)
    for j in range(n):
        s_j = 1.0 + np.sum(mods[:j]) - mods[j] * rho2 - np.sum(mods[j + 1:])
        mixed[j, j] = -1j * s_j
        for k in range(n):
            if k == j:
                continue
            mixed[j, k] = 1j * z[j] * np.conj(z[k]) * rho2
            holo[j, k] = (-1j if j < k else 1j) * z[j] * z[k]
    return CoordCoefficients(mixed=mixed, holo=holo)


def coord_pi_value(coeffs: CoordCoefficients, v: np.ndarray, w: np.ndarray) -> float:
    """Evaluate a coordinate bivector on covectors given by their holomorphic
    component vectors."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    w = np.asarray(w, dtype=complex).reshape(-1)
    val = (
        v @ coeffs.holo @ w
        + v @ coeffs.mixed @ np.conj(w)
        + np.conj(v) @ np.conj(coeffs.mixed) @ w
        + np.conj(v) @ np.conj(coeffs.holo) @ np.conj(w)
    )
    return float(np.real(val))


@dataclass(frozen=True)
class Cp2Symplectic:
    """Symplectic form on the open leaf of the two-dimensional projective
    space, as d z ^ d conj(z) coefficient matrices, plus the degeneracy
    polynomial value p."""

    mixed: np.ndarray
    holo: np.ndarray
    p: float

    def complex_matrix(self) -> np.ndarray:
        return np.block(
            [[self.holo, self.mixed], [np.conj(self.mixed), np.conj(self.holo)]]
        )


def cp2_degeneracy_p(z1: complex, z2: complex) -> float:
    """p = (1 + |z1|^2 - |z2|^2)(1 - ||z||^2)(1 + ||z||^2)."""
    a1, a2 = abs(z1) ** 2, abs(z2) ** 2
    rho2 = a1 + a2
    return float((1.0 + a1 - a2) * (1.0 - rho2) * (1.0 + rho2))


def cp2_symplectic(z1: complex, z2: complex, tol: float = 1e-9) -> Cp2Symplectic:
    """Coefficients of the symplectic form inverse to the chart bivector.

    Raises OnDegeneracyLocus when |p| <= tol.  The contraction of the
    bivector's complex coefficient matrix with this form's matrix is the
    identity away from the locus.
    """
    p = cp2_degeneracy_p(z1, z2)
    if abs(p) <= tol:
        raise OnDegeneracyLocus(f"degeneracy polynomial p = {p:.3e}")
    a1, a2 = abs(z1) ** 2, abs(z2) ** 2
    rho2 = a1 + a2
    s1 = (1.0 + a1) * (1.0 - rho2)
    s2 = (1.0 - a2) * (1.0 + rho2)
    ip = 1j / p
    mixed = np.array(
        [
            [-ip * s2, -ip * np.conj(z1) * z2 * rho2],
            [-ip * z1 * np.conj(z2) * rho2, -ip * s1],
        ]
    )
    holo = np.array(
        [
            [0.0, -ip * np.conj(z1) * np.conj(z2)],
            [ip * np.conj(z1) * np.conj(z2), 0.0],
        ]
    )
    return Cp2Symplectic(mixed=mixed, holo=holo, p=p)


@dataclass(frozen=True)
class Cp1Family:
    """The three chart coefficients on the projective line: the homogeneous
    structure, the projected Poisson-Lie structure, and the invariant
    Kostant-Kirillov-Souriau structure."""

    evens_lu: complex
    projected_pl: complex
    kks: complex


def cp1_family(z: complex) -> Cp1Family:
    a = abs(z) ** 2
    return Cp1Family(
        evens_lu=-1j * (1.0 - a * a),
        projected_pl=2j * a * (1.0 + a),
        kks=1j * (1.0 + a) ** 2,
    )


def fothlu_w_chart(w: complex) -> complex:
    """Chart coefficient -2i Im(w) (1 + |w|^2) of the real-form presentation
    of the two-sphere."""
    return -2j * float(np.imag(w)) * (1.0 + abs(w) ** 2)


# ---------------------------------------------------------------------------
# coordinate bivectors as real tensors, and the Jacobi residual


def complex_to_reals(z: np.ndarray) -> np.ndarray:
    """Interleave (re, im) of a flat complex vector."""
    z = np.asarray(z, dtype=complex).reshape(-1)
    out = np.empty(2 * z.size)
    out[0::2] = z.real
    out[1::2] = z.imag
    return out


def reals_to_complex(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.size % 2:
        raise ValueError("real coordinate vector must have even length")
    return x[0::2] + 1j * x[1::2]


def _holo_to_real_frame(n: int) -> np.ndarray:
    """Substitution matrix from (partial_z, partial_zbar) to (partial_x, partial_y)."""
    t = np.zeros((2 * n, 2 * n), dtype=complex)
    for j in range(n):
        t[2 * j, j] = 0.5
        t[2 * j + 1, j] = -0.5j
        t[2 * j, n + j] = 0.5
        t[2 * j + 1, n + j] = 0.5j
    return t


def coeffs_real_matrix(coeffs: CoordCoefficients) -> np.ndarray:
    """Real antisymmetric matrix of a coordinate bivector in interleaved
    (re, im) coordinates."""
    n = coeffs.mixed.shape[0]
    t = _holo_to_real_frame(n)
    mat = t @ coeffs.complex_matrix() @ t.T
    assert np.max(np.abs(mat.imag)) < 1e-9 * max(1.0, np.max(np.abs(mat.real)))
    return np.ascontiguousarray(mat.real)


@dataclass(frozen=True)
class CoordBivector:
    """A coordinate bivector: chart kind, real dimension, and accessors for
    the coefficient data and the real antisymmetric matrix at a chart point
    (given in interleaved (re, im) coordinates)."""

    kind: str
    dim_real: int
    real_matrix: Callable[[np.ndarray], np.ndarray]
    complex_coeffs: "Callable[[np.ndarray], CoordCoefficients] | None" = None


def _grassmann_covector_reps(m: int, n: int) -> list[np.ndarray]:
    reps = []
    for r in range(n):
        for c in range(m):
            for val in (0.5, -0.5j):
                e = np.zeros((m, n), dtype=complex)
                e[c, r] = val
                reps.append(e)
    return reps


def coordinate_bivector(kind: str, m: int = 1, n: int = 1, member: str = "evens_lu") -> CoordBivector:
    """Factory for the supported chart bivectors.

    kind: cp1 | cpn | grassmann | fothlu_w | su2 (member selects the cp1
    family element).  su2 uses the raw group pairing matrix on the (H, X, Y)
    frame over the unit-sphere coordinates (re a, im a, re b, im b).
    """
    if kind == "cp1":
        def coeffs_cp1(x: np.ndarray) -> CoordCoefficients:
            z = complex(reals_to_complex(x)[0])
            fam = cp1_family(z)
            val = getattr(fam, member)
            return CoordCoefficients(
                mixed=np.array([[val]], dtype=complex),
                holo=np.zeros((1, 1), dtype=complex),
            )

        return CoordBivector(
            kind="cp1",
            dim_real=2,
            real_matrix=lambda x: coeffs_real_matrix(coeffs_cp1(x)),
            complex_coeffs=coeffs_cp1,
        )
    if kind == "cpn":
        def coeffs_cpn(x: np.ndarray) -> CoordCoefficients:
            return cpn_coeffs(reals_to_complex(x))

        return CoordBivector(
            kind="cpn",
            dim_real=2 * n,
            real_matrix=lambda x: coeffs_real_matrix(coeffs_cpn(x)),
            complex_coeffs=coeffs_cpn,
        )
    if kind == "grassmann":
        reps = _grassmann_covector_reps(m, n)

        def real_matrix(x: np.ndarray) -> np.ndarray:
            z = reals_to_complex(x).reshape(n, m)
            dim = len(reps)
            mat = np.zeros((dim, dim))
            images = [grassmann_l_operator(z, v) for v in reps]
            for a in range(dim):
                for b in range(dim):
                    val = 1j * (
                        np.trace(images[a].conj().T @ reps[b])
                        - np.trace(images[a] @ reps[b].conj().T)
                    )
                    mat[a, b] = val.real
            return mat

        return CoordBivector(kind="grassmann", dim_real=2 * m * n, real_matrix=real_matrix)
    if kind == "fothlu_w":
        def real_matrix(x: np.ndarray) -> np.ndarray:
            w = complex(reals_to_complex(x)[0])
            coeffs = CoordCoefficients(
                mixed=np.array([[fothlu_w_chart(w)]], dtype=complex),
                holo=np.zeros((1, 1), dtype=complex),
            )
            return coeffs_real_matrix(coeffs)

        return CoordBivector(kind="fothlu_w", dim_real=2, real_matrix=real_matrix)
    if kind == "su2":
        def real_matrix(x: np.ndarray) -> np.ndarray:
            a, b = reals_to_complex(x)
            return su2_el_matrix(su2_from_sphere(a, b))

        return CoordBivector(kind="su2", dim_real=4, real_matrix=real_matrix)
    raise ValueError(f"unknown coordinate bivector kind {kind!r}")


def jacobi_residual(bivector: CoordBivector, point: np.ndarray, fd_step: float = JACOBI_FD_STEP) -> float:
    """Max component of the Schouten bracket of the bivector with itself,
    with coefficient derivatives taken by central finite differences."""
    x = np.asarray(point, dtype=float).reshape(-1)
    dim = x.size
    grad = np.empty((dim, dim, dim))
    for d in range(dim):
        step = np.zeros(dim)
        step[d] = fd_step
        grad[d] = (bivector.real_matrix(x + step) - bivector.real_matrix(x - step)) / (2 * fd_step)
    pi_mat = bivector.real_matrix(x)
    worst = 0.0
    for a in range(dim):
        for b in range(a + 1, dim):
            for c in range(b + 1, dim):
                total = 0.0
                for d in range(dim):
                    total += (
                        pi_mat[d, a] * grad[d][b, c]
                        + pi_mat[d, b] * grad[d][c, a]
                        + pi_mat[d, c] * grad[d][a, b]
                    )
                worst = max(worst, abs(total))
    return worst


# ---------------------------------------------------------------------------
# chart-to-equivariant transfer and calibration


def chart_directions(preset: SymmetricSpacePreset) -> list[np.ndarray]:
    """Real coordinate directions of the chart, interleaved (re, im)."""
    dirs = []
    for r in range(preset.n):
        for c in range(preset.m):
            for val in (1.0, 1.0j):
                d = np.zeros((preset.n, preset.m), dtype=complex)
                d[r, c] = val
                dirs.append(d)
    return dirs


def chart_frame(
    preset: SymmetricSpacePreset, z: np.ndarray, fd_step: float = CHART_FD_STEP
) -> tuple[np.ndarray, list[np.ndarray]]:
    """Canonical representative at z and the tangent images of the real
    coordinate directions, as odd anti-Hermitian representatives."""
    u = canonical_rep(z, preset)
    tangents = []
    for d in chart_directions(preset):
        up = canonical_rep(z + fd_step * d, preset)
        um = canonical_rep(z - fd_step * d, preset)
        du = (up - um) / (2.0 * fd_step)
        tangents.append(project_ip(u.conj().T @ du, preset))
    return u, tangents


def chart_covectors(
    preset: SymmetricSpacePreset,
    z: np.ndarray,
    covectors: list[np.ndarray],
    fd_step: float = CHART_FD_STEP,
) -> tuple[np.ndarray, list[np.ndarray]]:
    """Transfer chart cotangent representatives (m x n matrices) to
    equivariant cotangent classes at the canonical representative.

    The chart pairing of a covector v with a tangent direction d is
    2 Re tr(v d); the equivariant class is the trace-form representative of
    the pulled-back functional.
    """
    u, tangents = chart_frame(preset, z, fd_step)
    basis = ip_basis(preset)
    gram = np.zeros((len(basis), len(basis)))
    for r, y_r in enumerate(tangents):
        for s, e_s in enumerate(basis):
            gram[s, r] = float(np.real(trace_pairing(e_s, y_r)))
    dirs = chart_directions(preset)
    out = []
    for v in covectors:
        v = np.asarray(v, dtype=complex)
        pairing = np.array([2.0 * float(np.real(np.trace(v @ d))) for d in dirs])
        coeffs = np.linalg.solve(gram.T, pairing)
        out.append(sum(c * e for c, e in zip(coeffs, basis)))
    return u, out


def chart_pi_eval(
    preset: SymmetricSpacePreset,
    z: np.ndarray,
    v: np.ndarray,
    w: np.ndarray,
    fd_step: float = CHART_FD_STEP,
) -> float:
    """Equivariant bivector value pulled through the chart differential."""
    u, (xv, xw) = chart_covectors(preset, z, [v, w], fd_step)
    return pi_eval(u, xv, xw, preset)


# Fixed reference data for the calibration constant.
_CALIBRATION_Z = np.array([[0.3 + 0.2j]])
_CALIBRATION_V = np.array([[0.7 - 0.4j]])
_CALIBRATION_W = np.array([[-0.25 + 0.55j]])


def calibration_constant(fd_step: float = CHART_FD_STEP) -> float:
    """Ratio of the chart formula to the chart-pulled equivariant value at a
    fixed reference point of the smallest Grassmannian.

    A single constant makes the two agree everywhere; its measured value
    (1.0 under this library's conventions) is reported rather than assumed.
    """
    preset = grassmannian(1, 1)
    local = grassmann_local_pi(_CALIBRATION_Z, _CALIBRATION_V, _CALIBRATION_W)
    equivariant = chart_pi_eval(preset, _CALIBRATION_Z, _CALIBRATION_V, _CALIBRATION_W, fd_step)
    if abs(equivariant) < 1e-8:
        raise ZeroDivisionError("equivariant value at the reference point is degenerate")
    return local / equivariant
