"""Symmetric-space presentations, eigenspace projections, the Cartan
embedding, and coordinate charts with canonical representatives.

Two families are supported:

* Grassmannian(m, n): the special unitary group of size m + n modulo the
  block-diagonal stabilizer of the plane spanned by the first m coordinates.
  The involution is conjugation by J = diag(I_m, -I_n); projective space is
  the m = 1 case.
* GroupCase(n): the product of two copies of the special unitary group of
  size n modulo the diagonal.  Elements are stored as pairs of n x n
  matrices; the involution swaps the pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import inv_sqrt_hpd

KIND_GRASSMANNIAN = "grassmannian"
KIND_GROUP = "group"

# Either a single square complex matrix or a pair of them (group case).
Element = "np.ndarray | tuple[np.ndarray, np.ndarray]"


@dataclass(frozen=True)
class SymmetricSpacePreset:
    """Immutable descriptor of a symmetric-space presentation."""

    kind: str
    m: int
    n: int

    @property
    def matrix_dim(self) -> int:
        return self.m + self.n if self.kind == KIND_GRASSMANNIAN else self.n

    @property
    def dim_u(self) -> int:
        d = self.matrix_dim
        return d * d - 1 if self.kind == KIND_GRASSMANNIAN else 2 * (d * d - 1)

    @property
    def dim_k(self) -> int:
        if self.kind == KIND_GRASSMANNIAN:
            return self.m * self.m + self.n * self.n - 1
        return self.n * self.n - 1

    @property
    def dim_ip(self) -> int:
        return self.dim_u - self.dim_k

    @property
    def theta_matrix(self) -> np.ndarray:
        if self.kind != KIND_GRASSMANNIAN:
            raise ValueError("theta_matrix is defined for the Grassmannian family only")
        return np.diag(np.concatenate([np.ones(self.m), -np.ones(self.n)])).astype(complex)

    @property
    def label(self) -> str:
        if self.kind == KIND_GRASSMANNIAN:
            if self.m == 1:
                return f"cp{self.n}" if self.n <= 9 else f"cpn:{self.n}"
            return f"gr:{self.m},{self.n}"
        return f"group:su{self.n}"

    @property
    def is_inner(self) -> bool:
        return self.kind == KIND_GRASSMANNIAN


def grassmannian(m: int, n: int) -> SymmetricSpacePreset:
    if m < 1 or n < 1:
        raise ValueError("block sizes must be positive")
    return SymmetricSpacePreset(KIND_GRASSMANNIAN, m, n)


def projective_space(n: int) -> SymmetricSpacePreset:
    return grassmannian(1, n)


def group_case(n: int) -> SymmetricSpacePreset:
    if n < 2:
        raise ValueError("group case needs factor size at least 2")
    return SymmetricSpacePreset(KIND_GROUP, 0, n)


def parse_preset(spec: str) -> SymmetricSpacePreset:
    """Parse preset strings: gr:m,n | cp1 | cp2 | cpn:n | group:su2."""
    spec = spec.strip().lower()
    if spec.startswith("gr:"):
        parts = spec[3:].split(",")
        if len(parts) != 2:
            raise ValueError(f"malformed Grassmannian preset {spec!r}")
        return grassmannian(int(parts[0]), int(parts[1]))
    if spec.startswith("cpn:"):
        return projective_space(int(spec[4:]))
    if spec.startswith("cp") and spec[2:].isdigit():
        return projective_space(int(spec[2:]))
    if spec.startswith("group:su"):
        return group_case(int(spec[8:]))
    raise ValueError(f"unknown preset {spec!r}")


def is_pair(g) -> bool:
    return isinstance(g, tuple)


def theta_g(g, preset: SymmetricSpacePreset):
    """The involution: conjugation by J on matrices, factor swap on pairs.

    Applies verbatim to group elements and Lie algebra elements.
    """
    if preset.kind == KIND_GROUP:
        if not is_pair(g):
            raise ValueError("group-case elements are pairs of matrices")
        return (g[1], g[0])
    j = preset.theta_matrix
    return j @ np.asarray(g, dtype=complex) @ j


def cartan_embed(u, preset: SymmetricSpacePreset):
    """Totally geodesic embedding of the coset space: u K -> u theta(u)^(-1).

    The image satisfies phi* = theta(phi) and is unitary.
    """
    if preset.kind == KIND_GROUP:
        k1, k2 = u
        return (k1 @ k2.conj().T, k2 @ k1.conj().T)
    u = np.asarray(u, dtype=complex)
    return u @ theta_g(u, preset).conj().T


def canonical_rep(z: np.ndarray, preset: SymmetricSpacePreset) -> np.ndarray:
    """Unique coset representative with Hermitian positive definite diagonal
    blocks for the plane graphed by the n x m chart matrix z.

    Built from the inverse square roots of I + z* z and I + z z*.
    """
    if preset.kind != KIND_GRASSMANNIAN:
        raise ValueError("canonical representatives exist for the Grassmannian family only")
    z = np.asarray(z, dtype=complex)
    if z.ndim == 0:
        z = z.reshape(1, 1)
    if z.ndim == 1:
        z = z.reshape(-1, 1)
    if z.shape != (preset.n, preset.m):
        raise ValueError(f"chart matrix must be {preset.n} x {preset.m}, got {z.shape}")
    a = inv_sqrt_hpd(np.eye(preset.m) + z.conj().T @ z)
    d = inv_sqrt_hpd(np.eye(preset.n) + z @ z.conj().T)
    return np.block([[a, -a @ z.conj().T], [z @ a, d]])


def chart_point(u: np.ndarray, preset: SymmetricSpacePreset) -> np.ndarray:
    """Chart matrix of the plane spanned by the first m columns of u."""
    if preset.kind != KIND_GRASSMANNIAN:
        raise ValueError("charts exist for the Grassmannian family only")
    m = preset.m
    return np.asarray(u)[m:, :m] @ np.linalg.inv(np.asarray(u)[:m, :m])


def project_ip(z, preset: SymmetricSpacePreset):
    """Component along the odd anti-Hermitian subspace in the splitting of
    the complexified algebra: (z + theta(z*) - (z + theta(z*))*) / 4."""
    if preset.kind == KIND_GROUP:
        s_theta = theta_g((z[0].conj().T, z[1].conj().T), preset)
        w = (z[0] + s_theta[0], z[1] + s_theta[1])
        return (0.25 * (w[0] - w[0].conj().T), 0.25 * (w[1] - w[1].conj().T))
    z = np.asarray(z, dtype=complex)
    w = z + theta_g(z.conj().T, preset)
    return 0.25 * (w - w.conj().T)


def project_k(z, preset: SymmetricSpacePreset):
    """Component in the stabilizer subalgebra (even anti-Hermitian part)."""
    if preset.kind == KIND_GROUP:
        a = (0.5 * (z[0] - z[0].conj().T), 0.5 * (z[1] - z[1].conj().T))
        at = theta_g(a, preset)
        return (0.5 * (a[0] + at[0]), 0.5 * (a[1] + at[1]))
    z = np.asarray(z, dtype=complex)
    a = 0.5 * (z - z.conj().T)
    return 0.5 * (a + theta_g(a, preset))


def project_iu(z, preset: SymmetricSpacePreset):
    """Hermitian part (the i-times-compact component)."""
    if preset.kind == KIND_GROUP:
        return (0.5 * (z[0] + z[0].conj().T), 0.5 * (z[1] + z[1].conj().T))
    z = np.asarray(z, dtype=complex)
    return 0.5 * (z + z.conj().T)


def group_iso(k1: np.ndarray, k2: np.ndarray) -> np.ndarray:
    """Identification of the group case with a single factor: (k1, k2) -> k1 k2^(-1)."""
    return np.asarray(k1, dtype=complex) @ np.asarray(k2, dtype=complex).conj().T


@dataclass(frozen=True)
class TangentClass:
    """A (co)tangent vector to the coset space: a unitary representative u and
    an element x of the odd anti-Hermitian subspace."""

    u: "np.ndarray | tuple[np.ndarray, np.ndarray]"
    x: "np.ndarray | tuple[np.ndarray, np.ndarray]"


# ---------------------------------------------------------------------------
# element helpers (work on single matrices and on group-case pairs)


def elem_add(x, y):
    if is_pair(x):
        return (x[0] + y[0], x[1] + y[1])
    return x + y


def elem_scale(c, x):
    if is_pair(x):
        return (c * x[0], c * x[1])
    return c * x


def elem_norm(x) -> float:
    if is_pair(x):
        return float(np.sqrt(np.linalg.norm(x[0]) ** 2 + np.linalg.norm(x[1]) ** 2))
    return float(np.linalg.norm(x))


def elem_real_inner(x, y) -> float:
    """Real Frobenius inner product Re tr(x* y), summed over pair components."""
    if is_pair(x):
        return float(np.real(np.vdot(x[0], y[0]) + np.vdot(x[1], y[1])))
    return float(np.real(np.vdot(x, y)))


def trace_pairing(x, y) -> complex:
    """Invariant form tr(x y), summed over pair components."""
    if is_pair(x):
        return complex(np.trace(x[0] @ y[0]) + np.trace(x[1] @ y[1]))
    return complex(np.trace(x @ y))


def adjoint_act(u, x, preset: SymmetricSpacePreset):
    """Ad(u) x = u x u^(-1) for unitary u (componentwise on pairs)."""
    if preset.kind == KIND_GROUP:
        return (u[0] @ x[0] @ u[0].conj().T, u[1] @ x[1] @ u[1].conj().T)
    return u @ x @ np.asarray(u).conj().T


def unitary_exp(x):
    """exp(x) for anti-Hermitian x via the eigendecomposition of i x."""
    if is_pair(x):
        return (unitary_exp(x[0]), unitary_exp(x[1]))
    x = np.asarray(x, dtype=complex)
    herm = 1j * x
    herm = 0.5 * (herm + herm.conj().T)
    w, q = np.linalg.eigh(herm)
    return (q * np.exp(-1j * w)) @ q.conj().T


# ---------------------------------------------------------------------------
# bases


def su_basis(n: int) -> list[np.ndarray]:
    """Orthonormal (Frobenius) basis of the anti-Hermitian traceless n x n
    matrices: rotation/phase pairs off the diagonal, then diagonal phases."""
    basis: list[np.ndarray] = []
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for j in range(n):
        for k in range(j + 1, n):
            a = np.zeros((n, n), dtype=complex)
            a[j, k] = inv_sqrt2
            a[k, j] = -inv_sqrt2
            basis.append(a)
            b = np.zeros((n, n), dtype=complex)
            b[j, k] = 1j * inv_sqrt2
            b[k, j] = 1j * inv_sqrt2
            basis.append(b)
    basis.extend(torus_basis(n))
    return basis


def torus_basis(n: int) -> list[np.ndarray]:
    """Orthonormal basis of the purely imaginary traceless diagonals."""
    basis = []
    for level in range(1, n):
        d = np.zeros(n)
        d[:level] = 1.0
        d[level] = -level
        d /= np.sqrt(level * (level + 1))
        basis.append(1j * np.diag(d).astype(complex))
    return basis


def ip_basis(preset: SymmetricSpacePreset) -> list:
    """Orthonormal (Frobenius) real basis of the odd anti-Hermitian subspace.

    Grassmannian: block off-diagonal matrices built from the elementary
    matrices of the lower-left block and their imaginary twins.  Group case:
    anti-diagonal pairs built from the single-factor basis.
    """
    if preset.kind == KIND_GROUP:
        inv_sqrt2 = 1.0 / np.sqrt(2.0)
        return [(inv_sqrt2 * b, -inv_sqrt2 * b) for b in su_basis(preset.n)]
    m, n = preset.m, preset.n
    dim = m + n
    basis = []
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for r in range(n):
        for c in range(m):
            for val in (1.0, 1.0j):
                x = np.zeros((dim, dim), dtype=complex)
                x[m + r, c] = val * inv_sqrt2
                x[c, m + r] = -np.conj(val) * inv_sqrt2
                basis.append(x)
    return basis
