"""Birkhoff-layer classification of coset points, the symmetric leaf
factorization, the acting sub-torus of a layer, and the enumeration of
top-layer components in the inner case.

The Cartan image of a coset point is factored with the structural permuted
LDU; the signed permutation identifies the layer.  On a successful
factorization the upper unipotent factor must equal the involution applied to
the conjugate transpose of the lower one (the factor-level restatement of
phi* = theta(phi)); a violation signals a factorization or preset bug and is
raised, never repaired.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionGuard, SymmetryViolation
from .lie import proj_u
from .linalg import birkhoff_factor, signed_permutation_matrix
from .poisson import matrix_of_omega
from .symspace import (
    KIND_GROUP,
    SymmetricSpacePreset,
    adjoint_act,
    cartan_embed,
    elem_real_inner,
    group_iso,
    ip_basis,
    is_pair,
    project_ip,
    theta_g,
    torus_basis,
)

SignedPermutation = tuple[tuple[int, ...], tuple[int, ...]]

_NULLSPACE_TOL = 1e-10


@dataclass(frozen=True)
class LeafFactorization:
    """Factors of phi(uK) = l @ W @ h @ theta(l*), with the magnitude and
    logarithm of the diagonal part."""

    l: np.ndarray
    perm: tuple[int, ...]
    signs: tuple[int, ...]
    h: np.ndarray
    abs_h: np.ndarray
    log_abs_h: np.ndarray

    @property
    def w_matrix(self) -> np.ndarray:
        return signed_permutation_matrix(self.perm, self.signs)


def _embedded_image(u, preset: SymmetricSpacePreset) -> np.ndarray:
    """Matrix whose Birkhoff stratum classifies the point: the Cartan image,
    or its single-factor avatar k1 k2^(-1) in the group case."""
    if preset.kind == KIND_GROUP:
        if not is_pair(u):
            raise ValueError("group-case points are pairs of unitaries")
        return group_iso(u[0], u[1])
    return cartan_embed(u, preset)


def birkhoff_layer(u, preset: SymmetricSpacePreset, tol: float = 1e-9) -> SignedPermutation:
    """Signed permutation indexing the Birkhoff layer through the point."""
    factors = birkhoff_factor(_embedded_image(u, preset), tol)
    return factors.perm, factors.signs


def leaf_factorize(u, preset: SymmetricSpacePreset, tol: float = 1e-9) -> LeafFactorization:
    """Factor the Cartan image of a Grassmannian-family point as
    l @ W @ h @ theta(l*)."""
    if preset.kind == KIND_GROUP:
        raise ValueError(
            "leaf factorization applies to the Grassmannian family; classify "
            "group-case points through their single-factor image instead"
        )
    phi = cartan_embed(u, preset)
    factors = birkhoff_factor(phi, tol)
    scale = max(1.0, float(np.linalg.norm(phi)))
    expected_upper = theta_g(factors.l.conj().T, preset)
    sym_defect = float(np.linalg.norm(factors.u_plus - expected_upper))
    if sym_defect > max(tol, 1e-9) * scale:
        raise SymmetryViolation(
            f"upper factor differs from theta(l*) by {sym_defect:.3e}"
        )
    w = factors.w_matrix
    membership_defect = float(
        np.linalg.norm(
            theta_g(w.conj().T @ factors.h @ w, preset) - factors.h.conj().T
        )
    )
    if membership_defect > max(tol, 1e-9) * scale:
        raise SymmetryViolation(
            f"diagonal factor fails the layer membership identity by {membership_defect:.3e}"
        )
    h_diag = np.diag(factors.h)
    abs_diag = np.abs(h_diag)
    return LeafFactorization(
        l=factors.l,
        perm=factors.perm,
        signs=factors.signs,
        h=factors.h,
        abs_h=np.diag(abs_diag.astype(complex)),
        log_abs_h=np.diag(np.log(abs_diag).astype(complex)),
    )


def torus_tw(w: SignedPermutation, preset: SymmetricSpacePreset) -> list[np.ndarray]:
    """Orthonormal basis of the fixed subspace of Ad(W) o theta on the purely
    imaginary traceless diagonals, via the nullspace of the operator minus
    the identity."""
    if preset.kind == KIND_GROUP:
        raise ValueError("the layer torus is computed for the Grassmannian family")
    perm, signs = w
    w_mat = signed_permutation_matrix(perm, signs)
    basis = torus_basis(preset.matrix_dim)
    dim = len(basis)
    op = np.zeros((dim, dim))
    for r, xi in enumerate(basis):
        moved = w_mat @ theta_g(xi, preset) @ w_mat.conj().T
        for s, eta in enumerate(basis):
            op[s, r] = elem_real_inner(eta, moved)
    _, svals, vt = np.linalg.svd(op - np.eye(dim))
    keep = int(np.sum(svals > _NULLSPACE_TOL))
    null_vectors = vt[keep:]
    out = []
    for vec in null_vectors:
        xi = sum(c * b for c, b in zip(vec, basis))
        diag = np.imag(np.diag(xi))
        # scale to unit peak entry, sign fixed by the first nonzero entry
        peak = np.max(np.abs(diag))
        lead = diag[np.nonzero(np.abs(diag) > 1e-12 * peak)[0][0]]
        out.append(xi * (np.sign(lead) / peak))
    return out


def order_two_torus_elements(preset: SymmetricSpacePreset, guard: int = 12) -> list[np.ndarray]:
    """Diagonal sign matrices indexing the top-layer components in the inner
    case: patterns with equally many -1 entries in the two involution blocks
    (exactly the order-two torus points lying on the embedded space)."""
    if not preset.is_inner:
        raise ValueError("component enumeration applies to inner presets only")
    dim = preset.matrix_dim
    if dim > guard:
        raise DimensionGuard(f"dimension {dim} exceeds the enumeration guard {guard}")
    out = []
    for pattern in itertools.product((1.0, -1.0), repeat=dim):
        eps = np.array(pattern)
        if np.sum(eps[: preset.m] < 0) == np.sum(eps[preset.m:] < 0):
            out.append(np.diag(eps.astype(complex)))
    return out


def pi_sharp_span(u, preset: SymmetricSpacePreset) -> np.ndarray:
    """Coordinates (in the odd-subspace basis) of the image of the bivector's
    anchor map at u; columns span the leaf tangent space."""
    return matrix_of_omega(u, preset)


def orbit_direction_span(u, preset: SymmetricSpacePreset) -> np.ndarray:
    """Coordinates of the projected noncompact-orbit directions at u, computed
    through the compact-form projection instead of the Hilbert transform."""
    basis = ip_basis(preset)
    cols = np.zeros((len(basis), len(basis)))
    for r, x in enumerate(basis):
        lifted = adjoint_act(u, x, preset)
        if is_pair(lifted):
            moved = (proj_u(1j * lifted[0]), proj_u(1j * lifted[1]))
            back = (u[0].conj().T @ moved[0] @ u[0], u[1].conj().T @ moved[1] @ u[1])
        else:
            moved = proj_u(1j * lifted)
            back = u.conj().T @ moved @ u
        projected = project_ip(back, preset)
        for s, e_s in enumerate(basis):
            cols[s, r] = elem_real_inner(e_s, projected)
    return cols
