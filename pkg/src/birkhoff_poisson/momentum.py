"""Momentum map of the layer-torus action on symplectic leaves.

The momentum of a torus direction X at a coset point is read off the
triangular factorization of the Cartan image: half the invariant pairing of
i theta(log |h|) against X.  The Hamiltonian property is checked honestly:
the differential of the momentum function is taken by central finite
differences along group-exponential curves, pushed through the bivector's
anchor map, and compared with the action vector field.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidTangent
from .poisson import omega_apply
from .strata import birkhoff_layer, leaf_factorize, torus_tw
from .symspace import (
    KIND_GROUP,
    SymmetricSpacePreset,
    TangentClass,
    elem_norm,
    elem_scale,
    ip_basis,
    project_ip,
    theta_g,
    trace_pairing,
    unitary_exp,
)

_TORUS_TOL = 1e-8


@dataclass(frozen=True)
class MomentumValue:
    """Momentum functional evaluated on a torus basis."""

    value_on_basis: np.ndarray


def _check_torus_direction(x: np.ndarray, preset: SymmetricSpacePreset, w) -> None:
    x = np.asarray(x, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(x)))
    off = x - np.diag(np.diag(x))
    if (
        np.linalg.norm(off) > _TORUS_TOL * scale
        or np.linalg.norm(np.real(np.diag(x))) > _TORUS_TOL * scale
        or abs(np.trace(x)) > _TORUS_TOL * scale
    ):
        raise InvalidTangent("torus directions are purely imaginary traceless diagonals")
    span = torus_tw(w, preset)
    if not span:
        if np.linalg.norm(x) > _TORUS_TOL * scale:
            raise InvalidTangent("the layer torus is trivial; only the zero direction acts")
        return
    # least-squares span membership (the returned basis is not orthonormal)
    cols = np.stack([np.imag(np.diag(b)) for b in span], axis=1)
    target = np.imag(np.diag(x))
    coeffs, *_ = np.linalg.lstsq(cols, target, rcond=None)
    if np.linalg.norm(cols @ coeffs - target) > _TORUS_TOL * scale:
        raise InvalidTangent("direction is not fixed by the layer torus operator")


def moment_eval(u, x: np.ndarray, preset: SymmetricSpacePreset, tol: float = 1e-9) -> float:
    """Momentum of torus direction x at the coset point u:
    <(1/2) i theta(log|h|), x> with h from the leaf factorization."""
    lf = leaf_factorize(u, preset, tol)
    _check_torus_direction(x, preset, (lf.perm, lf.signs))
    val = trace_pairing(0.5j * theta_g(lf.log_abs_h, preset), x)
    return float(val.real)


def moment_on_basis(u, preset: SymmetricSpacePreset, tol: float = 1e-9) -> MomentumValue:
    """Momentum functional on the full torus basis of the point's layer."""
    basis = torus_tw(birkhoff_layer(u, preset, tol), preset)
    return MomentumValue(
        value_on_basis=np.array([moment_eval(u, x, preset, tol) for x in basis])
    )


def torus_vector_field(u, x: np.ndarray, preset: SymmetricSpacePreset) -> TangentClass:
    """Vector field of the torus action at u: the class of minus the
    projected down-conjugated direction."""
    if preset.kind == KIND_GROUP:
        raise ValueError("the torus field is computed for the Grassmannian family")
    down = np.asarray(u).conj().T @ np.asarray(x, dtype=complex) @ np.asarray(u)
    return TangentClass(u=u, x=elem_scale(-1.0, project_ip(down, preset)))


def hamiltonian_residual(
    u,
    x: np.ndarray,
    preset: SymmetricSpacePreset,
    fd_step: float = 1e-5,
    tol: float = 1e-9,
) -> float:
    """Norm of (anchor map applied to d mu_x) minus the action field at u.

    d mu_x is assembled from central finite differences of the momentum along
    exponential curves over an orthonormal basis of the odd subspace; the
    trace-form representative picks up a sign because the form is negative
    definite there.
    """
    basis = ip_basis(preset)
    coeffs = np.zeros(len(basis))
    for r, e_r in enumerate(basis):
        forward = moment_eval(u @ unitary_exp(fd_step * e_r), x, preset, tol)
        backward = moment_eval(u @ unitary_exp(-fd_step * e_r), x, preset, tol)
        coeffs[r] = -(forward - backward) / (2.0 * fd_step)
    dmu = sum(c * e for c, e in zip(coeffs, basis))
    sharp = omega_apply(u, dmu, preset, validate=False)
    field = torus_vector_field(u, x, preset).x
    return float(elem_norm(sharp - field))
