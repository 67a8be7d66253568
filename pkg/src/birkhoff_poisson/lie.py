"""Triangular splitting of sl(n, C), the Hilbert transform, the invariant
trace form, and the dressing action.

The triangular decomposition is the standard one: strictly lower triangular
matrices, traceless diagonals, strictly upper triangular matrices.  The
compact form consists of the anti-Hermitian traceless matrices; the Cartan
involution -(.)* swaps the strict triangles, which is what makes the
decomposition compatible with it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import iwasawa_factor

TRACELESS_TOL = 1e-10


@dataclass(frozen=True)
class TriangularContext:
    """Size marker for the triangular decomposition of sl(n, C)."""

    n: int


def _check_ctx(z: np.ndarray, ctx: TriangularContext | None) -> None:
    if ctx is not None and z.shape[0] != ctx.n:
        raise ValueError(f"matrix dimension {z.shape[0]} does not match context n = {ctx.n}")


def ensure_traceless(z: np.ndarray, tol: float = TRACELESS_TOL) -> np.ndarray:
    """Re-center a nearly traceless matrix; hard error beyond tolerance."""
    z = np.asarray(z, dtype=complex)
    n = z.shape[0]
    tr = np.trace(z)
    scale = max(1.0, float(np.linalg.norm(z)))
    if abs(tr) > tol * scale:
        raise ValueError(f"matrix is not traceless, |tr| = {abs(tr):.3e}")
    if tr != 0:
        z = z - (tr / n) * np.eye(n)
    return z


def tri_project(
    z: np.ndarray, ctx: TriangularContext | None = None
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split a traceless matrix into (strictly lower, diagonal, strictly upper)."""
    z = ensure_traceless(z)
    _check_ctx(z, ctx)
    z_minus = np.tril(z, -1)
    z_plus = np.triu(z, 1)
    z_h = z - z_minus - z_plus
    return z_minus, z_h, z_plus


def hilbert_transform(z: np.ndarray, ctx: TriangularContext | None = None) -> np.ndarray:
    """-i on the strictly lower part, 0 on the diagonal, +i on the strictly upper part."""
    z_minus, _, z_plus = tri_project(z, ctx)
    return -1j * z_minus + 1j * z_plus


def proj_u(z: np.ndarray, ctx: TriangularContext | None = None) -> np.ndarray:
    """Projection onto the compact form along (strict lower) + (real diagonal).

    Computed as -(Z_+)* + Z_t + Z_+ where Z_t is the anti-Hermitian part of
    the diagonal of Z.  On anti-Hermitian inputs this is the identity, and
    proj_u(i Z) = hilbert_transform(Z) for anti-Hermitian Z.
    """
    _, z_h, z_plus = tri_project(z, ctx)
    z_t = 0.5 * (z_h - z_h.conj().T)
    return -z_plus.conj().T + z_t + z_plus


def trace_form(x: np.ndarray, y: np.ndarray) -> complex:
    """Invariant bilinear form tr(x y) on the defining representation.

    With this normalization the elementary matrices E_jk satisfy
    trace_form(E_jk, E_kj) = 1.
    """
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {y.shape}")
    return complex(np.trace(x @ y))


def dressing_act(u: np.ndarray, g0: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Right action of the complex group on the compact one: the unitary
    Iwasawa factor of u @ g0."""
    u = np.asarray(u, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(u)))
    if np.linalg.norm(u @ u.conj().T - np.eye(u.shape[0])) > 1e-8 * scale:
        raise ValueError("u must be unitary")
    return iwasawa_factor(u @ g0, tol).u
