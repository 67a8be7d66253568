"""Dense complex matrix kernels.

Implements the factorizations everything else is built on:

* ``birkhoff_factor``  -- permuted LDU,  g = l @ W @ h @ u_plus  with l lower
  unipotent, W a signed permutation of determinant +1, h diagonal of
  determinant 1 and u_plus upper unipotent.  The permutation is determined
  structurally by the rank pattern of the leading submatrices, not by
  magnitude pivoting, so it identifies the Birkhoff stratum of g.
* ``iwasawa_factor``   -- g = l @ a @ u with l lower unipotent, a positive
  diagonal of determinant 1 and u unitary, via the lower Cholesky factor of
  g g*.
* ``inv_sqrt_hpd``     -- Hermitian inverse square root by eigendecomposition.
* ``polar_factor``     -- A = pos @ unit with pos = (A A*)^(1/2) Hermitian
  positive definite and unit unitary.
* ``principal_minors`` -- determinants of the leading k x k submatrices.

All functions are pure and operate on immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDefinite, SingularInput, StratumAmbiguous

DEFAULT_TOL = 1e-9

# Pivot magnitudes inside (tol / band, tol * band) can be read as either zero
# or nonzero; factorizations refuse to classify them instead of guessing.
AMBIGUITY_BAND = 10.0

# Looseness allowed on the |det g - 1| precondition.
_DET_ONE_TOL = 1e-6


def _as_square(g: np.ndarray) -> np.ndarray:
    g = np.asarray(g, dtype=complex)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {g.shape}")
    if g.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    if not np.all(np.isfinite(g)):
        raise ValueError("matrix entries must be finite")
    return g


def _check_unimodular(g: np.ndarray, tol: float) -> None:
    det = np.linalg.det(g)
    if abs(det) <= max(tol, 1e-300):
        raise SingularInput(f"matrix is singular, |det| = {abs(det):.3e}")
    if abs(det - 1.0) > _DET_ONE_TOL:
        raise SingularInput(f"determinant must equal 1, got {det:.6g}")


def _permutation_sign(perm: np.ndarray) -> int:
    seen = np.zeros(len(perm), dtype=bool)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = int(perm[j])
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def signed_permutation_matrix(perm: tuple[int, ...], signs: tuple[int, ...]) -> np.ndarray:
    """Matrix W with W[perm[j], j] = signs[perm[j]]; det(W) = +1 by construction."""
    n = len(perm)
    w = np.zeros((n, n), dtype=complex)
    for j, i in enumerate(perm):
        w[i, j] = signs[i]
    return w


@dataclass(frozen=True)
class BirkhoffFactors:
    """Factors of g = l @ W @ h @ u_plus.

    ``perm[j]`` is the row carrying the nonzero entry of column j of W;
    ``signs`` holds one +/-1 per row, all +1 except the last row which carries
    the sign making det(W) = +1.
    """

    l: np.ndarray
    perm: tuple[int, ...]
    signs: tuple[int, ...]
    h: np.ndarray
    u_plus: np.ndarray

    @property
    def w_matrix(self) -> np.ndarray:
        return signed_permutation_matrix(self.perm, self.signs)

    @property
    def is_identity_perm(self) -> bool:
        return all(i == j for j, i in enumerate(self.perm))

    def reconstruct(self) -> np.ndarray:
        return self.l @ self.w_matrix @ self.h @ self.u_plus


@dataclass(frozen=True)
class IwasawaFactors:
    """Factors of g = l @ a @ u (l lower unipotent, a positive diagonal, u unitary)."""

    l: np.ndarray
    a: np.ndarray
    u: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.l @ self.a @ self.u


def birkhoff_factor(g: np.ndarray, tol: float = DEFAULT_TOL) -> BirkhoffFactors:
    """Structural permuted LDU factorization g = l @ W @ h @ u_plus.

    Columns are processed left to right; the pivot of column j is the topmost
    not-yet-used row whose current entry exceeds ``tol`` in magnitude.  Row
    operations only add a pivot row to rows below it and column operations
    only add a pivot column to columns right of it, so the accumulated factors
    are genuinely unipotent triangular and the recovered permutation equals
    the rank pattern of the leading submatrices of g.

    Raises StratumAmbiguous when any examined entry falls inside the band
    (tol / AMBIGUITY_BAND, tol * AMBIGUITY_BAND): such an input sits too close
    to a stratum boundary to classify.
    """
    g = _as_square(g)
    _check_unimodular(g, tol)
    n = g.shape[0]

    m = g.copy()
    lower = np.eye(n, dtype=complex)
    upper = np.eye(n, dtype=complex)
    perm = np.full(n, -1, dtype=int)
    used = np.zeros(n, dtype=bool)

    for j in range(n):
        pivot_row = -1
        for i in range(n):
            if used[i]:
                continue
            a = abs(m[i, j])
            if a > tol:
                if a < tol * AMBIGUITY_BAND:
                    raise StratumAmbiguous(
                        f"pivot candidate {a:.3e} at ({i}, {j}) is inside the "
                        f"ambiguity band around tol = {tol:.3e}"
                    )
                pivot_row = i
                break
            if a > tol / AMBIGUITY_BAND:
                raise StratumAmbiguous(
                    f"entry {a:.3e} at ({i}, {j}) is inside the ambiguity band "
                    f"around tol = {tol:.3e}"
                )
        if pivot_row < 0:
            raise SingularInput(f"no usable pivot in column {j}")
        used[pivot_row] = True
        perm[j] = pivot_row
        p = m[pivot_row, j]
        for i in range(pivot_row + 1, n):
            if used[i] or m[i, j] == 0:
                continue
            mult = m[i, j] / p
            m[i, :] -= mult * m[pivot_row, :]
            lower[i, pivot_row] = mult
        for j2 in range(j + 1, n):
            if m[pivot_row, j2] == 0:
                continue
            c = m[pivot_row, j2] / p
            m[:, j2] -= c * m[:, j]
            upper[j, j2] = c

    signs = np.ones(n, dtype=int)
    signs[n - 1] = _permutation_sign(perm)
    h_diag = np.array([signs[perm[j]] * m[perm[j], j] for j in range(n)])
    return BirkhoffFactors(
        l=lower,
        perm=tuple(int(i) for i in perm),
        signs=tuple(int(s) for s in signs),
        h=np.diag(h_diag),
        u_plus=upper,
    )


def iwasawa_factor(g: np.ndarray, tol: float = DEFAULT_TOL) -> IwasawaFactors:
    """Unique factorization g = l @ a @ u.

    The lower Cholesky factor L of the Hermitian positive definite matrix
    g g* is split as L = l @ a with a = diag(L) (positive by the Cholesky
    convention); then u = L^(-1) g is unitary.
    """
    g = _as_square(g)
    _check_unimodular(g, tol)
    gram = g @ g.conj().T
    gram = 0.5 * (gram + gram.conj().T)
    try:
        chol = np.linalg.cholesky(gram)
    except np.linalg.LinAlgError as exc:
        raise SingularInput("g g* failed the positive-definiteness check") from exc
    a_diag = np.real(np.diag(chol)).copy()
    lower = chol / a_diag[np.newaxis, :]
    u = np.linalg.solve(chol, g)
    return IwasawaFactors(l=lower, a=np.diag(a_diag.astype(complex)), u=u)


def inv_sqrt_hpd(p: np.ndarray) -> np.ndarray:
    """Inverse square root s of a Hermitian positive definite p: s @ p @ s = I."""
    p = _as_square(p)
    scale = max(1.0, float(np.linalg.norm(p)))
    if np.linalg.norm(p - p.conj().T) > 1e-10 * scale:
        raise NotPositiveDefinite("matrix is not Hermitian")
    w, q = np.linalg.eigh(0.5 * (p + p.conj().T))
    if w[0] <= 1e-14 * max(1.0, w[-1]):
        raise NotPositiveDefinite(f"matrix is not positive definite, min eig = {w[0]:.3e}")
    return (q * (w ** -0.5)) @ q.conj().T


def polar_factor(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Left polar decomposition a = pos @ unit, pos = (a a*)^(1/2), unit unitary."""
    a = _as_square(a)
    u, s, vh = np.linalg.svd(a)
    if s[-1] <= 1e-13 * s[0]:
        raise SingularInput(f"matrix is numerically singular, sigma_min = {s[-1]:.3e}")
    pos = (u * s) @ u.conj().T
    unit = u @ vh
    return pos, unit


def principal_minors(g: np.ndarray) -> np.ndarray:
    """Determinants of the leading k x k submatrices, k = 1..dim."""
    g = _as_square(g)
    n = g.shape[0]
    return np.array([np.linalg.det(g[: k + 1, : k + 1]) for k in range(n)])


def orthonormal_column_basis(a: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Orthonormal basis of the column space of ``a`` (columns of the result)."""
    a = np.asarray(a, dtype=complex)
    if a.size == 0:
        return a.reshape(a.shape[0], 0)
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    rank = int(np.sum(s > tol))
    return u[:, :rank]


def max_principal_angle(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> float:
    """Largest principal angle (radians) between the column spaces of a and b.

    Requires equal numerical ranks; raises ValueError otherwise so dimension
    mismatches are not silently reported as large angles.  Small angles are
    computed from sines (Bjorck-Golub): arccos of a cosine near 1 loses half
    the available digits, which would put a floor of ~1e-8 on the result.
    """
    qa = orthonormal_column_basis(a, tol)
    qb = orthonormal_column_basis(b, tol)
    if qa.shape[1] != qb.shape[1]:
        raise ValueError(f"subspace dimensions differ: {qa.shape[1]} vs {qb.shape[1]}")
    if qa.shape[1] == 0:
        return 0.0
    cross = qa.conj().T @ qb
    cosines = np.linalg.svd(cross, compute_uv=False)
    if cosines[-1] < np.sqrt(0.5):
        return float(np.arccos(np.clip(cosines[-1], -1.0, 1.0)))
    sines = np.linalg.svd(qb - qa @ cross, compute_uv=False)
    return float(np.arcsin(np.clip(sines[0], -1.0, 1.0)))
