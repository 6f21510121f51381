"""Projective unitary operator basis on the discrete torus.

S_m = e^{-i gamma0 m1 m2 / 2} U^{m1} V^{m2} for integer labels m = (m1, m2).
The half-phase uses the exact integer product m1*m2 (never reduced mod D) --
the sign of S_m^D depends on it.  The family satisfies

    S_m^dag = S_{-m}
    S_m S_n = e^{i gamma0 m x n / 2} S_{m+n}
    Tr S_m  = +/- D at m = 0 mod D, else 0
    S_m^D   = (-1)^{D m1 m2} I

and is closed under Fourier conjugation F S_m F^-1 = S_{(-m2, m1)}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.linalg import matrix_power

from .errors import DegenerateSpectrumError, NonScalarPowerError, PhaseMismatchError
from .lattice import (
    Dimension,
    build_clock_operator,
    build_fourier_operator,
    build_shift_operator,
    canonical_vector,
    lattice_cross,
    max_abs,
    window_vectors,
)


@lru_cache(maxsize=None)
def _schwinger_cached(d: int, m1: int, m2: int) -> np.ndarray:
    # (U^a V^b)[i, j] = delta_{i,(j+a)%d} e^{-i gamma0 b j}; built directly.
    g0 = 2.0 * np.pi / d
    S = np.zeros((d, d), dtype=complex)
    j = np.arange(d)
    S[(j + m1) % d, j] = np.exp(-0.5j * g0 * (m1 * m2)) * np.exp(-1j * g0 * m2 * j)
    S.flags.writeable = False
    return S


def schwinger_matrix(dim: Dimension, m) -> np.ndarray:
    """Dense matrix of S_m for arbitrary integer labels (read-only, cached)."""
    return _schwinger_cached(dim.d, int(m[0]), int(m[1]))


@dataclass(frozen=True)
class SchwingerOperator:
    dim: Dimension
    m: tuple[int, int]
    matrix: np.ndarray


def build_schwinger(dim: Dimension, m) -> SchwingerOperator:
    m = (int(m[0]), int(m[1]))
    return SchwingerOperator(dim=dim, m=m, matrix=schwinger_matrix(dim, m))


def reduce_label(dim: Dimension, m) -> tuple[tuple[int, int], int]:
    """Canonical-window representative of m and the sign relating the operators.

    S_m = sign * S_mc where mc is the window representative; the sign is
    (-1)^(a*mc2 + b*mc1 + a*b*D) for m = mc + (a*D, b*D).
    """
    mc = canonical_vector(dim, m)
    a = (m[0] - mc[0]) // dim.d
    b = (m[1] - mc[1]) // dim.d
    sign = (-1) ** ((a * mc[1] + b * mc[0] + a * b * dim.d) % 2)
    return mc, int(sign)


def compose_schwinger(a: SchwingerOperator, b: SchwingerOperator, tol: float = 1e-11):
    """Product phase and resulting basis element: S_a S_b = phase * S_{a+b}."""
    if a.dim != b.dim:
        raise ValueError("operands live in different dimensions")
    dim = a.dim
    phase = np.exp(0.5j * dim.gamma0 * lattice_cross(a.m, b.m))
    out = build_schwinger(dim, (a.m[0] + b.m[0], a.m[1] + b.m[1]))
    resid = max_abs(a.matrix @ b.matrix - phase * out.matrix)
    if resid > tol:
        raise PhaseMismatchError(
            f"composition phase drift: residual {resid:.3e} for {a.m} * {b.m}"
        )
    # trace rule on the result: |Tr S_m| = D iff m = 0 mod D
    tr = np.trace(out.matrix)
    _, sign = reduce_label(dim, out.m)
    expected = sign * dim.d if (out.m[0] % dim.d == 0 and out.m[1] % dim.d == 0) else 0.0
    if abs(tr - expected) > tol * dim.d:
        raise PhaseMismatchError(f"trace rule violated at {out.m}: Tr = {tr:.3e}")
    return phase, out


def schwinger_power_check(s: SchwingerOperator, tol: float = 5e-11) -> int:
    """Scalar value of S_m^D; must equal (-1)^(D m1 m2)."""
    d = s.dim.d
    P = matrix_power(s.matrix, d)
    z = P[0, 0]
    if max_abs(P - z * np.eye(d)) > tol:
        raise NonScalarPowerError(f"S_{s.m}^{d} is not scalar")
    sign = (-1) ** ((d * s.m[0] * s.m[1]) % 2)
    if abs(z - sign) > tol:
        raise NonScalarPowerError(f"S_{s.m}^{d} = {z:.12f}, expected {sign}")
    return sign


@dataclass(frozen=True)
class SchwingerEigensystem:
    """Eigensystem of S_m for the canonical representative m.

    eigenvalues[r] = e^{i pi m1 m2} e^{-2 pi i r / D}; eigenvectors[:, r] is the
    matching unit vector.  The phase of each eigenvector is fixed by the
    construction walk: the component at the orbit start (k = 0) is real
    positive, the rest follow from the recursion phases beta.
    """

    dim: Dimension
    m: tuple[int, int]
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    beta: np.ndarray
    reducible_warning: bool


@lru_cache(maxsize=None)
def _eigensystem_cached(d: int, m1: int, m2: int):
    g0 = 2.0 * np.pi / d
    lam = np.exp(1j * np.pi * m1 * m2) * np.exp(-2j * np.pi * np.arange(d) / d)
    vecs = np.zeros((d, d), dtype=complex)
    beta = g0 * m2 * (2 * np.arange(d) - m1) / 2.0
    if m1 % d == 0:
        # diagonal element: eigenvector r is the coordinate vector k with
        # r = k m2 mod D (the half-phase vanishes since m1 = 0 here)
        if math.gcd(m2 % d, d) != 1:
            raise DegenerateSpectrumError(
                f"label ({m1},{m2}) has a degenerate spectrum at D={d}"
            )
        for k in range(d):
            vecs[k, (k * m2) % d] = 1.0
    else:
        if math.gcd(m1 % d, d) != 1:
            raise DegenerateSpectrumError(
                f"orbit of label ({m1},{m2}) does not cover Z_{d}"
            )
        for r in range(d):
            e = np.zeros(d, dtype=complex)
            k = 0
            e[0] = 1.0
            for _ in range(d - 1):
                e[(k - m1) % d] = lam[r] * np.exp(1j * beta[k]) * e[k]
                k = (k - m1) % d
            vecs[:, r] = e / math.sqrt(d)
    lam.flags.writeable = False
    vecs.flags.writeable = False
    beta.flags.writeable = False
    return lam, vecs, beta


def eigensystem_by_recursion(dim: Dimension, m) -> SchwingerEigensystem:
    """Eigensystem of S_m built by propagating components along the shift orbit.

    The label is reduced to the canonical window first; the eigenvalues refer
    to the reduced representative (an overall sign relates it to the original
    operator, see reduce_label).
    """
    mc = canonical_vector(dim, m)
    if mc == (0, 0):
        raise ValueError("the zero label is the identity; no cyclic eigensystem")
    lam, vecs, beta = _eigensystem_cached(dim.d, mc[0], mc[1])
    return SchwingerEigensystem(
        dim=dim,
        m=mc,
        eigenvalues=lam,
        eigenvectors=vecs,
        beta=beta,
        reducible_warning=not dim.prime,
    )


def dense_eigensystem_match(dim: Dimension, m, sys: SchwingerEigensystem | None = None):
    """Compare the recursion eigensystem against a dense solver.

    Returns (eigenvalue residual, eigenvector residual) where eigenvectors are
    aligned per-vector by a global phase before differencing.
    """
    if sys is None:
        sys = eigensystem_by_recursion(dim, m)
    S = schwinger_matrix(dim, sys.m)
    vals, vecs = np.linalg.eig(S)
    lam_resid = 0.0
    vec_resid = 0.0
    used = set()
    for r in range(dim.d):
        k = int(np.argmin(np.where(
            [i in used for i in range(dim.d)], np.inf, np.abs(vals - sys.eigenvalues[r])
        )))
        used.add(k)
        lam_resid = max(lam_resid, abs(vals[k] - sys.eigenvalues[r]))
        w = vecs[:, k] / np.linalg.norm(vecs[:, k])
        ov = np.vdot(sys.eigenvectors[:, r], w)
        if abs(ov) > 0:
            w = w * (ov.conjugate() / abs(ov))
        vec_resid = max(vec_resid, max_abs(w - sys.eigenvectors[:, r]))
    return lam_resid, vec_resid


def sine_commutator_check(dim: Dimension, m, n) -> float:
    """Residual of the sine-algebra commutator for D_m = S_m / gamma0."""
    g0 = dim.gamma0
    Dm = schwinger_matrix(dim, m) / g0
    Dn = schwinger_matrix(dim, n) / g0
    Dsum = schwinger_matrix(dim, (m[0] + n[0], m[1] + n[1])) / g0
    sin = np.sin(g0 * lattice_cross(m, n) / 2.0)
    return max_abs(Dm @ Dn - Dn @ Dm - 1j * (2.0 / g0) * sin * Dsum)


def weyl_matrices(dim: Dimension):
    """Clock/shift pair (g, h): g = diag(1, w, ..., w^{D-1}), h the cyclic raise.

    h g = w g h with w = e^{i gamma0}; both have order D.
    """
    d = dim.d
    g = np.diag(dim.omega ** np.arange(d))
    h = np.zeros((d, d), dtype=complex)
    for j in range(d):
        h[j, (j + 1) % d] = 1.0
    return g, h


def weyl_j_matrix(dim: Dimension, m) -> np.ndarray:
    """J_m = w^{m1 m2 / 2} g^{m1} h^{m2} with the exact integer half-exponent."""
    g, h = weyl_matrices(dim)
    ph = np.exp(0.5j * dim.gamma0 * (m[0] * m[1]))
    return ph * (matrix_power(g, m[0] % dim.d) @ matrix_power(h, m[1] % dim.d))


def weyl_commutator_check(dim: Dimension, m, n) -> dict:
    """Structure constants of the Weyl-pair family J_m.

    J_m coincides with S_{(-m2,-m1)} elementwise, so the family satisfies the
    sine algebra with the label mirror applied; the measured commutator is
    [J_m, J_n] = -2i sin(gamma0 m x n / 2) J_{m+n}.  Residuals for both sign
    conventions are returned.
    """
    Jm = weyl_j_matrix(dim, m)
    Jn = weyl_j_matrix(dim, n)
    Jsum = weyl_j_matrix(dim, (m[0] + n[0], m[1] + n[1]))
    mirror = max(
        max_abs(Jm - schwinger_matrix(dim, (-m[1], -m[0]))),
        max_abs(Jn - schwinger_matrix(dim, (-n[1], -n[0]))),
    )
    comm = Jm @ Jn - Jn @ Jm
    s = np.sin(dim.gamma0 * lattice_cross(m, n) / 2.0)
    return {
        "mirror": mirror,
        "minus_form": max_abs(comm + 2j * s * Jsum),
        "plus_form": max_abs(comm - 2j * s * Jsum),
    }


def fourier_covariance_check(dim: Dimension, m) -> float:
    """Residual of F S_m F^-1 = S_{(-m2, m1)} (quarter-turn on labels)."""
    F = build_fourier_operator(dim)
    L = F @ schwinger_matrix(dim, m) @ F.conj().T
    return max_abs(L - schwinger_matrix(dim, (-m[1], m[0])))


def schwinger_basis_rank(dim: Dimension) -> int:
    """Rank of the Hilbert-Schmidt Gram matrix of the window family {S_m}."""
    vecs = np.stack([schwinger_matrix(dim, m).ravel() for m in window_vectors(dim)])
    gram = vecs.conj() @ vecs.T
    return int(np.linalg.matrix_rank(gram))


def pair_schwinger(dim: Dimension, X: np.ndarray, Z: np.ndarray, m) -> np.ndarray:
    """S_m built from an arbitrary conjugate pair with X Z = e^{i gamma0} Z X."""
    ph = np.exp(-0.5j * dim.gamma0 * (m[0] * m[1]))
    return ph * (matrix_power(X, m[0] % dim.d) @ matrix_power(Z, m[1] % dim.d))


def conjugate_pair_suite(dim: Dimension, X: np.ndarray, Z: np.ndarray,
                         rng=None, n_random: int = 200) -> dict:
    """Full algebra suite for a candidate conjugate pair (X, Z).

    Checks the Weyl commutation X Z = e^{i gamma0} Z X, order-D cyclicity, and
    the adjoint / composition / power / trace identities of the S family built
    from the pair, over the canonical window plus random integer labels.
    Returns the worst residual per check.
    """
    if rng is None:
        rng = np.random.default_rng(0)
    d = dim.d
    g0 = dim.gamma0
    res = {
        "weyl_commutation": max_abs(X @ Z - np.exp(1j * g0) * Z @ X),
        "cyclic_X": max_abs(matrix_power(X, d) - np.eye(d)),
        "cyclic_Z": max_abs(matrix_power(Z, d) - np.eye(d)),
        "adjoint": 0.0,
        "composition": 0.0,
        "power_sign": 0.0,
        "trace": 0.0,
    }
    cache = {}

    def S(m):
        key = (m[0] % d, m[1] % d, (m[0] * m[1]) % (2 * d))
        if key not in cache:
            cache[key] = pair_schwinger(dim, X, Z, m)
        return cache[key]

    labels = list(window_vectors(dim))
    pairs = [(labels[i], labels[j])
             for i, j in zip(rng.integers(0, len(labels), n_random),
                             rng.integers(0, len(labels), n_random))]
    pairs += [(tuple(int(x) for x in rng.integers(-2 * d, 2 * d, 2)),
               tuple(int(x) for x in rng.integers(-2 * d, 2 * d, 2)))
              for _ in range(n_random // 4)]
    for m in labels:
        tr = abs(np.trace(S(m)))
        expected = d if (m[0] % d == 0 and m[1] % d == 0) else 0.0
        res["trace"] = max(res["trace"], abs(tr - expected))
        res["adjoint"] = max(res["adjoint"], max_abs(S(m).conj().T - S((-m[0], -m[1]))))
        pw = matrix_power(S(m), d)
        sign = (-1) ** ((d * m[0] * m[1]) % 2)
        res["power_sign"] = max(res["power_sign"], max_abs(pw - sign * np.eye(d)))
    for a, b in pairs:
        lhs = S(a) @ S(b)
        rhs = np.exp(0.5j * g0 * lattice_cross(a, b)) * pair_schwinger(
            dim, X, Z, (a[0] + b[0], a[1] + b[1]))
        res["composition"] = max(res["composition"], max_abs(lhs - rhs))
    return res


def standard_pair_suite(dim: Dimension, rng=None, n_random: int = 200) -> dict:
    """conjugate_pair_suite applied to the fundamental (U, V) pair."""
    return conjugate_pair_suite(
        dim, build_shift_operator(dim), build_clock_operator(dim), rng, n_random
    )
