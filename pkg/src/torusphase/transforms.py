"""Discrete canonical transformations: symplectic label maps and their unitaries.

An integer matrix R acting on lattice labels mod D is symplectic when it
preserves the cross product (equivalently det R = 1 mod D).  Each such map is
realized by a unitary G with G S_m G^{-1} = e^{i chi(m)} S_{R m}; G is built
columnwise by sending the shift-operator eigenbasis onto the eigenbasis of
S_{R(1,0)}, with the per-column phases fixed by a clock-covariance walk.  For
odd prime D a further integer translation in a mixed-phase basis makes the
conjugation exact (all chi trivial on that basis), which is what gives
scalar-only group closure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from numpy.linalg import matrix_power

from .errors import DegenerateSpectrumError, NonSymplecticMapError
from .lattice import (
    Dimension,
    build_clock_operator,
    build_fourier_operator,
    build_shift_operator,
    lattice_cross,
    max_abs,
    window_vectors,
)
from .schwinger import eigensystem_by_recursion, schwinger_matrix
from .wigner import kernel_grid


@dataclass(frozen=True)
class SymplecticMap:
    """Integer matrix [[s1, t1], [s2, t2]] mod D, columns s = R(1,0), t = R(0,1)."""

    dim: Dimension
    s: tuple[int, int]
    t: tuple[int, int]

    @classmethod
    def from_rows(cls, dim: Dimension, rows) -> "SymplecticMap":
        (a, b), (c, e) = rows
        d = dim.d
        return cls(dim, (int(a) % d, int(c) % d), (int(b) % d, int(e) % d))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.s[0], self.t[0]], [self.s[1], self.t[1]]], dtype=int)

    @property
    def determinant(self) -> int:
        return (self.s[0] * self.t[1] - self.s[1] * self.t[0]) % self.dim.d

    def apply(self, m, reduce: bool = False) -> tuple[int, int]:
        r = (m[0] * self.s[0] + m[1] * self.t[0], m[0] * self.s[1] + m[1] * self.t[1])
        return (r[0] % self.dim.d, r[1] % self.dim.d) if reduce else r

    def __matmul__(self, other: "SymplecticMap") -> "SymplecticMap":
        d = self.dim.d
        M = (self.matrix @ other.matrix) % d
        return SymplecticMap.from_rows(self.dim, M.tolist())


def verify_symplectic(smap: SymplecticMap) -> bool:
    """True iff R^T P R = P mod D (P the unit cross form) and det R = 1 mod D."""
    d = smap.dim.d
    R = smap.matrix
    P = np.array([[0, 1], [-1, 0]])
    if np.any((R.T @ P @ R - P) % d != 0):
        return False
    if smap.determinant != 1 % d:
        return False
    # area preservation on a deterministic sample of label pairs
    sample = [((1, 0), (0, 1)), ((1, 1), (0, 1)), ((2, 1), (1, 2))]
    for m, mp in sample:
        before = lattice_cross(m, mp) % d
        after = lattice_cross(smap.apply(m), smap.apply(mp)) % d
        if before != after:
            return False
    return True


def equivalence_class_label(dim: Dimension, m, mp) -> int:
    """The symplectic-invariant class label m x m' mod D."""
    return lattice_cross(m, mp) % dim.d


def random_symplectic(dim: Dimension, rng=None, seed=None) -> SymplecticMap:
    """Uniformly random map with first column nonzero, completed to det 1 mod D."""
    if rng is None:
        rng = np.random.default_rng(seed)
    d = dim.d
    while True:
        s1, s2 = int(rng.integers(0, d)), int(rng.integers(0, d))
        if (s1, s2) != (0, 0):
            break
    x = int(rng.integers(0, d))
    if s1 % d:
        t1, t2 = x, ((1 + s2 * x) * pow(s1, -1, d)) % d
    else:
        t1, t2 = (-pow(s2, -1, d)) % d, x
    return SymplecticMap(dim, (s1, s2), (t1, t2))


@lru_cache(maxsize=None)
def _tmat_cached(d: int, m1: int, m2: int) -> np.ndarray:
    """Mixed-phase translation basis T_m = omega^{kappa m1 m2} U^{m1} V^{m2}.

    kappa = (D-1)/2 halves the clock phase mod D (odd D only); on this basis
    the aligned metaplectic conjugation becomes exact, T_m -> T_{R m mod D}.
    """
    dim = Dimension(d)
    kap = (d - 1) // 2
    m1 %= d
    m2 %= d
    T = np.exp(1j * dim.gamma0 * kap * m1 * m2) * (
        matrix_power(build_shift_operator(dim), m1)
        @ matrix_power(build_clock_operator(dim), m2)
    )
    T.flags.writeable = False
    return T


@dataclass(frozen=True)
class MetaplecticOperator:
    dim: Dimension
    map: SymplecticMap
    matrix: np.ndarray
    chi_v: float                 # clock conjugation phase of the columnwise build
    gauge: str                   # "aligned" (odd D) or "columnwise" (D = 2)
    unitary_residual: float
    per_m: tuple = field(default=(), repr=False)   # filled by covariance_report


def _build_columnwise(dim: Dimension, smap: SymplecticMap):
    """G from the eigenbasis map |v_k> -> |s, k> with walk-fixed column phases."""
    d = dim.d
    s, t = smap.s, smap.t
    sys_s = eigensystem_by_recursion(dim, s)
    sys_u = eigensystem_by_recursion(dim, (1, 0))
    Vs, Vu = sys_s.eigenvectors, sys_u.eigenvectors
    St = schwinger_matrix(dim, t)
    V = build_clock_operator(dim)
    nu = np.array([Vu[:, (k - 1) % d].conj() @ V @ Vu[:, k] for k in range(d)])
    tau = np.array([Vs[:, (k - 1) % d].conj() @ St @ Vs[:, k] for k in range(d)])
    if max(np.max(np.abs(np.abs(nu) - 1)), np.max(np.abs(np.abs(tau) - 1))) > 1e-10:
        raise DegenerateSpectrumError("eigenbasis ladder elements lost unit modulus")
    chi_v = float(np.angle(np.prod(nu / tau)) / d)
    phi = np.zeros(d)
    k = 0
    for _ in range(d - 1):
        phi[(k - 1) % d] = phi[k] + chi_v + np.angle(tau[k]) - np.angle(nu[k])
        k = (k - 1) % d
    G = (Vs * np.exp(1j * phi)) @ Vu.conj().T
    return G, chi_v


def build_metaplectic(dim: Dimension, smap: SymplecticMap) -> MetaplecticOperator:
    """Unitary G with G S_m G^{-1} proportional to S_{R m} for every m.

    Prime D only (composite D degenerates the eigensystem the columns are
    read from).  For odd D the columnwise G is translated into the aligned
    gauge, on which conjugation of the mixed-phase basis T_m is exact and the
    group law closes up to a scalar; at D = 2 the columnwise gauge is returned
    as built.
    """
    if not verify_symplectic(smap):
        raise NonSymplecticMapError(
            f"det = {smap.determinant} mod {dim.d}; map {smap.matrix.tolist()} is not symplectic"
        )
    if not dim.prime:
        raise DegenerateSpectrumError(
            f"D={dim.d} is composite; the columnwise eigenbasis construction degenerates"
        )
    G0, chi_v = _build_columnwise(dim, smap)
    d = dim.d
    if d % 2 == 1:
        s, t = smap.s, smap.t
        a1g = np.trace(_tmat_cached(d, *s).conj().T @ (G0 @ _tmat_cached(d, 1, 0) @ G0.conj().T)) / d
        a2g = np.trace(_tmat_cached(d, *t).conj().T @ (G0 @ _tmat_cached(d, 0, 1) @ G0.conj().T)) / d
        if abs(abs(a1g) - 1) > 1e-10 or abs(abs(a2g) - 1) > 1e-10:
            raise DegenerateSpectrumError("alignment phases lost unit modulus")
        c1 = int(round(np.angle(np.conj(a1g)) / dim.gamma0)) % d
        c2 = int(round(np.angle(np.conj(a2g)) / dim.gamma0)) % d
        a1 = (-t[0] * c1 + s[0] * c2) % d
        a2 = (-t[1] * c1 + s[1] * c2) % d
        G = _tmat_cached(d, a1, a2) @ G0
        gauge = "aligned"
    else:
        G = G0
        gauge = "columnwise"
    ures = max_abs(G @ G.conj().T - np.eye(d))
    return MetaplecticOperator(dim=dim, map=smap, matrix=G, chi_v=chi_v,
                               gauge=gauge, unitary_residual=ures)


def covariance_report(op: MetaplecticOperator, labels=None) -> tuple[float, list]:
    """Per-label conjugation diagnostics.

    For each m the phase is measured as the normalized trace overlap of
    G S_m G^{-1} with S_{R m}, and the residual is taken after dividing it
    out.  Returns (worst residual, records) with records of the form
    {"m": (m1, m2), "phase": complex, "residual": float}.
    """
    dim, G = op.dim, op.matrix
    d = dim.d
    Gd = G.conj().T
    records = []
    worst = 0.0
    for m in (labels if labels is not None else window_vectors(dim)):
        conj = G @ schwinger_matrix(dim, m) @ Gd
        target = schwinger_matrix(dim, op.map.apply(m, reduce=True))
        z = np.trace(target.conj().T @ conj) / d
        if abs(z) < 1e-12:
            records.append({"m": tuple(m), "phase": complex(z), "residual": 1.0})
            worst = max(worst, 1.0)
            continue
        phase = z / abs(z)
        r = max_abs(conj - phase * target)
        records.append({"m": tuple(m), "phase": complex(phase), "residual": float(r)})
        worst = max(worst, float(r))
    return worst, records


def translation_covariance_residual(op: MetaplecticOperator) -> float:
    """Exactness of G T_m G^{-1} = T_{R m mod D} on the mixed-phase basis (odd D)."""
    dim, G = op.dim, op.matrix
    d = dim.d
    Gd = G.conj().T
    worst = 0.0
    for m1 in range(d):
        for m2 in range(d):
            r = op.map.apply((m1, m2), reduce=True)
            worst = max(worst, max_abs(G @ _tmat_cached(d, m1, m2) @ Gd
                                       - _tmat_cached(d, *r)))
    return worst


def predicted_phase(op: MetaplecticOperator, m) -> complex:
    """Closed-form conjugation phase chi(m) in the aligned gauge.

    With m' = m mod D and r = R m mod D:
    chi(m) = gamma0 (m1' m2' - m1 m2)/2 + pi (r1 r2 - m1' m2').
    """
    dim = op.dim
    mp = (m[0] % dim.d, m[1] % dim.d)
    r = op.map.apply(m, reduce=True)
    chi = 0.5 * dim.gamma0 * (mp[0] * mp[1] - m[0] * m[1]) + np.pi * (r[0] * r[1] - mp[0] * mp[1])
    return complex(np.exp(1j * chi))


def closure_check(op1: MetaplecticOperator, op2: MetaplecticOperator) -> tuple[complex, float]:
    """Group law G(R1) G(R2) = z G(R1 R2): returns (scalar z, residual).

    |z| = D before normalization iff the product is a scalar multiple; the
    residual is against the normalized scalar.
    """
    dim = op1.dim
    op12 = build_metaplectic(dim, op1.map @ op2.map)
    prod = op1.matrix @ op2.matrix
    z = np.trace(op12.matrix.conj().T @ prod)
    if abs(z) < 1e-12:
        return complex(z), 1.0
    return complex(z / abs(z)), max_abs(prod - (z / abs(z)) * op12.matrix)


def phase_flattening_report(op: MetaplecticOperator) -> dict:
    """Whether any global phase makes G S_m G^{-1} = S_{R m} exactly for all m.

    Conjugation is invariant under a global phase of G, so the measured phases
    ARE the report: flattenable iff every chi(m) is already trivial.
    """
    worst, records = covariance_report(op)
    dev = max((abs(rec["phase"] - 1.0) for rec in records), default=0.0)
    return {
        "max_phase_deviation": float(dev),
        "flattenable": bool(dev < 1e-9),
        "worst_residual": worst,
        "per_m": records,
    }


def fourier_check(dim: Dimension) -> float:
    """Residual of G([[0,-1],[1,0]]) against the Fourier operator."""
    smap = SymplecticMap.from_rows(dim, ((0, -1), (1, 0)))
    op = build_metaplectic(dim, smap)
    G = op.matrix
    F = build_fourier_operator(dim)
    z = np.trace(F.conj().T @ G) / dim.d
    if abs(z) < 1e-12:
        return 1.0
    return max_abs(G - (z / abs(z)) * F)


def fourier_wigner_rotation_check(dim: Dimension) -> float:
    """Worst residual of F Delta(V) F^{-1} = Delta(R_{pi/2} V) over the grid.

    The quarter turn acts forward on the phase-space point: (V1, V2) maps to
    (-V2, V1), matching the label action F S_m F^{-1} = S_{(-m2, m1)}.
    """
    d = dim.d
    K = kernel_grid(dim)
    F = build_fourier_operator(dim)
    worst = 0.0
    for v1 in range(d):
        for v2 in range(d):
            worst = max(worst, max_abs(F @ K[v1, v2] @ F.conj().T - K[(-v2) % d, v1]))
    return worst
