"""Deformed subalgebras built from pairs of torus basis elements.

Two realizations are provided for a non-collinear label pair (m, m') with
exact symplectic area c = m x m':

* a deformed sl(2) pair A = d (S_m + S_{m'}) intertwined by S_{m-m'}, with
  deformation p = e^{-i gamma0 c}, a ladder J3, and a central Casimir;
* a spectrum-shifted q-oscillator A = d S_m + d' S_{m'} with q = e^{-i gamma0 c},
  number operator N, and spectrum f(n) = C + [n] >= 0 where the shift constant
  C = 1/|sin(gamma0 c)| makes every f(n) admissible.

Both diagonalize along the eigenbasis of S_{m-m'}; the integer bijection
n = c^{-1} r mod D links eigenvalue index r to oscillator quantum number n.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CollinearVectorsError,
    DegenerateSpectrumError,
    DimensionTooLargeError,
    PhaseMismatchError,
    SingularDeformationError,
)
from .lattice import Dimension, canonical_vector, lattice_cross, max_abs
from .schwinger import eigensystem_by_recursion, schwinger_matrix

_SINGULAR_TOL = 1e-12


def _dag(A):
    return A.conj().T


def _require_noncollinear(dim: Dimension, m, mp) -> int:
    c = lattice_cross(m, mp)
    if c % dim.d == 0:
        raise CollinearVectorsError(f"{m} x {mp} = {c} = 0 mod {dim.d}")
    return c


def bracket_values(dim: Dimension, c: int, n) -> np.ndarray:
    """Symmetric q-bracket [n] = sin(gamma0 c (n + (D-1)/2)) / sin(gamma0 c)."""
    s = np.sin(dim.gamma0 * c)
    return np.sin(dim.gamma0 * c * (np.asarray(n, dtype=float) + (dim.d - 1) / 2.0)) / s


@dataclass(frozen=True)
class QOscillator:
    dim: Dimension
    m: tuple[int, int]
    mp: tuple[int, int]
    cross: int
    q: complex
    eta: float
    d_coef: float
    dp_coef: complex
    shift_constant: float
    c_q: complex
    lowering: np.ndarray          # A
    number_op: np.ndarray         # N
    q_exponential: np.ndarray     # Q = c_q q^{-N}
    eigenvectors: np.ndarray      # of S_{m-m'} (canonical label), column r
    eigenvalues: np.ndarray
    n_values: np.ndarray          # n(r) = c^{-1} r mod D
    spectrum: np.ndarray          # f(n), n = 0..D-1

    @property
    def raising(self) -> np.ndarray:
        return _dag(self.lowering)

    def bracket(self, n) -> np.ndarray:
        return bracket_values(self.dim, self.cross, n)

    def bracket_number_op(self) -> np.ndarray:
        """[N] as a matrix in the oscillator eigenbasis."""
        v = self.eigenvectors
        return (v * self.bracket(self.n_values)) @ _dag(v)


def build_q_oscillator(dim: Dimension, m, mp, eta_override: float | None = None) -> QOscillator:
    """Shifted q-oscillator on the pair (m, m').

    The coefficient d is real positive with |d| = |d'| = (2|sin(gamma0 c)|)^{-1/2};
    the phase of d' and the sign eta = -(-1)^{c + w1 w2} (w = m - m') are forced
    by requiring A^dag A = C + [N] with no extra term.
    """
    m = (int(m[0]), int(m[1]))
    mp = (int(mp[0]), int(mp[1]))
    c = _require_noncollinear(dim, m, mp)
    s = np.sin(dim.gamma0 * c)
    if abs(s) < _SINGULAR_TOL:
        raise SingularDeformationError(
            f"sin(gamma0 * {c}) = 0 at D={dim.d}; oscillator coefficients diverge"
        )
    q = np.exp(-1j * dim.gamma0 * c)
    w = (m[0] - mp[0], m[1] - mp[1])
    if eta_override is None:
        eta = float(-(-1) ** ((c + w[0] * w[1]) % 2))
    else:
        eta = float(eta_override)
    d_coef = (2.0 * abs(s)) ** -0.5
    dp_coef = np.conj(eta / ((2j * s) * d_coef))
    A = d_coef * schwinger_matrix(dim, m) + dp_coef * schwinger_matrix(dim, mp)
    C = 1.0 / abs(s)
    sys = eigensystem_by_recursion(dim, canonical_vector(dim, w))
    try:
        cbar = pow(c % dim.d, -1, dim.d)
    except ValueError:
        raise DegenerateSpectrumError(
            f"cross value {c} is not invertible mod {dim.d}; "
            "the number labeling degenerates") from None
    nvals = (cbar * np.arange(dim.d)) % dim.d
    vecs = sys.eigenvectors
    Nhat = (vecs * nvals) @ _dag(vecs)
    c_q = np.exp(1j * dim.gamma0 * c * (dim.d - 1) / 2.0)
    Qhat = c_q * ((vecs * np.exp(1j * dim.gamma0 * c * nvals)) @ _dag(vecs))
    spectrum = C + bracket_values(dim, c, np.arange(dim.d))
    return QOscillator(
        dim=dim, m=m, mp=mp, cross=c, q=q, eta=eta, d_coef=d_coef, dp_coef=dp_coef,
        shift_constant=C, c_q=c_q, lowering=A, number_op=Nhat, q_exponential=Qhat,
        eigenvectors=vecs, eigenvalues=sys.eigenvalues, n_values=nvals,
        spectrum=spectrum,
    )


def oscillator_residuals(osc: QOscillator) -> dict:
    """Defining identities of the oscillator, as max-norm residuals.

    number: A^dag A = C + [N];   q_exponential: Q equals -eta S_{-m} S_{m'};
    ladder: A N = (N+1 mod D) A;  q_commutator: A A^dag - q^{+/-1} A^dag A = c-number.
    """
    dim, A = osc.dim, osc.lowering
    v = osc.eigenvectors
    Ad = _dag(A)
    brN = osc.bracket_number_op()
    eye = np.eye(dim.d)
    res = {"number": max_abs(Ad @ A - (osc.shift_constant * eye + brN))}
    Qdirect = (-osc.eta) * schwinger_matrix(dim, (-osc.m[0], -osc.m[1])) @ schwinger_matrix(dim, osc.mp)
    res["q_exponential"] = max_abs(Qdirect - osc.q_exponential)
    Nplus = (v * ((osc.n_values + 1) % dim.d)) @ _dag(v)
    res["ladder"] = max_abs(A @ osc.number_op - Nplus @ A)
    # A A^dag = C + [N + 1]: the pair of relations whose difference is the
    # q-commutator; checked via the bracket form directly
    brNp1 = (v * osc.bracket(osc.n_values + 1)) @ _dag(v)
    res["raised_number"] = max_abs(A @ Ad - (osc.shift_constant * eye + brNp1))
    res["spectrum_min"] = float(osc.spectrum.min())
    return res


@dataclass(frozen=True)
class LowestWeightReport:
    dim: Dimension
    m: tuple[int, int]
    mp: tuple[int, int]
    cross: int
    has_solution: bool
    solutions: tuple[int, ...]
    margin: float            # min_n |C + [n]|; 0 when a solution exists
    singular: bool           # sin(gamma0 c) = 0 (D = 2), scan done on the scaled profile
    irreducible: bool


def lowest_weight_scan(dim: Dimension, m, mp, tol: float = 1e-9) -> LowestWeightReport:
    """Scan for a lowest-weight quantum number n0 with C = -[n0].

    For odd D the scaled profile 1 + sign * sin(gamma0 c (n + (D-1)/2)) never
    vanishes (the equation 2c(2n + D - 1) = D(2k+1) has no integer solution),
    so no lowest-weight vector exists and the ladder representation is cyclic.
    At D = 2 the profile hits zero, a lowest weight exists, and the
    representation is flagged as not irreducible.
    """
    c = _require_noncollinear(dim, m, mp)
    s = np.sin(dim.gamma0 * c)
    n = np.arange(dim.d)
    v = np.sin(dim.gamma0 * c * (n + (dim.d - 1) / 2.0))
    if abs(s) < _SINGULAR_TOL:
        # both branch signs of the vanishing denominator are scanned
        hits = np.minimum(np.abs(1.0 + v), np.abs(1.0 - v))
        solutions = tuple(int(k) for k in n[hits < tol])
        has = len(solutions) > 0
        margin = 0.0 if has else float("inf")
        return LowestWeightReport(dim, tuple(m), tuple(mp), c, has, solutions,
                                  margin, True, not has)
    f = 1.0 / abs(s) + v / s
    solutions = tuple(int(k) for k in n[np.abs(f) < tol])
    has = len(solutions) > 0
    return LowestWeightReport(dim, tuple(m), tuple(mp), c, has, solutions,
                              float(np.min(np.abs(f))), False, not has)


@dataclass(frozen=True)
class EigenCorrespondence:
    """Phases connecting the oscillator ladder to the S_{m-m'} eigenbasis.

    g[r] = <w, r-c| S_m |w, r> and f[r] = <w, r-c| S_{m'} |w, r> are unit
    modulus; |d g + d' f|^2 reproduces the spectrum f(n(r)); and the product
    obeys the exact law g * conj(f) = -eta * conj(E^2) with
    E = e^{i gamma0 c (n + (D-1)/2)/2}.  The componentwise statement g = conj(f)
    = E holds only up to an eigenvector rephasing and is recorded as a
    residual, not asserted (see literal_phase_residual / lambda_claim_residual).
    """

    osc: QOscillator = field(repr=False)
    g_phases: np.ndarray
    f_phases: np.ndarray
    predicted: np.ndarray          # E
    eq_amplitude_residual: float   # | |dg + d'f|^2 - (C + [n]) |
    product_law_residual: float    # | g conj(f) + eta conj(E)^2 |
    product_phase: complex         # prod(E / g); +1 iff g can be rephased to E
    literal_phase_residual: float  # worst of |g - E|, |g - conj(f)| (recorded)
    lambda_claim_residual: float   # |conj(lambda_w) - e^{i gamma0 (n - D/2) c}| (recorded)
    unit_shift_ok: bool


def eigenbasis_correspondence(osc: QOscillator, tol: float = 1e-9) -> EigenCorrespondence:
    dim, c = osc.dim, osc.cross
    d = dim.d
    vecs, nv = osc.eigenvectors, osc.n_values
    Sm = schwinger_matrix(dim, osc.m)
    Smp = schwinger_matrix(dim, osc.mp)
    g = np.empty(d, dtype=complex)
    f = np.empty(d, dtype=complex)
    for r in range(d):
        t = vecs[:, (r - c) % d]
        g[r] = t.conj() @ Sm @ vecs[:, r]
        f[r] = t.conj() @ Smp @ vecs[:, r]
    if max(np.max(np.abs(np.abs(g) - 1)), np.max(np.abs(np.abs(f) - 1))) > tol:
        raise PhaseMismatchError("ladder matrix elements are not unit modulus")
    amp2 = np.abs(osc.d_coef * g + osc.dp_coef * f) ** 2
    eq_amp = float(np.max(np.abs(amp2 - osc.spectrum[nv])))
    E = np.exp(0.5j * dim.gamma0 * c * (nv + (d - 1) / 2.0))
    law = float(np.max(np.abs(g * np.conj(f) + osc.eta * np.conj(E) ** 2)))
    literal = float(max(np.max(np.abs(g - E)), np.max(np.abs(g - np.conj(f)))))
    w = (osc.m[0] - osc.mp[0], osc.m[1] - osc.mp[1])
    Sw = schwinger_matrix(dim, w)
    lam_w = np.array([vecs[:, r].conj() @ Sw @ vecs[:, r] for r in range(d)])
    lam_cand = np.exp(1j * dim.gamma0 * (nv - d / 2.0) * c)
    lam_resid = float(np.max(np.abs(np.conj(lam_w) - lam_cand)))
    shift_ok = all(nv[(r + c) % d] == (nv[r] + 1) % d for r in range(d))
    if eq_amp > tol or law > tol or not shift_ok:
        raise PhaseMismatchError(
            f"eigenbasis correspondence drift: amplitude {eq_amp:.2e}, "
            f"product law {law:.2e}, unit shift {shift_ok}"
        )
    return EigenCorrespondence(
        osc=osc, g_phases=g, f_phases=f, predicted=E,
        eq_amplitude_residual=eq_amp, product_law_residual=law,
        product_phase=complex(np.prod(E / g)),
        literal_phase_residual=literal, lambda_claim_residual=lam_resid,
        unit_shift_ok=shift_ok,
    )


@dataclass(frozen=True)
class UqSl2Realisation:
    dim: Dimension
    m: tuple[int, int]
    mp: tuple[int, int]
    cross: int
    p: complex
    s_p: complex                  # p^{D/2}
    s_tilde_p: complex            # p^{(D-1)/2}, stored for reference only
    d_coef: float                 # d = d', real positive
    lowering: np.ndarray          # A
    intertwiner: np.ndarray       # S_{m-m'} at the exact (unreduced) label
    eigenvectors: np.ndarray
    n_values: np.ndarray
    delta: float                  # J3 window offset: 0 or D/(2c)
    j3_values: np.ndarray         # n + delta

    @property
    def raising(self) -> np.ndarray:
        return _dag(self.lowering)

    def diag_op(self, values) -> np.ndarray:
        v = self.eigenvectors
        return (v * np.asarray(values)) @ _dag(v)

    @property
    def j3_op(self) -> np.ndarray:
        return self.diag_op(self.j3_values)

    def bracket(self, x) -> np.ndarray:
        """Deformed bracket sin(gamma0 c x) / sin(gamma0 c / 2)."""
        return np.sin(self.dim.gamma0 * self.cross * np.asarray(x, dtype=float)) / np.sin(
            np.pi * self.cross / self.dim.d
        )


def build_uq_sl2(dim: Dimension, m, mp) -> UqSl2Realisation:
    """Deformed sl(2) pair on (m, m') with d = d' = 1/(2 |sin(gamma0 c / 2)|).

    J3 is read off from S_{m-m'} = s_p p^{J3}: the eigenvector phases fix a
    branch phi0 = <e_0|S_w|e_0>/s_p which is +1 or -1 exactly; the -1 branch
    shifts the integer window by delta = D/(2c).
    """
    m = (int(m[0]), int(m[1]))
    mp = (int(mp[0]), int(mp[1]))
    c = _require_noncollinear(dim, m, mp)
    s2 = np.sin(np.pi * c / dim.d)  # sin(gamma0 c / 2); nonzero for c != 0 mod D
    d_coef = 1.0 / (2.0 * abs(s2))
    A = d_coef * (schwinger_matrix(dim, m) + schwinger_matrix(dim, mp))
    w = (m[0] - mp[0], m[1] - mp[1])
    sys = eigensystem_by_recursion(dim, canonical_vector(dim, w))
    vecs = sys.eigenvectors
    Sw = schwinger_matrix(dim, w)
    p = np.exp(-1j * dim.gamma0 * c)
    s_p = np.exp(-1j * np.pi * c)
    mu0 = vecs[:, 0].conj() @ Sw @ vecs[:, 0]
    phi0 = mu0 / s_p
    if abs(phi0 - 1) < 1e-9:
        delta = 0.0
    elif abs(phi0 + 1) < 1e-9:
        delta = dim.d / (2.0 * c)
    else:
        raise PhaseMismatchError(
            f"branch phase {phi0:.6f} is neither +1 nor -1 at D={dim.d}, {m}, {mp}"
        )
    try:
        cbar = pow(c % dim.d, -1, dim.d)
    except ValueError:
        raise DegenerateSpectrumError(
            f"cross value {c} is not invertible mod {dim.d}; "
            "the number labeling degenerates") from None
    nv = (cbar * np.arange(dim.d)) % dim.d
    return UqSl2Realisation(
        dim=dim, m=m, mp=mp, cross=c, p=p, s_p=s_p,
        s_tilde_p=np.exp(-1j * dim.gamma0 * c * (dim.d - 1) / 2.0),
        d_coef=d_coef, lowering=A, intertwiner=Sw,
        eigenvectors=vecs, n_values=nv, delta=delta,
        j3_values=nv.astype(float) + delta,
    )


def sl2_residuals(o: UqSl2Realisation) -> dict:
    """Defining identities of the deformed sl(2) realization as residuals.

    intertwine:  A S_w = p S_w A   (and the conjugate with pbar)
    commutator:  [A, A^dag] = -[J3 + D/2]
    ladder:      A J3 = (J3 + 1) A with the wrap staying inside the J3 window
    casimir:     both orderings agree and equal the same constant matrix
    """
    dim = o.dim
    d = dim.d
    A, Ad = o.lowering, o.raising
    j3 = o.j3_values
    res = {
        "exponential": max_abs(o.intertwiner - o.s_p * o.diag_op(np.exp(-1j * dim.gamma0 * o.cross * j3))),
        "intertwine": max_abs(A @ o.intertwiner - o.p * o.intertwiner @ A),
        "intertwine_dag": max_abs(Ad @ o.intertwiner - np.conj(o.p) * o.intertwiner @ Ad),
        "commutator": max_abs(A @ Ad - Ad @ A + o.diag_op(o.bracket(j3 + d / 2.0))),
    }
    shifted = ((j3 - o.delta + 1) % d) + o.delta
    res["ladder"] = max_abs(A @ o.diag_op(j3) - o.diag_op(shifted) @ A)
    C1, C2, const = casimir_uq_sl2(o)
    res["casimir_forms"] = max_abs(C1 - C2)
    res["casimir_value"] = max_abs(C1 - const * np.eye(d))
    res["casimir_central"] = max(max_abs(C1 @ A - A @ C1), max_abs(C1 @ Ad - Ad @ C1))
    return res


def casimir_uq_sl2(o: UqSl2Realisation):
    """Both orderings of the Casimir and the constant they equal.

    Returns (C1, C2, constant) with C1 = A^dag A + [ (J3 + D/2 - 1/2)/2 ]^2 and
    C2 the A A^dag counterpart.  In this realization the Casimir is the nonzero
    constant 1/sin^2(gamma0 c / 2) times the identity (measured, not assumed).
    """
    d = o.dim.d
    j3 = o.j3_values
    C1 = o.raising @ o.lowering + o.diag_op(o.bracket((j3 + d / 2.0 - 0.5) / 2.0) ** 2)
    C2 = o.lowering @ o.raising + o.diag_op(o.bracket((j3 + d / 2.0 + 0.5) / 2.0) ** 2)
    const = 1.0 / np.sin(np.pi * o.cross / d) ** 2
    return C1, C2, const


def _sigma_values(o: UqSl2Realisation) -> np.ndarray:
    """Group-like weight sigma^{J3} entering the two-copy coupling.

    sigma(h) = (-1)^{n(h) c} e^{-i gamma0 c h / 2} with n(h) = h - delta; the
    alternating sign is required whenever c is odd, or the coupled copies fail
    to close on the same bracket.
    """
    c = o.cross
    nvals = np.rint(o.j3_values - o.delta).astype(int)
    sign = (-1.0) ** (nvals * (c % 2))
    return sign * np.exp(-0.5j * o.dim.gamma0 * c * o.j3_values)


@dataclass(frozen=True)
class CoproductReport:
    dim: Dimension
    cross: int
    deltas: tuple[float, float]
    closure: float
    intertwine: float
    intertwine_dag: float


def coproduct_check(dim: Dimension, m, mp, second: tuple | None = None,
                    alternate_sign: bool = True, max_dim: int = 7) -> CoproductReport:
    """Two-copy coupling of the deformed sl(2) realization, verified in D^2.

    Delta(A) = A (x) sigma^{H} + sigma^{-H} (x) A closes on the same deformed
    commutator with H additive, and intertwines with S_w (x) S_w.  The second
    copy defaults to the same pair; a different pair is accepted when its
    symplectic area matches mod D (same deformation parameter).
    """
    if dim.d > max_dim:
        raise DimensionTooLargeError(
            f"coproduct check runs in dimension D^2 = {dim.d ** 2}; limit is {max_dim}^2"
        )
    o1 = build_uq_sl2(dim, m, mp)
    o2 = o1 if second is None else build_uq_sl2(dim, second[0], second[1])
    if (o2.cross - o1.cross) % dim.d != 0:
        raise ValueError(
            f"deformation parameters differ: {o1.cross} vs {o2.cross} mod {dim.d}"
        )
    sv1 = _sigma_values(o1) if alternate_sign else np.exp(-0.5j * dim.gamma0 * o1.cross * o1.j3_values)
    sv2 = _sigma_values(o2) if alternate_sign else np.exp(-0.5j * dim.gamma0 * o2.cross * o2.j3_values)
    V1, V2 = o1.eigenvectors, o2.eigenvectors
    Sg2 = (V2 * sv2) @ _dag(V2)
    Sg1m = (V1 * np.conj(sv1)) @ _dag(V1)
    DX = np.kron(o1.lowering, Sg2) + np.kron(Sg1m, o2.lowering)
    DXd = np.kron(o1.raising, Sg2) + np.kron(Sg1m, o2.raising)
    W2 = np.kron(V1, V2)
    Hv = np.add.outer(o1.j3_values, o2.j3_values).ravel()
    c = o1.cross

    def mf(vals):
        return (W2 * vals) @ _dag(W2)

    closure = max_abs(DX @ DXd - DXd @ DX + mf(o1.bracket(Hv + dim.d / 2.0)))
    Kw = np.exp(-1j * np.pi * c) * mf(np.exp(-1j * dim.gamma0 * c * Hv))
    return CoproductReport(
        dim=dim, cross=c, deltas=(o1.delta, o2.delta),
        closure=closure,
        intertwine=max_abs(DX @ Kw - o1.p * Kw @ DX),
        intertwine_dag=max_abs(DXd @ Kw - np.conj(o1.p) * Kw @ DXd),
    )


@dataclass(frozen=True)
class TranslationReport:
    dim: Dimension
    m: tuple[int, int]
    mp: tuple[int, int]
    r: tuple[int, int]
    delta_alpha: int
    p_new: complex
    residual: float


def translated_lattice_deformation(dim: Dimension, m, mp, r) -> TranslationReport:
    """Deformation shift of the ladder built on the translated pair (m+r, m'+r).

    The translated A still intertwines with the original S_{m-m'} but with
    p' = p e^{i gamma0 delta_alpha}, delta_alpha = r x (m - m').  Translations
    act on the deformation parameter only; they are not unitarily realizable
    on the torus basis.
    """
    c = _require_noncollinear(dim, m, mp)
    w = (m[0] - mp[0], m[1] - mp[1])
    da = lattice_cross(r, w)
    # the translated pair has area c - da; collinearity there is an error the
    # builder raises itself
    ot = build_uq_sl2(dim, (m[0] + r[0], m[1] + r[1]), (mp[0] + r[0], mp[1] + r[1]))
    Sw = schwinger_matrix(dim, w)
    p_new = np.exp(-1j * dim.gamma0 * c) * np.exp(1j * dim.gamma0 * da)
    residual = max_abs(ot.lowering @ Sw - p_new * Sw @ ot.lowering)
    return TranslationReport(dim=dim, m=tuple(m), mp=tuple(mp), r=tuple(r),
                             delta_alpha=da, p_new=p_new, residual=residual)
