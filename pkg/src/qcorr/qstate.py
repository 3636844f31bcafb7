"""Construction, validation, and entropy computations for 2-qubit states.

States are plain complex numpy arrays: 4x4 for the pair, 2x2 for a single
qubit. Every constructor routes its output through :func:`validate_density`,
so any state in circulation is Hermitian, unit-trace, and positive
semidefinite, and is returned as a read-only array.

Bell-diagonal states are handled through their correlation triple
(c1, c2, c3); their spectrum is always taken from the four closed-form
Bell-basis eigenvalues rather than a numerical eigensolver. The general
Hermitian eigenproblems (entropy of arbitrary states, spin-flip spectra)
go through LAPACK's Hermitian solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "HERMITICITY_TOL",
    "TRACE_TOL",
    "PSD_TOL",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "PAULIS",
    "BELL_LABELS",
    "Violation",
    "InvalidStateError",
    "BellDiagonalParams",
    "BlochParams",
    "as_bell_params",
    "bell_diagonal_state",
    "werner_state",
    "bloch_compose",
    "bloch_decompose",
    "partial_trace",
    "von_neumann_entropy",
    "relative_entropy",
    "density_violations",
    "validate_density",
    "xlog2",
]

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
# Channel application compounds rounding, so positivity gets a looser bar.
PSD_TOL = 1e-9

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

_I2 = np.eye(2, dtype=complex)
_I4 = np.eye(4, dtype=complex)

# Fixed ordering for any Bell-basis spectral reporting.
BELL_LABELS = ("phi_plus", "phi_minus", "psi_plus", "psi_minus")

_PHI_PLUS = np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) / math.sqrt(2.0)


def _readonly(a: np.ndarray) -> np.ndarray:
    out = np.array(a)
    out.flags.writeable = False
    return out


def xlog2(p):
    """Elementwise p*log2(p) with the 0*log2(0) = 0 convention."""
    arr = np.asarray(p, dtype=float)
    out = np.zeros_like(arr)
    mask = arr > 0.0
    out[mask] = arr[mask] * np.log2(arr[mask])
    if arr.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class Violation:
    """One failed density-matrix invariant and by how much."""

    invariant: str  # 'hermiticity' | 'trace' | 'positivity'
    magnitude: float

    def __str__(self) -> str:
        return f"{self.invariant} violated by {self.magnitude:.3e}"


class InvalidStateError(ValueError):
    """Raised when a matrix fails density-operator validation."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class BellDiagonalParams:
    """Correlation triple (c1, c2, c3) of a Bell-diagonal 2-qubit state.

    The state is physical exactly when all four Bell-basis eigenvalues
    are nonnegative; those eigenvalues are cheap closed forms in the c's.
    """

    c1: float
    c2: float
    c3: float

    def bell_eigenvalues(self) -> np.ndarray:
        """Spectrum in the fixed ordering (phi+, phi-, psi+, psi-)."""
        c1, c2, c3 = self.c1, self.c2, self.c3
        return np.array(
            [
                (1.0 + c1 - c2 + c3) / 4.0,
                (1.0 - c1 + c2 + c3) / 4.0,
                (1.0 + c1 + c2 - c3) / 4.0,
                (1.0 - c1 - c2 - c3) / 4.0,
            ]
        )

    def is_physical(self, tol: float = PSD_TOL) -> bool:
        return bool(self.bell_eigenvalues().min() >= -tol)

    def validate(self, tol: float = PSD_TOL) -> "BellDiagonalParams":
        lam = self.bell_eigenvalues()
        k = int(np.argmin(lam))
        if lam[k] < -tol:
            raise ValueError(
                f"non-physical correlation triple ({self.c1}, {self.c2}, "
                f"{self.c3}): Bell eigenvalue {BELL_LABELS[k]} = {lam[k]:.6f} < 0"
            )
        return self

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)


def as_bell_params(value) -> BellDiagonalParams:
    """Coerce a BellDiagonalParams or a length-3 sequence of reals."""
    if isinstance(value, BellDiagonalParams):
        return value
    seq = tuple(float(v) for v in value)
    if len(seq) != 3:
        raise ValueError(f"expected 3 correlation coefficients, got {len(seq)}")
    return BellDiagonalParams(*seq)


@dataclass(frozen=True)
class BlochParams:
    """Local Bloch vectors and 3x3 correlation matrix of a 2-qubit state.

    x[n] = Tr[rho (sigma_n (x) I)], y[n] = Tr[rho (I (x) sigma_n)],
    T[n, m] = Tr[rho (sigma_n (x) sigma_m)].
    """

    x: np.ndarray
    y: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", _readonly(np.asarray(self.x, dtype=float)))
        object.__setattr__(self, "y", _readonly(np.asarray(self.y, dtype=float)))
        object.__setattr__(self, "T", _readonly(np.asarray(self.T, dtype=float)))
        if self.x.shape != (3,) or self.y.shape != (3,) or self.T.shape != (3, 3):
            raise ValueError("BlochParams needs two 3-vectors and a 3x3 matrix")

    def is_bell_diagonal(self, tol: float = 1e-9) -> bool:
        off = self.T - np.diag(np.diag(self.T))
        return bool(
            np.abs(self.x).max() <= tol
            and np.abs(self.y).max() <= tol
            and np.abs(off).max() <= tol
        )

    def diagonal_correlations(self) -> BellDiagonalParams:
        """Read (c1, c2, c3) off the T diagonal; caller checks is_bell_diagonal."""
        return BellDiagonalParams(*(float(v) for v in np.diag(self.T)))


def density_violations(
    m: np.ndarray,
    tol: float = HERMITICITY_TOL,
    psd_tol: float = PSD_TOL,
) -> list[Violation]:
    """Report which density-matrix invariants `m` breaks and by how much.

    `tol` bounds the Hermiticity defect and |Tr - 1|; `psd_tol` bounds how
    negative the smallest eigenvalue may be. An empty list means valid.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (2, 4):
        raise ValueError(f"expected a 2x2 or 4x4 matrix, got shape {m.shape}")
    out: list[Violation] = []
    herm = float(np.abs(m - m.conj().T).max())
    if herm > tol:
        out.append(Violation("hermiticity", herm))
    tr = float(abs(np.trace(m) - 1.0))
    if tr > tol:
        out.append(Violation("trace", tr))
    # Eigenvalues of the Hermitian part; meaningful whenever herm is small.
    lam_min = float(np.linalg.eigvalsh((m + m.conj().T) / 2.0).min())
    if lam_min < -psd_tol:
        out.append(Violation("positivity", -lam_min))
    return out


def validate_density(
    m: np.ndarray,
    tol: float = HERMITICITY_TOL,
    psd_tol: float = PSD_TOL,
) -> np.ndarray:
    """Return `m` as a validated, read-only density matrix.

    Raises :class:`InvalidStateError` carrying the full violation report
    otherwise. No repair is attempted.
    """
    m = np.asarray(m, dtype=complex)
    bad = density_violations(m, tol=tol, psd_tol=psd_tol)
    if bad:
        raise InvalidStateError(bad)
    return _readonly(m)


def bell_diagonal_state(params) -> np.ndarray:
    """(1/4)(I + sum_i c_i sigma_i (x) sigma_i) for a physical triple."""
    p = as_bell_params(params).validate()
    m = 0.25 * (
        _I4
        + p.c1 * np.kron(SIGMA_X, SIGMA_X)
        + p.c2 * np.kron(SIGMA_Y, SIGMA_Y)
        + p.c3 * np.kron(SIGMA_Z, SIGMA_Z)
    )
    return validate_density(m)


def werner_state(z: float) -> np.ndarray:
    """z |phi+><phi+| + (1 - z)/4 I, z in [0, 1].

    Identical to ``bell_diagonal_state((z, -z, z))`` up to rounding.
    """
    z = float(z)
    if not 0.0 <= z <= 1.0:
        raise ValueError(f"werner parameter z must lie in [0, 1], got {z}")
    m = z * np.outer(_PHI_PLUS, _PHI_PLUS.conj()) + (1.0 - z) / 4.0 * _I4
    return validate_density(m)


def bloch_decompose(rho: np.ndarray) -> BlochParams:
    """Trace out the Bloch parameters (x, y, T) of a 2-qubit state."""
    rho = np.asarray(rho, dtype=complex)
    x = np.array([np.trace(rho @ np.kron(s, _I2)).real for s in PAULIS])
    y = np.array([np.trace(rho @ np.kron(_I2, s)).real for s in PAULIS])
    T = np.array(
        [
            [np.trace(rho @ np.kron(sn, sm)).real for sm in PAULIS]
            for sn in PAULIS
        ]
    )
    return BlochParams(x, y, T)


def bloch_compose(params: BlochParams) -> np.ndarray:
    """Rebuild the state from Bloch parameters; rejects non-physical sets."""
    m = _I4.copy()
    for n, s in enumerate(PAULIS):
        m += params.x[n] * np.kron(s, _I2)
        m += params.y[n] * np.kron(_I2, s)
    for n, sn in enumerate(PAULIS):
        for k, sm in enumerate(PAULIS):
            m += params.T[n, k] * np.kron(sn, sm)
    return validate_density(0.25 * m)


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Reduced state of subsystem ``keep`` ('A' or 'B') of a 2-qubit state."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    if keep == "A":
        return _readonly(np.einsum("abcb->ac", r))
    if keep == "B":
        return _readonly(np.einsum("abad->bd", r))
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def _clamped_spectrum(rho: np.ndarray) -> np.ndarray:
    w = np.linalg.eigvalsh(np.asarray(rho, dtype=complex))
    # Spectrum-boundary rounding: [-PSD_TOL, 0) counts as 0.
    return np.where((w < 0.0) & (w >= -PSD_TOL), 0.0, w)


def von_neumann_entropy(rho: np.ndarray) -> float:
    """-sum lambda log2 lambda over the spectrum, in bits."""
    return float(-xlog2(_clamped_spectrum(rho)).sum())


def relative_entropy(rho: np.ndarray, chi: np.ndarray, support_tol: float = 1e-12) -> float:
    """S(rho || chi) = -Tr(rho log2 chi) - S(rho), in bits.

    Returns ``math.inf`` when rho has weight outside the support of chi.
    """
    rho = np.asarray(rho, dtype=complex)
    w, v = np.linalg.eigh(np.asarray(chi, dtype=complex))
    weights = np.einsum("ik,ij,jk->k", v.conj(), rho, v).real
    null = w <= support_tol
    if weights[null].sum() > 1e-12:
        return math.inf
    cross = -float(np.sum(weights[~null] * np.log2(w[~null])))
    val = cross - von_neumann_entropy(rho)
    if -1e-10 < val < 0.0:
        return 0.0
    return val
