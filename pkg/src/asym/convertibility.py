"""Single-shot exact convertibility oracle via positive definite interpolators.

A conversion psi -> phi under G-covariant operations is possible iff
chi_psi = chi_phi * f for some positive definite f on G; the candidate f is
the ratio of characteristic functions (zero where chi_phi vanishes) and
positive definiteness is decided by the minimum eigenvalue of the Gram
matrix M[g, h] = f(g^-1 h).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charfn import TOL_ZERO, CharFunction, char_power, trivial_char
from .errors import GroupMismatch, NotHermitian, ZeroSetViolation
from .groups import FiniteGroup

TOL_PSD = 1e-9
TOL_HERM = 1e-8


@dataclass(frozen=True, eq=False)
class GroupFunction:
    group: FiniteGroup
    values: np.ndarray  # (n,) complex


@dataclass(frozen=True, eq=False)
class FeasibilityResult:
    feasible: bool
    min_gram_eigenvalue: float
    f: GroupFunction
    method: str  # 'gram' or 'fourier'
    modulus_witness: int | None = None  # smallest g with |f(g)| > 1, if any


def build_interpolator(
    char_psi: CharFunction,
    char_phi: CharFunction,
    tol_zero: float = TOL_ZERO,
    *,
    psi_zero: np.ndarray | None = None,
    phi_zero: np.ndarray | None = None,
) -> GroupFunction:
    """f = chi_psi / chi_phi off the phi zero set, 0 on it.

    Raises ZeroSetViolation when chi_phi vanishes somewhere chi_psi does not;
    no interpolating function can exist there and the conversion rate is zero.
    Zero masks may be supplied explicitly (tensor-power callers classify on
    the single-copy functions, where the tolerance is meaningful).
    """
    if not char_psi.group.same_as(char_phi.group):
        raise GroupMismatch("characteristic functions live on different groups")
    log_tz = math.log(tol_zero)
    if phi_zero is None:
        phi_zero = np.isneginf(char_phi.logmod) | (char_phi.logmod <= log_tz)
    if psi_zero is None:
        psi_zero = np.isneginf(char_psi.logmod) | (char_psi.logmod <= log_tz)
    bad = np.where(phi_zero & ~psi_zero)[0]
    if bad.size:
        raise ZeroSetViolation(int(bad[0]))
    with np.errstate(invalid="ignore", under="ignore", over="ignore"):
        # cap the log-ratio so a grossly infeasible instance yields a huge
        # finite |f| (clearly failing the Gram test) instead of overflow
        dlog = np.minimum(char_psi.logmod - char_phi.logmod, 350.0)
        vals = np.exp(dlog + 1j * (char_psi.phase - char_phi.phase))
    vals[phi_zero] = 0.0
    vals[np.isneginf(char_psi.logmod) & ~phi_zero] = 0.0
    return GroupFunction(group=char_psi.group, values=vals)


def is_positive_definite(f: GroupFunction, tol_psd: float = TOL_PSD) -> FeasibilityResult:
    """Gram-matrix positive semidefiniteness test for a function on G.

    Builds M[g, h] = f(g^-1 h) and reports feasible iff its minimum
    eigenvalue is >= -tol_psd * |G|. A non-Hermitian M means f cannot be
    positive definite and is reported as an error.
    """
    group = f.group
    n = group.order
    M = f.values[group.mult[group.inv, :]]
    herm_dev = float(np.abs(M - M.conj().T).max())
    scale = max(1.0, float(np.abs(f.values).max()))
    if herm_dev > TOL_HERM * scale:
        raise NotHermitian(f"Gram matrix deviates from Hermitian by {herm_dev:.3e}")
    min_eig = float(np.linalg.eigvalsh((M + M.conj().T) / 2.0)[0])
    over = np.where(np.abs(f.values) > 1.0 + tol_psd)[0]
    return FeasibilityResult(
        feasible=min_eig >= -tol_psd * n,
        min_gram_eigenvalue=min_eig,
        f=f,
        method="gram",
        modulus_witness=int(over[0]) if over.size else None,
    )


def feasible_exact(
    char_psi: CharFunction,
    char_phi: CharFunction,
    N: int,
    M: int,
    tol_psd: float = TOL_PSD,
    tol_zero: float = TOL_ZERO,
) -> FeasibilityResult:
    """Feasibility of psi^N -> phi^M under G-covariant operations.

    M = 0 is accepted as the trivial (symmetric) target, which is always
    reachable; M >= 1 runs the interpolator construction plus Gram test.
    Zero sets are classified on the single-copy functions: chi^N vanishes
    exactly when chi does, while a fixed tolerance on |chi|^M would
    misclassify benign small moduli at large M.
    """
    log_tz = math.log(tol_zero)
    psi_zero = np.isneginf(char_psi.logmod) | (char_psi.logmod <= log_tz)
    if M == 0:
        target = trivial_char(char_phi.group)
        phi_zero = np.zeros(char_phi.group.order, dtype=bool)
    else:
        target = char_power(char_phi, M)
        phi_zero = np.isneginf(char_phi.logmod) | (char_phi.logmod <= log_tz)
    f = build_interpolator(
        char_power(char_psi, N), target, tol_zero, psi_zero=psi_zero, phi_zero=phi_zero
    )
    return is_positive_definite(f, tol_psd)


def minimal_copies_search(
    char_psi: CharFunction,
    char_phi: CharFunction,
    r: float,
    n_max: int,
    tol_psd: float = TOL_PSD,
    tol_zero: float = TOL_ZERO,
) -> int | None:
    """Smallest N <= n_max from which psi^N -> phi^{floor(rN)} stays feasible.

    Persistence is required: every N' in [N, n_max] must pass the oracle.
    Returns None when no such N exists (in particular whenever r exceeds the
    optimal exact rate and the witness inequality eventually fails).
    """
    if n_max < 1 or n_max > 10**4:
        raise ValueError(f"n_max must be in [1, 10^4], got {n_max}")
    first = None
    for N in range(n_max, 0, -1):
        M = math.floor(r * N + 1e-12)
        try:
            ok = feasible_exact(char_psi, char_phi, N, M, tol_psd, tol_zero).feasible
        except ZeroSetViolation:
            ok = False
        if not ok:
            break
        first = N
    return first
