"""Spectrum of the termwise derivative and its resolvent calculus.

On the subspace with vanishing constant term the derivative's spectrum is
the set {-log n : n >= 2} of symbol values, each an eigenvalue with
eigenvector the corresponding monomial; on the full space the point 0
joins (constants are annihilated).  Away from the spectrum the resolvent
of (lambda I - D) acts diagonally, b_n -> b_n / (log n + lambda), with an
extra b_1 / lambda coefficient on the full space.

spectral_gap exploits that |log n + lambda| is unimodal in log n: the
minimizing integer sits next to exp(-Re lambda), so an O(1) window scan
equals the brute-force minimum whenever that minimizer is in range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SpectralError
from .series import DirichletPolynomial, monomial

__all__ = [
    "FULL",
    "ZERO_SUBSPACE",
    "SPECTRUM_TOLERANCE",
    "NEAR_SPECTRUM_RADIUS",
    "SpectrumClassification",
    "spectral_gap",
    "classify_point",
    "resolvent_apply",
    "VariationReport",
    "bv_check",
    "ReciprocalReport",
    "reciprocal_spectrum_check",
]

FULL = "full"
ZERO_SUBSPACE = "zero_subspace"

# absolute tolerance for "equals a spectrum point"; see classify_point
SPECTRUM_TOLERANCE = 1e-12
# resolvent points closer than this to the spectrum get a warning flag
NEAR_SPECTRUM_RADIUS = 1e-6

_LOG2 = math.log(2.0)
# beyond this, exp(-Re lambda) exceeds any indexable integer and the
# nearest log n is dense to fp resolution
_X_HUGE = 43.0


def _validate_space(space: str) -> str:
    if space not in (FULL, ZERO_SUBSPACE):
        raise DomainError(f"space must be '{FULL}' or '{ZERO_SUBSPACE}', got {space!r}")
    return space


def _symbol_distance(lam: complex) -> tuple[float, int]:
    """min over n >= 2 of |log n + lambda| and its minimizing index.

    |log n + lambda|^2 = (log n - x*)^2 + (Im lambda)^2 with x* = -Re lambda
    is unimodal in log n, so only the integers bracketing exp(x*) compete.
    """
    x_star = -lam.real
    if x_star <= _LOG2:
        cands = [2, 3]
    elif x_star > _X_HUGE:
        # log n comes within ~exp(-x*) of x*: the real part is matched to
        # fp resolution and only the imaginary offset survives
        return abs(lam.imag), int(round(math.exp(min(x_star, 700.0)))) if x_star < 700 else 0
    else:
        n0 = math.exp(x_star)
        lo = max(2, int(math.floor(n0)) - 2)
        cands = list(range(lo, int(math.ceil(n0)) + 3))
    best_n = cands[0]
    best = abs(complex(math.log(best_n), 0.0) + lam)
    for n in cands[1:]:
        d = abs(complex(math.log(n), 0.0) + lam)
        if d < best:
            best, best_n = d, n
    return best, best_n


def spectral_gap(lmbda) -> float:
    """min(|lambda|, min_{n>=2} |log n + lambda|): distance from lambda to
    the full-space spectrum.  Exact O(1) window method."""
    lam = complex(lmbda)
    inner, _ = _symbol_distance(lam)
    return min(abs(lam), inner)


@dataclass(frozen=True)
class SpectrumClassification:
    """Verdict for one spectral parameter.

    kind is one of 'eigenvalue' (lambda = -log n, eigenvector the n-th
    monomial), 'eigenvalue_constant' (lambda = 0 on the full space, the
    constants are the kernel and the range misses them), 'resolvent_point'
    (invertible, with gap the coefficient-wise inverse bound), or
    'spectrum_non_eigen' (kept for completeness; the derivative's spectrum
    on these spaces is exhausted by the other kinds).
    """

    lam: complex
    space: str
    kind: str
    n: int | None = None
    eigenvector: DirichletPolynomial | None = None
    gap: float | None = None
    near_spectrum: bool = False
    reason: str = ""


def classify_point(lmbda, space: str) -> SpectrumClassification:
    """Locate lambda relative to the derivative's spectrum on the given
    space.  Membership is decided to absolute tolerance SPECTRUM_TOLERANCE;
    note that for Re lambda << -30 consecutive -log n are themselves closer
    than that tolerance, so verdicts there say 'within tolerance of some
    spectrum point', not which one.
    """
    space = _validate_space(space)
    lam = complex(lmbda)

    inner, n_best = _symbol_distance(lam)
    if inner <= SPECTRUM_TOLERANCE:
        return SpectrumClassification(
            lam=lam,
            space=space,
            kind="eigenvalue",
            n=n_best,
            eigenvector=monomial(n_best),
            reason=f"lambda = -log {n_best} to within {SPECTRUM_TOLERANCE}",
        )
    if space == FULL and abs(lam) <= SPECTRUM_TOLERANCE:
        return SpectrumClassification(
            lam=lam,
            space=space,
            kind="eigenvalue_constant",
            n=1,
            eigenvector=monomial(1),
            reason=(
                "constants are annihilated (eigenvalue 0) and the range "
                "contains no constant term, so 0 is not invertible"
            ),
        )

    # resolvent territory; on the zero-constant subspace there is no
    # b_1/lambda coefficient, so |lambda| does not enter the inverse bound
    gap = inner if space == ZERO_SUBSPACE else min(abs(lam), inner)
    dist = inner if space == ZERO_SUBSPACE else min(abs(lam), inner)
    return SpectrumClassification(
        lam=lam,
        space=space,
        kind="resolvent_point",
        gap=gap,
        near_spectrum=dist < NEAR_SPECTRUM_RADIUS,
        reason="within NEAR_SPECTRUM_RADIUS of the spectrum" if dist < NEAR_SPECTRUM_RADIUS else "",
    )


def resolvent_apply(lmbda, f: DirichletPolynomial, space: str) -> DirichletPolynomial:
    """(lambda I - D)^(-1) f, coefficient-wise b_n -> b_n / (log n + lambda)
    (plus b_1 -> b_1 / lambda on the full space).

    Raises SpectralError when lambda is classified inside the spectrum, and
    DomainError when f has a constant term but the zero subspace was named.
    """
    space = _validate_space(space)
    lam = complex(lmbda)
    cls = classify_point(lam, space)
    if cls.kind != "resolvent_point":
        raise SpectralError(
            f"lambda = {lam} lies in the spectrum ({cls.kind}); no resolvent there",
            classification=cls,
        )
    if space == ZERO_SUBSPACE and f.coefficient(1) != 0:
        raise DomainError(
            f"zero_subspace resolvent needs a vanishing constant term, got b_1 = {f.coefficient(1)}"
        )
    out = {}
    for n, b in f.items():
        if n == 1:
            out[1] = b / lam
        else:
            out[n] = b / (math.log(n) + lam)
    return DirichletPolynomial(out)


@dataclass(frozen=True)
class VariationReport:
    """Total-variation diagnostics for the damped resolvent symbol
    gamma_n = 1 / ((log n + lambda) n^delta).

    fitted_constant is the smallest C with
    |gamma_n - gamma_{n+1}| <= C / (gap^2 n^(1 + delta/2)) over the scanned
    range; the verdict is 'bounded' when C has stabilized (< 1% change over
    the last dyadic step), since the majorant then certifies a finite total
    variation.  majorant_ratio compares the observed variation increment on
    (N/2, N] against the integral bound of the fitted majorant tail; it is
    <= 1 by construction of C.
    """

    lam: complex
    delta: float
    N: int
    gap: float
    variation: float
    partial_sums: np.ndarray
    fitted_constant: float
    majorant_ratio: float
    verdict: str


def bv_check(lmbda, delta: float, N: int = 10**4) -> VariationReport:
    lam = complex(lmbda)
    if not (0.0 < delta < 1.0):
        raise DomainError(f"delta must lie in (0, 1), got {delta!r}")
    if N < 10**3:
        raise DomainError(f"N must be >= 10^3, got {N}")
    mu = spectral_gap(lam)
    if mu <= 0.0:
        raise SpectralError(
            f"lambda = {lam} has zero spectral gap; damped symbol is unbounded",
            classification=classify_point(lam, FULL),
        )

    ns = np.arange(2, N + 2, dtype=np.float64)
    gamma = 1.0 / ((np.log(ns) + lam) * ns**delta)
    diffs = np.abs(np.diff(gamma))  # n = 2 .. N
    V = np.cumsum(diffs)

    n_lo = ns[:-1]
    weights = mu * mu * diffs * n_lo ** (1.0 + 0.5 * delta)
    running_c = np.maximum.accumulate(weights)
    C = float(running_c[-1])
    C_half = float(running_c[(N // 2) - 2]) if N // 2 >= 2 else C
    stable = C > 0 and abs(C - C_half) <= 0.01 * C

    # integral comparison for the majorant tail past N/2
    M = float(N // 2)
    tail_majorant = (C / (mu * mu)) * (2.0 / delta) * M ** (-0.5 * delta)
    increment = float(V[-1] - V[(N // 2) - 2]) if N // 2 >= 2 else float(V[-1])
    ratio = increment / tail_majorant if tail_majorant > 0 else math.inf

    return VariationReport(
        lam=lam,
        delta=float(delta),
        N=int(N),
        gap=mu,
        variation=float(V[-1]),
        partial_sums=V,
        fitted_constant=C,
        majorant_ratio=float(ratio),
        verdict="bounded" if stable else "violated",
    )


def _reciprocal_symbol_distance(w: complex) -> float:
    """inf over n >= 2 of |-1/log n - w|, by the same unimodal window idea.

    The candidate values t_n = -1/log n fill [-1/log 2, 0); the infimum is
    attained next to the n with -1/log n ~ Re w, or approached as n -> inf
    when Re w clips at 0 (giving |w|, since t_n -> 0-).
    """
    a = w.real
    cands = {2, 3}
    tail = abs(w)  # the n -> infinity limit of the distance
    if a <= -1.0 / _LOG2:
        pass  # clipped left: n = 2 is the closest the sequence gets
    elif a < 0.0:
        x = -1.0 / a  # target log n
        if x <= _X_HUGE:
            n0 = math.exp(x)
            lo = max(2, int(math.floor(n0)) - 2)
            cands.update(range(lo, int(math.ceil(n0)) + 3))
        # x beyond the window: covered by the tail limit
    best = min(abs((-1.0 / math.log(n)) - w) for n in sorted(cands))
    return min(best, tail)


@dataclass(frozen=True)
class ReciprocalReport:
    mu: complex
    in_rho_d: bool
    in_rho_j_reciprocal: bool
    consistent: bool
    gap_d: float
    gap_j: float


def reciprocal_spectrum_check(mu) -> ReciprocalReport:
    """Cross-check the inverse-pair spectral correspondence on the zero
    subspace: mu avoids the derivative's spectrum exactly when 1/mu avoids
    the integration operator's spectrum {-1/log n}.  Both sides use the
    same membership tolerance, so agreement is expected everywhere."""
    m = complex(mu)
    if m == 0:
        raise DomainError("mu must be nonzero (0 is handled by classify_point directly)")
    cls = classify_point(m, ZERO_SUBSPACE)
    in_rho_d = cls.kind == "resolvent_point"
    gap_d, _ = _symbol_distance(m)
    gap_j = _reciprocal_symbol_distance(1.0 / m)
    in_rho_j = gap_j > SPECTRUM_TOLERANCE
    return ReciprocalReport(
        mu=m,
        in_rho_d=in_rho_d,
        in_rho_j_reciprocal=in_rho_j,
        consistent=in_rho_d == in_rho_j,
        gap_d=gap_d,
        gap_j=gap_j,
    )
