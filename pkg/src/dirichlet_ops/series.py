"""Sparse Dirichlet polynomials and coefficient rules.

A Dirichlet polynomial is a finite sum  sum_n a_n n^(-s)  stored as a sparse
coefficient map index -> complex.  The normal form keeps no explicit zeros
and all indices are integers >= 1, so equality of coefficient maps is
equality of the represented series.  Instances are immutable after
construction; every operation returns a fresh object, which makes
unrestricted concurrent reads safe.

Infinite series enter only through CoefficientRule: a deterministic, total
generator n -> a_n plus an optional vectorized form used by the estimators.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from math import fsum
from types import MappingProxyType
from typing import Callable

import numpy as np

from .errors import DomainError

__all__ = [
    "DirichletPolynomial",
    "HalfPlanePoint",
    "CoefficientRule",
    "ZERO",
    "monomial",
    "add",
    "scale",
    "dirichlet_multiply",
    "coefficient_close",
    "truncate",
    "ones_rule",
    "eta_rule",
    "zeta_shift_rule",
    "moebius_rule",
    "table_rule",
]


def _validate_index(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"series index must be an integer >= 1, got {n!r}")
    if n < 1:
        raise DomainError(f"series index must be >= 1, got {n}")
    return int(n)


class DirichletPolynomial:
    """Finite coefficient map n -> a_n, zeros implied elsewhere.

    Accepts a mapping or an iterable of (index, coefficient) pairs;
    duplicate indices are accumulated.  Exact zero coefficients are dropped
    so two polynomials are equal iff they represent the same function.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, complex] = {}
        for n, a in items:
            n = _validate_index(n)
            a = complex(a)
            if not (math.isfinite(a.real) and math.isfinite(a.imag)):
                raise DomainError(f"coefficient at n={n} must be finite, got {a!r}")
            acc[n] = acc.get(n, 0j) + a
        data = {n: a for n, a in sorted(acc.items()) if a != 0}
        object.__setattr__(self, "_coeffs", MappingProxyType(data))

    @property
    def coeffs(self) -> Mapping[int, complex]:
        return self._coeffs

    def coefficient(self, n: int) -> complex:
        return self._coeffs.get(_validate_index(n), 0j)

    def items(self):
        return self._coeffs.items()

    def indices(self):
        return self._coeffs.keys()

    @property
    def max_index(self) -> int:
        # 0 for the zero polynomial
        return max(self._coeffs, default=0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def term_count(self) -> int:
        return len(self._coeffs)

    def index_array(self) -> np.ndarray:
        return np.fromiter(self._coeffs.keys(), dtype=np.int64, count=len(self._coeffs))

    def coefficient_array(self) -> np.ndarray:
        return np.fromiter(self._coeffs.values(), dtype=np.complex128, count=len(self._coeffs))

    def has_real_coefficients(self) -> bool:
        return all(a.imag == 0 for a in self._coeffs.values())

    def __eq__(self, other):
        if not isinstance(other, DirichletPolynomial):
            return NotImplemented
        return dict(self._coeffs) == dict(other._coeffs)

    __hash__ = None  # mutable-feeling value type, keep it out of sets

    def __add__(self, other):
        if not isinstance(other, DirichletPolynomial):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, DirichletPolynomial):
            return NotImplemented
        return add(self, scale(-1.0, other))

    def __neg__(self):
        return scale(-1.0, self)

    def __rmul__(self, c):
        if isinstance(c, (int, float, complex)) and not isinstance(c, bool):
            return scale(c, self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, DirichletPolynomial):
            return dirichlet_multiply(self, other)
        if isinstance(other, (int, float, complex)) and not isinstance(other, bool):
            return scale(other, self)
        return NotImplemented

    def __repr__(self):
        if self.is_zero:
            return "DirichletPolynomial(0)"
        body = ", ".join(f"{n}: {a}" for n, a in self.items())
        return f"DirichletPolynomial({{{body}}})"


ZERO = DirichletPolynomial()


def monomial(n: int, coefficient=1.0) -> DirichletPolynomial:
    """The single term  coefficient * n^(-s)."""
    return DirichletPolynomial({_validate_index(n): coefficient})


def add(f: DirichletPolynomial, g: DirichletPolynomial) -> DirichletPolynomial:
    out = dict(f.coeffs)
    for n, b in g.items():
        out[n] = out.get(n, 0j) + b
    return DirichletPolynomial(out)


def scale(c, f: DirichletPolynomial) -> DirichletPolynomial:
    c = complex(c)
    return DirichletPolynomial({n: c * a for n, a in f.items()})


def dirichlet_multiply(f: DirichletPolynomial, g: DirichletPolynomial) -> DirichletPolynomial:
    """Coefficient convolution: (f*g)_n = sum over divisor splits n1*n2 = n.

    Iterates the stored index pairs directly, so cost is
    O(terms(f) * terms(g)) regardless of index magnitudes.  Each output
    coefficient is accumulated with exactly rounded summation, which makes
    the product independent of operand order bit for bit.
    """
    buckets: dict[int, tuple[list, list]] = {}
    for n1, a in f.items():
        for n2, b in g.items():
            p = a * b
            re_l, im_l = buckets.setdefault(n1 * n2, ([], []))
            re_l.append(p.real)
            im_l.append(p.imag)
    return DirichletPolynomial(
        {n: complex(fsum(re_l), fsum(im_l)) for n, (re_l, im_l) in buckets.items()}
    )


def coefficient_close(
    f: DirichletPolynomial, g: DirichletPolynomial, rtol: float = 1e-12, atol: float = 0.0
) -> bool:
    """Coefficient-wise |f_n - g_n| <= atol + rtol * max(|f_n|, |g_n|) over
    the union of stored indices (missing terms count as zero)."""
    for n in f.indices() | g.indices():
        a, b = f.coefficient(n), g.coefficient(n)
        if abs(a - b) > atol + rtol * max(abs(a), abs(b)):
            return False
    return True


@dataclass(frozen=True)
class HalfPlanePoint:
    """A point sigma + i t of the complex plane, named by half-plane role."""

    sigma: float
    t: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and math.isfinite(self.t)):
            raise DomainError(f"half-plane point must be finite, got {self.sigma!r} + i {self.t!r}")

    def as_complex(self) -> complex:
        return complex(self.sigma, self.t)


@dataclass(frozen=True)
class CoefficientRule:
    """Deterministic total coefficient generator n -> a_n for n >= 1.

    `vectorized`, when given, must agree with `generator` on every index and
    exists purely so the window estimators can sweep n up to 10^5 and beyond
    without a Python-level loop.  `known_abscissas` is reference metadata
    consumed only by tests, never by the estimators themselves.
    """

    tag: str
    generator: Callable[[int], complex]
    vectorized: Callable[[np.ndarray], np.ndarray] | None = None
    known_abscissas: Mapping[str, float] | None = None

    def __call__(self, n: int) -> complex:
        return complex(self.generator(_validate_index(n)))

    def values(self, ns) -> np.ndarray:
        return np.asarray(self.values_raw(ns), dtype=np.complex128)

    def values_raw(self, ns) -> np.ndarray:
        """values() without the complex128 coercion: the vectorized rule's
        native dtype comes through, so streaming summers over ~10^8 indices
        skip a full conversion pass.  Same numbers, narrower carrier."""
        ns = np.asarray(ns, dtype=np.int64)
        if ns.size and ns.min() < 1:
            raise DomainError("rule indices must be >= 1")
        if self.vectorized is not None:
            return np.asarray(self.vectorized(ns))
        return np.array([complex(self.generator(int(n))) for n in ns], dtype=np.complex128)


def ones_rule() -> CoefficientRule:
    """a_n = 1 for all n (the canonical boundary-line divergence witness)."""
    return CoefficientRule(
        tag="ones",
        generator=lambda n: 1.0,
        vectorized=lambda ns: np.ones(ns.shape, dtype=np.float64),
        known_abscissas={"sigma_c": 1.0, "sigma_a": 1.0},
    )


def eta_rule() -> CoefficientRule:
    """Alternating signs a_n = (-1)^(n+1); converges strictly left of its
    absolute-convergence line, which separates the two abscissas."""
    return CoefficientRule(
        tag="eta",
        generator=lambda n: 1.0 if n % 2 else -1.0,
        vectorized=lambda ns: np.where(ns % 2 == 1, 1.0, -1.0),
        known_abscissas={"sigma_c": 0.0, "sigma_u": 0.0, "sigma_a": 1.0},
    )


def _inv_power(nf, k: int):
    # repeated multiply beats np.power for the small integer exponents we
    # use; the scalar and vectorized rule paths both route through here so
    # they agree bit for bit (elementwise IEEE ops round identically)
    if k == 0:
        return np.ones_like(nf) if isinstance(nf, np.ndarray) else 1.0
    r = 1.0 / nf
    out = r.copy() if isinstance(nf, np.ndarray) else r
    for _ in range(k - 1):
        out *= r
    return out


def zeta_shift_rule(k: int) -> CoefficientRule:
    """a_n = n^(-k) for an integer k >= 0; both abscissas sit at 1 - k."""
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 0:
        raise DomainError(f"zeta_shift exponent must be an integer >= 0, got {k!r}")
    k = int(k)
    return CoefficientRule(
        tag=f"zeta_shift({k})",
        generator=lambda n: _inv_power(float(n), k),
        vectorized=lambda ns: _inv_power(ns.astype(np.float64), k),
        known_abscissas={"sigma_c": 1.0 - k, "sigma_a": 1.0 - k},
    )


def _moebius_value(n: int) -> float:
    if n == 1:
        return 1.0
    sign = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0.0
            sign = -sign
        p += 1 if p == 2 else 2
    if m > 1:
        sign = -sign
    return float(sign)


def moebius_rule() -> CoefficientRule:
    """Square-free sign pattern: convolution inverse of the ones rule."""
    return CoefficientRule(
        tag="moebius",
        generator=_moebius_value,
        known_abscissas={"sigma_a": 1.0},
    )


def table_rule(mapping: Mapping[int, complex], tag: str = "table") -> CoefficientRule:
    """Finite table promoted to a rule; indices outside the table give 0."""
    frozen = {_validate_index(n): complex(a) for n, a in mapping.items()}

    def gen(n: int) -> complex:
        return frozen.get(n, 0j)

    def vec(ns: np.ndarray) -> np.ndarray:
        return np.array([frozen.get(int(n), 0j) for n in ns], dtype=np.complex128)

    return CoefficientRule(tag=tag, generator=gen, vectorized=vec)


def truncate(rule: CoefficientRule, N: int) -> DirichletPolynomial:
    """First N coefficients of a rule as a polynomial (zeros dropped)."""
    N = _validate_index(N)
    ns = np.arange(1, N + 1, dtype=np.int64)
    vals = rule.values(ns)
    nz = np.nonzero(vals)[0]
    return DirichletPolynomial({int(ns[i]): complex(vals[i]) for i in nz})
