"""Power series built on deformed factorials.

The central object is the deformed exponential

    N(x) = sum_{n>=0} x^n / [n]!

which plays the role of exp for the bracket family: it normalizes the
coherent states, its logarithmic derivatives give the photon moments, and
it is an eigenfunction of the lattice derivative D defined by
D x^(beta n) = [n] x^(beta (n-1)).

Two evaluation routes are provided.  The linear route sums the terms with
compensated addition and reports diagnostics (terms used, a geometric tail
bound, a cancellation flag for alternating arguments).  The log route
accumulates log-sum-exp style and never overflows, which matters because
N(x) grows roughly like exp(x^(1/beta)) on the positive axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, NumericalRangeError, ParameterError
from .factorials import log_box, log_gen_factorial
from .gammafn import log_gamma
from .params import DeformationParams

__all__ = [
    "SeriesResult",
    "n_function",
    "log_n_function",
    "n_function_derivative",
    "log_n_derivative",
    "wright_w",
    "PowerSeries",
    "deformed_derivative",
    "eigenfunction_residual",
]

# terms below tol*|sum| must repeat this many times before we trust decay
_CONSECUTIVE_SMALL = 3
# only stop once the term ratio is safely inside the geometric regime
_RATIO_CEILING = 0.9

_LOSS_THRESHOLD = 1e8  # |largest term| / |sum| beyond which float cancellation
# has eaten more than half the significand


@dataclass
class SeriesResult:
    """Value of a truncated series plus convergence diagnostics."""

    value: complex
    terms_used: int
    tail_bound: float
    cancellation: bool = False

    @property
    def real(self) -> float:
        return self.value.real


def _sum_terms(
    first_term: complex,
    ratio_at,  # n -> multiplier taking term n to term n+1
    tol: float,
    max_terms: int,
    what: str,
) -> SeriesResult:
    """Generic compensated summation with the shared stopping rule.

    ratio_at(n) must eventually have modulus < 1 and keep shrinking, which
    holds for every series in this module because the brackets grow.
    """
    if tol <= 0.0:
        raise ParameterError(f"tol must be positive, got {tol}")
    re_parts: list[float] = []
    im_parts: list[float] = []
    term = complex(first_term)
    running = 0.0 + 0.0j
    max_abs = 0.0
    small_streak = 0
    n = 0
    while True:
        re_parts.append(term.real)
        im_parts.append(term.imag)
        running += term
        a = abs(term)
        if a > max_abs:
            max_abs = a
        if not (math.isfinite(running.real) and math.isfinite(running.imag)):
            raise NumericalRangeError(
                f"{what}: partial sums overflow double precision; "
                "use the log-scale variant"
            )
        r = ratio_at(n)
        ra = abs(r)
        if a <= tol * max(1.0, abs(running)) and ra < _RATIO_CEILING:
            small_streak += 1
            if small_streak >= _CONSECUTIVE_SMALL:
                tail = a * ra / (1.0 - ra)
                break
        else:
            small_streak = 0
        n += 1
        if n >= max_terms:
            raise ConvergenceError(
                f"{what}: no convergence to tol={tol} within {max_terms} terms"
            )
        term *= r
    value = complex(math.fsum(re_parts), math.fsum(im_parts))
    lost = abs(value) < max_abs / _LOSS_THRESHOLD
    return SeriesResult(value=value, terms_used=n + 1, tail_bound=tail, cancellation=lost)


def n_function(
    x: complex,
    p: DeformationParams,
    tol: float = 1e-12,
    max_terms: int = 10000,
) -> SeriesResult:
    """N(x) = sum x^n / [n]! with diagnostics.

    Raises NumericalRangeError when the value itself overflows; use
    log_n_function for large positive arguments.
    """
    return _sum_terms(
        1.0 + 0.0j,
        lambda n: x / math.exp(log_box(n + 1, p)),
        tol,
        max_terms,
        "n_function",
    )


def n_function_derivative(
    x: complex,
    r: int,
    p: DeformationParams,
    tol: float = 1e-12,
    max_terms: int = 10000,
) -> SeriesResult:
    """r-th ordinary derivative of N: sum_{n>=r} n!/(n-r)! x^(n-r) / [n]!."""
    if not isinstance(r, int) or r < 0:
        raise ParameterError(f"derivative order must be a non-negative integer, got {r!r}")
    first = math.exp(log_gamma(r + 1.0) - log_gen_factorial(r, p))

    def ratio(m: int) -> complex:
        return x * (m + r + 1) / ((m + 1) * math.exp(log_box(m + r + 1, p)))

    return _sum_terms(first, ratio, tol, max_terms, f"n_function_derivative(r={r})")


def wright_w(
    x: complex,
    p: DeformationParams,
    tol: float = 1e-12,
    max_terms: int = 10000,
) -> SeriesResult:
    """The scaled series N(x) / Gamma(1 - alpha + nu).

    At alpha = 1 this is the classical Wright function of (beta, nu); the
    normalization makes the n = 0 coefficient equal 1/Gamma(1 - alpha + nu).
    """
    base = n_function(x, p, tol=tol, max_terms=max_terms)
    scale = math.exp(-log_gamma(1.0 - p.alpha + p.nu))
    return SeriesResult(
        value=base.value * scale,
        terms_used=base.terms_used,
        tail_bound=base.tail_bound * scale,
        cancellation=base.cancellation,
    )


def _log_sum_stream(
    log_first: float,
    log_ratio_at,  # n -> log of multiplier from term n to n+1
    tol: float,
    max_terms: int,
    what: str,
) -> float:
    """Streamed log-sum-exp for series with positive terms."""
    if tol <= 0.0:
        raise ParameterError(f"tol must be positive, got {tol}")
    log_total = log_first
    log_term = log_first
    small_streak = 0
    n = 0
    log_ceiling = math.log(_RATIO_CEILING)
    while True:
        lr = log_ratio_at(n)
        if log_term - log_total <= math.log(tol) and lr < log_ceiling:
            small_streak += 1
            if small_streak >= _CONSECUTIVE_SMALL:
                return log_total
        else:
            small_streak = 0
        n += 1
        if n >= max_terms:
            raise ConvergenceError(
                f"{what}: no convergence to tol={tol} within {max_terms} terms"
            )
        log_term += lr
        if log_term <= log_total:
            log_total += math.log1p(math.exp(log_term - log_total))
        else:
            log_total = log_term + math.log1p(math.exp(log_total - log_term))


def log_n_function(
    x: float,
    p: DeformationParams,
    tol: float = 1e-12,
    max_terms: int = 10000,
) -> float:
    """log N(x) for real x >= 0, stable for arbitrarily large x."""
    if x < 0.0:
        raise ParameterError(f"log_n_function requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    lx = math.log(x)
    return _log_sum_stream(
        0.0,
        lambda n: lx - log_box(n + 1, p),
        tol,
        max_terms,
        "log_n_function",
    )


def log_n_derivative(
    x: float,
    r: int,
    p: DeformationParams,
    tol: float = 1e-12,
    max_terms: int = 10000,
) -> float:
    """log of the r-th derivative of N at real x >= 0 (all terms positive)."""
    if not isinstance(r, int) or r < 0:
        raise ParameterError(f"derivative order must be a non-negative integer, got {r!r}")
    if x < 0.0:
        raise ParameterError(f"log_n_derivative requires x >= 0, got {x}")
    log_first = log_gamma(r + 1.0) - log_gen_factorial(r, p)
    if x == 0.0:
        return log_first
    lx = math.log(x)

    def log_ratio(m: int) -> float:
        return lx + math.log((m + r + 1) / (m + 1)) - log_box(m + r + 1, p)

    return _log_sum_stream(log_first, log_ratio, tol, max_terms, f"log_n_derivative(r={r})")


@dataclass(frozen=True)
class PowerSeries:
    """Truncated series f(x) = sum_k coeffs[k] * x^(beta k) on the
    fractional power lattice."""

    coeffs: tuple[float, ...]
    beta: float

    def __call__(self, x: float) -> float:
        if x < 0.0:
            raise ParameterError(f"lattice series defined for x >= 0, got {x}")
        y = x**self.beta
        acc = []
        yk = 1.0
        for c in self.coeffs:
            acc.append(c * yk)
            yk *= y
        return math.fsum(acc)

    def shifted_up(self) -> "PowerSeries":
        """Multiply by x^beta: shift every coefficient up one lattice slot."""
        return PowerSeries((0.0,) + self.coeffs, self.beta)


def deformed_derivative(f: PowerSeries, p: DeformationParams) -> PowerSeries:
    """Apply D with D x^(beta n) = [n] x^(beta (n-1)) coefficient-wise."""
    if f.beta != p.beta:
        raise ParameterError(
            f"series lattice beta={f.beta} does not match parameters beta={p.beta}"
        )
    new = tuple(
        f.coeffs[k + 1] * math.exp(log_box(k + 1, p)) for k in range(len(f.coeffs) - 1)
    )
    return PowerSeries(new, f.beta)


def eigenfunction_residual(
    lam: float,
    x: float,
    p: DeformationParams,
    tol: float = 1e-12,
) -> float:
    """Relative defect in D N(lam x^beta) = lam N(lam x^beta).

    The left side goes through the explicit lattice-coefficient route, the
    right through the direct series sum, so the residual measures how well
    the two independent evaluations realize the eigenfunction identity.
    """
    if x < 0.0 or lam <= 0.0:
        raise ParameterError("eigenfunction_residual expects lam > 0 and x >= 0")
    y = lam * x**p.beta
    probe = n_function(y, p, tol=tol)
    ref = probe.value.real
    n_coeffs = probe.terms_used + 4
    coeffs = [1.0]
    for k in range(1, n_coeffs):
        coeffs.append(coeffs[-1] * lam / math.exp(log_box(k, p)))
    f = PowerSeries(tuple(coeffs), p.beta)
    lhs = deformed_derivative(f, p)(x)
    return abs(lhs - lam * ref) / abs(lam * ref)
