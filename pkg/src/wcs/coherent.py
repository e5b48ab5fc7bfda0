"""Coherent-state observables and oscillator wavefunctions.

The states are |z> = N(x)^(-1/2) sum_n z^n / sqrt([n]!) |n> with x = |z|^2.
Everything observable follows from the amplitude sequence and the deformed
exponential N: photon-number probabilities, overlaps, normally-ordered
moments, the two Mandel parameters, quadrature variances in number states,
and position wavefunctions built from the x^beta power lattice.

Photon probabilities and moments are assembled from logs so large n and x
never overflow; alternating wavefunction series go through compensated
summation with an explicit cancellation flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConvergenceError, ParameterError
from .factorials import box, log_box, log_gen_factorial
from .params import DeformationParams, PhysicalScales
from .series import log_n_derivative, log_n_function, n_function

__all__ = [
    "CoherentLabel",
    "PhotonDistribution",
    "QuadratureStats",
    "photon_pdf",
    "photon_distribution",
    "overlap",
    "continuity_defect",
    "coherent_amplitudes",
    "normally_ordered_moment",
    "fock_moment_sum",
    "mandel_qz",
    "mandel_qm",
    "quadrature_stats",
    "vacuum_uncertainty",
    "ground_wavefunction",
    "excited_wavefunction",
    "wavefunction_sample",
]

_SMALL_X_GUARD = 1e-12  # below this the Mandel ratios are replaced by their limits
_EXCITED_CAP_DEFAULT = 12


@dataclass(frozen=True)
class CoherentLabel:
    """Complex label z with its cached intensity x = |z|^2."""

    z: complex
    x: float = field(init=False)

    def __post_init__(self) -> None:
        zc = complex(self.z)
        if not (math.isfinite(zc.real) and math.isfinite(zc.imag)):
            raise ParameterError(f"coherent label must be finite, got {self.z!r}")
        object.__setattr__(self, "z", zc)
        object.__setattr__(self, "x", abs(zc) ** 2)

    @classmethod
    def from_intensity(cls, x: float) -> "CoherentLabel":
        if not (isinstance(x, (int, float)) and x == x and x >= 0.0):
            raise ParameterError(f"intensity must be a non-negative real, got {x!r}")
        return cls(complex(math.sqrt(x), 0.0))


@dataclass(frozen=True)
class PhotonDistribution:
    probabilities: tuple[float, ...]
    cutoff: int
    tail_mass: float


@dataclass(frozen=True)
class QuadratureStats:
    n: int
    var_q: float
    var_p: float
    product: float


def photon_pdf(
    n: int,
    label: CoherentLabel,
    p: DeformationParams,
    tol: float = 1e-12,
) -> float:
    """Probability of n quanta in |z>: x^n / ([n]! N(x))."""
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f"photon number must be a non-negative integer, got {n!r}")
    x = label.x
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    log_p = n * math.log(x) - log_gen_factorial(n, p) - log_n_function(x, p, tol=tol)
    return math.exp(log_p)


def photon_distribution(
    label: CoherentLabel,
    p: DeformationParams,
    tail_tol: float = 1e-12,
    max_n: int = 100000,
    tol: float = 1e-13,
) -> PhotonDistribution:
    """All probabilities up to the first n where cumulative mass reaches
    1 - tail_tol."""
    if not 0.0 < tail_tol < 1.0:
        raise ParameterError(f"tail_tol must lie in (0, 1), got {tail_tol}")
    x = label.x
    if x == 0.0:
        return PhotonDistribution(probabilities=(1.0,), cutoff=0, tail_mass=0.0)
    log_norm = log_n_function(x, p, tol=tol)
    lx = math.log(x)
    probs = []
    log_p = -log_norm
    cum = 0.0
    n = 0
    while True:
        prob = math.exp(log_p)
        probs.append(prob)
        cum += prob
        if cum >= 1.0 - tail_tol:
            break
        n += 1
        if n > max_n:
            raise ConvergenceError(
                f"photon_distribution: cumulative mass below 1 - {tail_tol} "
                f"after {max_n} terms"
            )
        log_p += lx - log_box(n, p)
    return PhotonDistribution(
        probabilities=tuple(probs),
        cutoff=len(probs) - 1,
        tail_mass=max(0.0, 1.0 - cum),
    )


def overlap(
    l1: CoherentLabel,
    l2: CoherentLabel,
    p: DeformationParams,
    tol: float = 1e-13,
) -> complex:
    """<z1|z2> = N(conj(z1) z2) / sqrt(N(x1) N(x2))."""
    num = n_function(l1.z.conjugate() * l2.z, p, tol=tol).value
    scale = 0.5 * (log_n_function(l1.x, p, tol=tol) + log_n_function(l2.x, p, tol=tol))
    return num * math.exp(-scale)


def coherent_amplitudes(
    label: CoherentLabel,
    p: DeformationParams,
    n_max: int,
    tol: float = 1e-13,
) -> list[complex]:
    """Normalized Fock amplitudes c_n = z^n / sqrt([n]! N(x)), n = 0..n_max."""
    if not isinstance(n_max, int) or n_max < 0:
        raise ParameterError(f"n_max must be a non-negative integer, got {n_max!r}")
    c = complex(math.exp(-0.5 * log_n_function(label.x, p, tol=tol)), 0.0)
    out = [c]
    for n in range(1, n_max + 1):
        c = c * label.z * math.exp(-0.5 * log_box(n, p))
        out.append(c)
    return out


def continuity_defect(
    l1: CoherentLabel,
    l2: CoherentLabel,
    p: DeformationParams,
    tol: float = 1e-13,
    max_terms: int = 20000,
) -> float:
    """|direct - kernel| for the squared distance between two states.

    The direct route sums |c_n(z1) - c_n(z2)|^2 over normalized amplitudes;
    the kernel route evaluates 2 (1 - Re <z2|z1>).  Mathematically equal,
    so the returned defect measures numerical agreement of the two paths.
    """
    kernel = 2.0 * (1.0 - overlap(l2, l1, p, tol=tol).real)
    a = complex(math.exp(-0.5 * log_n_function(l1.x, p, tol=tol)), 0.0)
    b = complex(math.exp(-0.5 * log_n_function(l2.x, p, tol=tol)), 0.0)
    parts = [abs(a - b) ** 2]
    streak = 0
    n = 0
    while True:
        n += 1
        if n > max_terms:
            raise ConvergenceError(
                f"continuity_defect: amplitude tails above tol after {max_terms} terms"
            )
        w = math.exp(-0.5 * log_box(n, p))
        a = a * l1.z * w
        b = b * l2.z * w
        parts.append(abs(a - b) ** 2)
        mag = abs(a) + abs(b)
        ratio = max(abs(l1.z), abs(l2.z)) * math.exp(-0.5 * log_box(n + 1, p))
        if mag**2 <= tol and ratio < 0.9:
            streak += 1
            if streak >= 3:
                break
        else:
            streak = 0
    direct = math.fsum(parts)
    return abs(direct - kernel)


def normally_ordered_moment(
    r: int,
    label: CoherentLabel,
    p: DeformationParams,
    tol: float = 1e-12,
) -> float:
    """<(A+)^r A^r> in |z>: x^r N^(r)(x) / N(x), assembled from logs."""
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"moment order must be a positive integer, got {r!r}")
    x = label.x
    if x == 0.0:
        return 0.0
    return math.exp(
        r * math.log(x)
        + log_n_derivative(x, r, p, tol=tol)
        - log_n_function(x, p, tol=tol)
    )


def fock_moment_sum(
    r: int,
    label: CoherentLabel,
    p: DeformationParams,
    tol: float = 1e-13,
    max_terms: int = 100000,
) -> float:
    """Same moment by brute force over the photon distribution:
    sum_n n (n-1) ... (n-r+1) p(n).  Independent check path."""
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"moment order must be a positive integer, got {r!r}")
    x = label.x
    if x == 0.0:
        return 0.0
    log_norm = log_n_function(x, p, tol=tol)
    lx = math.log(x)
    log_p = -log_norm
    acc: list[float] = []
    total = 0.0
    streak = 0
    n = 0
    while True:
        if n >= r:
            falling = 1.0
            for j in range(r):
                falling *= n - j
            term = falling * math.exp(log_p)
            acc.append(term)
            total += term
            ratio = x * math.exp(-log_box(n + 1, p))
            if term <= tol * max(1.0, total) and ratio < 0.9:
                streak += 1
                if streak >= 3:
                    break
            else:
                streak = 0
        n += 1
        if n > max_terms:
            raise ConvergenceError(
                f"fock_moment_sum: no convergence within {max_terms} terms"
            )
        log_p += lx - log_box(n, p)
    return math.fsum(acc)


def mandel_qz(
    label: CoherentLabel,
    p: DeformationParams,
    tol: float = 1e-12,
) -> float:
    """(m2 - m1^2) / m1 with m_r the normally-ordered moments.

    Vanishes identically in the classical limit; the x -> 0 limit is 0 and
    is returned directly below the guard threshold.
    """
    if label.x < _SMALL_X_GUARD:
        return 0.0
    m1 = normally_ordered_moment(1, label, p, tol=tol)
    m2 = normally_ordered_moment(2, label, p, tol=tol)
    return (m2 - m1 * m1) / m1


def mandel_qm(
    label: CoherentLabel,
    p: DeformationParams,
    tol: float = 1e-13,
    max_terms: int = 100000,
) -> float:
    """(<[N]^2> - <[N]>^2) / <[N]> - 1 with <[N]^k> = sum [n]^k p(n).

    The x -> 0 limit is [1] - 1 and is returned below the guard threshold.
    """
    x = label.x
    if x < _SMALL_X_GUARD:
        return box(1, p) - 1.0
    log_norm = log_n_function(x, p, tol=tol)
    lx = math.log(x)
    log_p = -log_norm
    e1_parts: list[float] = []
    e2_parts: list[float] = []
    e2_run = 0.0
    streak = 0
    n = 0
    while True:
        if n >= 1:
            bn = math.exp(log_box(n, p))
            prob = math.exp(log_p)
            e1_parts.append(bn * prob)
            term2 = bn * bn * prob
            e2_parts.append(term2)
            e2_run += term2
            ratio = x * math.exp(-log_box(n + 1, p))
            if term2 <= tol * max(1.0, e2_run) and ratio < 0.9:
                streak += 1
                if streak >= 3:
                    break
            else:
                streak = 0
        n += 1
        if n > max_terms:
            raise ConvergenceError(f"mandel_qm: no convergence within {max_terms} terms")
        log_p += lx - log_box(n, p)
    e1 = math.fsum(e1_parts)
    e2 = math.fsum(e2_parts)
    return (e2 - e1 * e1) / e1 - 1.0


def quadrature_stats(
    n: int,
    p: DeformationParams,
    s: PhysicalScales = PhysicalScales(),
) -> QuadratureStats:
    """Position/momentum variances in |n> and their product.

    Both variances carry the commutator diagonal [n+1] - [n]; the product
    is (hbar/2) ([n+1] - [n]) and reduces to hbar/2 classically.
    """
    c = box(n + 1, p) - box(n, p)
    return QuadratureStats(
        n=n,
        var_q=0.5 * c * s.hbar / (s.mass * s.omega),
        var_p=0.5 * c * s.hbar * s.mass * s.omega,
        product=0.5 * s.hbar * c,
    )


def vacuum_uncertainty(p: DeformationParams, s: PhysicalScales = PhysicalScales()) -> float:
    """dq dp in the vacuum: (hbar/2) [1]."""
    return 0.5 * s.hbar * box(1, p)


def _ground_scale(p: DeformationParams, s: PhysicalScales) -> float:
    return (s.mass * s.omega / (math.pi * s.hbar)) ** 0.25


def _ground_lattice_coeffs(
    n_slots: int, p: DeformationParams, s: PhysicalScales
) -> list[float]:
    """Coefficients of the ground state on the x^beta lattice.

    Slot 2n holds (-m omega / hbar)^n / [2n]!!, odd slots are zero; the
    double factorial is the product of even brackets, which is exactly the
    normalization making the state annihilated by the lowering operator.
    """
    coeffs = [0.0] * n_slots
    val = 1.0
    coeffs[0] = 1.0
    ratio = -s.mass * s.omega / s.hbar
    n = 0
    while 2 * n + 2 < n_slots:
        val *= ratio / math.exp(log_box(2 * n + 2, p))
        coeffs[2 * n + 2] = val
        n += 1
    return coeffs


def _ground_term_count(
    x: float, p: DeformationParams, s: PhysicalScales, tol: float, max_terms: int
) -> int:
    """Number of even-lattice terms needed for the ground series at x."""
    if x == 0.0:
        return 1
    y = (s.mass * s.omega / s.hbar) * x ** (2.0 * p.beta)
    mag = 1.0
    streak = 0
    n = 0
    while True:
        n += 1
        if n > max_terms:
            raise ConvergenceError(
                f"ground-state series: no convergence within {max_terms} terms"
            )
        mag *= y / math.exp(log_box(2 * n, p))
        if mag <= tol and y / math.exp(log_box(2 * n + 2, p)) < 0.9:
            streak += 1
            if streak >= 3:
                return n + 1
        else:
            streak = 0


def wavefunction_sample(
    k: int,
    x: float,
    p: DeformationParams,
    s: PhysicalScales = PhysicalScales(),
    tol: float = 1e-12,
    k_cap: int = _EXCITED_CAP_DEFAULT,
    max_terms: int = 20000,
) -> tuple[float, bool]:
    """Value of <x|k> and a cancellation flag.

    The ground state is the lattice series with the even double factorial;
    higher k apply the raising operator as exact coefficient algebra
    (multiplication by x^beta shifts slots up; the lattice derivative is
    the bracket-weighted down-shift), then divide by sqrt([k]!).  No
    numerical differentiation anywhere.
    """
    if not isinstance(k, int) or k < 0:
        raise ParameterError(f"level index must be a non-negative integer, got {k!r}")
    if k > k_cap:
        raise ParameterError(f"level index {k} exceeds the configured cap {k_cap}")
    if not (isinstance(x, (int, float)) and x == x and x >= 0.0):
        raise ParameterError(
            f"wavefunctions are defined on the half-line x >= 0, got {x!r}"
        )
    x = float(x)
    # size the lattice with a stricter threshold: the raising operator's
    # down-shift multiplies truncated slots by bracket values, so headroom
    # is needed for the stated tol to survive k applications
    n_even = _ground_term_count(x, p, s, tol * 1e-4, max_terms)
    n_slots = 2 * n_even + k + 4
    coeffs = _ground_lattice_coeffs(n_slots, p, s)

    up = math.sqrt(0.5 * s.mass * s.omega / s.hbar)
    down = math.sqrt(0.5 * s.hbar / (s.mass * s.omega))
    for _ in range(k):
        nxt = [0.0] * n_slots
        for j in range(n_slots):
            acc = 0.0
            if j >= 1:
                acc += up * coeffs[j - 1]
            if j + 1 < n_slots:
                acc -= down * coeffs[j + 1] * math.exp(log_box(j + 1, p))
            nxt[j] = acc
        coeffs = nxt

    scale = _ground_scale(p, s) * math.exp(-0.5 * log_gen_factorial(k, p))
    y = x**p.beta
    terms = []
    yj = 1.0
    max_abs = 0.0
    for c in coeffs:
        t = c * yj
        terms.append(t)
        max_abs = max(max_abs, abs(t))
        yj *= y
    total = math.fsum(terms)
    cancel = abs(total) < max_abs * 1e-8 and max_abs > 0.0
    return scale * total, cancel


def ground_wavefunction(
    x: float,
    p: DeformationParams,
    s: PhysicalScales = PhysicalScales(),
    tol: float = 1e-12,
) -> float:
    """<x|0> = (m omega / pi hbar)^(1/4) sum (-m omega/hbar)^n x^(2 beta n) / [2n]!!."""
    value, _ = wavefunction_sample(0, x, p, s, tol=tol)
    return value


def excited_wavefunction(
    k: int,
    x: float,
    p: DeformationParams,
    s: PhysicalScales = PhysicalScales(),
    tol: float = 1e-12,
    k_cap: int = _EXCITED_CAP_DEFAULT,
) -> float:
    """<x|k> via k exact raising-operator applications to the ground state."""
    value, _ = wavefunction_sample(k, x, p, s, tol=tol, k_cap=k_cap)
    return value
