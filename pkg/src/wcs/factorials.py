"""Deformed integer brackets and their factorials.

The bracket of n (written [n] below) generalizes the integer n through
three parameters:

    [n] = Gamma(beta*n + 1) / Gamma(beta*n + 1 - alpha)
        * Gamma(beta*n + 1 - alpha + nu) / Gamma(beta*(n-1) + 1 - alpha + nu)

with [0] = 0 by definition.  Its factorial [n]! = [n][n-1]...[1] collapses,
after telescoping the nu-dependent ratios, to the closed form

    [n]! = ( prod_{i=1..n} Gamma(beta*i + 1) / Gamma(beta*i + 1 - alpha) )
         * Gamma(beta*n + 1 - alpha + nu) / Gamma(1 - alpha + nu)

which is what this module evaluates, entirely in log space.  At
(alpha, beta, nu) = (0, 1, 0) everything reduces to ordinary integers and
factorials; (0, beta, nu) gives the Gamma(beta*n + 1 + nu)/Gamma(1 + nu)
family and (1, beta, nu) the beta^n n! Gamma(beta*n + nu)/Gamma(nu) family.

All brackets are strictly positive for n >= 1 on the admissible parameter
domain, so factorials carry sign +1 and a log magnitude.
"""

from __future__ import annotations

import math

from .errors import ParameterError
from .gammafn import LogValue, log_gamma
from .params import DeformationParams

__all__ = [
    "box",
    "log_box",
    "gen_factorial",
    "log_gen_factorial",
    "gen_double_factorial",
    "log_gen_double_factorial",
    "log_factorial_asymptotic",
    "clear_caches",
]


class _Table:
    """Per-parameter incremental cache of bracket and factorial logs."""

    __slots__ = ("log_box", "log_prod", "log_tail")

    def __init__(self, p: DeformationParams) -> None:
        # index n; entry 0 is the empty product / defined-zero bracket
        self.log_box: list[float] = [-math.inf]
        self.log_prod: list[float] = [0.0]  # cumulative sum of the alpha-ratio logs
        self.log_tail: list[float] = [log_gamma(1.0 - p.alpha + p.nu)]

    def extend(self, n: int, p: DeformationParams) -> None:
        a, b, v = p.alpha, p.beta, p.nu
        for k in range(len(self.log_box), n + 1):
            lg_top = log_gamma(b * k + 1.0)
            lg_bot = log_gamma(b * k + 1.0 - a)
            tail = log_gamma(b * k + 1.0 - a + v)
            self.log_box.append(lg_top - lg_bot + tail - self.log_tail[k - 1])
            self.log_prod.append(self.log_prod[k - 1] + lg_top - lg_bot)
            self.log_tail.append(tail)


_TABLES: dict[DeformationParams, _Table] = {}


def _table(p: DeformationParams, n: int) -> _Table:
    tab = _TABLES.get(p)
    if tab is None:
        tab = _TABLES[p] = _Table(p)
    if n >= len(tab.log_box):
        tab.extend(n, p)
    return tab


def clear_caches() -> None:
    _TABLES.clear()


def _check_index(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParameterError(f"index must be an integer, got {n!r}")
    if n < 0:
        raise ParameterError(f"index must be non-negative, got {n}")
    return n


def log_box(n: int, p: DeformationParams) -> float:
    """log [n]; -inf for n = 0."""
    n = _check_index(n)
    return _table(p, n).log_box[n]


def box(n: int, p: DeformationParams) -> float:
    """The bracket [n] on linear scale.  [0] = 0."""
    n = _check_index(n)
    if n == 0:
        return 0.0
    return math.exp(_table(p, n).log_box[n])


def log_gen_factorial(n: int, p: DeformationParams) -> float:
    """log of [n]! via the telescoped closed form; 0 for n = 0."""
    n = _check_index(n)
    tab = _table(p, n)
    return tab.log_prod[n] + tab.log_tail[n] - tab.log_tail[0]


def gen_factorial(n: int, p: DeformationParams) -> LogValue:
    """[n]! as a log-scale value (always positive on the domain)."""
    return LogValue.from_log(log_gen_factorial(n, p))


def log_gen_double_factorial(m: int, p: DeformationParams) -> float:
    """log of [m]!! = log([m][m-2][m-4]...), stopping at [2] or [1].

    The even case [2n]!! = [2n][2n-2]...[2] is the normalization that
    appears in the ground-state expansion; m = 0 gives the empty product.
    """
    m = _check_index(m)
    tab = _table(p, m)
    acc = 0.0
    k = m
    while k >= 1:
        acc += tab.log_box[k]
        k -= 2
    return acc


def gen_double_factorial(m: int, p: DeformationParams) -> LogValue:
    """[m]!! as a log-scale value."""
    return LogValue.from_log(log_gen_double_factorial(m, p))


def log_factorial_asymptotic(n: int, p: DeformationParams) -> float:
    """Leading large-n behaviour of log [n]!: (alpha+beta) n (log(beta n) - 1).

    The same expression is the log of the large-n moment growth
    m_n ~ exp(-(alpha+beta) n) (beta n)^((alpha+beta) n) used by the
    moment-problem classification.
    """
    n = _check_index(n)
    if n == 0:
        return 0.0
    e = p.alpha + p.beta
    return e * n * (math.log(p.beta * n) - 1.0)
