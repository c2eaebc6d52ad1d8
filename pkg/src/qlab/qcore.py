"""Foundational q-arithmetic.

q-shifted factorials, generalized q-integers and factorials, q-difference
operators (plain, generalized and even/odd-split variants) and Jackson
q-integrals over the geometric lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .context import (ArgumentError, DomainError, NonConvergence, QContext,
                      TruncatedValue)

FunctionHandle = Callable[[float], float]

QDERIV_VARIANTS = (
    "backward",
    "forward",
    "backward_alpha",
    "forward_alpha",
    "delta_alpha",
    "delta_alpha_plus",
)


# ---------------------------------------------------------------------------
# q-shifted factorials and q-numbers
# ---------------------------------------------------------------------------

def qpoch(a: float, n: int, ctx: QContext) -> float:
    """Finite q-shifted factorial (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k)."""
    return _qpoch(a, n, ctx.q)


def _qpoch(a: float, n: int, q: float) -> float:
    if n < 0:
        raise DomainError("qpoch requires n >= 0")
    out = 1.0
    aq = a
    for _ in range(n):
        out *= 1.0 - aq
        aq *= q
    return out


def qpoch_inf(a: float, ctx: QContext) -> TruncatedValue:
    """Infinite q-shifted factorial (a; q)_inf as a truncated product.

    The remainder is controlled relatively: once |a| q^N is small, the
    discarded factors multiply the partial product by at most
    exp(2 |a| q^N / (1 - q)).  A relative criterion keeps the routine
    usable when the partial product itself over/underflows (the weight
    function feeds arguments of magnitude ~ x^2 here).
    """
    return _qpoch_inf(a, ctx.q, ctx.series_tol, ctx.max_terms)


def _qpoch_inf(a: float, q: float, tol: float, max_terms: int) -> TruncatedValue:
    if a == 0.0:
        return TruncatedValue(1.0, 0.0, 0)
    out = 1.0
    aq = a
    for k in range(1, max_terms + 1):
        out *= 1.0 - aq
        aq *= q
        s = abs(aq) / (1.0 - q)
        if s < 0.5:
            rel_tail = math.expm1(2.0 * s)
            if rel_tail <= tol:
                tail = abs(out) * rel_tail if math.isfinite(out) else math.inf
                return TruncatedValue(out, tail, k)
    raise NonConvergence(
        f"(a;q)_inf did not meet tol={tol} within {max_terms} factors (a={a}, q={q})"
    )


def qnumber(x: float, ctx: QContext) -> float:
    """q-number [[x]]_q = (1 - q^x) / (1 - q)."""
    return _qnumber(x, ctx.q)


def _qnumber(x: float, q: float) -> float:
    return (1.0 - q ** x) / (1.0 - q)


def sym_qnumber(x: float, base: float) -> float:
    """Symmetric q-number [x]_base = (base^x - base^-x) / (base - 1/base)."""
    if base == 1.0:
        raise DomainError("sym_qnumber is undefined at base 1")
    return (base ** x - base ** (-x)) / (base - 1.0 / base)


def gen_qint(n: int, ctx: QContext) -> float:
    """Generalized q-integer: [[n]]_q for even n, [[n + 2 alpha + 1]]_q for odd."""
    return _gen_qint(n, ctx.q, ctx.alpha)


def _gen_qint(n: int, q: float, alpha: float) -> float:
    if n % 2 == 0:
        return _qnumber(float(n), q)
    return _qnumber(n + 2.0 * alpha + 1.0, q)


def gen_qfact(n: int, ctx: QContext) -> float:
    """Generalized q-factorial n!_{q,alpha} = prod_{k=1}^{n} gen_qint(k)."""
    return _gen_qfact(n, ctx.q, ctx.alpha)


def _gen_qfact(n: int, q: float, alpha: float) -> float:
    out = 1.0
    for k in range(1, n + 1):
        out *= _gen_qint(k, q, alpha)
    return out


def gen_qpoch(n: int, ctx: QContext) -> float:
    """Generalized q-shifted factorial (q; q)_{n, alpha} = (1-q)^n n!_{q,alpha}."""
    return _gen_qpoch(n, ctx.q, ctx.alpha)


def _gen_qpoch(n: int, q: float, alpha: float) -> float:
    return (1.0 - q) ** n * _gen_qfact(n, q, alpha)


def theta(n: int) -> int:
    """Parity indicator: 1 for even n, 0 for odd n."""
    return 1 if n % 2 == 0 else 0


# ---------------------------------------------------------------------------
# Parity split and q-difference operators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParityParts:
    """Even and odd parts of a function of one real variable."""

    even: FunctionHandle
    odd: FunctionHandle


def parity_split(f: FunctionHandle) -> ParityParts:
    """Split f into even part (f(x)+f(-x))/2 and odd part (f(x)-f(-x))/2."""
    return ParityParts(
        even=lambda x: 0.5 * (f(x) + f(-x)),
        odd=lambda x: 0.5 * (f(x) - f(-x)),
    )


def qderiv(f: FunctionHandle, x: float, variant: str, ctx: QContext) -> float:
    """Apply one of the six q-difference operators to f at x != 0.

    backward        : (f(x) - f(qx)) / ((1-q) x)
    forward         : (f(x/q) - f(x)) / ((1-q) x)
    backward_alpha  : (f(x) - q^{2a+1} f(qx)) / ((1-q) x)
    forward_alpha   : (f(x/q) - q^{2a+1} f(x)) / ((1-q) x)
    delta_alpha     : backward on the even part + backward_alpha on the odd part
    delta_alpha_plus: forward on the even part + forward_alpha on the odd part
    """
    if x == 0.0:
        raise DomainError("q-difference operators are not evaluated at x = 0")
    q = ctx.q
    denom = (1.0 - q) * x
    if variant == "backward":
        return (f(x) - f(q * x)) / denom
    if variant == "forward":
        return (f(x / q) - f(x)) / denom
    shift = q ** (2.0 * ctx.alpha + 1.0)
    if variant == "backward_alpha":
        return (f(x) - shift * f(q * x)) / denom
    if variant == "forward_alpha":
        return (f(x / q) - shift * f(x)) / denom
    parts = parity_split(f)
    if variant == "delta_alpha":
        return (
            qderiv(parts.even, x, "backward", ctx)
            + qderiv(parts.odd, x, "backward_alpha", ctx)
        )
    if variant == "delta_alpha_plus":
        return (
            qderiv(parts.even, x, "forward", ctx)
            + qderiv(parts.odd, x, "forward_alpha", ctx)
        )
    raise ArgumentError(f"unknown q-derivative variant: {variant!r}")


def _memoized(f: FunctionHandle) -> FunctionHandle:
    cache: dict[float, float] = {}

    def g(x: float) -> float:
        if x not in cache:
            cache[x] = f(x)
        return cache[x]

    return g


def qderiv_pow(f: FunctionHandle, k: int, variant: str, ctx: QContext) -> FunctionHandle:
    """k-fold composition of a delta-type q-difference operator.

    Each level memoizes its values: iterated operators revisit the same
    q-lattice points, so caching turns the exponential evaluation tree
    into O(k) points per level.
    """
    if variant not in ("delta_alpha", "delta_alpha_plus"):
        raise ArgumentError("qderiv_pow supports the delta variants only")
    if k < 0:
        raise DomainError("qderiv_pow requires k >= 0")
    g = _memoized(f)
    for _ in range(k):
        prev = g
        g = _memoized(lambda x, p=prev: qderiv(p, x, variant, ctx))
    return g


# ---------------------------------------------------------------------------
# Jackson q-integrals
# ---------------------------------------------------------------------------

def jackson_integral(f: FunctionHandle, domain: str, ctx: QContext) -> TruncatedValue:
    """Jackson q-integral over the geometric lattice {q^n}.

    halfline: (1-q) sum_n q^n f(q^n)
    line    : (1-q) sum_n q^n [f(q^n) + f(-q^n)]

    The exponent n runs over [lattice_lo, lattice_hi]; summation proceeds
    outward from n = 0 in both directions and a direction stops once its
    terms have stayed below series_tol (relative to the largest term seen)
    for a few consecutive lattice points.  Terms still large and
    non-decreasing at a window edge raise NonConvergence.
    """
    if domain == "halfline":
        g = f
    elif domain == "line":
        g = lambda x: f(x) + f(-x)  # noqa: E731
    else:
        raise ArgumentError(f"unknown Jackson integral domain: {domain!r}")

    q = ctx.q
    tol = ctx.series_tol
    terms: list[float] = []
    peak = 1.0
    tail = 0.0
    count = 0

    for step, lo, hi in ((1, 0, ctx.lattice_hi), (-1, -1, ctx.lattice_lo)):
        below = 0
        prev_mag = math.inf
        n = lo
        while (n <= hi) if step == 1 else (n >= hi):
            xn = q ** n
            t = xn * g(xn)
            count += 1
            mag = abs(t)
            if math.isnan(t):
                raise NonConvergence(f"Jackson integral term is NaN at q^{n}")
            terms.append(t)
            peak = max(peak, mag)
            if mag < tol * peak:
                below += 1
                if below >= 3:
                    # geometric extrapolation of the discarded tail
                    r = q if step == 1 else min(0.9, mag / prev_mag if prev_mag > 0 else q)
                    tail += mag * r / (1.0 - r)
                    break
            else:
                below = 0
            if (n == hi) and mag >= tol * peak and mag >= prev_mag:
                raise NonConvergence(
                    f"Jackson integral terms non-decreasing at lattice edge n={n}"
                )
            if n == hi and mag >= tol * peak:
                tail += mag  # edge term retained; flag remainder crudely
            prev_mag = mag
            n += step

    value = (1.0 - q) * math.fsum(terms)
    return TruncatedValue(value, (1.0 - q) * tail, count)
