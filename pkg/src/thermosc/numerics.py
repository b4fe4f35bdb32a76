"""Shared numerical kernels.

Real positive roots of polynomials up to degree three, central differences
with one level of Richardson extrapolation, log-log slope fits and the
stable Bose-Einstein primitives used throughout the package.
"""

from __future__ import annotations

import math
import sys
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import DegenerateError, InsufficientSpanError, StepError

EPS = sys.float_info.epsilon
_DEDUP_RTOL = 1e-9


# -- stable Bose-Einstein primitives -------------------------------------------


def bose_occupation(x: float) -> float:
    """Mean occupation 1/(e^x - 1) for x > 0, accurate from x ~ 1e-300 upward."""
    if x < 700.0:
        return 1.0 / math.expm1(x)
    # e^-x / (1 - e^-x); exp underflows gracefully to 0 beyond x ~ 745
    return math.exp(-x) / -math.expm1(-x)


def log1mexp(x: float) -> float:
    """ln(1 - e^-x) for x > 0 without cancellation at either end."""
    if x <= math.log(2.0):
        return math.log(-math.expm1(-x))
    return math.log1p(-math.exp(-x))


# -- polynomial roots ----------------------------------------------------------


def _horner(coeffs: Sequence[float], t: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _quadratic_roots(c0: float, c1: float, c2: float) -> list[float]:
    disc = c1 * c1 - 4.0 * c2 * c0
    if disc < 0.0:
        return []
    q = -0.5 * (c1 + math.copysign(math.sqrt(disc), c1))
    roots = [q / c2]
    if q != 0.0:
        roots.append(c0 / q)
    return roots


def _cubic_roots(c0: float, c1: float, c2: float, c3: float) -> list[float]:
    b, c, d = c2 / c3, c1 / c3, c0 / c3
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if disc > 0.0:
        # Cardano, one real root; pick the non-cancelling branch
        u = np.cbrt(-q / 2.0 - math.copysign(math.sqrt(disc), q))
        y = u - p / (3.0 * u) if u != 0.0 else 0.0
        return [float(y) - shift]
    if p == 0.0:
        return [-shift]
    # three real roots: trigonometric form
    r = 2.0 * math.sqrt(-p / 3.0)
    arg = 3.0 * q / (p * r)
    phi = math.acos(min(1.0, max(-1.0, arg)))
    return [r * math.cos((phi - 2.0 * math.pi * k) / 3.0) - shift for k in range(3)]


def _analytic_roots(coeffs: Sequence[float]) -> list[float]:
    deg = len(coeffs) - 1
    if deg == 1:
        return [-coeffs[0] / coeffs[1]]
    # substitute t = s*u with s ~ |c0/lead|^(1/deg) so the closed forms see
    # coefficients of comparable size; done in logs to avoid overflow
    s = 1.0
    if coeffs[0] != 0.0:
        s = math.exp((math.log(abs(coeffs[0])) - math.log(abs(coeffs[-1]))) / deg)
    logs = [math.log(abs(c)) + k * math.log(s) if c else -math.inf for k, c in enumerate(coeffs)]
    top = max(logs)
    scaled = [math.copysign(math.exp(lg - top), c) if c else 0.0 for lg, c in zip(logs, coeffs)]
    try:
        us = _quadratic_roots(*scaled) if deg == 2 else _cubic_roots(*scaled)
    except (OverflowError, ZeroDivisionError):
        return []
    return [s * u for u in us if math.isfinite(u)]


def _bisect(poly: Callable[[float], float], lo: float, hi: float, max_steps: int) -> float:
    flo = poly(lo)
    fhi = poly(hi)
    for _ in range(max_steps):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = poly(mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0.0) == (flo < 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return lo if abs(flo) <= abs(fhi) else hi


def _polish(poly, seg_lo: float, seg_hi: float, guess: float | None) -> float:
    """Bracket a sign change inside [seg_lo, seg_hi] around ``guess`` and bisect."""
    if guess is None:
        return _bisect(poly, seg_lo, seg_hi, 1100)
    delta = 1e-6 * abs(guess) if guess != 0.0 else 1e-6 * (seg_hi - seg_lo)
    while True:
        lo = max(seg_lo, guess - delta)
        hi = min(seg_hi, guess + delta)
        if (poly(lo) < 0.0) != (poly(hi) < 0.0):
            break
        if lo == seg_lo and hi == seg_hi:
            break
        delta *= 16.0
    return _bisect(poly, lo, hi, 60 if delta <= 1e-6 * abs(guess) else 1100)


def real_positive_roots(c0: float, c1: float = 0.0, c2: float = 0.0, c3: float = 0.0) -> list[float]:
    """Sorted positive real roots of c0 + c1*t + c2*t^2 + c3*t^3.

    Closed-form roots (quadratic formula, Cardano or the trigonometric method)
    serve as starting points; every root is then re-bracketed on a monotone
    segment and bisected to floating-point resolution.
    """
    coeffs = [float(c0), float(c1), float(c2), float(c3)]
    if not any(coeffs):
        raise DegenerateError("polynomial is identically zero")
    while coeffs[-1] == 0.0:
        coeffs.pop()
    if len(coeffs) == 1:
        return []
    if coeffs[0] == 0.0:
        # t = 0 is a root; it is not positive
        return real_positive_roots(*coeffs[1:])

    def poly(t: float) -> float:
        return _horner(coeffs, t)

    def magnitude(t: float) -> float:
        return _horner([abs(c) for c in coeffs], abs(t))

    lead = coeffs[-1]
    bound = 1.0 + max(abs(c / lead) for c in coeffs[:-1])
    deriv = [k * coeffs[k] for k in range(1, len(coeffs))]
    crit = []
    if len(deriv) > 1:
        crit = sorted(t for t in _analytic_roots(deriv) if 0.0 < t < bound)
    guesses = [t for t in _analytic_roots(coeffs) if t > 0.0]

    roots = []
    edges = [0.0, *crit, bound]
    for lo, hi in zip(edges[:-1], edges[1:]):
        plo, phi = poly(lo), poly(hi)
        if plo == 0.0 or phi == 0.0 or (plo < 0.0) == (phi < 0.0):
            continue
        inside = [g for g in guesses if lo < g < hi]
        roots.append(_polish(poly, lo, hi, inside[0] if inside else None))
    # touching (even-multiplicity) roots sit on critical points
    for k in crit:
        if abs(poly(k)) <= 8.0 * EPS * magnitude(k):
            roots.append(k)

    roots.sort()
    deduped: list[float] = []
    for r in roots:
        if deduped and abs(r - deduped[-1]) <= _DEDUP_RTOL * max(abs(r), abs(deduped[-1])):
            continue
        deduped.append(r)
    return deduped


# -- derivatives ---------------------------------------------------------------


class Derivative(NamedTuple):
    value: float
    error: float


def central_derivative(
    fn: Callable[[float], float],
    t: float,
    domain: tuple[float, float] = (-math.inf, math.inf),
) -> Derivative:
    """Derivative of ``fn`` at ``t`` from central differences at h and 2h.

    The two differences are combined by one Richardson step. ``domain`` is the
    open interval on which ``fn`` may be evaluated; the stencil shrinks to fit
    inside it. The error estimate adds the stencil disagreement to a
    rounding term, so it grows when the step has to shrink.
    """
    lo, hi = domain
    h = (abs(t) if t != 0.0 else 1.0) * EPS ** (1.0 / 3.0)
    room = min(t - lo, hi - t)
    if not room > 0.0:
        raise StepError(f"t={t!r} is not inside the domain ({lo!r}, {hi!r})")
    # near an edge the function may vary on the scale of the remaining room
    if 16.0 * h > room:
        h = room / 16.0
    if h <= 64.0 * EPS * max(abs(t), 1e-300):
        raise StepError(f"no stencil fits at t={t!r}; distance to domain edge {room!r}")

    f1p, f1m = fn(t + h), fn(t - h)
    f2p, f2m = fn(t + 2.0 * h), fn(t - 2.0 * h)
    d1 = (f1p - f1m) / (2.0 * h)
    d2 = (f2p - f2m) / (4.0 * h)
    value = (4.0 * d1 - d2) / 3.0
    fmax = max(abs(f1p), abs(f1m), abs(f2p), abs(f2m))
    error = abs(d1 - d2) / 3.0 + 8.0 * EPS * fmax / h
    return Derivative(value, error)


# -- scaling fits --------------------------------------------------------------


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of ln(y) against ln(x)."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("xs and ys must be 1-d sequences of equal length")
    if x.size < 8:
        raise InsufficientSpanError(f"need at least 8 points, got {x.size}")
    if np.any(x <= 0.0) or np.any(y <= 0.0):
        raise ValueError("log-log fit needs strictly positive data")
    if x.max() / x.min() < 10.0:
        raise InsufficientSpanError("data must span at least one decade in x")
    slope, _ = np.polyfit(np.log(x), np.log(y), 1)
    return float(slope)
