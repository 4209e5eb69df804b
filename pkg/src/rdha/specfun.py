"""Confluent hypergeometric function 1F1 and its positive zeros.

Everything here runs on the power series; arguments in this toolkit stay
small enough (|y| <= 700 guards exp overflow in downstream prefactors) that
no asymptotic evaluation path is needed.  Negative-integer first parameters
short-circuit to the exact terminating polynomial.
"""

from __future__ import annotations

import math

import numpy as np

SERIES_RTOL = 1e-16
SERIES_MAX_TERMS = 100_000
ZERO_ATOL = 1e-12


class SeriesCapExceededError(RuntimeError):
    """Series failed to converge within the hard term cap."""


class ParameterPoleError(ValueError):
    """b is zero or a negative integer and the series hits its pole."""


def _neg_int(v, tol=0.0):
    """Return n >= 0 if v == -n for integer n (exactly, up to tol)."""
    if v > tol:
        return None
    r = round(v)
    if abs(v - r) <= tol and r <= 0:
        return -int(r)
    return None


def hyp1f1(a: float, b: float, y: float) -> float:
    """Kummer series sum_k (a)_k / (b)_k * y^k / k!.

    Stops when |term| < 1e-16 * |partial sum| for three consecutive terms.
    A negative-integer `a` terminates the series exactly after -a+1 terms;
    this also covers b a negative integer of larger magnitude.
    """
    if abs(y) > 700:
        raise OverflowError(f"argument y={y} exceeds the overflow guard (700)")
    na = _neg_int(a)
    nb = _neg_int(b)
    if nb is not None and (na is None or na > nb):
        raise ParameterPoleError(f"b={b} is a non-positive integer pole of the series")
    if y == 0.0:
        return 1.0

    total = 1.0
    term = 1.0
    small = 0
    k = 0
    while k < SERIES_MAX_TERMS:
        if na is not None and k >= na:
            return total  # polynomial: terms beyond k = -a vanish identically
        term *= (a + k) / (b + k) * y / (k + 1)
        total += term
        k += 1
        if abs(term) < SERIES_RTOL * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise SeriesCapExceededError(
        f"1F1({a}, {b}, {y}) did not converge within {SERIES_MAX_TERMS} terms")


def zero_approx(a: float, b: float, m: int) -> float:
    """Leading-order estimate pi^2 (m + b/2 - 3/4)^2 / (2b - 4a) of the m-th positive zero."""
    if m < 1:
        raise ValueError("zero index m must be >= 1")
    denom = 2 * b - 4 * a
    if denom <= 0:
        raise ValueError(f"2b - 4a = {denom} must be positive for the zero estimate")
    return math.pi ** 2 * (m + b / 2 - 0.75) ** 2 / denom


class ZeroCountError(RuntimeError):
    """Fewer positive zeros than requested were found below the search limit."""


def hyp1f1_zero(a: float, b: float, m: int, search_limit: float = 200.0) -> float:
    """m-th positive zero of y -> 1F1(a, b, y), located by sign-change scan + bisection.

    The scan step is the leading-order first-zero estimate divided by 20, so
    the bracketing resolves individual zeros; bisection refines to 1e-12.
    """
    if m < 1:
        raise ValueError("zero index m must be >= 1")
    step = zero_approx(a, b, 1) / 20.0
    step = min(step, search_limit / 40.0)

    found = 0
    y0 = 1e-14  # skip y=0 where 1F1 = 1
    f0 = hyp1f1(a, b, y0)
    y = y0
    while y < search_limit:
        y1 = min(y + step, search_limit)
        f1 = hyp1f1(a, b, y1)
        if f0 == 0.0:
            found += 1
            if found == m:
                return y
        elif f0 * f1 < 0:
            found += 1
            if found == m:
                lo, hi = y, y1
                flo = f0
                while hi - lo > ZERO_ATOL:
                    mid = 0.5 * (lo + hi)
                    fm = hyp1f1(a, b, mid)
                    if fm == 0.0:
                        return mid
                    if flo * fm < 0:
                        hi = mid
                    else:
                        lo, flo = mid, fm
                return 0.5 * (lo + hi)
        y, f0 = y1, f1
    raise ZeroCountError(
        f"only {found} zeros of 1F1({a}, {b}, y) found in (0, {search_limit}]")


def hyp1f1_vec(a: float, b: float, y) -> np.ndarray:
    """Vectorized wrapper around hyp1f1 for array arguments."""
    arr = np.asarray(y, dtype=float)
    out = np.empty(arr.shape)
    for idx in np.ndindex(arr.shape):
        out[idx] = hyp1f1(a, b, float(arr[idx]))
    return out
