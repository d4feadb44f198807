"""Caputo-like fractional-order discrete maps, 0 < q < 1, starting point 0.

The solution of ``Delta_*^q z(t) = f(z(t + q - 1))``, ``z(0) = z0`` is

    z(n) = z0 + sum_{k=1..n} w[n-k] f(z(k-1)),
    w[j] = Gamma(j + q) / (Gamma(q) Gamma(j + 1)).

The kernel is built with the ratio recurrence ``w[j] = w[j-1] (j-1+q)/j``
so that no Gamma function is ever evaluated (Gamma(n+q) overflows a double
near n = 170).  The map values ``f(z(k-1))`` are cached, so each step is one
dot product with the reversed kernel: O(N^2) time, O(N) memory.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from .maps import MapSpec, evaluate
from .orbit import DEFAULT_ESCAPE_RADIUS, Orbit, _check_common

__all__ = ["CaputoWeights", "weights", "iterate_fo", "iterate_fo_real"]


@dataclass(frozen=True)
class CaputoWeights:
    q: float
    w: np.ndarray

    def __len__(self) -> int:
        return len(self.w)


def _check_order(q: float):
    if not 0.0 < q < 1.0:
        raise ValueError(f"fractional order q must lie in (0, 1), got {q}")


def weights(q: float, n: int) -> CaputoWeights:
    """Memory kernel ``w[0..n-1]``; ``w[0] = 1``, strictly decreasing."""
    _check_order(q)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    j = np.arange(1, n, dtype=float)
    w = np.empty(n)
    w[0] = 1.0
    # cumprod is the sequential recurrence, evaluated left to right
    np.cumprod((j - 1.0 + q) / j, out=w[1:])
    w.setflags(write=False)
    return CaputoWeights(float(q), w)


def _reversed_kernel(q: float, steps: int, memory: int | None) -> np.ndarray:
    if memory is not None and memory < 1:
        raise ValueError(f"memory must be >= 1 or None, got {memory}")
    kernel = weights(q, steps).w[::-1].copy()
    return kernel


def iterate_fo(
    spec: MapSpec,
    z0: complex,
    q: float,
    steps: int,
    escape_radius: float = DEFAULT_ESCAPE_RADIUS,
    discard: int = 0,
    memory: int | None = None,
) -> Orbit:
    """Fractional-order orbit of ``spec`` from ``z0``.

    ``memory`` truncates the sum to the last ``memory`` terms (short-memory
    principle).  The default ``None`` keeps the full history.
    """
    _check_order(q)
    _check_common(steps, escape_radius)
    z0 = complex(z0)
    rk = _reversed_kernel(q, steps, memory)
    fx = np.empty(steps)
    fy = np.empty(steps)
    points = np.empty(steps + 1, dtype=complex)
    points[0] = z0
    x0, y0 = z0.real, z0.imag
    z = z0
    diverged_at = None
    for n in range(1, steps + 1):
        fz = evaluate(spec, z)
        fx[n - 1] = fz.real
        fy[n - 1] = fz.imag
        lo = 0 if memory is None else max(0, n - memory)
        kern = rk[steps - n + lo :]
        z = complex(x0 + kern @ fx[lo:n], y0 + kern @ fy[lo:n])
        points[n] = z
        if not abs(z) <= escape_radius:
            diverged_at = n
            points = points[: n + 1].copy()
            break
    return Orbit(points, spec, float(q), diverged_at, discard, escape_radius, memory)


def iterate_fo_real(
    f: Callable[[float], float],
    u0: float,
    q: float,
    steps: int,
    escape_radius: float = np.inf,
    memory: int | None = None,
) -> np.ndarray:
    """Scalar version of :func:`iterate_fo`; returns ``u[0..steps]``.

    Stops early (shorter result, last value escaped) when ``|u| > escape_radius``.
    """
    _check_order(q)
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    rk = _reversed_kernel(q, steps, memory)
    fu = np.empty(steps)
    u = np.empty(steps + 1)
    u[0] = u0 = float(u0)
    for n in range(1, steps + 1):
        fu[n - 1] = f(u[n - 1])
        lo = 0 if memory is None else max(0, n - memory)
        u[n] = u0 + rk[steps - n + lo :] @ fu[lo:n]
        if not abs(u[n]) <= escape_radius:
            return u[: n + 1].copy()
    return u
