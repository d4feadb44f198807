"""Periodograms and a heuristic periodic / quasiperiodic / chaotic label."""

from __future__ import annotations

import enum
import io
from dataclasses import dataclass

import numpy as np
from scipy.signal import find_peaks

from .orbit import Orbit
from .settings import CLASSIFIER, ClassifierSettings

__all__ = ["Spectrum", "Label", "AttractorLabel", "psd", "classify", "classify_series", "recurrence_period"]


@dataclass(frozen=True)
class Spectrum:
    """One-sided periodogram; frequencies in cycles per iteration.

    ``power`` is normalised so that ``power.sum()`` equals the energy
    ``sum((w * x)**2)`` of the windowed, mean-removed sequence.
    """

    freqs: np.ndarray
    power: np.ndarray

    def to_csv(self, path=None) -> str:
        buf = io.StringIO()
        buf.write("freq,power\n")
        for f, p in zip(self.freqs, self.power):
            buf.write(f"{float(f)!r},{float(p)!r}\n")
        text = buf.getvalue()
        if path is not None:
            with open(path, "w", newline="") as fh:
                fh.write(text)
        return text


class Label(str, enum.Enum):
    PERIODIC_LIKE = "periodic-like"
    QUASIPERIODIC_LIKE = "quasiperiodic-like"
    CHAOTIC = "chaotic"
    DIVERGED = "diverged"


@dataclass(frozen=True)
class AttractorLabel:
    label: Label
    dominant_freqs: tuple = ()
    peak_count: int = 0
    period: int | None = None
    concentration: float | None = None


def _prepare(x, window) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if len(x) < 64:
        raise ValueError(f"need at least 64 samples for a periodogram, got {len(x)}")
    n = 1 << (len(x).bit_length() - 1)
    x = x[-n:]
    x = x - x.mean()
    if window in (None, "none"):
        return x
    if window == "hann":
        return x * np.hanning(n)
    raise ValueError(f"unknown window {window!r}; use None or 'hann'")


def psd(x, window: str | None = "hann") -> Spectrum:
    """Periodogram of the last 2^k samples of ``x``."""
    xw = _prepare(x, window)
    n = len(xw)
    spec = np.abs(np.fft.rfft(xw)) ** 2 / n
    spec[1:-1] *= 2.0  # fold negative frequencies; DC and Nyquist appear once
    return Spectrum(np.fft.rfftfreq(n), spec)


def recurrence_period(x, eps: float, max_period: int) -> int | None:
    """Smallest p <= max_period with max |x[n+p] - x[n]| < eps, else None."""
    x = np.asarray(x, dtype=float)
    for p in range(1, min(max_period, len(x) - 1) + 1):
        if np.max(np.abs(x[p:] - x[:-p])) < eps:
            return p
    return None


def classify_series(x, settings: ClassifierSettings = CLASSIFIER) -> AttractorLabel:
    """Label a post-transient scalar sequence."""
    x = np.asarray(x, dtype=float)
    if len(x) < settings.min_length:
        raise ValueError(f"need at least {settings.min_length} post-transient samples, got {len(x)}")
    period = recurrence_period(x, settings.recurrence_eps, settings.max_period)
    if period is not None:
        return AttractorLabel(Label.PERIODIC_LIKE, (1.0 / period,) if period > 1 else (), 0, period)

    spec = psd(x, "hann")
    power = spec.power
    total = power.sum()
    # the DC bin is dropped: mean removal leaves only window leakage there;
    # padded index i is power index i
    padded = np.concatenate([[-np.inf], power[1:], [-np.inf]])
    floor = np.median(power[1:])
    peaks, _ = find_peaks(padded, height=floor * 10.0 ** (settings.peak_floor_db / 10.0))
    ranked = peaks[np.argsort(power[peaks])[::-1]][: settings.max_peaks]
    mask = np.zeros(len(power), bool)
    for k in ranked:
        mask[max(0, k - settings.peak_halfwidth) : k + settings.peak_halfwidth + 1] = True
    concentration = float(power[mask].sum() / total) if total > 0 else 0.0
    freqs = tuple(float(f) for f in spec.freqs[ranked])
    if len(ranked) and concentration >= settings.concentration:
        label = Label.QUASIPERIODIC_LIKE
    else:
        label = Label.CHAOTIC
    return AttractorLabel(label, freqs, len(peaks), None, concentration)


def classify(orbit: Orbit, discard: int | None = None, settings: ClassifierSettings = CLASSIFIER) -> AttractorLabel:
    """Label the ``x`` component of an orbit after ``discard`` points."""
    if orbit.diverged:
        return AttractorLabel(Label.DIVERGED)
    discard = orbit.discard if discard is None else discard
    return classify_series(orbit.x[discard:], settings)
