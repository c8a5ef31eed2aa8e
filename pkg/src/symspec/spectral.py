"""DFT power spectra and signal-to-noise ratios of sequence representations.

For a T-symbol sequence of length m with indicator rows u_t and their DFTs
U_t(k) = sum_j u_t(j) exp(-i 2 pi k j / m):

    P(k)   = sum_t |U_t(k)|^2        base (T-vector) power spectrum
    total  = sum_k P(k) = m^2        exact identity, any sequence
    E      = total / m               mean noise (includes the k = 0 term)
    SNR(k) = P(k) / E                reported for k = 1 .. m-1 only

A (T-1)-channel transform with common row norm d and rows orthogonal to the
constant row (see symspec.representations) rescales but never reshapes the
spectrum away from k = 0:

    P_rep(k)   = d^2 P(k)                 for k != 0
    total_rep  = d^2 (T-1)/T m^2          exact identity
    SNR_rep(k) = T/(T-1) SNR(k)           independent of d

``snr_ratio_check`` and ``verify_total_spectrum`` measure those identities
numerically. ``dft_naive`` is the O(m^2) direct-summation reference;
``dft_fast`` must match it bin for bin and is what the report builders use.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .representations import IndicatorMatrix, RepresentationMatrix, TransformedSignal, apply_representation

__all__ = [
    "IDENTITY_RTOL",
    "DFT_MATCH_TOL",
    "BASE_SNR_FLOOR",
    "SpectrumReport",
    "TotalSpectrumCheck",
    "RatioCheck",
    "PeriodicityPeak",
    "dft_naive",
    "dft_fast",
    "spectrum_base",
    "spectrum_transformed",
    "snr_ratio_check",
    "verify_total_spectrum",
    "periodicity_query",
]

IDENTITY_RTOL = 1e-9   # relative tolerance for the spectral identities
DFT_MATCH_TOL = 1e-9   # per-bin fast-vs-naive tolerance (relative, floor 1e-9)
BASE_SNR_FLOOR = 1e-12  # ratio bins with base SNR at or below this are skipped


def dft_naive(x) -> np.ndarray:
    """Direct-summation DFT, X(k) = sum_j x(j) exp(-i 2 pi k j / m).

    O(m^2); the independent reference implementation for dft_fast.
    """
    xc = np.asarray(x, dtype=np.complex128)
    if xc.ndim != 1 or xc.size == 0:
        raise ValueError("input must be a non-empty 1-D sequence")
    m = xc.size
    j = np.arange(m)
    out = np.empty(m, dtype=np.complex128)
    for k in range(m):
        out[k] = np.sum(xc * np.exp((-2j * np.pi * k / m) * j))
    return out


def dft_fast(x) -> np.ndarray:
    """Fast DFT for arbitrary lengths (not just powers of two).

    Same contract as dft_naive; per-bin agreement within DFT_MATCH_TOL.
    """
    xc = np.asarray(x, dtype=np.complex128)
    if xc.ndim != 1 or xc.size == 0:
        raise ValueError("input must be a non-empty 1-D sequence")
    return np.fft.fft(xc)


@dataclass(frozen=True, repr=False)
class SpectrumReport:
    """Per-frequency power, its total and average, and the SNR profile.

    ``snr[i]`` is the ratio at frequency bin k = i + 1; the trivial k = 0
    bin is excluded from the profile but counted in ``mean_noise``.
    ``d`` is None for the base representation.
    """

    representation: str
    m: int
    alphabet_size: int
    d: float | None
    power: np.ndarray
    total: float
    mean_noise: float
    snr: np.ndarray

    def __post_init__(self):
        for name in ("power", "snr"):
            arr = np.array(getattr(self, name), dtype=np.float64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def snr_at(self, k: int) -> float:
        """SNR at frequency bin k, 1 <= k <= m-1."""
        if not 1 <= k <= self.m - 1:
            raise ValueError(f"k must be in 1..{self.m - 1}, got {k}")
        return float(self.snr[k - 1])

    def __repr__(self) -> str:
        return (
            f"SpectrumReport({self.representation!r}, m={self.m}, "
            f"total={self.total:.6g}, mean_noise={self.mean_noise:.6g})"
        )


def _report(name: str, size: int, d: float | None, channels: np.ndarray) -> SpectrumReport:
    spectra = np.fft.fft(channels, axis=1)
    power = np.sum(np.abs(spectra) ** 2, axis=0)
    total = float(np.sum(power))
    m = channels.shape[1]
    mean_noise = total / m
    snr = power[1:] / mean_noise
    return SpectrumReport(
        representation=name,
        m=m,
        alphabet_size=size,
        d=d,
        power=power,
        total=total,
        mean_noise=mean_noise,
        snr=snr,
    )


def spectrum_base(ind: IndicatorMatrix) -> SpectrumReport:
    """Power spectrum of the indicator (base-vector) representation.

    Its total is exactly m^2 and its mean noise exactly m, so the SNR
    profile is sum_t |U_t(k)|^2 / m.
    """
    return _report("base", ind.alphabet.size, None, ind.rows)


def spectrum_transformed(sig: TransformedSignal) -> SpectrumReport:
    """Power spectrum summed over the T-1 transform channels.

    Total equals d^2 (T-1)/T m^2; the SNR profile is T/(T-1) times the base
    profile regardless of d.
    """
    return _report(sig.name, sig.size, sig.d, sig.channels)


@dataclass(frozen=True)
class TotalSpectrumCheck:
    """Measured total base spectrum against the exact m^2 identity."""

    expected: float
    measured: float
    relative_error: float

    def passed(self, rtol: float = IDENTITY_RTOL) -> bool:
        return self.relative_error <= rtol


def verify_total_spectrum(ind: IndicatorMatrix) -> TotalSpectrumCheck:
    """Check sum_k sum_t |U_t(k)|^2 = m^2 on the given indicators."""
    report = spectrum_base(ind)
    expected = float(ind.m) ** 2
    return TotalSpectrumCheck(
        expected=expected,
        measured=report.total,
        relative_error=abs(report.total - expected) / expected,
    )


@dataclass(frozen=True, repr=False)
class RatioCheck:
    """Per-frequency transformed/base SNR ratios against T/(T-1).

    ``ratios`` spans k = 1 .. m-1 with NaN at skipped bins (base SNR at or
    below BASE_SNR_FLOOR). ``max_deviation`` is max |ratio - expected| over
    the checked bins, NaN when every bin was skipped.
    """

    expected: float
    ratios: np.ndarray
    max_deviation: float
    checked_bins: int
    skipped_bins: int

    def __post_init__(self):
        arr = np.array(self.ratios, dtype=np.float64)
        arr.setflags(write=False)
        object.__setattr__(self, "ratios", arr)

    @property
    def vacuous(self) -> bool:
        return self.checked_bins == 0

    def passed(self, rtol: float = IDENTITY_RTOL) -> bool:
        return self.vacuous or self.max_deviation <= rtol * self.expected

    def __repr__(self) -> str:
        dev = "vacuous" if self.vacuous else f"max_dev={self.max_deviation:.3g}"
        return f"RatioCheck(expected={self.expected:.6g}, {dev}, checked={self.checked_bins})"


def snr_ratio_check(ind: IndicatorMatrix, rep: RepresentationMatrix) -> RatioCheck:
    """Measure SNR_rep(k) / SNR_base(k) at every usable frequency bin."""
    base = spectrum_base(ind)
    transformed = spectrum_transformed(apply_representation(ind, rep))
    T = ind.alphabet.size
    expected = T / (T - 1.0)
    ratios = np.full(ind.m - 1, np.nan)
    mask = base.snr > BASE_SNR_FLOOR
    ratios[mask] = transformed.snr[mask] / base.snr[mask]
    checked = int(np.count_nonzero(mask))
    max_dev = float(np.max(np.abs(ratios[mask] - expected))) if checked else math.nan
    return RatioCheck(
        expected=expected,
        ratios=ratios,
        max_deviation=max_dev,
        checked_bins=checked,
        skipped_bins=int(ind.m - 1 - checked),
    )


@dataclass(frozen=True)
class PeriodicityPeak:
    """Power and SNR at the frequency bin of a given periodicity.

    ``exact`` is False when the period does not divide m and k was rounded.
    """

    period: int
    k: int
    exact: bool
    power: float
    snr: float


def periodicity_query(report: SpectrumReport, period: int) -> PeriodicityPeak:
    """Look up the bin k = m/period (rounded when the period does not divide m)."""
    if period < 2:
        raise ValueError(f"period must be at least 2, got {period}")
    if period > report.m:
        raise ValueError(f"period {period} exceeds sequence length {report.m}")
    k, rem = divmod(report.m, period)
    exact = rem == 0
    if not exact:
        k = round(report.m / period)
    return PeriodicityPeak(
        period=period,
        k=k,
        exact=exact,
        power=float(report.power[k]),
        snr=report.snr_at(k),
    )
