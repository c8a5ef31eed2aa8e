"""Shared test helpers."""
import numpy as np


def dft_max_deviation(a, b) -> float:
    """Largest per-bin deviation between two spectra, measured relative to
    the larger of the two magnitudes with an absolute floor of 1."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    scale = np.maximum(np.maximum(np.abs(a), np.abs(b)), 1.0)
    return float(np.max(np.abs(a - b) / scale))
