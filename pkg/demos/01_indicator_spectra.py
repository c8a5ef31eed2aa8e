"""Indicator rows and their power spectrum.

A symbolic sequence over a T-letter alphabet expands into T binary indicator
rows, one per symbol. Summing squared DFT magnitudes across the rows gives
the power spectrum P(k), whose total is always exactly m^2, so the mean
noise level E = total/m equals m and SNR(k) = P(k)/E needs no calibration.
"""
import numpy as np

from symspec import DNA, build_indicators, sequence_from_string, spectrum_base, verify_total_spectrum

seq = sequence_from_string("GATTACAGATTACA", DNA)
ind = build_indicators(seq)

print(f"sequence     : {seq.as_string()}  (m = {seq.m})")
print(f"alphabet     : {seq.alphabet}")
print(f"symbol counts: {{{', '.join(f'{s}: {int(c)}' for s, c in zip(seq.alphabet, ind.counts))}}}")
print()
print("indicator rows (one per symbol):")
for symbol, row in zip(seq.alphabet, ind.rows):
    print(f"  u_{symbol} = {row.astype(int)}")

report = spectrum_base(ind)
print()
print(f"power spectrum P(k): {np.round(report.power, 4)}")
print(f"total = {report.total:.6f}  (m^2 = {seq.m**2})")
print(f"mean noise E = {report.mean_noise:.6f}  (= m)")
print(f"SNR(k), k = 1..m-1: {np.round(report.snr, 4)}")

check = verify_total_spectrum(ind)
print()
print(f"total-spectrum identity: measured {check.measured:.6f}, "
      f"expected {check.expected:.0f}, rel err {check.relative_error:.2e}")

# The identity does not care about composition: a one-letter sequence puts
# all of its m^2 power into the k = 0 bin.
flat = spectrum_base(build_indicators(sequence_from_string("AAAAAAAA", DNA)))
print()
print(f"'AAAAAAAA': P(0) = {flat.power[0]:.1f}, total = {flat.total:.1f}, "
      f"SNR profile = {flat.snr}")
