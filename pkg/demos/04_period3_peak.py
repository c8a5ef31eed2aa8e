"""Finding a 3-periodicity peak in a codon-structured sequence.

Protein-coding DNA tends to reuse the same nucleotide statistics at each
codon position, which shows up as a spike in the power spectrum at the bin
k = m/3. This demo synthesizes such a sequence (biased codon positions plus
noise), locates the peak with periodicity_query, and writes the plot-ready
profile that `symspec spectrum` would emit.
"""
import csv
from pathlib import Path

import numpy as np

from symspec import (
    DNA,
    SymbolicSequence,
    build_indicators,
    build_zcurve,
    apply_representation,
    periodicity_query,
    spectrum_base,
    spectrum_transformed,
)

rng = np.random.default_rng(2024)
m = 1236  # divisible by 3, so the peak bin m/3 = 412 is exact

# Position-dependent nucleotide bias: each codon slot prefers one base.
slot_bias = [
    [0.55, 0.15, 0.15, 0.15],  # slot 0 prefers A
    [0.15, 0.15, 0.55, 0.15],  # slot 1 prefers G
    [0.15, 0.40, 0.15, 0.30],  # slot 2 mildly prefers C
]
codes = np.array([rng.choice(4, p=slot_bias[j % 3]) for j in range(m)])
seq = SymbolicSequence(DNA, codes, id="synthetic-coding")

ind = build_indicators(seq)
base = spectrum_base(ind)
zrep = spectrum_transformed(apply_representation(ind, build_zcurve()))

for report in (base, zrep):
    peak = periodicity_query(report, 3)
    tag = "exact" if peak.exact else "rounded"
    print(f"{report.representation:>6}: peak at k = {peak.k} ({tag}), "
          f"power = {peak.power:.1f}, SNR = {peak.snr:.4f}")

ratio = zrep.snr_at(412) / base.snr_at(412)
print(f"SNR amplification at the peak: {ratio:.6f} (T/(T-1) = {4 / 3:.6f})")

# A non-divisible length can only be queried approximately and says so.
short = SymbolicSequence(DNA, codes[:1000])
short_peak = periodicity_query(spectrum_base(build_indicators(short)), 3)
print(f"m = 1000: k = {short_peak.k}, exact = {short_peak.exact} "
      "(1000/3 is not an integer, so the bin is rounded)")

out = Path(__file__).with_name("period3_profile.csv")
with out.open("w", newline="") as fh:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["k", "frequency", "power", "snr"])
    for k in range(1, base.m):
        writer.writerow([k, k / base.m, float(base.power[k]), float(base.snr[k - 1])])
print(f"wrote {out.name} ({base.m - 1} rows); plot power vs k to see the spike at 412")
