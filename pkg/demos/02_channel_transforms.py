"""Channel transforms: zcurve, tetrahedron, Helmert, and custom matrices.

A (T-1) x T matrix with mutually orthogonal rows of common norm d, each
orthogonal to the all-ones row, turns the T indicator rows into T-1 real
channels. Columns are bound to symbols, so matrices built over different
symbol orders (zcurve uses A,C,G,T; tetrahedron uses A,T,C,G) still apply
to the same sequence without bookkeeping on the caller's side.
"""
import numpy as np

from symspec import (
    DNA,
    apply_representation,
    build_helmert,
    build_indicators,
    build_tetrahedron,
    build_zcurve,
    cumulative_coordinates,
    matrix_to_dict,
    sequence_from_string,
    validate_row_orthogonal,
)

seq = sequence_from_string("ATGGCGTTAACG", DNA)
ind = build_indicators(seq)

for rep in (build_zcurve(), build_tetrahedron(), build_helmert(4)):
    order = "".join(rep.alphabet_order) if rep.alphabet_order else "(positional)"
    print(f"{rep.name}: d = {rep.d:.6f}, kind = {rep.kind}, columns = {order}")

print()
zsig = apply_representation(ind, build_zcurve())
print(f"zcurve channels of {seq.as_string()} (each entry is +-1):")
labels = ("purine/pyrimidine", "amino/keto", "weak/strong H-bond")
for label, channel in zip(labels, zsig.channels):
    print(f"  {label:>20}: {channel.astype(int)}")

coords = cumulative_coordinates(zsig)
print()
print("cumulative coordinates (running sums; the final column is the")
print("count difference each channel encodes, e.g. f_A + f_G - f_C - f_T):")
for label, curve in zip(labels, coords):
    print(f"  {label:>20}: {curve.astype(int)}")

# Any matrix passing validation works the same way; scaling the rows scales
# the channels but cancels out of every SNR downstream.
scaled = validate_row_orthogonal(2.5 * build_zcurve().rows, "ACGT", name="zcurve-x2.5")
print()
print(f"custom matrix {scaled.name}: d = {scaled.d}")
print("JSON form (what save_matrix writes):")
print(matrix_to_dict(scaled))

sig = apply_representation(ind, scaled)
np.testing.assert_allclose(sig.channels, 2.5 * zsig.channels)
print("channels scale linearly with the rows, as expected")
