"""
Counting and comma-free codes
=============================

The number of MISs follows a two-term recurrence; its exponential generating
function is a rational function.  Dropping loops gives an equinumerous family
of sets, each of which is a maximum comma-free code.
"""

from bruijn_mis import classical_code, code_classes, codes_from_lmis, count_mis, egf_coefficients, validate_code
from bruijn_mis.sets import CandidateSet

table = count_mis(8)
for d in range(1, 9):
    print(f"a_{d} = {table.a[d]}")

# the same numbers from the series (t + t^2) / (1 - 2t - t^2)
print("from the EGF:", [a for _, a in egf_coefficients(8)])

print("\norbit table b_{d,k} (one-loop, two-loop):")
for d, k, b, one, two, _ in table.rows():
    print(f"  d={d} k={k}: {b} ({one},{two})")

# comma-free codes from loop-less sets, grouped up to digit renaming
for d in (2, 3, 4):
    codes = list(codes_from_lmis(d))
    print(f"\nd={d}: {len(codes)} codes in {len(code_classes(codes))} classes")
print("classical code for d=3:", classical_code(3))

# a maximum comma-free code need not be independent
print(validate_code(CandidateSet.of(2, ["100", "110"])))
