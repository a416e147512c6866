"""
Orbits, stabilizers and construction traces
===========================================

Permuting digits maps an MIS to an MIS.  Each orbit has a single
(base, operator word) description; decompose() recovers it from any member.
"""

import math

from bruijn_mis import Permutation, act, construct, decompose, enumerate_orbit_reps, stabilizer, validate_mis

d = 4
reps = enumerate_orbit_reps(d)
print(f"{len(reps)} orbits of MISs of B({d},3)")

total = 0
for S, trace in reps:
    H = stabilizer(S)
    total += math.factorial(d) // H.order
    print(f"  {trace.base} {' '.join(trace.ops):12s} stabilizer {H.transposition_pairs() or 'trivial'}")
print("orbit sizes add up to", total)

# scramble one representative and decompose it again
S, trace = reps[-1]
sigma = Permutation((2, 0, 3, 1))
T = validate_mis(act(sigma, S))
t = decompose(T)
print("\nscrambled set   ", T)
print("recovered trace ", t)
print("rebuilds exactly:", construct(t) == T)
