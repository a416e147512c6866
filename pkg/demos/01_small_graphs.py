"""
A first look at B(d, 3)
=======================

Build the smallest de Bruijn graphs, list their maximum independent sets,
and watch the operators f, f', g, g' grow them.
"""

from bruijn_mis import B1, B2, apply_f, apply_f_prime, apply_g, apply_g_prime, build_graph, enumerate_all
from bruijn_mis.sets import Kind

# B(3, 3): 27 words, split by the shift into 8 directed 3-cycles and 3 loops
g = build_graph(3, 3)
print(g.num_nodes, "nodes,", len(g.three_cycles()), "three-cycles,", len(g.loops()), "loops")

# An independent set takes at most one word per 3-cycle, plus loops where allowed.
# For d = 2 there are exactly six maximum ones, in each kind.
print("\nwith loops (self-edges ignored):")
for S in enumerate_all(2):
    print("  ", S, "loops:", S.loops)
print("loop-less:")
for S in enumerate_all(2, Kind.LOOPLESS):
    print("  ", S)

# Every MIS comes from {000} or {000, 010, 111} by the four operators.
print("\nf(B1)  =", apply_f(B1))
print("f'(B1) =", apply_f_prime(B1))
print("g(B1)  =", apply_g(B1))
print("g'(B1) =", apply_g_prime(B1))
print("f(B2)  =", apply_f(B2))
