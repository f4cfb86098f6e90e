"""The exponent lattice U and the two counts p and q whose product bounds N.

Run: python3 demos/02_lattice_invariants.py
"""
from powersum import Instance, check_pq, invariants, unit_lattice

inst = Instance(13, (10, 3))
print("U basis (box search):  ", unit_lattice(inst, "box"))
print("U basis (group chain): ", unit_lattice(inst, "group"))

inv = invariants(inst)
print("parity classes of t with 10^t1 3^t2 = -1 mod 13:", inv.parity_classes)
print("square roots of 1 reachable from the bases:", inv.M)
print(f"p = {inv.p}, q = {inv.q}")

# p*q is always 2^(n-1) when -1 is reachable
for c, d in [(13, (10, 3)), (3517, (2, 3, 49)), (1009, (21, 26, 46, 49))]:
    res = check_pq(Instance(c, d))
    print(f"c={c} d={d}: p*q = {res.product}, expected {res.expected}")
