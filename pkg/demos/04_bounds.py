"""Bounded checks of the counting bounds, from one instance to a whole sweep.

Run: python3 demos/04_bounds.py
"""
from powersum import Instance
from powersum import verify as V

for c, d in [(5, (3, 2)), (3, (5, 2)), (13, (10, 3))]:
    rep = V.verify_theorem2(Instance(c, d))
    print(f"c={c} d={d}: N={rep.N} bound={rep.bound} exception={rep.exception_applied}")

print(V.verify_corollary2([5, 2], 3).witnesses)

insts = list(V.sweep_instances(2, 31, 10, 8))
reports = V.run_sweep(insts)
print(len(insts), "instances,", sum(not r.ok for r in reports), "failed checks")
