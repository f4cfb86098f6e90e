"""Known families of double solutions and the Mersenne-type quotient scan.

Run: python3 demos/05_catalog.py
"""
from powersum import anomalous_catalog, family_instances, mersenne_quotient_scan, pair_transform

for e in family_instances("F1", k=[2, 3], m=[2, 3]):
    print(e.family, e.params, "d =", e.d, "c =", e.c, e.values(), "ok" if e.verified else "FAILED")

print(sum(e.verified for e in anomalous_catalog()), "of 14 sporadic entries check out")

res = pair_transform(5, 11, 56, 1, 1, 5, 2)
print("new triple", res.triple, "with sums", res.sums)

for m in mersenne_quotient_scan([3, 5, 7, 11], t_max=2):
    print(f"p={m.p} t={m.t}: {m.digits} digits, {m.verdict}" + (f" (factor {m.factor})" if m.factor else ""))
