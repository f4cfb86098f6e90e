"""Every solution on an ideal pair lies on the orbit of one principal generator.

Run: python3 demos/03_orbits.py
"""
from powersum import Instance, minimal_pair_power, orbit_power, predicted_solution
from powersum.classify import IdealPairTag

inst = Instance(13, (10, 3), z_max=9)
seed = minimal_pair_power(IdealPairTag(30, 3), inst)
print(f"13^{2 * seed.j} = ({seed.u})^2 + 30*({seed.v})^2")
for t in range(1, 5):
    u, v = orbit_power(seed, t)
    A, B, z = predicted_solution(seed, t, 13)
    print(f"t={t}: u={u}, v={v}  ->  A={A}, B={B}, z={z}")
# only t=1 and t=3 have A, B built from 10 and 3 alone
