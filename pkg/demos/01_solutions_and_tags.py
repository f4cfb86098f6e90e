"""Solve X + Y = c^z over a few bases and group the solutions by ideal pair.

Run: python3 demos/01_solutions_and_tags.py
"""
from powersum import Instance, association_tag, detect_case, enumerate_solutions, group_by_association

# 3 + 10 = 13 and 3^7 + 10 = 13^3: two solutions on one ideal pair
inst = Instance(13, (10, 3), z_max=9)
sols = enumerate_solutions(inst)
for s in sols:
    tag = association_tag(s, inst)
    print(f"{s.A} + {s.B} = 13^{s.z}   x={s.x} y={s.y}   tag (D={tag.D}, L={tag.L})")

case = detect_case(3, 10, 1)
print("3 + 10 = 13 is", case.kind, "with nu =", case.nu, "and partner", case.partner)

# (3, 2; 5) has three solutions spread over two tags
inst = Instance(5, (3, 2), z_max=10)
grouping = group_by_association(enumerate_solutions(inst), inst)
for tag, members in grouping.tags.items():
    print(f"tag (D={tag.D}, L={tag.L}):", sorted({m.value for m in members}))
