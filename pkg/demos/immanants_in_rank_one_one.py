"""Immanants of the (1|1) generator matrix and their diagonal images.

Run: python3 demos/immanants_in_rank_one_one.py
"""

from qsl import combinat as cb
from qsl.aqmat import algebra
from qsl.immanant import immanant, immanant_sum
from qsl.symfun import phi_specialize, super_schur

alg = algebra(1, 1)

print("Principal minors of degree 2")
for la in cb.partitions(2):
    for I in cb.multisets(2, 2):
        print(f"  Imm_{cb.format_partition(la)}(X_{I}) = {immanant(la, I, alg=alg).latex()}")

print()
print("Sums over minors, pushed to the diagonal")
for r in range(1, 4):
    for la in cb.partitions(r):
        total = immanant_sum(la, alg)
        image = phi_specialize(total)
        ok = "ok" if image == super_schur(la, 1, 1) else "MISMATCH"
        print(f"  {cb.format_partition(la):8s} Phi = {image}   [{ok}]")

# (2,2) is not a (1|1)-hook: every immanant vanishes
print()
print("Imm_(2,2)(X_(1,1,2,2)) =", immanant((2, 2), (1, 1, 2, 2), alg=alg).latex())
