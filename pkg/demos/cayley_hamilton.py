"""The (1|1) Cayley-Hamilton identity in the localisation at x11 - x22, and
the residual of the candidate identity for (2|1).

Run: python3 demos/cayley_hamilton.py
"""

import json

from qsl.identities import cayley_hamilton_residual_21, verify_cayley_hamilton_11

rep = verify_cayley_hamilton_11()
print("(1|1):", rep.status)
for key in ("omega_1", "omega_1_target", "varpi_1", "varpi_1_target"):
    print(f"  {key:15s} {rep.details[key]}")

res = cayley_hamilton_residual_21()
print()
print("(2|1) candidate:", res.status)
print("  nonzero entries:", json.dumps(res.details["nonzero_entries"]))
print("  total terms:", res.details["terms"])
