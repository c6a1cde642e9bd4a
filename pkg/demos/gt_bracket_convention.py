"""Which reading of the Gelfand-Tsetlin factors gives a module?

Both readings are run through the relation checks; exactly one survives.

Run: python3 demos/gt_bracket_convention.py
"""

from qsl import combinat as cb
from qsl.gtmodule import adjudicate_convention, check_relations, covariant_weight, enumerate_patterns

for m, n in [(1, 1), (2, 1), (1, 2), (2, 2)]:
    rep = adjudicate_convention(m, n, 3)
    print(f"({m}|{n}) passing: {rep.details['passing']}")

la, m, n = (2, 1), 1, 2
print()
print(f"lambda={la}, (m|n)=({m}|{n}): {len(enumerate_patterns(covariant_weight(la, m, n), m, n))} patterns")
for conv in ("q", "integer"):
    try:
        rep = check_relations(la, m, n, conv)
        print(f"  {conv:8s} {rep.status} {rep.witness or ''}")
    except ZeroDivisionError as exc:
        print(f"  {conv:8s} pole: {exc}")
print("SSYT count:", len(cb.super_tableaux(la, m, n)))
