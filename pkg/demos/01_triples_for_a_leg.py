"""Every Pythagorean triple that has a given leg.

The gap delta = c - b must divide a^2, stay below a, and share parity with
a^2 / delta. Run: python demos/01_triples_for_a_leg.py
"""

from pytuple import all_triples, valid_deltas

a = 60
print(f"admissible gaps for a = {a}: {valid_deltas(a)}")
for t in all_triples(a):
    print(f"  delta={t.delta:>3}  ({t.a}, {t.b}, {t.c})  {t.kind.value}")

print()
print("primitive triples for a = 792:")
for t in all_triples(792, "primitive"):
    print(f"  delta={t.delta:>3}  {t.as_tuple()}")
