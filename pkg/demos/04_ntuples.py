"""Longer tuples: any number of given legs, two unknowns."""

from pytuple import all_completions

legs = [24, 57, 54, 33, 39, 21, 48]
k = sum(x * x for x in legs)
for s in all_completions(legs, "primitive"):
    lhs = " + ".join(f"{x}^2" for x in (*legs, s.completion))
    assert k + s.completion**2 == s.hypotenuse**2
    print(f"{lhs} = {s.hypotenuse}^2")
