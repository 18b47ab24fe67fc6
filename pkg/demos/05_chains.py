"""Grow tuples from one seed by forming a triple on each new hypotenuse."""

from pytuple import ChainStrategy, build_chains, classify_chain

chains = build_chains(15, 3)
print(f"{len(chains)} branches of depth 3 from 15; the first five:")
for ch in chains[:5]:
    print("  " + " + ".join(f"{x}^2" for x in ch.legs) + f" = {ch.hypotenuse}^2",
          classify_chain(ch).value)

# Smallest gap at every step needs no factoring, so it goes deep cheaply.
(deep,) = build_chains(15, 8, ChainStrategy(mode="min-delta", max_magnitude=10**400))
print(f"min-delta depth 8: hypotenuse has {len(str(deep.hypotenuse))} digits, identity holds: {deep.check()}")

capped = build_chains(720720, 2, ChainStrategy(max_branches=3))
print(f"720720 with at most 3 children per node: {len(capped)} chains, truncated={capped[0].truncated}")
