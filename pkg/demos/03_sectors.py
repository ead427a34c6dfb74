"""The five sectors F1..F5 and how they fill a Cayley ball.

A normal form is sorted by its first two syllables. The counts below show
how the sectors share the ball of radius 8.
"""

from collections import Counter

from thompsonf import classify, enumerate_ball, normalize

for text in ["x0^3", "x0^2 x1^-1 x0", "x0^-2 x1", "x1^2 x0^-1", "x1^-1 x0"]:
    nf = normalize(text)
    print(f"{text:>16}  {classify(nf)}")

basis = enumerate_ball(8)
counts = Counter(str(classify(g)) for g in basis.elements)
print(f"\nB_8 has {len(basis)} elements")
for name in sorted(counts):
    print(f"  {name}: {counts[name]}")

# left multiplying an F5 element by a negative power of x0 lands in F3
g = normalize("x1^-2 x0 x1^-1 x0^2")
print(f"\n{g} is {classify(g)};  x0^-3 {g} is {classify(normalize(f'x0^-3 {g}'))}")
