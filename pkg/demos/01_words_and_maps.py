"""Words in x0, x1 and the interval maps they stand for.

Every element of F is a piecewise linear map of [0, 1]. Two words are equal
in F exactly when their maps agree, which makes the map an oracle for
everything else in the package.
"""

from thompsonf import parse_word, word_to_map
from thompsonf.selftest import relators

w = parse_word("x0^2 x1^-1 x0^-1 x0")
print("parsed and freely reduced:", w)

print("\nx0 as a map (breakpoints):")
print(word_to_map("x0").dump())
print("\nx1 as a map (breakpoints):")
print(word_to_map("x1").dump())

# the action is on the left: the map of ab is f_a after f_b
f = word_to_map("x0 x1")
print("\n(x0 x1)(1/2) =", f(0.5))

# both relators of the finite presentation collapse to the identity
for r in relators():
    print(f"\n{r}\n  -> identity: {word_to_map(r).breakpoints() == [(0, 0), (1, 1)]}")
