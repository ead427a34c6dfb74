"""When can two conjugated generators send different words to one element?

For w1 != w2 there is at most one pair (i, j) with
x0^i x1 x0^-i w1 = x0^j x1 x0^-j w2. A family built from the relations
shows that pair really occurs.
"""

from thompsonf import collision_pairs, normalize
from thompsonf.words import concat, x0, x1

w1 = normalize("x1 x0^-2")
for i in range(2, 5):
    for j in range(1, i):
        w2 = concat(concat(x0(j), x1(-1)), concat(concat(x0(i - j), x1()), concat(x0(-i), w1)))
        print(f"i={i} j={j}  w2={normalize(w2)}  pairs={collision_pairs(w1, w2, 8)}")

print("\nunrelated words:", collision_pairs(normalize("x1"), normalize("x1^-1"), 8))
