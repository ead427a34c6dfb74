"""Normal form of x0^i x1 x0^-i w for w in F2, without general rewriting.

The closed-form engine walks the blocks of w and stops at the first place
where a forbidden subword can appear. Its tag names the case it used.
The result always agrees with the generic normalizer.
"""

from thompsonf import conjugate_nf, f2_shape, normalize
from thompsonf.conjugate import conjugate_word

# one instance of each case the engine can reach
examples = [
    (1, "x0 x1"),
    (1, "x0^2 x1 x0^-1 x1^-1"),
    (1, "x0^3 x1^-1 x0^-1 x1"),
    (1, "x0^3 x1^-1 x0^-1 x1^-1"),
    (1, "x0^3 x1^-1 x0^-1 x1^-1 x0"),
    (1, "x0^3 x1^-2 x0 x1^-1"),
    (1, "x0^3 x1 x0^-1 x1^-2 x0 x1^-1"),
]
for i, text in examples:
    w = normalize(text)
    r = conjugate_nf(i, f2_shape(w))
    check = r.nf == normalize(conjugate_word(i, w))
    print(f"i={i}  w={w}")
    print(f"   tag={r.tag}  t={r.t}  c={r.c}  d={r.d}")
    print(f"   nf={r.nf}  agrees with normalizer: {check}")
