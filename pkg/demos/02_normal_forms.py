"""Rewriting a word to its unique normal form.

The rewriter repeatedly replaces the leftmost forbidden subword
x1^a x0^H x1^L by an equal word. The trace shows each step.
"""

from thompsonf import normalize, parse_word, word_to_map

w = parse_word("x1 x0 x1 x0^2 x1^-1")
trace = []
nf = normalize(w, trace=trace)
print("input:", w)
for step in trace:
    print(f"  {step['rule']}: {step['before']}  ->  {step['after']}")
print("normal form:", nf)
print("same element:", word_to_map(w) == word_to_map(nf))

# different spellings of one element land on the same normal form
spellings = ["x1 x0 x1", "x0 x1 x0^-2 x1 x0^2", "x1 x0 x1 x0 x0^-1"]
for s in spellings:
    print(f"{s:>24}  ->  {normalize(s)}")
