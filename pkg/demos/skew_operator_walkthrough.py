"""
Walk through one skew divided difference from start to finish.

w = s2 s1 s3 s2 s1 and v = s2 s1 in S_4. There are three ways to pick the
letters of v out of the word of w, so the operator has three terms.
"""

from skewschubert import (from_word, reduce_mod_ideal, rewrite_search, schubert_expand,
                          skew_apply, skew_element, Polynomial)
from skewschubert.skewdiff import subword_choices

w = from_word((2, 1, 3, 2, 1))
v = from_word((2, 1))
print("w =", w, " v =", v)

for mask in subword_choices((2, 1, 3, 2, 1), v):
    print("  ", " ".join(f"s{a}" if take else f"d{a}" for a, take in zip((2, 1, 3, 2, 1), mask)))

for text in ("x1^3*x2^2", "x1^3*x2^2*x3"):
    f = Polynomial.parse(text)
    out = skew_apply(w, v, f)
    print(f"\n{text}  ->  {out}")
    print("  modulo I_4:", reduce_mod_ideal(out, 4))
    print("  Schubert expansion:", schubert_expand(out, 4))

# the same operator as an element of the bracket algebra
e = skew_element(w, v)
print("\n[w/v] =", e)
res = rewrite_search(e, depth=8)
for k, step in enumerate(res.path):
    print(f"  step {k}: {step}")
