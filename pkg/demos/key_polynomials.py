"""
Key polynomials and their skew versions.

Swapping the divided differences for isobaric ones in the skew construction
gives "skew keys". Unlike the divided difference version these can depend on
which reduced word is used; the smallest case is alpha = (0,1,2).
"""

from itertools import product

from skewschubert import (all_permutations, bruhat_leq, key_polynomial, reduced_words,
                          skew_key)
from skewschubert.skewkey import sorting_permutation

for alpha in [(2, 1), (0, 1), (0, 0, 2), (1, 0, 2), (0, 1, 2)]:
    print(f"key{alpha} = {key_polynomial(alpha)}")

print()
for alpha in product(range(3), repeat=3):
    w = sorting_permutation(alpha)
    for v in all_permutations(3):
        if not bruhat_leq(v, w):
            continue
        values = {word: skew_key(alpha, v, word) for word in sorted(reduced_words(w))}
        if len(set(values.values())) > 1:
            print(f"alpha={alpha} v={v}:")
            for word, f in values.items():
                print(f"   word {word}: {f}")
