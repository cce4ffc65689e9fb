"""
Structure constants c^w_{uv} three ways, side by side.

  product  expand S_u S_v in the Schubert basis modulo I_n
  skew     apply the w/v operator to S_u and take the constant term
  paths    sum signed chains through the factored Schubert expression
"""

import sys
import time

from skewschubert import (all_permutations, bruhat_leq, constants_by_product,
                          constants_by_skew, eta, theorem2_constants)

n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
perms = all_permutations(n)
start = time.perf_counter()
nonzero = 0
for u in perms:
    for v in perms:
        prod = constants_by_product(u, v, n)
        for w in perms:
            a = prod[w]
            b = eta(constants_by_skew(u, v, w)) if bruhat_leq(v, w) else 0
            c = theorem2_constants(w, u, n)[v] if bruhat_leq(u, w) else 0
            assert a == b == c, (u, v, w, a, b, c)
            if a and n <= 3:
                print(f"c^{w}_({u},{v}) = {a}")
            nonzero += bool(a)
print(f"{len(perms) ** 3} triples in S_{n}, {nonzero} nonzero, all routes agree "
      f"({time.perf_counter() - start:.1f}s)")
