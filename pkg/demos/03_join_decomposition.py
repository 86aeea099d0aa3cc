# Joining two graphs adds every cross edge.  The alliance polynomial of the
# join is the two original polynomials plus a residual that collects sets
# meeting both sides; there are (2^n1 - 1)(2^n2 - 1) of those.

import random

from alliance_poly import generate, to_text
from alliance_poly.verify import check_join_theorem, random_graph

rep = check_join_theorem(generate("empty", 1), generate("cycle", 4))
print("A(E_1 + C_4) =", to_text(rep.lhs))
print("residual     =", to_text(rep.residual))
print("direct count =", to_text(rep.mixed))
print("residual(1) =", rep.residual_at_one, " expected", rep.expected_at_one)
# The residual's degree is not the degree of A(G1 u G2) here.
print("degrees: residual", rep.residual_degree, " union", rep.union_degree)

rng = random.Random(7)
for _ in range(5):
    g1, g2 = random_graph(rng, rng.randint(1, 5)), random_graph(rng, rng.randint(1, 5))
    r = check_join_theorem(g1, g2)
    print(f"n1={g1.n} n2={g2.n}: ok={r.ok} residual(1)={r.residual_at_one}")
