# Alliance polynomial of a small graph, computed from scratch.
#
# Every nonempty connected vertex set S of a graph G has an exact alliance
# index k_S: the worst surplus, over v in S, of neighbours inside S minus
# neighbours outside S.  The alliance polynomial puts one x^(n + k_S) for
# each such S.

from alliance_poly import (alliance_polynomial, exact_alliance_index, generate,
                           is_connected_subset, eval_at_one, to_text)

# W_5: centre 0, rim 1-2-3-4-1
w5 = generate("wheel", 5)
print(w5, "degrees", w5.degrees)

# Vertex sets are bit masks.  {centre, 1, 2}:
s = 0b00111
print("S = {0,1,2}: connected =", is_connected_subset(w5, s),
      " k_S =", exact_alliance_index(w5, s))

# The whole polynomial: 31 nonempty subsets, 29 of them connected.
p = alliance_polynomial(w5)
print("A(W_5; x) =", to_text(p))
print("A(W_5; 1) =", eval_at_one(p), "connected induced subgraphs")

# Read coefficients by alliance index: A_k is the coefficient of x^(n+k).
for k in range(-w5.max_degree, w5.max_degree + 1):
    print(f"  A_{k:+d} = {p[w5.n + k]}")
