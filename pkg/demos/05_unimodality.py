# Unimodality of coefficient sequences.
#
# Wheel polynomials of even order only use odd exponents; skipping the zero
# coefficients, the sequence rises to the coefficient of x^(n-1) and falls.

from alliance_poly import alliance_polynomial, generate, is_unimodal, to_text, wheel_polynomial
from alliance_poly.closed_forms import a_coeff, b_coeff

for order in range(4, 17, 2):
    p = wheel_polynomial(order)
    v = is_unimodal(p)
    print(f"W_{order}: unimodal={v.unimodal} mode=x^{v.mode_exponent}  {to_text(p)}")

# Paths stop being unimodal at five vertices.
for n in range(2, 8):
    p = alliance_polynomial(generate("path", n))
    print(f"P_{n}: unimodal={is_unimodal(p).unimodal}  {to_text(p)}")

# a(m, r-1) >= b(m, r) holds for every even m but fails once for m = 5.
print("a(5,3) =", a_coeff(5, 3), " b(5,4) =", b_coeff(5, 4))
print("even m <= 40 all hold:",
      all(a_coeff(m, r - 1) >= b_coeff(m, r) for m in range(4, 41, 2) for r in range(3, m)))
