# Wheels have a closed-form alliance polynomial.
#
# W_n is E_1 + C_{n-1}.  Sets avoiding the centre behave like sets of the rim
# cycle, the centre alone sits at x^1, and a set holding the centre plus k-1
# rim vertices lands at one of two exponents depending on whether some chosen
# rim vertex has no chosen rim neighbour.  b(n, k) counts the sets where none
# is isolated, which is a count of ring binary strings.

from alliance_poly import (alliance_polynomial, b_coeff, cyclic_string_oracle, generate,
                           to_text, wheel_polynomial, wheel_table)

n = 8
table = wheel_table(n)
print(f"W_{n}: xi = {table.xi}")
for k in range(2, n):
    print(f"  k={k}: a={table.a[k]:3d}  b={table.b[k]:3d}  "
          f"(ring-string count {cyclic_string_oracle(n, k)})")

print("closed form :", to_text(wheel_polynomial(n)))
print("brute force :", to_text(alliance_polynomial(generate("wheel", n))))

# The closed form is cheap well past what enumeration can reach.
print("A(W_40; x) =", to_text(wheel_polynomial(40)))
print("b(40, 25) =", b_coeff(40, 25))
