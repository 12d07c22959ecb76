"""Expanding eta-quotients and reading off arithmetic progressions.

Run:  python demos/expand_and_dissect.py
"""

from qeta import Series, evaluate, expand_f, p_oracle

# The Euler product f1 = (1-q)(1-q^2)(1-q^3)... is lacunary: its nonzero
# coefficients sit at the generalized pentagonal numbers.
f1 = expand_f(1, 26)
print("f1 =", f1)

# Its reciprocal generates the partition numbers.
partitions = f1.invert()
print("1/f1 =", Series(list(partitions.coeffs[:11])))
print(f"p(10) = {partitions.coeff(10)} (oracle: {p_oracle(10)[10]})")

# The series whose coefficients count partitions with no part = 3 mod 6.
a_series = evaluate("f3/(f1*f6)", 24)
print("\nsum a(n) q^n =", a_series)

# Dissect: keep only exponents = 2 mod 4, i.e. the subsequence a(4n+2).
# Every one of these is even - that is the congruence this series is
# famous for.
progression = a_series.extract(4, 2)
print("a(4n+2)     =", list(progression.coeffs))
print("halved      =", [c // 2 for c in progression.coeffs])

# The same works through the expression language directly.
print("\nvia DSL     =", list(evaluate("extract(f3/(f1*f6), 4, 2)", 5).coeffs))
