"""The theta-function route to the parity result.

The quotient f2^2*f3*f12/(f1*f4*f6) expands with 0/1 coefficients supported
exactly on the numbers 3k^2+2k - so modulo 2 the a(n) series collapses to a
sparse theta series times a partition series in q^12.  Since 3(4N+2)+1 and
3(4N+3)+1 are never squares, nothing lands on those progressions, and the
evenness of a(4n+2), a(4n+3) drops out.

Run:  python demos/theta_parity.py
"""

from qeta import check_convolution, check_empty_support, evaluate, g_oracle

G = evaluate("f2^2*f3*f12/(f1*f4*f6)", 100)
support = [n for n in range(101) if G.coeff(n)]
print("support of G(q) up to q^100:", support)
print("3k^2+2k for k=0,-1,1,-2,2,...:", sorted(
    3 * k * k + 2 * k for k in range(-6, 7) if 0 <= 3 * k * k + 2 * k <= 100
))

# g is the 0/1 indicator of that support; the whole mod-2 reduction of the
# a(n) series is the convolution of p(k) with g(n-12k).
print("\n", check_convolution(1000).record(), sep="")

# The two progressions that stay empty - the actual source of the parity.
for j in (2, 3):
    print(check_empty_support(4, j, 10**5).record())

# And the arithmetic fact behind the emptiness:
print("\n(3k+1)^2 mod 4 values for |k| <= 10:",
      sorted({(3 * k + 1) ** 2 % 4 for k in range(-10, 11)}))
print("g(4N+2) would need 12N+7 = (3k+1)^2, i.e. a square = 3 mod 4: impossible")
print("g(4N+3) would need 12N+10 = (3k+1)^2, i.e. a square = 2 mod 4: impossible")
print("\ng table sanity:", [g_oracle(8)[n] for n in range(9)])
