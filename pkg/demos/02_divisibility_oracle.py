"""Exact divisibility of divisor sums, decided by multiplicative order.

For an odd prime q and a prime p != q the power q^b exactly dividing
sigma(p^c) is governed by the order d of p mod q and the power a of q
in p^d - 1.  The witness returned by sigma_exact_power records the
branch taken and both parameters, and cross-checks itself against the
directly computed valuation.
"""

from goodprimes import sigma_exact_power, sigma_prime_power, valuation

cases = [
    (5, 1, 11, 4),  # 11 = 1 (mod 5): reduces to 5^b || c+1
    (5, 2, 7, 3),   # 7 has order 4 mod 5: needs 4 | c+1
    (5, 1, 7, 2),   # order 4 does not divide 3
    (5, 4, 7, 99),  # deep case: a + v5(100) = 4
    (3, 2, 5, 17),
]

for q, b, p, c in cases:
    w = sigma_exact_power(q, b, p, c)
    direct = valuation(q, sigma_prime_power(p, c))
    verdict = "holds" if w.holds else "fails"
    print(
        f"{q}^{b} || sigma({p}^{c}) {verdict:5}  "
        f"[branch {w.branch}, d={w.d}, a={w.a}; direct valuation {direct}]"
    )

print()
print("The parity consequence: any prime p with p = 2, 3, 4 (mod 5) has")
print("even order mod 5, so 5 never divides sigma(p^(2*beta)):")
from goodprimes import sigma_coprime_to_five

for p in (3, 7, 13, 17, 23):
    checks = all(sigma_coprime_to_five(p, beta) for beta in range(1, 11))
    print(f"  p={p}: 5 avoids sigma(p^(2 beta)) for beta 1..10: {checks}")
