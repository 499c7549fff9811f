"""Why the common exponent of the squarefree form is forced into {1, 2}.

If an odd perfect number were 5^alpha * M^(2*beta) with M squarefree,
counting prime divisors two ways traps beta: at least
(3^(2*beta-1) - 1) / ln(2*beta+1) distinct primes are forced in, while
at most 4*beta^2 + 2*beta + 3 fit.  The comparison is transcendental, so
it is decided with certified rational enclosures of the logarithm, not
floats.
"""

from goodprimes import beta_feasible, forced_prime_count, omega_upper_bound

print(f"{'beta':>4} {'forced count >=':>18} {'omega bound':>12} {'feasible':>9}")
for beta in range(1, 11):
    lower = forced_prime_count(beta)
    print(
        f"{beta:>4} {float(lower):>18.3f} {omega_upper_bound(beta):>12} "
        f"{str(beta_feasible(beta)):>9}"
    )

survivors = [beta for beta in range(1, 101) if beta_feasible(beta)]
print(f"\nfeasible beta in 1..100: {survivors}")

print("\nThe certified enclosure behind beta = 2:")
bound = forced_prime_count(2)
print(f"  ln(5) in [{float(bound.log_lower):.15f}, {float(bound.log_upper):.15f}]")
print(f"  26 / ln(5) in [{float(bound.lower):.12f}, {float(bound.upper):.12f}]")
print(f"  omega bound: {omega_upper_bound(2)} -> still feasible")
