"""Walk the closure of a prime under x -> prime divisors of x^2 + x + 1.

A prime p > 7 is *good* when this closure eventually contains a prime
congruent to 2 or 4 mod 7.  The script grows the closure layer by layer
for two classic starting points, then prints the machine-checkable
certificate for each.
"""

from goodprimes import expand, initial_state, is_good, verify_certificate

for root in (31, 13):
    print(f"=== closure of {root} ===")
    state = initial_state(root)
    result = is_good(root)
    for _ in range(result.depth):
        state = expand(state)
        print(f"depth {state.depth}: {sorted(state.members)}")
    cert = result.certificate
    print(f"{root} is {result.verdict} at depth {result.depth}, terminal {cert.terminal}")
    print(f"terminal residue mod 7: {cert.terminal_residue}")
    print("certificate:", cert.to_json())
    print("independent verification:", bool(verify_certificate(cert)))
    print()

print("Certificates replay with no factoring: each edge only needs")
print("one squaring, one divisibility check, and two primality tests.")
