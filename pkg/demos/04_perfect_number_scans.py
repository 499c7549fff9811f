"""Desk-scale perfect-number scans.

A sigma sieve confirms there is no odd perfect number up to 10^6 (and
finds the even ones as a positive control).  The form scans enumerate
the sparse special shapes directly from factorizations, so their bounds
reach far beyond sieve memory.
"""

from goodprimes import scan_105, scan_odd_perfect, scan_squarefree_form
from goodprimes.scan import scan_cyclotomic_form

report = scan_odd_perfect(10**6)
print(f"all n <= 1e6: even perfect {list(report.perfect_found)}, "
      f"odd counterexamples {len(report.counterexamples)}")

report = scan_105(10**6)
print(f"odd multiples of 105 <= 1e6: {report.candidates_checked} checked, "
      f"{len(report.counterexamples)} perfect")

report = scan_squarefree_form(10**8)
print(f"squarefree form 5^a * M^(2b) <= 1e8: {report.candidates_checked} candidates, "
      f"{len(report.counterexamples)} perfect")

report = scan_cyclotomic_form(10**8)
notes = dict(report.notes)
print(f"cyclotomic form 5^a * 3^(2b) * prod q^(6k+2) <= 1e8: "
      f"{report.candidates_checked} candidates, {len(report.counterexamples)} perfect")
print(f"  of those, {notes['candidates_with_good_prime']} carry a good prime and "
      f"{notes['candidates_with_prime_at_most_157']} carry a prime <= 157")
print(f"  ({notes['distinct_primes']} distinct primes annotated, "
      f"{notes['goodness_inconclusive_primes']} inconclusive)")

print("\nEvery report serializes to canonical JSON:")
print(scan_odd_perfect(10**4).to_json())
