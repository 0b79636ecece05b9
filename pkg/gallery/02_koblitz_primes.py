"""
Primes of prime order
=====================

Scan y^2 = x^3 + 2 and y^2 = x^3 - x for primes where #E(F_p)/t is prime,
compare with the reference table and with the predicted count.
"""
from koblitz.densities import delta_cm_quartic, delta_serre, predicted_count
from koblitz.scan import (
    brun_partial_sum,
    count_koblitz,
    elliptic_divisor_empirical,
    koblitz_primes,
    reproduce_table,
    scan,
    split_modulus_for,
)
from koblitz.curve import CurveSpec

E = CurveSpec(0, 2)
cache = scan(E, 10**5)
print("first hits:", [(r.p, r.n) for r in koblitz_primes(cache, 200)])

# the table below 1000, row by row
print(reproduce_table(1).render_text())

# the count grows roughly like x / log^2 x
delta = delta_serre(-3, 10**5).value
for x in (10**3, 10**4, 10**5):
    got = count_koblitz(cache, x)
    want = predicted_count(x, delta)
    print(f"x={x:>6}: {got:>5} primes, predicted {want:8.1f}, ratio {got / want:.3f}")
print("Brun partial sum to 1e5:", float(brun_partial_sum(cache, 10**5)))

# y^2 = x^3 - x always has 8 | #E at split primes
C = CurveSpec(-1, 0)
cc = scan(C, 10**5)
print("gcd of #E over p = 1 mod 4:", elliptic_divisor_empirical(cc, split_modulus_for(-4)))
d = delta_cm_quartic(10**5).value
for x in (10**3, 10**4, 10**5):
    print(f"x={x:>6}: {count_koblitz(cc, x, 8):>5} with #E/8 prime, predicted {predicted_count(x, d, 8, 9):8.1f}")
