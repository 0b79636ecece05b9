"""
Euler products for the densities
================================

Truncated products converge slowly; the tail bound says how far off they
can be. The CM product needs a convergence factor 1 - chi(p)/p.
"""
from koblitz.densities import delta_cm_quartic, delta_serre, koblitz_constant
from koblitz.reference import CM_QUARTIC_REFERENCE, P0_REFERENCE

for cutoff in (10**2, 10**3, 10**4, 10**5, 10**6):
    r = koblitz_constant(cutoff)
    print(f"P0 to {cutoff:>7}: {r.value:.12f} +- {r.tail_bound:.1e}")
print("published:", P0_REFERENCE)

s = delta_serre(-3)
print(f"Serre correction for D=-3: {s.prefactor} -> {s.value:.12f}")

for cutoff in (10**3, 10**4, 10**5, 10**6):
    raw = delta_cm_quartic(cutoff, accelerate=False)
    acc = delta_cm_quartic(cutoff)
    print(f"cm4 to {cutoff:>7}: raw {raw.value:.10f}  accelerated {acc.value:.10f} +- {acc.tail_bound:.1e}")
print("published:", CM_QUARTIC_REFERENCE)
