"""
Generators and elliptic characters
==================================

On a cyclic E(F_p) every point has a discrete log to a fixed generator T.
The character chi(Q) = exp(2 pi i log_T(Q) / n) turns the question
"does P generate?" into a root-of-unity sum, evaluated here exactly.
"""
from koblitz.characters import (
    build_log_table,
    character,
    find_primitive_point,
    psi_divisor,
    psi_divisor_free,
)
from koblitz.curve import CurveSpec
from koblitz.divpoly import primitive_test_psi
from koblitz.numtheory import euler_phi, factorize

E = CurveSpec(0, 1).reduce(11)
pts = E.points()
n = len(pts)
fac = factorize(n)
T = find_primitive_point(E, n, fac)
table = build_log_table(E, T, n)
print(f"#E = {n} = {fac}, generator T = {T}")

gens = []
for P in pts:
    a = psi_divisor(table, P, fac, literal=True)
    b = psi_divisor_free(table, P, literal=True)
    c = P is not None and primitive_test_psi(E, P, n, fac)
    print(f"{str(P):>9}  log={table.log(P):>2}  chi={character(table, P).value():.3f}  psi={a}{b}  psi_m test={int(c)}")
    gens += [P] * a
print(len(gens), "generators; phi(n) =", euler_phi(n))
