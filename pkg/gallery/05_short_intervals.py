"""
Prime powers near p
===================

Every prime p has enough prime powers within 2 sqrt(p) of it, and not too
many primes crowd into a short window. Both are checked numerically.
"""
from koblitz.measures import (
    brun_titchmarsh_check,
    exception_count,
    main_term_ratio,
    measure_sum,
    short_interval_survey,
)
from koblitz.curve import CurveSpec

reps = short_interval_survey(10**4, 10**6)
worst = min(reps, key=lambda r: r.lambda_sum / r.threshold)
print(f"{len(reps)} primes, {exception_count(reps)} below threshold; tightest p={worst.center} "
      f"sum={worst.lambda_sum:.1f} vs {worst.threshold:.1f}")

for k in range(2, 8):
    bt = brun_titchmarsh_check(10**k)
    print(f"x=1e{k}: {bt.prime_count} primes in (x, x+4sqrt x], bound {bt.bound:.1f}")

for x in (10**3, 10**4, 10**5):
    print(f"M(x) log^2 x / x at {x}: {main_term_ratio(x):.4f}")

# the measure picks up a point exactly when it generates a group of prime order
print("sum of Hasse measures of (-1, 1) on y^2 = x^3 + 2 up to 2000:",
      measure_sum(CurveSpec(0, 2), (-1, 1), 2000))
