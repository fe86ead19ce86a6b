"""Rotations split by arithmetic: periodic versus irrational angle.

A rotation of finite order k is periodic, and the Cesaro means converge in
norm to the coefficient filter that keeps exponents divisible by k.  For an
irrational angle the means of each monomial decay like 2/(n |1 - lam^j|) --
pointwise convergence to evaluation at 0 -- but the decay is not uniform in
j, and a lacunary series built from good denominators blocks norm
convergence (see demo 05 for the weighted endgame of that construction).
"""

import cmath
import math

import disc_ergodics as de

# order-four rotation: exact periodic limit
coeffs = [1.0, 1.0, 1.0, 1.0, 1.0]  # 1 + z + z^2 + z^3 + z^4
limit = de.rotation_cesaro_limit(4, coeffs)
print("coefficient filter of the order-4 rotation on 1+z+z^2+z^3+z^4:")
print(f"  kept coefficients: {[c.real for c in limit]}")
rot = de.Moebius(1j, 0, 0, 1)
trace = de.cesaro_apply(rot, de.TaylorFn(coeffs), 0.7, 4000)
val = complex(de.TaylorFn(limit)(0.7))
print(f"  running mean at z=0.7, N=4000: {trace.final:.12f}")
print(f"  limit evaluated there:        {val:.12f}")
print()

# golden rotation: monomial means obey the exact norm formula and the bound
theta = (math.sqrt(5.0) - 1.0) / 2.0
lam = cmath.exp(2j * math.pi * theta)
print("golden-angle rotation, means of z^j after n steps:")
print(f"  {'j':>2s} {'n':>6s} {'|mean|':>12s} {'exact norm':>12s} {'bound':>12s}")
for j in (1, 3, 5):
    for n in (100, 10000):
        r = de.monomial_mean(lam, j, n)
        print(f"  {j:2d} {n:6d} {abs(r.value):12.3e} {r.sup_norm_exact:12.3e}"
              f" {r.sup_norm_bound:12.3e}")
print()

# the obstruction: coefficients of the forced solution g are unimodular
seq = de.lacunary_exponents(theta="golden", R=2.0, K=20)
pair = de.counterexample_pair(seq, 20)
print("lacunary witness pair for the golden rotation (R = 2):")
print(f"  f has absolutely summable coefficients: sum = "
      f"{pair.report['abs_coeff_sum_f']:.4f} <= {pair.report['abs_coeff_sum_bound']:.1f}")
for K in (5, 10, 20):
    rep = de.h2_norm_sq(de.counterexample_pair(seq, K).g)
    print(f"  K={K:2d}: coefficient-square sum of g = {rep.value:.0f} (grows with K)")
