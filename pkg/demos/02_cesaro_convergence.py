"""Cesaro averages of orbits converge to the attracting point.

For any non-identity self-map there is a unique fixed point z0 such that the
running averages (1/n) sum phi^m(z) converge to z0 on compact subsets: fast
(geometric tail) for interior and hyperbolic attractors, slowly (~log n / n)
for parabolic ones, and by cancellation for rotations.
"""

import numpy as np

import disc_ergodics as de

seeds = np.array([0.0, 0.5, -0.3 + 0.4j, 0.8j])

for name in ("z_half", "hyperbolic", "parab"):
    s = de.gallery_symbol(name)
    z0 = de.classify(s).z0
    print(f"{name}: attractor z0 = {z0:.4g}")
    print(f"  {'N':>7s}  max |mean - z0| over 4 seeds")
    for n in (10**2, 10**3, 10**4, 10**5):
        means = de.cesaro_orbit_mean(s, seeds, n)
        print(f"  {n:7d}  {float(np.max(np.abs(means - z0))):.3e}")
    print()

print("Rotation by i: averages cancel over every full period")
rot = de.gallery_symbol("rot_i")
for n in (4, 40, 400):
    print(f"  N={n:4d}  |mean| = {abs(de.cesaro_orbit_mean(rot, 0.5, n)):.3e}")

print()
print("Running means of a test function are never larger than its sup norm")
trace = de.cesaro_apply(de.gallery_symbol("parab"), de.Monomial(3), 0.2j, 2000)
print(f"  sup over trace = {float(np.max(np.abs(trace.partial_means))):.6f} <= 1")
