"""The weighted endgame: a radial weight on which an aperiodic rotation
fails to be mean ergodic.

Continued-fraction denominators of the rotation number give exponents n_k
with |1 - lam^{n_k}| <= R^{-k}.  The weight v_alpha built from the partial
sums S(r) = sum_k r^{n_k} is typical (radial, non-increasing, vanishing at
the boundary), yet v_alpha(r) |g(r)| = C S(r)^{1-alpha} grows as r -> 1 for
the all-ones series g, while the disc-algebra witness f stays tame.
"""

import disc_ergodics as de

seq = de.lacunary_exponents(theta="golden", R=2.0, K=30)
print("exponents from golden-ratio convergent denominators (R = 2):")
print(f"  first ten: {seq.exponents[:10]}")
print(f"  certified |1 - lam^n_k| <= 2^-k, e.g. k=10: {seq.errors[9]:.3e} <= {2.0**-10:.3e}")
print()

w = de.make_weight_v_alpha(0.5, 0.5, seq, 30)
print(f"weight v_alpha with alpha=1/2, r0=1/2 (normalization C = {w.C:.4f}):")
for r in (0.3, 0.5, 0.9, 0.999, 1 - 1e-6):
    print(f"  v({r:.6f}) = {w(r):.6f}")
print()

pair = de.counterexample_pair(seq, 30, weight=w)
print("probes along the radius: the pair splits")
print(f"  {'r':>10s} {'v(r)|f(r)|':>12s} {'v(r)|g(r)|':>12s}")
for p in pair.report["weighted_probes"]:
    print(f"  {p['r']:10.5f} {p['v_abs_f']:12.6f} {p['v_abs_g']:12.6f}")
growth = pair.report["weighted_probes"][-1]["v_abs_g"] / pair.report["weighted_probes"][0]["v_abs_g"]
print(f"  g-side grows x{growth:.2f} while the f-side decays")
print()

print("sup norms over a boundary-heavy grid:")
print(f"  ||f||_v = {de.weighted_sup_norm(pair.f, w):.6f}  (finite: f lives in the weighted space)")
print(f"  ||g||_v(grid) = {de.weighted_sup_norm(pair.g, w):.6f}  (keeps growing with the grid radius)")
print()

print("verdicts for the golden rotation with this weight:")
rot = de.gallery_symbol("rot_golden")
for space in ("Hv0", "Hv"):
    v = de.verdict(rot, space, weight=w)
    print(f"  {space:4s}: mean_ergodic={v.mean_ergodic:8s}"
          f" uniformly={v.uniformly_mean_ergodic:8s} via {v.theorem_tag}")
