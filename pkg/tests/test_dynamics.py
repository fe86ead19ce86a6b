import cmath
import math

import numpy as np
import pytest

import disc_ergodics as de
from invariants import check_classify_conjugation_invariance, random_automorphism

HALF = de.Moebius(1, 0, 0, 2)
HYPERBOLIC = de.Moebius(2, 1, 1, 2)
TANGENT = de.Moebius(1, 1, 0, 2)
PARABOLIC = de.make_automorphism("parabolic", translation=1.0)
ZSQ = de.Blaschke(0.0, [0.0, 0.0])
BLEND = de.Polynomial([0, 0.5, 0.5])


# ---------------------------------------------------------------------------
# fixed points

def test_moebius_fixed_points_hyperbolic():
    pts = {round(p.real, 9) for p, _ in de.moebius_fixed_points(HYPERBOLIC)}
    assert pts == {1.0, -1.0}
    for p, _ in de.moebius_fixed_points(HYPERBOLIC):
        assert abs(complex(HYPERBOLIC(p)) - p) <= 1e-14


def test_moebius_fixed_points_forced_factorization():
    s = de.Moebius(1, 0, -1, 2)  # z / (2 - z): z (1 - z) = 0
    pts = sorted((p.real for p, _ in de.moebius_fixed_points(s)))
    assert pts == pytest.approx([0.0, 1.0], abs=1e-14)


def test_moebius_fixed_points_parabolic_double_root():
    fps = de.moebius_fixed_points(PARABOLIC)
    assert len(fps) == 1
    point, multiplicity = fps[0]
    assert multiplicity == 2
    assert point == pytest.approx(1.0, abs=1e-9)


def test_moebius_fixed_points_rejects_identity():
    with pytest.raises(ValueError):
        de.moebius_fixed_points(de.Moebius(1, 0, 0, 1))


# ---------------------------------------------------------------------------
# Denjoy-Wolff search

def test_dw_half():
    res = de.denjoy_wolff(HALF)
    assert res.point == 0 and res.residual == 0


def test_dw_tangent_iterative_polynomial():
    # the affine map as a 3-coefficient polynomial walks the iterative path
    s = de.Polynomial([0.5, 0.5, 0.0])
    res = de.denjoy_wolff(s, tol=1e-6)
    assert abs(res.point - 1.0) <= 1e-5
    assert 5 <= res.iterations_used <= 40  # closed form 1 - 2^-n
    assert res.convergence_rate_estimate == pytest.approx(0.5, abs=1e-6)


def test_dw_hyperbolic_picks_attracting_side():
    res = de.denjoy_wolff(HYPERBOLIC)
    assert res.point == pytest.approx(1.0, abs=1e-12)
    assert abs(complex(HYPERBOLIC.derivative(res.point))) < 1.0
    assert abs(complex(HYPERBOLIC.derivative(-1.0))) > 1.0


def test_dw_rejects_elliptic():
    with pytest.raises(de.EllipticInputError):
        de.denjoy_wolff(de.Moebius(1j, 0, 0, 1))
    with pytest.raises(de.EllipticInputError):
        de.denjoy_wolff(de.Moebius(1, 0, 0, 1))


def test_dw_nonconvergence_reports_last_point():
    # (1 + z^2)/2 approaches its boundary fixed point at speed ~ 1/n, so the
    # successive steps (~1/n^2) cannot meet a 1e-14 tolerance in 50 steps
    s = de.Polynomial([0.5, 0.0, 0.5])
    with pytest.raises(de.NonConvergenceError) as err:
        de.denjoy_wolff(s, max_iter=50, tol=1e-14)
    assert err.value.last_point is not None


# ---------------------------------------------------------------------------
# angular derivative

def test_angular_derivative_examples():
    assert de.angular_derivative(TANGENT, 1.0) == pytest.approx(0.5, abs=1e-12)
    assert de.angular_derivative(PARABOLIC, 1.0) == pytest.approx(1.0, abs=1e-10)
    assert de.angular_derivative(ZSQ, 1.0) == pytest.approx(2.0, abs=1e-10)


def test_angular_derivative_taylor_radial_quotient():
    s = de.Taylor([0.5, 0.5, 0.0])
    assert de.angular_derivative(s, 1.0) == pytest.approx(0.5, abs=1e-8)
    hyp = de.Taylor([0.19, 0.8, 0.01])
    assert de.angular_derivative(hyp, 1.0) == pytest.approx(0.82, abs=1e-5)


def test_angular_derivative_requires_fixed_point():
    with pytest.raises(ValueError):
        de.angular_derivative(TANGENT, -1.0)
    with pytest.raises(ValueError):
        de.angular_derivative(TANGENT, 0.5)


# ---------------------------------------------------------------------------
# classification

def test_classify_rotation_period_four():
    cls = de.classify(de.Moebius(1j, 0, 0, 1))
    assert isinstance(cls, de.EllipticAutomorphism)
    assert cls.fixed_point == 0 and cls.multiplier == 1j and cls.period == 4


def test_classify_blend_interior_with_boundary_fixed_point():
    cls = de.classify(BLEND)
    assert isinstance(cls, de.InteriorDW)
    assert abs(cls.z0) <= 1e-12
    assert cls.multiplier_modulus == pytest.approx(0.5, abs=1e-12)
    # the boundary fixed point at 1 is seen by the periodic-point search
    pts = de.boundary_periodic_points(BLEND, 1)
    assert any(abs(bp.point - 1.0) < 1e-9 for bp in pts)


def test_classify_parabolic():
    cls = de.classify(PARABOLIC)
    assert isinstance(cls, de.ParabolicDW)
    assert abs(cls.z0 - 1.0) <= 1e-9
    assert cls.angular_derivative == pytest.approx(1.0, abs=1e-9)


def test_classify_identity_and_aperiodic():
    assert isinstance(de.classify(de.Moebius(1, 0, 0, 1)), de.Identity)
    golden = (math.sqrt(5.0) - 1.0) / 2.0
    rot = de.Moebius(cmath.exp(2j * math.pi * golden), 0, 0, 1)
    cls = de.classify(rot)
    assert isinstance(cls, de.EllipticAutomorphism)
    assert cls.period is None


def test_classify_elliptic_off_center():
    s = de.make_automorphism("elliptic", angle=2 * math.pi / 5, fixed_point=0.4 - 0.1j)
    cls = de.classify(s)
    assert isinstance(cls, de.EllipticAutomorphism)
    assert cls.fixed_point == pytest.approx(0.4 - 0.1j, abs=1e-9)
    assert cls.period == 5


def test_classify_blaschke_boundary_hyperbolic():
    # ((z + 0.6) / (1 + 0.6 z))^2 fixes 1 with derivative 2(1-a)/(1+a) = 0.5
    s = de.Blaschke(0.0, [-0.6, -0.6])
    cls = de.classify(s)
    assert isinstance(cls, de.HyperbolicDW)
    assert abs(cls.z0 - 1.0) <= 1e-9
    assert cls.angular_derivative == pytest.approx(0.5, abs=1e-9)


def test_classify_taylor_boundary_hyperbolic():
    s = de.Taylor([0.19, 0.8, 0.01])
    cls = de.classify(s)
    assert isinstance(cls, de.HyperbolicDW)
    assert abs(cls.z0 - 1.0) <= 1e-6
    assert cls.angular_derivative == pytest.approx(0.82, abs=1e-4)


# ---------------------------------------------------------------------------
# sup norms

def test_sup_norm_halving_exact():
    for n in (1, 3, 5):
        assert de.sup_norm_iterate(HALF, n) == pytest.approx(2.0 ** (-n), abs=1e-12)


def test_sup_norm_square_sticks_at_one():
    assert de.sup_norm_iterate(ZSQ, 4) == pytest.approx(1.0, abs=1e-12)


def test_sup_norm_blend_does_not_vanish():
    # the boundary fixed point keeps the sup at one
    assert de.sup_norm_iterate(BLEND, 50) == pytest.approx(1.0, abs=1e-9)


def test_sup_norm_schwarz_decrease():
    sups = de.sup_norm_sequence(de.Polynomial([0, 0.4, 0.3]), 40)
    assert np.all(np.diff(sups) <= 1e-12)


# ---------------------------------------------------------------------------
# boundary periodic points

def test_boundary_periodic_points_square_fixed():
    pts = de.boundary_periodic_points(ZSQ, 1)
    assert len(pts) == 1
    assert abs(pts[0].point - 1.0) <= 1e-10
    assert pts[0].period == 1 and pts[0].residual <= 1e-10


def test_boundary_periodic_points_square_period_two():
    pts = de.boundary_periodic_points(ZSQ, 2)
    # z^4 = z on the circle: cube roots of unity
    roots = [1.0, cmath.exp(2j * math.pi / 3), cmath.exp(4j * math.pi / 3)]
    assert len(pts) == 3
    for bp in pts:
        nearest = min(roots, key=lambda r: abs(r - bp.point))
        assert abs(bp.point - nearest) <= 1e-9
        assert bp.period == (1 if abs(nearest - 1.0) < 1e-9 else 2)


def test_boundary_periodic_points_hyperbolic_pair():
    pts = de.boundary_periodic_points(HYPERBOLIC, 1)
    values = sorted(round(p.point.real, 9) for p in pts)
    assert values == [-1.0, 1.0]
    assert all(p.period == 1 and p.residual <= 1e-10 for p in pts)


def test_boundary_periodic_points_blend_finds_one():
    pts = de.boundary_periodic_points(BLEND, 2)
    assert len(pts) == 1
    assert abs(pts[0].point - 1.0) <= 1e-10


def test_boundary_periodic_points_none_for_half():
    assert de.boundary_periodic_points(HALF, 2) == []


# ---------------------------------------------------------------------------
# contraction and circle images

def test_local_contraction_tangent():
    rep = de.local_contraction_check(TANGENT, 1.0, 0.5)
    assert rep.passed
    assert rep.rho == pytest.approx(0.5, abs=1e-12)


def test_local_contraction_square_fails():
    rep = de.local_contraction_check(ZSQ, 1.0, 0.1)
    assert not rep.passed
    assert 1.8 <= rep.rho <= 2.05


def test_local_contraction_parabolic_fails():
    rep = de.local_contraction_check(PARABOLIC, 1.0, 0.1)
    assert not rep.passed
    assert rep.rho >= 0.999


def test_image_circle_half():
    circle = de.moebius_image_circle(HALF)
    assert not circle.is_unit_circle
    assert abs(circle.center) <= 1e-14
    assert circle.radius == pytest.approx(0.5, abs=1e-14)


def test_image_circle_automorphism():
    assert de.moebius_image_circle(HYPERBOLIC).is_unit_circle
    assert de.moebius_image_circle(PARABOLIC).is_unit_circle


def test_image_circle_tangent():
    circle = de.moebius_image_circle(TANGENT)
    assert circle.center == pytest.approx(0.5, abs=1e-12)
    assert circle.radius == pytest.approx(0.5, abs=1e-12)
    # internally tangent to the unit circle at 1
    assert abs((1.0 - abs(circle.center)) - circle.radius) <= 1e-8


# ---------------------------------------------------------------------------
# invariants

def test_fixed_point_residuals():
    for s, period in ((ZSQ, 2), (HYPERBOLIC, 1), (BLEND, 1)):
        for bp in de.boundary_periodic_points(s, period):
            w = bp.point
            for _ in range(bp.period):
                w = complex(s(w))
            assert abs(w - bp.point) <= 1e-8


def test_conjugation_invariance():
    assert check_classify_conjugation_invariance(100) >= 100


def test_denjoy_wolff_consistency_across_seeds():
    rng = np.random.default_rng(5)
    from disc_ergodics.symbols import iterate_array

    for s, parabolic in ((HALF, False), (HYPERBOLIC, False), (TANGENT, False),
                         (PARABOLIC, True), (ZSQ, False), (BLEND, False)):
        z0 = de.classify(s).z0 if not isinstance(de.classify(s), de.EllipticAutomorphism) else None
        seeds = np.array([0.9 * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
                          for _ in range(10)])
        finals = iterate_array(s, seeds, 10**4)
        spread = float(np.max(np.abs(finals - finals[0])))
        assert spread <= 1e-4
        if not parabolic:
            assert float(np.max(np.abs(finals - z0))) <= 1e-4


def test_tangency_dichotomy():
    rng = np.random.default_rng(13)
    for _ in range(60):
        auto = random_automorphism(rng)
        scale = de.Moebius(rng.uniform(0.3, 0.95), 0, 0, 1)
        s = de.moebius_product(auto, scale)
        circle = de.moebius_image_circle(s)
        if circle.is_unit_circle:
            continue
        tangent_gap = abs((1.0 - abs(circle.center)) - circle.radius)
        strictly_inside = circle.radius + abs(circle.center) < 1.0 - 1e-8
        assert tangent_gap <= 1e-8 or strictly_inside
