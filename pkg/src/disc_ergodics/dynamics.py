"""Fixed points, Denjoy-Wolff points, and classification of disc self-maps.

Every non-identity self-map of the disc that is not an elliptic automorphism
has a unique Denjoy-Wolff point: the attracting fixed point in the closed
disc toward which all forward orbits converge locally uniformly.  This module
locates it (closed form for Moebius maps, iteration plus Newton polishing
otherwise), measures angular derivatives at boundary fixed points, and sorts
symbols into the five dynamical classes that drive the ergodicity verdicts.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .symbols import (
    Blaschke,
    Moebius,
    Polynomial,
    Symbol,
    Taylor,
    boundary_points,
    disc_grid,
)

# |angular derivative - 1| below TOL_PARABOLIC means parabolic; doubles give
# roughly 1e-8 accuracy on the derivative, so 1e-6 leaves margin.  Borderline
# values within BORDERLINE_BAND of 1 are flagged in classification notes.
TOL_PARABOLIC = 1e-6
BORDERLINE_BAND = 1e-4
PERIOD_SEARCH_MAX = 10**4
DW_MAX_ITER_DEFAULT = 10**6
DW_TOL_DEFAULT = 1e-6
BOUNDARY_PROXIMITY_TOL = 1e-6
FIXED_POINT_RESIDUAL_TOL = 1e-8


class EllipticInputError(ValueError):
    """Denjoy-Wolff search received an elliptic automorphism or the identity."""


class NonConvergenceError(RuntimeError):
    """Orbit iteration exhausted its budget without meeting the tolerance."""

    def __init__(self, message, last_point=None, iterations=0):
        super().__init__(message)
        self.last_point = last_point
        self.iterations = iterations


class UnclassifiableError(RuntimeError):
    """Residuals exceeded every tolerance; refusing to guess a class."""


# ---------------------------------------------------------------------------
# Classification records

@dataclass(frozen=True)
class Identity:
    kind = "identity"

    def to_dict(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class EllipticAutomorphism:
    """Automorphism with an interior fixed point; conjugate to a rotation.

    ``period`` is the least k with multiplier**k == 1 (within 1e-10), or None
    when no k up to the search bound works ("aperiodic" -- a numerical, not
    mathematical, statement).
    """

    fixed_point: complex
    multiplier: complex
    period: int | None

    kind = "elliptic_automorphism"

    @property
    def periodic(self) -> bool:
        return self.period is not None

    def to_dict(self):
        return {
            "kind": self.kind,
            "fixed_point": [self.fixed_point.real, self.fixed_point.imag],
            "multiplier": [self.multiplier.real, self.multiplier.imag],
            "period": self.period,
        }


@dataclass(frozen=True)
class InteriorDW:
    z0: complex
    multiplier_modulus: float

    kind = "interior_dw"

    def to_dict(self):
        return {
            "kind": self.kind,
            "z0": [self.z0.real, self.z0.imag],
            "multiplier_modulus": self.multiplier_modulus,
        }


@dataclass(frozen=True)
class HyperbolicDW:
    z0: complex
    angular_derivative: float

    kind = "hyperbolic_dw"

    def to_dict(self):
        return {
            "kind": self.kind,
            "z0": [self.z0.real, self.z0.imag],
            "angular_derivative": self.angular_derivative,
        }


@dataclass(frozen=True)
class ParabolicDW:
    z0: complex
    angular_derivative: float

    kind = "parabolic_dw"

    def to_dict(self):
        return {
            "kind": self.kind,
            "z0": [self.z0.real, self.z0.imag],
            "angular_derivative": self.angular_derivative,
        }


SymbolClass = Identity | EllipticAutomorphism | InteriorDW | HyperbolicDW | ParabolicDW


@dataclass(frozen=True)
class DWResult:
    point: complex
    iterations_used: int
    residual: float
    convergence_rate_estimate: float


# ---------------------------------------------------------------------------
# Moebius fixed points

def moebius_fixed_points(m: Moebius) -> list[tuple[complex, int]]:
    """Finite fixed points of a Moebius map as (point, multiplicity) pairs.

    Roots of c z^2 + (d - a) z - b = 0 by the cancellation-stable quadratic
    formula; a double root is reported once with multiplicity 2.  An affine
    map (c = 0) contributes its single finite fixed point.
    """
    if _is_identity_probe(m):
        raise ValueError("the identity fixes every point")
    A, B, C = m.c, m.d - m.a, -m.b
    if abs(A) <= 1e-15 * max(1.0, abs(B), abs(C)):
        if B == 0:
            raise ValueError("affine map with a = d and b != 0 has no finite fixed point")
        return [(-C / B, 1)]
    disc = B * B - 4.0 * A * C
    # disc equals tr^2 - 4 det, so |disc| small relative to |det| means a
    # (numerically) parabolic map; below the cancellation noise floor of the
    # subtraction the split roots carry no information either way.
    noise_floor = 9e-16 * max(abs(B) ** 2, 4.0 * abs(A) * abs(C))
    if abs(disc) <= max(4e-9 * abs(m.det), noise_floor):
        return [(-B / (2.0 * A), 2)]
    sq = cmath.sqrt(disc)
    # Pick the sqrt branch that avoids cancellation in B + sq.
    if (B.conjugate() * sq).real < 0:
        sq = -sq
    q = -0.5 * (B + sq)
    r1 = q / A
    r2 = C / q
    return [(r1, 1), (r2, 1)]


def _is_identity_probe(s: Symbol, tol: float = 1e-12) -> bool:
    probes = [0.0, 0.5, -0.5, 0.5j, -0.5j, 0.3 + 0.4j, -0.2 + 0.7j, 0.9]
    return all(abs(complex(s(z)) - z) <= tol for z in probes)


# ---------------------------------------------------------------------------
# Denjoy-Wolff point

def _moebius_dw(m: Moebius) -> DWResult:
    fps = moebius_fixed_points(m)
    candidates = []
    for p, mult in fps:
        if abs(p) > 1.0 + 1e-8:
            continue
        dp = abs(complex(m.derivative(p)))
        candidates.append((p, mult, dp))
    if not candidates:
        raise UnclassifiableError("no fixed point of the Moebius map on the closed disc")
    for p, mult, dp in candidates:
        if mult == 2 or dp <= 1.0 + 1e-12:
            if mult != 2 and dp > 1.0 - 1e-12 and abs(p) < 1.0 - 1e-8:
                # interior fixed point with unimodular multiplier: elliptic
                raise EllipticInputError(
                    "interior fixed point with unimodular multiplier (elliptic automorphism)"
                )
            residual = abs(complex(m(p)) - p)
            return DWResult(p, 0, residual, min(dp, 1.0))
    raise UnclassifiableError("every fixed point on the closed disc is repelling")


def denjoy_wolff(s: Symbol, max_iter: int = DW_MAX_ITER_DEFAULT,
                 tol: float = DW_TOL_DEFAULT) -> DWResult:
    """Locate the Denjoy-Wolff point.

    Moebius maps use the closed form (the fixed point with derivative modulus
    at most one on the attracting side).  Other symbols iterate from 0 until
    successive steps shrink below ``tol``; the rate estimate is the last
    ratio of step sizes.  Parabolic-type convergence (~C/n) can exhaust the
    budget at tight tolerances, in which case NonConvergenceError reports the
    last point rather than fabricating an answer.
    """
    if _is_identity_probe(s):
        raise EllipticInputError("the identity has no Denjoy-Wolff point")
    if isinstance(s, Moebius):
        return _moebius_dw(s)
    z = 0.0 + 0.0j
    prev_step = None
    rate = math.nan
    for n in range(1, max_iter + 1):
        w = complex(s(z))
        step = abs(w - z)
        if prev_step is not None and prev_step > 0:
            rate = step / prev_step
        if step < tol:
            residual = abs(complex(s(w)) - w)
            return DWResult(w, n, residual, rate if not math.isnan(rate) else 0.0)
        prev_step = step
        z = w
    raise NonConvergenceError(
        f"no convergence within {max_iter} iterations at tol {tol:g}",
        last_point=z,
        iterations=max_iter,
    )


# ---------------------------------------------------------------------------
# Angular derivative

def angular_derivative(s: Symbol, z0: complex) -> float:
    """|phi'(z0)| at a boundary fixed point z0.

    Moebius, Blaschke and polynomial symbols extend holomorphically across
    the circle, so the analytic derivative applies.  Taylor symbols live only
    on the closed disc; there the radial quotient (1 - |phi(r z0)|)/(1 - r)
    is sampled at r = 1 - 2^-j and Richardson-extrapolated.
    """
    z0 = complex(z0)
    if abs(abs(z0) - 1.0) > 1e-8:
        raise ValueError(f"z0 = {z0!r} is not on the unit circle")
    if abs(complex(s(z0)) - z0) > FIXED_POINT_RESIDUAL_TOL:
        raise ValueError(f"z0 = {z0!r} is not fixed by the symbol")
    if not isinstance(s, Taylor):
        return abs(complex(s.derivative(z0)))
    quotients = []
    for j in range(4, 21):
        r = 1.0 - 2.0 ** (-j)
        quotients.append((1.0 - abs(complex(s(r * z0)))) / (1.0 - r))
    # One Richardson level: the quotient approaches the limit linearly in
    # (1 - r), so 2 d_{j+1} - d_j cancels the leading error term.
    extrapolated = [2.0 * b - a for a, b in zip(quotients, quotients[1:])]
    return float(extrapolated[-1])


# ---------------------------------------------------------------------------
# Classification

def _as_moebius(s: Symbol) -> Moebius | None:
    """Moebius form of the symbol when one exists (degree-one cases)."""
    if isinstance(s, Moebius):
        return s
    if isinstance(s, Blaschke) and s.degree == 1:
        rot = cmath.exp(1j * s.rotation)
        a = s.zeros[0]
        return Moebius(rot, -rot * a, -a.conjugate(), 1.0)
    if isinstance(s, (Polynomial, Taylor)):
        cs = list(s.coeffs)
        while cs and abs(cs[-1]) == 0.0:
            cs.pop()
        if len(cs) == 2:
            return Moebius(cs[1], cs[0], 0.0, 1.0)
        if len(cs) == 1:
            return None
    return None


def _preserves_boundary(s: Symbol, samples: int = 256, tol: float = 1e-10) -> bool:
    values = np.abs(s(boundary_points(samples)))
    return bool(np.max(np.abs(values - 1.0)) <= tol)


def _is_automorphism(s: Symbol) -> bool:
    # Boundary modulus one plus an injectivity surrogate: Moebius maps are
    # injective, a Blaschke product is injective exactly in degree one, and a
    # boundary-preserving polynomial or Taylor symbol must itself be linear.
    if not _preserves_boundary(s):
        return False
    if isinstance(s, Moebius):
        return True
    if isinstance(s, Blaschke):
        return s.degree == 1
    return _as_moebius(s) is not None


def _rotation_period(multiplier: complex, k_max: int = PERIOD_SEARCH_MAX) -> int | None:
    w = multiplier
    for k in range(1, k_max + 1):
        if abs(w - 1.0) <= 1e-10:
            return k
        w *= multiplier
    return None


def _polish_fixed_point(s: Symbol, z: complex, steps: int = 120) -> complex:
    # Newton on phi(z) - z; linear but sure-footed even at a parabolic
    # (multiplicity-two) boundary fixed point, where the error halves.
    for _ in range(steps):
        f = complex(s(z)) - z
        if abs(f) < 1e-15:
            break
        df = complex(s.derivative(z)) - 1.0
        if df == 0:
            break
        step = f / df
        if abs(step) > 0.5:
            step *= 0.5 / abs(step)
        z = z - step
    return z


def _boundary_class(s: Symbol, z0: complex) -> SymbolClass:
    z0 = z0 / abs(z0)
    deriv = angular_derivative(s, z0)
    if abs(deriv - 1.0) <= TOL_PARABOLIC:
        return ParabolicDW(z0, deriv)
    if deriv < 1.0:
        return HyperbolicDW(z0, deriv)
    raise UnclassifiableError(
        f"boundary fixed point {z0!r} has angular derivative {deriv:.8g} > 1; "
        "not a Denjoy-Wolff point"
    )


def classify(s: Symbol, tol_par: float = TOL_PARABOLIC,
             k_max: int = PERIOD_SEARCH_MAX) -> SymbolClass:
    """Sort a symbol into identity / elliptic automorphism / interior DW /
    hyperbolic DW / parabolic DW.

    Automorphisms are recognized by boundary modulus plus injectivity and
    classified through their Moebius form.  Everything else goes through the
    Denjoy-Wolff search; boundary candidates are Newton-polished and verified
    against FIXED_POINT_RESIDUAL_TOL before being believed.  Raises
    UnclassifiableError instead of guessing when residuals stay large.
    """
    if _is_identity_probe(s):
        return Identity()
    mo = _as_moebius(s)
    if _is_automorphism(s) and mo is not None:
        # Trace test: tr^2/det is real for an automorphism, below 4 exactly
        # in the elliptic case.  It needs no root extraction, so it stays
        # reliable where nearly-coalescing fixed points would not.
        tau = (mo.a + mo.d) ** 2 / mo.det
        if tau.real < 4.0 - 1e-9:
            fps = moebius_fixed_points(mo)
            p = min((p for p, _ in fps), key=abs)
            if abs(p) >= 1.0:
                raise UnclassifiableError(
                    "elliptic trace but no interior fixed point found"
                )
            lam = complex(mo.derivative(p))
            if abs(abs(lam) - 1.0) > 1e-6:
                raise UnclassifiableError(
                    f"automorphism multiplier modulus {abs(lam):.8g} is not 1"
                )
            lam /= abs(lam)
            period = _rotation_period(lam, k_max)
            return EllipticAutomorphism(p, lam, period)
        dw = _moebius_dw(mo)
        return _boundary_class(s, dw.point)
    if mo is not None:
        dw = _moebius_dw(mo)
        point = dw.point
        if abs(point) < 1.0 - BOUNDARY_PROXIMITY_TOL:
            return InteriorDW(point, abs(complex(s.derivative(point))))
        return _boundary_class(s, point)
    # General route: iterate, then decide interior vs boundary.
    taylor = isinstance(s, Taylor)
    try:
        # Taylor symbols admit no Newton polish past the circle, so their
        # orbit runs to a much tighter step tolerance instead.
        dw = denjoy_wolff(s, max_iter=2 * 10**5 if taylor else DW_MAX_ITER_DEFAULT,
                          tol=1e-11 if taylor else DW_TOL_DEFAULT)
        point = dw.point
    except NonConvergenceError as exc:
        point = exc.last_point
        if point is None:
            raise UnclassifiableError("orbit produced no candidate point") from exc
    if taylor:
        if abs(point) < 1.0 - BOUNDARY_PROXIMITY_TOL:
            residual = abs(complex(s(point)) - point)
            if residual > FIXED_POINT_RESIDUAL_TOL:
                raise UnclassifiableError(
                    f"orbit limit residual {residual:.3g} exceeds tolerance"
                )
            return InteriorDW(point, abs(complex(s.derivative(point))))
        z0 = point / abs(point)
        if abs(complex(s(z0)) - z0) > FIXED_POINT_RESIDUAL_TOL:
            raise UnclassifiableError(
                "boundary candidate is not fixed within tolerance"
            )
        return _boundary_class(s, z0)
    polished = _polish_fixed_point(s, point)
    residual = abs(complex(s(polished)) - polished)
    if residual > FIXED_POINT_RESIDUAL_TOL:
        raise UnclassifiableError(
            f"fixed-point residual {residual:.3g} exceeds {FIXED_POINT_RESIDUAL_TOL:g}"
        )
    if abs(polished) < 1.0 - BOUNDARY_PROXIMITY_TOL:
        return InteriorDW(polished, abs(complex(s.derivative(polished))))
    return _boundary_class(s, polished)


# ---------------------------------------------------------------------------
# Sup norms of iterates

def sup_norm_sequence(s: Symbol, n_max: int, boundary_samples: int = 512,
                      radial_samples: int = 64) -> np.ndarray:
    """Grid sup of |phi^n| for n = 1..n_max in a single sweep."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    w = disc_grid(boundary_samples, radial_samples)
    out = np.empty(n_max)
    for i in range(n_max):
        w = s(w)
        out[i] = float(np.max(np.abs(w)))
    return out


def sup_norm_iterate(s: Symbol, n: int, boundary_samples: int = 512,
                     radial_samples: int = 64) -> float:
    """Grid maximum of |phi^n| over the closed disc."""
    return float(sup_norm_sequence(s, n, boundary_samples, radial_samples)[-1])


def sup_distance_sequence(s: Symbol, z0: complex, n_max: int,
                          boundary_samples: int = 512,
                          radial_samples: int = 64) -> np.ndarray:
    """Grid sup of |phi^n - z0| for n = 1..n_max.

    The conjugation-invariant decay statistic for an interior attracting
    point z0: it reduces to the plain sup norm when z0 = 0.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    w = disc_grid(boundary_samples, radial_samples)
    out = np.empty(n_max)
    for i in range(n_max):
        w = s(w)
        out[i] = float(np.max(np.abs(w - z0)))
    return out


# ---------------------------------------------------------------------------
# Boundary periodic points

@dataclass(frozen=True)
class BoundaryPeriodicPoint:
    point: complex
    period: int
    residual: float


def _wrapped_argument_gap(s: Symbol, t: np.ndarray, period: int) -> np.ndarray:
    z = np.exp(1j * t)
    w = z
    for _ in range(period):
        w = s(w)
    return np.angle(w * np.exp(-1j * t))


def boundary_periodic_points(s: Symbol, max_period: int,
                             samples: int = 2048) -> list[BoundaryPeriodicPoint]:
    """Periodic points of the symbol on the unit circle, up to ``max_period``.

    Roots of phi^p(e^{it}) = e^{it} are bracketed by sign changes of the
    wrapped argument gap arg(phi^p(e^{it})) - t and refined by bisection;
    every candidate must then pass the residual test |phi^p(q) - q| <= 1e-10,
    which also discards argument crossings where the modulus drops inside the
    disc (the symbol need not carry the circle onto itself).  Points are
    reported once, with their minimal period.
    """
    if max_period < 1 or max_period > 8:
        raise ValueError("max_period must be between 1 and 8")
    found: list[BoundaryPeriodicPoint] = []

    def register(t_root: float, period: int):
        q = cmath.exp(1j * t_root)
        w = q
        for _ in range(period):
            w = complex(s(w))
        residual = abs(w - q)
        if residual > 1e-10:
            return
        minimal = period
        for d in range(1, period):
            if period % d:
                continue
            wd = q
            for _ in range(d):
                wd = complex(s(wd))
            if abs(wd - q) <= FIXED_POINT_RESIDUAL_TOL:
                minimal = d
                break
        for known in found:
            if abs(known.point - q) < 1e-8:
                return
        found.append(BoundaryPeriodicPoint(q, minimal, residual))

    for period in range(1, max_period + 1):
        t = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
        gaps = _wrapped_argument_gap(s, t, period)
        for i in range(samples):
            a, b = t[i], t[(i + 1) % samples] if i + 1 < samples else 2.0 * np.pi
            ga, gb = gaps[i], gaps[(i + 1) % samples]
            if ga == 0.0:
                register(float(a), period)
                continue
            if ga * gb >= 0.0:
                continue
            if abs(ga) + abs(gb) >= np.pi:
                continue  # branch jump of the wrapped argument, not a root
            lo, hi, glo = float(a), float(b), float(ga)
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                gm = float(_wrapped_argument_gap(s, np.array([mid]), period)[0])
                if gm == 0.0:
                    lo = hi = mid
                    break
                if glo * gm < 0.0:
                    hi = mid
                else:
                    lo, glo = mid, gm
                if hi - lo < 1e-14:
                    break
            register(0.5 * (lo + hi), period)
    found.sort(key=lambda bp: math.atan2(bp.point.imag, bp.point.real) % (2.0 * math.pi))
    return found


# ---------------------------------------------------------------------------
# Local contraction and circle images

@dataclass(frozen=True)
class ContractionReport:
    rho: float
    passed: bool


def local_contraction_check(s: Symbol, z0: complex, r: float,
                            samples: int = 256) -> ContractionReport:
    """Largest ratio |phi(z) - z0| / |z - z0| over B(z0, r) within the disc.

    A ratio below one certifies local attraction toward the fixed point z0 on
    the sampled neighborhood.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    z0 = complex(z0)
    if abs(complex(s(z0)) - z0) > FIXED_POINT_RESIDUAL_TOL:
        raise ValueError("z0 must be a fixed point")
    n_ring = max(8, int(math.isqrt(samples)))
    n_ang = max(8, samples // n_ring)
    radii = r * (np.arange(1, n_ring + 1) / n_ring)
    angles = np.exp(1j * 2.0 * np.pi * np.arange(n_ang) / n_ang)
    pts = (z0 + radii[:, None] * angles[None, :]).ravel()
    pts = pts[np.abs(pts) <= 1.0]
    if len(pts) == 0:
        raise ValueError("no sample points inside the closed disc")
    ratios = np.abs(s(pts) - z0) / np.abs(pts - z0)
    rho = float(np.max(ratios))
    return ContractionReport(rho, rho < 1.0)


@dataclass(frozen=True)
class ImageCircle:
    center: complex
    radius: float
    is_unit_circle: bool


def moebius_image_circle(m: Moebius) -> ImageCircle:
    """Image of the unit circle under a Moebius map.

    The circle through the images of 1, i and -1 (circumcenter formula);
    when all three land back on the unit circle the image is the circle
    itself.  A disc-preserving Moebius map cannot send the circle to a line,
    so collinear images are reported as a defect.
    """
    z1, z2, z3 = (complex(m(w)) for w in (1.0, 1j, -1.0))
    if all(abs(abs(z) - 1.0) <= 1e-10 for z in (z1, z2, z3)):
        return ImageCircle(0.0, 1.0, True)
    den = (
        z1.conjugate() * (z2 - z3)
        + z2.conjugate() * (z3 - z1)
        + z3.conjugate() * (z1 - z2)
    )
    if abs(den) < 1e-14:
        raise ArithmeticError("collinear boundary images; not a disc-preserving map")
    num = (
        abs(z1) ** 2 * (z2 - z3)
        + abs(z2) ** 2 * (z3 - z1)
        + abs(z3) ** 2 * (z1 - z2)
    )
    center = num / den
    return ImageCircle(center, abs(z1 - center), False)


# ---------------------------------------------------------------------------
# Report serialization

def classification_to_dict(c: SymbolClass, s: Symbol | None = None,
                           tolerances: dict | None = None) -> dict:
    doc = c.to_dict()
    if s is not None and not isinstance(c, Identity):
        point = c.fixed_point if isinstance(c, EllipticAutomorphism) else c.z0
        doc["residual"] = abs(complex(s(point)) - point)
    doc["tolerances"] = tolerances or {
        "tol_parabolic": TOL_PARABOLIC,
        "fixed_point_residual": FIXED_POINT_RESIDUAL_TOL,
    }
    return doc
