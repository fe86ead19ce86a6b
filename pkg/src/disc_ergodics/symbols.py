"""Analytic self-maps of the closed unit disc.

A symbol is a holomorphic map of the closed disc into itself, given in one of
four concrete forms: a Moebius map (az+b)/(cz+d), a finite Blaschke product,
a polynomial, or a truncated Taylor series with absolutely summable
coefficients.  Every symbol validates itself at construction; evaluation,
differentiation and iteration accept plain complex scalars or numpy arrays.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

import numpy as np

# Construction / evaluation tolerances.  SELF_MAP_TOL is the slack allowed on
# the grid maximum of |phi|; doubles on a Moebius map never exceed it for a
# genuine self-map.  POLE_MARGIN keeps Moebius poles off the closed disc.
SELF_MAP_TOL = 1e-9
POLE_MARGIN = 1e-12
DET_TOL = 1e-12
ORBIT_BLOWUP_TOL = 1e-6
TAYLOR_TRUNCATION_DEFAULT = 4096


class SymbolError(ValueError):
    """Invalid symbol: broken invariant or failed self-map validation."""


class SymbolParseError(SymbolError):
    """Malformed symbol document.  ``path`` points at the offending field."""

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


def _require_finite(z: complex, name: str) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise SymbolError(f"{name} must have finite components, got {z!r}")
    return z


def boundary_points(n: int) -> np.ndarray:
    """n equispaced points on the unit circle, starting at 1."""
    t = 2.0 * np.pi * np.arange(n) / n
    return np.exp(1j * t)


def disc_grid(boundary_samples: int = 512, radial_samples: int = 64) -> np.ndarray:
    """Deterministic sampling of the closed disc, boundary-dominant.

    Rings at radius one, at zero, and at Chebyshev-spaced radii accumulating
    toward the boundary, where extremes of |phi^n| concentrate.
    """
    if boundary_samples < 16:
        raise ValueError("boundary_samples must be >= 16")
    angles = boundary_points(boundary_samples)
    cheb = np.cos(np.pi * (2.0 * np.arange(radial_samples) + 1.0) / (4.0 * radial_samples))
    radii = np.concatenate(([1.0], cheb))
    grid = (radii[:, None] * angles[None, :]).ravel()
    return np.concatenate((grid, [0.0 + 0.0j]))


def _horner(coeffs, z):
    """Evaluate sum coeffs[j] * z**j (ascending order) by Horner's scheme."""
    if len(coeffs) == 0:
        return 0.0 * z
    acc = coeffs[-1] + 0.0 * z
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def _horner_derivative(coeffs, z):
    acc = 0.0 * z
    for j in range(len(coeffs) - 1, 0, -1):
        acc = acc * z + j * coeffs[j]
    return acc


class Symbol:
    """Base class for validated analytic self-maps of the closed disc."""

    kind = "abstract"

    def __call__(self, z):
        raise NotImplementedError

    def derivative(self, z):
        raise NotImplementedError

    def to_dict(self) -> dict:
        raise NotImplementedError

    def _validate_self_map(self):
        report = self_map_check(self)
        if not report.passed:
            raise SymbolError(
                f"not a self-map of the closed disc: |phi({report.witness!r})| "
                f"= {report.max_modulus:.6g} > 1 + {SELF_MAP_TOL:g}"
            )

    def _reject_boundary_constant(self):
        # A constant of modulus one maps the open disc onto the boundary and
        # is not an analytic self-map of the disc.
        probes = [0.0, 0.37, 0.41j, -0.53 + 0.11j]
        values = [complex(self(p)) for p in probes]
        if max(abs(v - values[0]) for v in values) < 1e-15 and abs(values[0]) >= 1.0 - 1e-12:
            raise SymbolError("constant symbol with unimodular value is not admitted")


@dataclass(frozen=True)
class Moebius(Symbol):
    """z -> (a z + b) / (c z + d), with the pole off the closed disc."""

    a: complex
    b: complex
    c: complex
    d: complex

    kind = "moebius"

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _require_finite(getattr(self, name), name))
        if abs(self.det) <= DET_TOL:
            raise SymbolError(f"degenerate Moebius map: |ad - bc| = {abs(self.det):.3g}")
        if self.c != 0:
            pole = -self.d / self.c
            if abs(pole) <= 1.0 + POLE_MARGIN:
                raise SymbolError(
                    f"pole at {pole!r} lies on the closed disc (denominator vanishes)"
                )
        elif self.d == 0:
            raise SymbolError("c = d = 0 gives an identically infinite map")
        self._reject_boundary_constant()
        self._validate_self_map()

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def __call__(self, z):
        den = self.c * z + self.d
        if isinstance(den, np.ndarray):
            if np.any(np.abs(den) < 1e-300):
                raise SymbolError("evaluation at a pole of the Moebius map")
        elif abs(den) < 1e-300:
            raise SymbolError("evaluation at a pole of the Moebius map")
        return (self.a * z + self.b) / den

    def derivative(self, z):
        den = self.c * z + self.d
        return self.det / (den * den)

    def to_dict(self) -> dict:
        return {
            "kind": "moebius",
            "a": _complex_out(self.a),
            "b": _complex_out(self.b),
            "c": _complex_out(self.c),
            "d": _complex_out(self.d),
        }


def moebius_product(outer: Moebius, inner: Moebius) -> Moebius:
    """Moebius map acting as outer after inner (matrix product of coefficients).

    Plumbing for building automorphisms and conjugations; general symbolic
    composition is deliberately not offered.
    """
    return Moebius(
        outer.a * inner.a + outer.b * inner.c,
        outer.a * inner.b + outer.b * inner.d,
        outer.c * inner.a + outer.d * inner.c,
        outer.c * inner.b + outer.d * inner.d,
    )


def moebius_inverse(m: Moebius) -> Moebius:
    return Moebius(m.d, -m.b, -m.c, m.a)


@dataclass(frozen=True)
class Blaschke(Symbol):
    """Finite Blaschke product e^{i rotation} prod (z - a_i) / (1 - conj(a_i) z)."""

    rotation: float
    zeros: tuple

    kind = "blaschke"

    def __init__(self, rotation, zeros):
        object.__setattr__(self, "rotation", float(rotation))
        zs = tuple(_require_finite(a, "zeros[%d]" % i) for i, a in enumerate(zeros))
        object.__setattr__(self, "zeros", zs)
        if not zs:
            raise SymbolError("a Blaschke product needs at least one factor")
        for i, a in enumerate(zs):
            if abs(a) >= 1.0:
                raise SymbolError(f"zeros[{i}] = {a!r} must lie in the open disc")
        self._validate_self_map()

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def _factors(self, z):
        return [(z - a) / (1.0 - np.conjugate(a) * z) for a in self.zeros]

    def __call__(self, z):
        acc = cmath.exp(1j * self.rotation) + 0.0 * z
        for a in self.zeros:
            acc = acc * (z - a) / (1.0 - np.conjugate(a) * z)
        return acc

    def derivative(self, z):
        # Product rule without dividing by possibly-vanishing factors:
        # B' = e^{i t} sum_j b_j' prod_{i != j} b_i, with
        # b_j'(z) = (1 - |a_j|^2) / (1 - conj(a_j) z)^2.
        factors = self._factors(z)
        n = len(factors)
        prefix = [1.0 + 0.0 * z]
        for f in factors[:-1]:
            prefix.append(prefix[-1] * f)
        suffix = [1.0 + 0.0 * z]
        for f in reversed(factors[1:]):
            suffix.append(suffix[-1] * f)
        suffix.reverse()
        total = 0.0 * z
        for j, a in enumerate(self.zeros):
            den = 1.0 - np.conjugate(a) * z
            dj = (1.0 - abs(a) ** 2) / (den * den)
            total = total + dj * prefix[j] * suffix[j]
        return cmath.exp(1j * self.rotation) * total

    def to_dict(self) -> dict:
        return {
            "kind": "blaschke",
            "rotation": self.rotation,
            "zeros": [_complex_out(a) for a in self.zeros],
        }


@dataclass(frozen=True)
class Polynomial(Symbol):
    """Polynomial self-map, coefficients in ascending degree order."""

    coeffs: tuple

    kind = "polynomial"

    def __init__(self, coeffs):
        cs = tuple(_require_finite(c, "coeffs[%d]" % i) for i, c in enumerate(coeffs))
        if not cs:
            raise SymbolError("empty coefficient list")
        object.__setattr__(self, "coeffs", cs)
        self._reject_boundary_constant()
        self._validate_self_map()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return _horner(self.coeffs, z)

    def derivative(self, z):
        return _horner_derivative(self.coeffs, z)

    def to_dict(self) -> dict:
        return {"kind": "polynomial", "coeffs": [_complex_out(c) for c in self.coeffs]}


@dataclass(frozen=True)
class Taylor(Symbol):
    """Truncated Taylor series with certified absolutely-summable coefficients.

    ``abs_sum_bound``, when supplied, certifies that the absolute coefficient
    sum of the full (untruncated) series stays below the bound, so the symbol
    extends continuously to the closed disc and the truncation error is
    controlled by the tail of the majorant.
    """

    coeffs: tuple
    truncation: int = TAYLOR_TRUNCATION_DEFAULT
    abs_sum_bound: float | None = None

    kind = "taylor"

    def __init__(self, coeffs, truncation=TAYLOR_TRUNCATION_DEFAULT, abs_sum_bound=None):
        cs = tuple(_require_finite(c, "coeffs[%d]" % i) for i, c in enumerate(coeffs))
        if not cs:
            raise SymbolError("empty coefficient list")
        if len(cs) > truncation:
            raise SymbolError(
                f"{len(cs)} coefficients exceed the truncation budget {truncation}"
            )
        abs_sum = float(sum(abs(c) for c in cs))
        if not math.isfinite(abs_sum):
            raise SymbolError("absolute coefficient sum is not finite")
        if abs_sum_bound is not None and abs_sum > float(abs_sum_bound) + 1e-12:
            raise SymbolError(
                f"absolute coefficient sum {abs_sum:.6g} exceeds the certified "
                f"bound {float(abs_sum_bound):.6g}"
            )
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "truncation", int(truncation))
        object.__setattr__(self, "abs_sum_bound", None if abs_sum_bound is None else float(abs_sum_bound))
        self._reject_boundary_constant()
        self._validate_self_map()

    @property
    def abs_coeff_sum(self) -> float:
        return float(sum(abs(c) for c in self.coeffs))

    def __call__(self, z):
        return _horner(self.coeffs, z)

    def derivative(self, z):
        return _horner_derivative(self.coeffs, z)

    def to_dict(self) -> dict:
        doc = {
            "kind": "taylor",
            "coeffs": [_complex_out(c) for c in self.coeffs],
            "truncation": self.truncation,
        }
        if self.abs_sum_bound is not None:
            doc["abs_sum_bound"] = self.abs_sum_bound
        return doc


@dataclass(frozen=True)
class SelfMapReport:
    max_modulus: float
    witness: complex
    passed: bool


def self_map_check(s: Symbol, boundary_samples: int = 512, radial_samples: int = 64) -> SelfMapReport:
    """Grid maximum of |phi| over the closed disc.

    Passes when the maximum stays within SELF_MAP_TOL of one; by the maximum
    modulus principle the boundary rings dominate, so the grid is
    boundary-heavy.  Reporting only; constructors raise on failure.
    """
    grid = disc_grid(boundary_samples, radial_samples)
    try:
        values = np.abs(s(grid))
    except SymbolError:
        # A pole on the closed disc: find a boundary witness by scalar probing.
        worst, witness = math.inf, 1.0 + 0.0j
        for z in boundary_points(boundary_samples):
            try:
                m = abs(complex(s(complex(z))))
            except SymbolError:
                return SelfMapReport(math.inf, complex(z), False)
            if m > worst:
                worst, witness = m, complex(z)
        return SelfMapReport(worst, witness, worst <= 1.0 + SELF_MAP_TOL)
    idx = int(np.argmax(values))
    max_mod = float(values[idx])
    return SelfMapReport(max_mod, complex(grid[idx]), max_mod <= 1.0 + SELF_MAP_TOL)


@dataclass(frozen=True)
class Orbit:
    """Forward orbit phi(z), phi^2(z), ..., phi^n(z) of a starting point."""

    start: complex
    points: np.ndarray
    length: int = field(default=0)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=complex)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "length", len(pts))
        if len(pts) and float(np.max(np.abs(pts))) > 1.0 + SELF_MAP_TOL:
            raise SymbolError("orbit leaves the closed disc")


def iterate(s: Symbol, z: complex, n: int) -> Orbit:
    """Orbit of z under s for n steps; raises if the orbit leaves the disc."""
    if n < 1:
        raise ValueError("n must be >= 1")
    z = _require_finite(z, "z")
    if abs(z) > 1.0 + SELF_MAP_TOL:
        raise SymbolError(f"start point {z!r} is outside the closed disc")
    points = np.empty(n, dtype=complex)
    w = z
    for i in range(n):
        w = complex(s(w))
        if abs(w) > 1.0 + ORBIT_BLOWUP_TOL:
            raise SymbolError(
                f"orbit escaped to modulus {abs(w):.6g} at step {i + 1}; "
                "the symbol is not a self-map"
            )
        points[i] = w
    return Orbit(z, points)


def iterate_array(s: Symbol, z: np.ndarray, n: int) -> np.ndarray:
    """Final iterate phi^n applied elementwise to an array of seeds."""
    w = np.asarray(z, dtype=complex)
    for _ in range(n):
        w = s(w)
    return w


# ---------------------------------------------------------------------------
# Automorphisms

def make_automorphism(kind: str, *, angle: float | None = None,
                      fixed_point: complex = 0.0,
                      multiplier: float | None = None,
                      translation: float | None = None) -> Moebius:
    """Disc automorphism of the requested dynamical type.

    elliptic    rotation by ``angle`` about an interior ``fixed_point``;
    hyperbolic  fixed points +1 and -1, derivative ``multiplier`` in (0,1)
                at the attracting point +1;
    parabolic   single boundary fixed point +1, built by conjugating the
                half-plane translation w -> w + translation through the
                Cayley map sigma(z) = i (1+z) / (1-z).
    """
    if kind == "elliptic":
        if angle is None:
            raise ValueError("elliptic automorphism needs an angle")
        p = _require_finite(fixed_point, "fixed_point")
        if abs(p) >= 1.0:
            raise ValueError("elliptic fixed point must lie in the open disc")
        rot = Moebius(cmath.exp(1j * float(angle)), 0.0, 0.0, 1.0)
        if p == 0:
            return rot
        swap = Moebius(-1.0, p, -np.conjugate(p), 1.0)  # involution exchanging 0 and p
        return moebius_product(moebius_product(swap, rot), swap)
    if kind == "hyperbolic":
        if multiplier is None or not 0.0 < float(multiplier) < 1.0:
            raise ValueError("hyperbolic automorphism needs a multiplier in (0, 1)")
        mu = float(multiplier)
        return Moebius(1.0 + mu, 1.0 - mu, 1.0 - mu, 1.0 + mu)
    if kind == "parabolic":
        if translation is None or float(translation) == 0.0:
            raise ValueError("parabolic automorphism needs a nonzero real translation")
        b = float(translation)
        return Moebius(2j - b, b, -b, b + 2j)
    raise ValueError(f"unknown automorphism kind {kind!r}")


# ---------------------------------------------------------------------------
# Serialization

def _complex_out(z: complex) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _complex_in(value, path: str) -> complex:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        z = complex(float(value), 0.0)
    elif isinstance(value, (list, tuple)) and len(value) == 2 and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    ):
        z = complex(float(value[0]), float(value[1]))
    else:
        raise SymbolParseError("expected a number or an [re, im] pair", path)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise SymbolParseError("components must be finite", path)
    return z


_SYMBOL_FIELDS = {
    "moebius": {"a", "b", "c", "d"},
    "blaschke": {"rotation", "zeros"},
    "polynomial": {"coeffs"},
    "taylor": {"coeffs", "truncation", "abs_sum_bound"},
}


def parse_symbol(doc) -> Symbol:
    """Build a validated symbol from a JSON document (text or parsed dict).

    Complex entries may be numbers or [re, im] pairs; serialize_symbol always
    emits pairs, and parse(serialize(s)) reproduces s bit-exactly.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SymbolParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SymbolParseError("symbol document must be a JSON object")
    kind = doc.get("kind")
    if kind not in _SYMBOL_FIELDS:
        raise SymbolParseError(
            f"unknown kind {kind!r}; expected one of {sorted(_SYMBOL_FIELDS)}", "kind"
        )
    extra = set(doc) - _SYMBOL_FIELDS[kind] - {"kind"}
    if extra:
        raise SymbolParseError(f"unknown fields {sorted(extra)}", kind)
    try:
        if kind == "moebius":
            vals = {}
            for name in ("a", "b", "c", "d"):
                if name not in doc:
                    raise SymbolParseError("missing field", name)
                vals[name] = _complex_in(doc[name], name)
            return Moebius(**vals)
        if kind == "blaschke":
            if "rotation" not in doc or "zeros" not in doc:
                raise SymbolParseError("blaschke needs 'rotation' and 'zeros'", kind)
            rotation = doc["rotation"]
            if isinstance(rotation, bool) or not isinstance(rotation, (int, float)):
                raise SymbolParseError("expected a real number", "rotation")
            if not isinstance(doc["zeros"], list):
                raise SymbolParseError("expected a list", "zeros")
            zeros = [_complex_in(v, f"zeros[{i}]") for i, v in enumerate(doc["zeros"])]
            return Blaschke(rotation, zeros)
        if kind == "polynomial":
            if not isinstance(doc.get("coeffs"), list):
                raise SymbolParseError("expected a list", "coeffs")
            coeffs = [_complex_in(v, f"coeffs[{i}]") for i, v in enumerate(doc["coeffs"])]
            return Polynomial(coeffs)
        if not isinstance(doc.get("coeffs"), list):
            raise SymbolParseError("expected a list", "coeffs")
        coeffs = [_complex_in(v, f"coeffs[{i}]") for i, v in enumerate(doc["coeffs"])]
        truncation = doc.get("truncation", TAYLOR_TRUNCATION_DEFAULT)
        if isinstance(truncation, bool) or not isinstance(truncation, int):
            raise SymbolParseError("expected an integer", "truncation")
        bound = doc.get("abs_sum_bound")
        if bound is not None and (isinstance(bound, bool) or not isinstance(bound, (int, float))):
            raise SymbolParseError("expected a real number", "abs_sum_bound")
        return Taylor(coeffs, truncation, bound)
    except SymbolError as exc:
        if isinstance(exc, SymbolParseError):
            raise
        raise SymbolParseError(str(exc), kind) from exc


def serialize_symbol(s: Symbol) -> dict:
    return s.to_dict()


def symbol_to_json(s: Symbol) -> str:
    return json.dumps(s.to_dict(), indent=2, sort_keys=True)
