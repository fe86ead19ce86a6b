"""Lacunary sequences, radial weights, and the weighted counterexample pair.

For a unimodular lam that is not a root of unity, continued-fraction
convergent denominators of its rotation number are exactly the integers
minimizing |1 - lam^n|; a subsequence (n_k) with |1 - lam^{n_k}| <= R^{-k}
drives both the disc-algebra counterexample f(z) = sum (1 - lam^{n_k}) z^{n_k}
and the weight v_alpha(r) = C (sum r^{n_k})^{-alpha} on which the rotation
operator fails to be uniformly mean ergodic.  Exponents grow like R^{1.44 k},
so series are stored sparsely and the arithmetic certifying the defining
inequality runs in high precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
import numpy as np

ROOT_OF_UNITY_ORDER_BOUND = 10**4
ROOT_OF_UNITY_TOL = 1e-12
DEFAULT_TRUNCATION_K = 40
RADIUS_CLAMP = 1.0 - 1e-8  # evaluation radii this close to 1 are clamped

# Built-in rotation numbers, exactly representable at any working precision.
THETA_BUILTINS = {
    "golden": lambda: (mp.sqrt(5) - 1) / 2,
    "sqrt2": lambda: mp.sqrt(2) - 1,
}


class BudgetExceededError(RuntimeError):
    """No qualifying exponent under the budget; the rotation number is not
    well-approximable enough at this scale."""


def resolve_theta(theta=None, lam=None):
    """Rotation number as an mpmath value at the current working precision.

    Accepts a named irrational ("golden", "sqrt2"), an exact Fraction, an
    mpmath value, or a float; a float carries only double accuracy, which is
    meaningful for exponents up to about 1e7.  Alternatively pass the
    unimodular lam itself and the angle is taken from it (double accuracy).
    """
    if (theta is None) == (lam is None):
        raise ValueError("supply exactly one of theta or lam")
    if theta is not None:
        if isinstance(theta, str):
            try:
                value = THETA_BUILTINS[theta]()
            except KeyError:
                raise ValueError(f"unknown named rotation number {theta!r}") from None
        elif isinstance(theta, Fraction):
            value = mp.mpf(theta.numerator) / theta.denominator
        else:
            value = mp.mpf(theta)
    else:
        lam = complex(lam)
        if abs(abs(lam) - 1.0) > 1e-12:
            raise ValueError("lam must be unimodular")
        value = mp.mpf(math.atan2(lam.imag, lam.real)) / (2 * mp.pi)
    value = mp.frac(value)
    if value < 0:
        value += 1
    if value == 0:
        raise ValueError("rotation number 0 is a root of unity")
    return value


def _distance_to_one(theta, n) -> mp.mpf:
    """|1 - e^{2 pi i n theta}| = 2 |sin(pi {n theta})| with centered fraction."""
    frac = mp.frac(mp.mpf(n) * theta)
    if frac > mp.mpf("0.5"):
        frac = 1 - frac
    return 2 * mp.sin(mp.pi * frac)


def _check_not_root_of_unity(theta):
    # Coarse double sweep, then high-precision confirmation of any suspects.
    td = float(theta)
    n = np.arange(1, ROOT_OF_UNITY_ORDER_BOUND + 1)
    frac = np.mod(n * td, 1.0)
    frac = np.minimum(frac, 1.0 - frac)
    errs = 2.0 * np.sin(np.pi * frac)
    suspects = n[errs < 1e-9]
    for q in suspects:
        if _distance_to_one(theta, int(q)) <= ROOT_OF_UNITY_TOL:
            raise ValueError(
                f"rotation of order {int(q)} (root of unity); lacunary "
                "construction needs an irrational rotation number"
            )


def convergent_denominators(theta, q_limit: int):
    """Continued-fraction convergent denominators of theta up to q_limit.

    Exact integer recurrence on (p_k, q_k); these denominators are the best
    rational approximations and hence the argmins of |1 - lam^n|.
    """
    y = mp.mpf(theta)
    pm2, qm2 = 0, 1
    pm1, qm1 = 1, 0
    dens = []
    for _ in range(400):
        a = int(mp.floor(y))
        p = a * pm1 + pm2
        q = a * qm1 + qm2
        pm2, qm2, pm1, qm1 = pm1, qm1, p, q
        if q > 0:
            dens.append(q)
        if q > q_limit:
            break
        frac_part = y - a
        if frac_part == 0:
            break
        y = 1 / frac_part
    return dens


@dataclass(frozen=True)
class LacunarySequence:
    """Exponents n_k with |1 - lam^{n_k}| <= R^{-k}, n_k >= k, strictly up.

    The defining inequality is re-certified at construction in high-precision
    arithmetic; ``errors`` holds the certified |1 - lam^{n_k}| values.
    """

    lam: complex
    R: float
    exponents: tuple
    errors: tuple
    theta_descriptor: object = None

    def __post_init__(self):
        exps = tuple(int(n) for n in self.exponents)
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "errors", tuple(float(e) for e in self.errors))
        if self.R <= 1.0:
            raise ValueError("R must exceed 1")
        if len(exps) != len(self.errors):
            raise ValueError("exponents and errors must align")
        prev = 0
        for k, (n, err) in enumerate(zip(exps, self.errors), start=1):
            if n < k:
                raise ValueError(f"exponent n_{k} = {n} violates n_k >= k")
            if n <= prev:
                raise ValueError("exponents must be strictly increasing")
            if err > self.R ** (-k) * (1.0 + 1e-9):
                raise ValueError(
                    f"|1 - lam^{n}| = {err:.3e} exceeds R^-{k} = {self.R ** (-k):.3e}"
                )
            prev = n

    def __len__(self):
        return len(self.exponents)

    def lam_power(self, n: int, dps: int = 60) -> complex:
        """lam^n computed through the rotation number at high precision."""
        with mp.workdps(dps):
            theta = resolve_theta(theta=self.theta_descriptor) \
                if self.theta_descriptor is not None else \
                resolve_theta(lam=self.lam)
            return complex(mp.exp(2j * mp.pi * mp.frac(mp.mpf(n) * theta)))

    def to_dict(self) -> dict:
        return {
            "kind": "lacunary_sequence",
            "theta": self.theta_descriptor if isinstance(self.theta_descriptor, (str, float)) else None,
            "lam": [self.lam.real, self.lam.imag],
            "R": self.R,
            "exponents": list(self.exponents),
            "errors": list(self.errors),
        }


def lacunary_exponents(lam=None, R: float = 2.0, K: int = 12,
                       n_max: int = 10**15, *, theta=None) -> LacunarySequence:
    """Select exponents n_k <= n_max with |1 - lam^{n_k}| <= R^{-k}.

    Works through the continued fraction of the rotation number: candidate
    exponents are the convergent denominators (the argmins of |1 - lam^n|),
    scanned greedily against the geometric thresholds.  Raises
    BudgetExceededError when some level finds no denominator under n_max.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    if R <= 1.0:
        raise ValueError("R must exceed 1")
    # Working precision: enough digits for n*theta with n up to n_max and for
    # thresholds down to R^-K.
    dps = 40 + 2 * len(str(n_max)) + int(K * math.log10(R)) + 10
    with mp.workdps(dps):
        th = resolve_theta(theta=theta, lam=lam)
        _check_not_root_of_unity(th)
        lam_value = complex(mp.exp(2j * mp.pi * th))
        dens = convergent_denominators(th, n_max)
        chosen, errs = [], []
        prev = 0
        for k in range(1, K + 1):
            threshold = mp.mpf(R) ** (-k)
            pick = None
            for q in dens:
                if q <= prev or q < k or q > n_max:
                    continue
                err = _distance_to_one(th, q)
                if err <= threshold:
                    pick = (q, err)
                    break
            if pick is None:
                raise BudgetExceededError(
                    f"no exponent <= {n_max} meets |1 - lam^n| <= R^-{k} "
                    f"= {float(threshold):.3e}"
                )
            chosen.append(pick[0])
            errs.append(float(pick[1]))
            prev = pick[0]
    descriptor = theta if isinstance(theta, (str, float)) else None
    return LacunarySequence(lam_value, float(R), tuple(chosen), tuple(errs),
                            theta_descriptor=descriptor)


def brute_force_error_table(theta, n_limit: int) -> np.ndarray:
    """|1 - lam^n| for n = 1..n_limit in doubles: the independent oracle used
    to confirm that selected exponents are running argmins."""
    with mp.workdps(40):
        td = float(resolve_theta(theta=theta))
    n = np.arange(1, n_limit + 1)
    frac = np.mod(n * td, 1.0)
    frac = np.minimum(frac, 1.0 - frac)
    return 2.0 * np.sin(np.pi * frac)


# ---------------------------------------------------------------------------
# Weights

class Weight:
    """Radial weight r -> v(r) on [0, 1)."""

    def __call__(self, r):
        raise NotImplementedError


@dataclass(frozen=True)
class StandardWeight(Weight):
    """(1 - r)^gamma; plumbing for comparisons and demos."""

    gamma: float = 1.0

    def __call__(self, r):
        r = np.minimum(np.asarray(r, dtype=float), RADIUS_CLAMP)
        out = (1.0 - r) ** self.gamma
        return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class VAlpha(Weight):
    """v_alpha(r) = C (sum_k r^{n_k})^{-alpha} for r >= r0, and 1 below r0.

    C = (sum_k r0^{n_k})^alpha makes the weight continuous at r0 and equal to
    one there; the partial sum is increasing in r, so the weight is
    non-increasing and tends to zero at the boundary.
    """

    alpha: float
    r0: float
    seq: LacunarySequence
    tail_terms: int

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("alpha must lie in (0, 1)")
        if not 0.0 < self.r0 < 1.0:
            raise ValueError("r0 must lie in (0, 1)")
        if not 1 <= self.tail_terms <= len(self.seq):
            raise ValueError("tail_terms must be within the available exponents")
        # Typical-weight certification on a radius sweep.
        radii = np.linspace(0.0, RADIUS_CLAMP, 1000)
        values = np.array([self._value(float(r)) for r in radii])
        if np.any(np.diff(values) > 1e-12):
            raise ValueError("weight failed the non-increasing check")
        below = self._value(self.r0 * (1.0 - 1e-9))
        above = self._value(min(self.r0 * (1.0 + 1e-9), RADIUS_CLAMP))
        if abs(below - above) > 1e-6:
            raise ValueError("weight is discontinuous at r0")

    @property
    def C(self) -> float:
        return self.partial_sum(self.r0) ** self.alpha

    def partial_sum(self, r: float) -> float:
        r = min(float(r), RADIUS_CLAMP)
        if r <= 0.0:
            return 0.0
        log_r = math.log(r)
        total = 0.0
        for n in self.seq.exponents[: self.tail_terms]:
            e = n * log_r
            if e > -745.0:
                total += math.exp(e)
        return total

    def tail_bound(self, r: float) -> float:
        """Geometric bound r^{n_K + 1} / (1 - r) on the truncated tail."""
        r = min(float(r), RADIUS_CLAMP)
        n_last = self.seq.exponents[self.tail_terms - 1]
        e = (n_last + 1) * math.log(r) if r > 0 else -math.inf
        return math.exp(e) / (1.0 - r) if e > -745.0 else 0.0

    def _value(self, r: float) -> float:
        r = min(float(r), RADIUS_CLAMP)
        if r <= self.r0:
            return 1.0
        return self.C * self.partial_sum(r) ** (-self.alpha)

    def __call__(self, r):
        arr = np.asarray(r, dtype=float)
        if arr.ndim == 0:
            return self._value(float(arr))
        return np.array([self._value(float(x)) for x in arr])

    def to_dict(self) -> dict:
        return {
            "kind": "weight_v_alpha",
            "alpha": self.alpha,
            "r0": self.r0,
            "tail_terms": self.tail_terms,
            "sequence": self.seq.to_dict(),
        }


def make_weight_v_alpha(alpha: float, r0: float, seq: LacunarySequence,
                        tail_terms: int | None = None) -> VAlpha:
    return VAlpha(alpha, r0, seq, len(seq) if tail_terms is None else tail_terms)


def parse_sequence(doc: dict) -> LacunarySequence:
    if doc.get("kind") != "lacunary_sequence":
        raise ValueError("not a lacunary_sequence document")
    lam = complex(doc["lam"][0], doc["lam"][1])
    return LacunarySequence(lam, float(doc["R"]), tuple(doc["exponents"]),
                            tuple(doc["errors"]), theta_descriptor=doc.get("theta"))


def parse_weight(doc: dict) -> VAlpha:
    if doc.get("kind") != "weight_v_alpha":
        raise ValueError("not a weight_v_alpha document")
    return VAlpha(float(doc["alpha"]), float(doc["r0"]),
                  parse_sequence(doc["sequence"]), int(doc["tail_terms"]))


# ---------------------------------------------------------------------------
# Sparse power series

@dataclass(frozen=True)
class SparseSeries:
    """sum_k c_k z^{n_k} with integer exponents too sparse to store densely."""

    terms: tuple  # ((exponent, coefficient), ...) strictly increasing exponents

    def __init__(self, terms):
        cleaned = tuple((int(n), complex(c)) for n, c in terms)
        prev = -1
        for n, _ in cleaned:
            if n <= prev:
                raise ValueError("exponents must be strictly increasing")
            prev = n
        object.__setattr__(self, "terms", cleaned)

    @property
    def exponents(self):
        return tuple(n for n, _ in self.terms)

    @property
    def coefficients(self):
        return tuple(c for _, c in self.terms)

    def abs_coeff_sum(self) -> float:
        return float(sum(abs(c) for _, c in self.terms))

    def __call__(self, z):
        if isinstance(z, np.ndarray):
            total = np.zeros(z.shape, dtype=complex)
            for n, c in self.terms:
                total = total + c * z ** n
            return total
        z = complex(z)
        total = 0.0 + 0.0j
        for n, c in self.terms:
            if abs(z) > 0 and n * math.log(abs(z)) < -745.0:
                continue
            total += c * z ** n
        return total


# ---------------------------------------------------------------------------
# Norms

def weighted_sup_norm(f, w: Weight, radii: int = 64, angles: int = 128) -> float:
    """Grid maximum of v(|z|) |f(z)|, radii accumulating toward the boundary.

    ``f`` is any callable power series (sparse or dense).
    """
    cheb = np.cos(np.pi * (2.0 * np.arange(radii) + 1.0) / (4.0 * radii))
    rs = np.minimum(cheb, RADIUS_CLAMP)
    ts = np.exp(2j * np.pi * np.arange(angles) / angles)
    best = 0.0
    for r in rs:
        vals = np.abs(f(r * ts))
        best = max(best, float(w(float(r))) * float(np.max(vals)))
    return best


@dataclass(frozen=True)
class CoefficientNormReport:
    """Sum of |a_j|^2 over stored coefficients.

    ``grows_with_terms`` flags the divergence pattern of the all-ones
    lacunary series: every stored nonzero coefficient is unimodular, so the
    truncated sum equals the term count and grows without bound in it.
    """

    value: float
    term_count: int
    grows_with_terms: bool


def h2_norm_sq(f) -> CoefficientNormReport:
    """Coefficient-square sum over the stored terms of a power series."""
    if isinstance(f, SparseSeries):
        coeffs = [c for _, c in f.terms]
    else:
        coeffs = list(getattr(f, "coeffs", f))
    nonzero = [c for c in coeffs if abs(complex(c)) > 0.0]
    value = float(sum(abs(complex(c)) ** 2 for c in nonzero))
    unimodular = bool(nonzero) and all(abs(abs(complex(c)) - 1.0) < 1e-15 for c in nonzero)
    return CoefficientNormReport(value, len(nonzero), unimodular)


# ---------------------------------------------------------------------------
# The counterexample pair

@dataclass(frozen=True)
class CounterexamplePair:
    f: SparseSeries
    g: SparseSeries
    report: dict


def counterexample_pair(seq: LacunarySequence, K: int,
                        weight: VAlpha | None = None,
                        probe_radii=None) -> CounterexamplePair:
    """The pair f(z) = sum (1 - lam^{n_k}) z^{n_k} and g(z) = sum z^{n_k}.

    f solves f(z) = g(z) - g(lam z) coefficientwise, lies in the disc algebra
    with absolute coefficient sum at most 1/(R - 1), yet the forced g has
    coefficient-square sum K: the obstruction to uniform mean ergodicity of
    the rotation operator.  With a weight supplied, the report also probes
    v(r) |g(r)| = C (sum r^{n_k})^{1 - alpha}, which grows as r -> 1, and
    v(r) |f(r)|, which decays.
    """
    if not 1 <= K <= len(seq):
        raise ValueError("K must be within the sequence length")
    exps = seq.exponents[:K]
    lam_powers = [seq.lam_power(n) for n in exps]
    g = SparseSeries([(n, 1.0) for n in exps])
    f = SparseSeries([(n, 1.0 - lp) for n, lp in zip(exps, lam_powers)])
    abs_sum = f.abs_coeff_sum()
    certified_bound = 1.0 / (seq.R - 1.0)
    # The looser geometric constant R/(R-1) is recorded for reference but the
    # certified bound is the exact sum of the geometric series from k = 1.
    coeff_identity_error = 0.0
    for (n, cf), (_, cg), lp in zip(f.terms, g.terms, lam_powers):
        coeff_identity_error = max(coeff_identity_error, abs(cf - cg * (1.0 - lp)))
    report = {
        "K": K,
        "R": seq.R,
        "abs_coeff_sum_f": abs_sum,
        "abs_coeff_sum_bound": certified_bound,
        "reference_constant_R_over_R_minus_1": seq.R / (seq.R - 1.0),
        "coeff_identity_max_error": coeff_identity_error,
        "h2_norm_sq_g": h2_norm_sq(g).value,
        "h2_grows_with_terms": h2_norm_sq(g).grows_with_terms,
    }
    if abs_sum > certified_bound + 1e-12:
        raise ArithmeticError("absolute coefficient sum exceeded the certified bound")
    if weight is not None:
        if probe_radii is None:
            probe_radii = [1.0 - 10.0 ** (-m) for m in range(1, 6)]
        probes = []
        for r in probe_radii:
            r = float(r)
            v = float(weight(r))
            gval = abs(g(r))
            fval = abs(f(r))
            partial = weight.partial_sum(r) if isinstance(weight, VAlpha) else math.nan
            probes.append({
                "r": r,
                "v": v,
                "v_abs_f": v * fval,
                "v_abs_g": v * gval,
                "partial_sum_pow": partial ** (1.0 - weight.alpha)
                if isinstance(weight, VAlpha) else math.nan,
            })
        report["weighted_probes"] = probes
    return CounterexamplePair(f, g, report)
