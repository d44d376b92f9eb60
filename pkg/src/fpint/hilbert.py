"""Hilbert-transform evaluation by finite-part series plus singular terms.

Every variant is computed as

    value = convergent_prefix + finite_part_sum + singular_contribution

where the prefix holds the ordinary integrals produced by a zero of order m
at the origin (f = x^m g), the series sums powers of omega against half-line
finite parts of g, and the singular contribution is the closed-form term the
kernel singularity contributes (f(omega) ln omega, pi cot(pi nu) ... / omega^nu,
and so on, by variant).  Parity of g selects the reduced forms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConvergenceDomain, DomainError, NoConvergence, ProvisoViolated
from .finitepart import resolve_fp, snap_nu
from .funcmodel import AnalyticFunction, factor_zero, scaled
from .precision import CONSECUTIVE_SMALL_TERMS, PrecisionConfig, default_precision
from .pvoracle import QuadratureBudget, regular_integral

VARIANTS = ("stieltjes", "one_sided", "full_line", "full_line_sgn",
            "full_line_branch", "full_line_abs", "full_line_abs_sgn",
            "sym_omega", "sym_x")

_POSITIVE_OMEGA = {"stieltjes", "one_sided", "sym_omega", "sym_x"}
_NU_REQUIRED = {"full_line_branch", "full_line_abs", "full_line_abs_sgn"}
_NU_FORBIDDEN = {"full_line", "full_line_sgn"}

OMEGA_MARGIN = 0.99
RATIO_LIMIT = 0.999
PROVISO_FLOOR = 1e-13


@dataclass(frozen=True)
class TransformSpec:
    """Which kernel variant, with nu, omega and the upper limit a."""

    variant: str
    omega: float
    nu: float = 0.0
    a: float = math.inf

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise DomainError(f"unknown variant {self.variant!r}; one of {VARIANTS}")
        object.__setattr__(self, "nu", snap_nu(self.nu))
        if self.variant in _NU_REQUIRED and self.nu == 0.0:
            raise DomainError(
                f"{self.variant} requires 0 < nu < 1 (nu = 0 collapses to the "
                "plain/sgn full-line variants)")
        if self.variant in _NU_FORBIDDEN and self.nu != 0.0:
            raise DomainError(f"{self.variant} is the nu = 0 theorem; use the "
                              "branch/abs variants for nu > 0")
        if self.variant in _POSITIVE_OMEGA and not self.omega > 0.0:
            raise DomainError(f"{self.variant} requires omega > 0")
        if self.variant != "full_line" and self.omega == 0.0:
            raise DomainError(f"{self.variant} is singular at omega = 0")
        if not self.a > 0.0:
            raise DomainError("a must be positive")


@dataclass
class EvalReport:
    value: complex
    finite_part_sum: complex
    singular_contribution: complex
    convergent_prefix: complex
    terms_used: int
    tail_estimate: float
    route_notes: list[str] = field(default_factory=list)


class _Engine:
    """Shared series/prefix machinery bound to one (f, spec) evaluation."""

    def __init__(self, f: AnalyticFunction, spec: TransformSpec,
                 precision: PrecisionConfig, budget: QuadratureBudget,
                 fp_mode: str, margin: float):
        self.f = f
        self.spec = spec
        self.precision = precision
        self.budget = budget
        self.use_hook = fp_mode != "generic"
        self.notes: list[str] = []
        lim = min(spec.a, f.rho0)
        # entire f on the whole half/full line has no convergence boundary:
        # the omega series is entire, and transient term growth is normal
        self.bounded_domain = math.isfinite(lim)
        if self.bounded_domain and abs(spec.omega) > margin * lim:
            raise ConvergenceDomain(
                f"|omega| = {abs(spec.omega):g} exceeds {margin:g} * min(a, rho0) "
                f"= {margin * lim:g}; the series cannot converge reliably there")
        self._fp_cache: dict[tuple[int, float, float, int], tuple[complex, float]] = {}
        self._term_cancel = 1.0

    def fp(self, fn: AnalyticFunction, k: int, nu: float) -> complex:
        key = (k, nu, self.spec.a, id(fn))
        hit = self._fp_cache.get(key)
        if hit is None:
            fpv = resolve_fp(fn, k, nu, self.spec.a, self.precision, self.budget,
                             use_hook=self.use_hook,
                             scale_hint=abs(self.spec.omega))
            hit = (fpv.value, fpv.cancellation)
            self._fp_cache[key] = hit
        self._term_cancel = max(self._term_cancel, hit[1])
        return hit[0]

    def prefix_integral(self, g: AnalyticFunction, power: float,
                        combo: Callable[[np.ndarray], np.ndarray] | None = None) -> complex:
        """int_0^a x^power * (combo of g(+-x)) dx; power > -1."""
        ev = combo if combo is not None else (lambda x: g.evaluate(x))

        def integrand(x: np.ndarray):
            return x ** power * ev(x)

        nu_end = max(0.0, -power)
        return regular_integral(integrand, 0.0, self.spec.a, endpoint_nu=nu_end,
                                budget=self.budget, tail=g.tail,
                                tail_extra_power=-power)

    def sum_series(self, term_fn: Callable[[int], complex]) -> tuple[complex, int, float]:
        total = 0.0 + 0.0j
        peak = 0.0
        peak_term = 0.0
        noise = 0.0
        small = 0
        ratios: list[float] = []
        prev_mag = None
        tail_mag = 0.0
        for k in range(self.precision.max_terms):
            self._term_cancel = 1.0
            t = complex(term_fn(k))
            total += t
            mag = abs(t)
            peak = max(peak, abs(total))
            peak_term = max(peak_term, mag)
            noise += mag * self._term_cancel * 1e-16
            floor = self.precision.rel_tol * max(abs(total), 1e-3 * peak, 1e-300)
            if mag <= floor:
                small += 1
                tail_mag = max(tail_mag, mag)
                if small >= CONSECUTIVE_SMALL_TERMS and k >= 4:
                    self._check_cancellation(peak_term, noise, abs(total))
                    return total, k + 1, tail_mag
            else:
                small = 0
                tail_mag = mag
            if self.bounded_domain and prev_mag and mag > 0.0:
                ratios.append(mag / prev_mag)
                if len(ratios) > 6:
                    ratios.pop(0)
                if (k > 24 and len(ratios) == 6 and mag > floor
                        and min(ratios) >= RATIO_LIMIT):
                    raise ConvergenceDomain(
                        f"series term ratio ~{min(ratios):.4f} >= {RATIO_LIMIT}; "
                        "omega too close to min(a, rho0)")
            if mag > 0.0:
                prev_mag = mag
        raise NoConvergence(
            f"transform series did not converge within {self.precision.max_terms} terms")

    def _check_cancellation(self, peak_term: float, noise: float,
                            total_mag: float) -> None:
        """Refuse results whose binary64 noise floor swamps the sum.

        Two mechanisms: the omega-series transient can dwarf the converged sum
        (entire functions at large omega), and generic-route finite parts carry
        an internal cancellation factor that the omega powers amplify.
        """
        scale = max(total_mag, 1e-300)
        amp = peak_term / scale
        noise_rel = noise / scale
        if amp > 1e13 or noise_rel > 1e-3:
            raise ConvergenceDomain(
                f"series cancellation (transient/result ~{amp:.1e}, estimated "
                f"noise/result ~{noise_rel:.1e}): omega too large for reliable "
                "binary64 summation of this function")
        if amp > 1e8 or noise_rel > 1e-8:
            self.notes.append(
                f"series cancellation ~{max(amp, noise_rel / 1e-16):.0e}; about "
                f"{max(int(math.log10(max(amp, 1.0))), int(math.log10(max(noise_rel / 1e-16, 1.0))))}"
                " digits lost")


def _reflected_g(f: AnalyticFunction, m: int, g: AnalyticFunction) -> AnalyticFunction:
    """Function x -> g(-x), reusing closed-form providers where possible."""
    if g.parity == "even":
        return g
    if g.parity == "odd":
        return scaled(g, -1.0)
    fr = f.reflect()
    if m == 0:
        return fr
    _, gr = factor_zero(fr)
    return scaled(gr, (-1.0) ** m)


def _signed_power(omega: float, expo: float, notes: list[str]) -> complex:
    """omega^expo for the branch variant, continued above the cut for omega < 0."""
    if omega > 0:
        return omega ** expo
    notes.append("omega < 0: power continued above the branch cut")
    return cmath.exp(expo * (math.log(-omega) + 1j * math.pi))


def evaluate_transform(spec: TransformSpec, f: AnalyticFunction,
                       precision: PrecisionConfig | None = None,
                       budget: QuadratureBudget | None = None,
                       fp_mode: str = "auto",
                       margin: float = OMEGA_MARGIN,
                       force_generic_parity: bool = False) -> EvalReport:
    """Evaluate one transform variant; see the per-variant helpers below."""
    precision = precision or default_precision()
    budget = budget or QuadratureBudget()
    eng = _Engine(f, spec, precision, budget, fp_mode, margin)
    omega, nu, a = spec.omega, spec.nu, spec.a
    v = spec.variant

    if v == "stieltjes":
        series, used, tail = eng.sum_series(
            lambda k: (-omega) ** k * eng.fp(f, k + 1, nu))
        if nu == 0.0:
            singular = -f.evaluate(-omega) * math.log(omega)
        else:
            singular = math.pi / math.sin(math.pi * nu) \
                * f.evaluate(-omega) / omega ** nu
        return _report(series, singular, 0.0, used, tail, eng.notes)

    m, g = factor_zero(f)
    if m:
        eng.notes.append(f"zero of order m={m} at the origin")

    if v == "one_sided":
        prefix = 0.0 + 0.0j
        for k in range(m):
            prefix -= omega ** k * eng.prefix_integral(g, m - k - 1 - nu)
        series, used, tail = eng.sum_series(
            lambda k: -(omega ** (m + k)) * eng.fp(g, k + 1, nu))
        gw = g.evaluate(omega)
        if nu == 0.0:
            singular = omega ** m * gw * math.log(omega)
        else:
            singular = -math.pi / math.tan(math.pi * nu) * omega ** (m - nu) * gw
        return _report(series, singular, prefix, used, tail, eng.notes)

    if v in ("sym_omega", "sym_x"):
        gw = g.evaluate(omega)
        gmw = g.evaluate(-omega)
        sgn_m = (-1.0) ** m
        if v == "sym_omega":
            base = 2 * (m // 2)
            prefix_top = (m - 2) // 2
            series_pow = lambda k: 2 * k + base + 1
            series_exp = lambda k: 2 * k + base + 2 - m
            prefix_exp = lambda k: m - 2 * k - 2 - nu
            if nu == 0.0:
                combo = gw - sgn_m * gmw
                vanishes = (g.parity == "even" and m % 2 == 0) or \
                           (g.parity == "odd" and m % 2 == 1)
                singular = 0.0 if vanishes else 0.5 * omega ** m * combo * math.log(omega)
            else:
                singular = -0.5 * math.pi * omega ** (m - nu) * (
                    gw / math.tan(math.pi * nu) - sgn_m * gmw / math.sin(math.pi * nu))
        else:
            base = 2 * ((m + 1) // 2)
            prefix_top = (m - 1) // 2
            series_pow = lambda k: 2 * k + base
            series_exp = lambda k: 2 * k + base + 1 - m
            prefix_exp = lambda k: m - 2 * k - 1 - nu
            if nu == 0.0:
                combo = gw + sgn_m * gmw
                vanishes = (g.parity == "even" and m % 2 == 1) or \
                           (g.parity == "odd" and m % 2 == 0)
                singular = 0.0 if vanishes else 0.5 * omega ** m * combo * math.log(omega)
            else:
                singular = -0.5 * math.pi * omega ** (m - nu) * (
                    gw / math.tan(math.pi * nu) + sgn_m * gmw / math.sin(math.pi * nu))
        prefix = 0.0 + 0.0j
        for k in range(prefix_top + 1):
            prefix -= omega ** (2 * k + 1 if v == "sym_omega" else 2 * k) \
                * eng.prefix_integral(g, prefix_exp(k))
        series, used, tail = eng.sum_series(
            lambda k: -(omega ** series_pow(k)) * eng.fp(g, series_exp(k), nu))
        return _report(series, singular, prefix, used, tail, eng.notes)

    # full-line family
    even_route = g.parity == "even" and not force_generic_parity
    gneg = None if even_route else _reflected_g(f, m, g)
    fl = {"full_line": ("plain", 1.0), "full_line_sgn": ("sgn", 1.0),
          "full_line_branch": ("plain", cmath.exp(-1j * math.pi * nu)),
          "full_line_abs": ("plain", 1.0), "full_line_abs_sgn": ("sgn", 1.0)}[v]
    combo_sign = -1.0 if fl[0] == "plain" else 1.0   # (-1)^k w g(-x) -+ g(x)
    w = fl[1]
    gw = g.evaluate(omega)

    if v == "full_line":
        singular = 0.0 + 0.0j
    elif v == "full_line_sgn":
        singular = 2.0 * omega ** m * gw * math.log(abs(omega))
    elif v == "full_line_branch":
        singular = -1j * math.pi * _signed_power(omega, m - nu, eng.notes) * gw
    elif v == "full_line_abs":
        singular = (math.pi * math.tan(0.5 * math.pi * nu) * math.copysign(1.0, omega)
                    * omega ** m * gw / abs(omega) ** nu)
    else:
        singular = (-math.pi / math.tan(0.5 * math.pi * nu)
                    * omega ** m * gw / abs(omega) ** nu)

    if even_route:
        eng.notes.append("even-parity reduction")
        if fl[0] == "plain" and v == "full_line":
            series, used, tail = eng.sum_series(
                lambda k: -2.0 * omega ** (2 * k + m + 1) * eng.fp(g, 2 * k + 2, 0.0))
            prefix = 0.0 + 0.0j
            for k in range((m - 1) // 2 + 1):
                prefix += -2.0 * omega ** (2 * k + 1 + 2 * (m // 2) - m) \
                    * eng.prefix_integral(g, 2 * ((m - 1) // 2) - 2 * k)
        elif v == "full_line_sgn":
            series, used, tail = eng.sum_series(
                lambda k: -2.0 * omega ** (2 * k + m) * eng.fp(g, 2 * k + 1, 0.0))
            prefix = 0.0 + 0.0j
            for k in range((m - 2) // 2 + 1):
                prefix += -2.0 * omega ** (2 * k + 2 * ((m + 1) // 2) - m) \
                    * eng.prefix_integral(g, 2 * ((m - 2) // 2) - 2 * k + 1)
        elif v == "full_line_branch":
            half = cmath.exp(-0.5j * math.pi * nu)
            c_even = -2j * math.sin(0.5 * math.pi * nu) * half
            c_odd = -2.0 * math.cos(0.5 * math.pi * nu) * half
            series1, used1, tail1 = eng.sum_series(
                lambda k: c_even * omega ** (2 * k + m) * eng.fp(g, 2 * k + 1, nu))
            series2, used2, tail2 = eng.sum_series(
                lambda k: c_odd * omega ** (2 * k + m + 1) * eng.fp(g, 2 * k + 2, nu))
            series, used, tail = series1 + series2, used1 + used2, tail1 + tail2
            prefix = 0.0 + 0.0j
            for k in range((m - 2) // 2 + 1):
                prefix += c_even * omega ** (2 * k + 2 * ((m + 1) // 2) - m) \
                    * eng.prefix_integral(g, 2 * ((m - 2) // 2) - 2 * k + 1 - nu)
            for k in range((m - 1) // 2 + 1):
                prefix += c_odd * omega ** (2 * k + 1 + 2 * (m // 2) - m) \
                    * eng.prefix_integral(g, 2 * ((m - 1) // 2) - 2 * k - nu)
        elif v == "full_line_abs":
            series, used, tail = eng.sum_series(
                lambda k: -2.0 * omega ** (2 * k + m + 1) * eng.fp(g, 2 * k + 2, nu))
            prefix = 0.0 + 0.0j
            for k in range((m - 1) // 2 + 1):
                prefix += -2.0 * omega ** (2 * k + 1 + 2 * (m // 2) - m) \
                    * eng.prefix_integral(g, 2 * ((m - 1) // 2) - 2 * k - nu)
        else:  # full_line_abs_sgn
            series, used, tail = eng.sum_series(
                lambda k: -2.0 * omega ** (2 * k + m) * eng.fp(g, 2 * k + 1, nu))
            prefix = 0.0 + 0.0j
            for k in range((m - 2) // 2 + 1):
                prefix += -2.0 * omega ** (2 * k + 2 * ((m + 1) // 2) - m) \
                    * eng.prefix_integral(g, 2 * ((m - 2) // 2) - 2 * k + 1 - nu)
        return _report(series, singular, prefix, used, tail, eng.notes)

    # generic route: series over (-1)^k w g(-x) -+ g(x) finite parts
    outer = 1.0 if fl[0] == "plain" else -1.0

    def term(k: int) -> complex:
        fp_neg = eng.fp(gneg, k + 1, nu)
        fp_pos = eng.fp(g, k + 1, nu)
        return outer * omega ** (k + m) * (
            (-1.0) ** k * w * fp_neg + combo_sign * fp_pos)

    series, used, tail = eng.sum_series(term)
    prefix = 0.0 + 0.0j
    for k in range(m):
        def combo(x: np.ndarray, _k=k):
            return ((-1.0) ** (_k + m) * w * g.evaluate(-x)
                    + combo_sign * g.evaluate(x))
        prefix += outer * omega ** k * eng.prefix_integral(g, m - k - 1 - nu, combo)
    return _report(series, singular, prefix, used, tail, eng.notes)


def _report(series: complex, singular: complex, prefix: complex,
            used: int, tail: float, notes: list[str]) -> EvalReport:
    series = complex(series)
    singular = complex(singular)
    prefix = complex(prefix)
    return EvalReport(prefix + series + singular, series, singular, prefix,
                      used, float(tail), notes)


# -- named operations --------------------------------------------------------

def stieltjes(f, nu, omega, a=math.inf, **kw) -> EvalReport:
    return evaluate_transform(TransformSpec("stieltjes", omega, nu, a), f, **kw)


def one_sided(f, nu, omega, a=math.inf, **kw) -> EvalReport:
    return evaluate_transform(TransformSpec("one_sided", omega, nu, a), f, **kw)


def full_line(f, omega, a=math.inf, **kw) -> EvalReport:
    return evaluate_transform(TransformSpec("full_line", omega, 0.0, a), f, **kw)


def full_line_sgn(f, omega, a=math.inf, **kw) -> EvalReport:
    return evaluate_transform(TransformSpec("full_line_sgn", omega, 0.0, a), f, **kw)


def full_line_branch(f, nu, omega, a=math.inf, **kw) -> EvalReport:
    return evaluate_transform(TransformSpec("full_line_branch", omega, nu, a), f, **kw)


def full_line_abs(f, nu, omega, a=math.inf, **kw) -> EvalReport:
    return evaluate_transform(TransformSpec("full_line_abs", omega, nu, a), f, **kw)


def full_line_abs_sgn(f, nu, omega, a=math.inf, **kw) -> EvalReport:
    return evaluate_transform(TransformSpec("full_line_abs_sgn", omega, nu, a), f, **kw)


def sym_omega(f, nu, omega, a=math.inf, **kw) -> EvalReport:
    return evaluate_transform(TransformSpec("sym_omega", omega, nu, a), f, **kw)


def sym_x(f, nu, omega, a=math.inf, **kw) -> EvalReport:
    return evaluate_transform(TransformSpec("sym_x", omega, nu, a), f, **kw)


# -- small-omega leading behavior --------------------------------------------

LEAD_LOG = "log"
LEAD_POWER_LOG = "power_log"
LEAD_CONSTANT = "constant_integral"
LEAD_POWER = "power"


@dataclass(frozen=True)
class LeadingTerm:
    kind: str
    coefficient: complex
    exponent: float

    def evaluate(self, omega: float) -> complex:
        if self.kind == LEAD_LOG:
            return self.coefficient * math.log(abs(omega))
        if self.kind == LEAD_POWER_LOG:
            return self.coefficient * omega ** self.exponent * math.log(abs(omega))
        if self.kind == LEAD_CONSTANT:
            return self.coefficient
        return self.coefficient * abs(omega) ** self.exponent \
            if self.exponent != round(self.exponent) else \
            self.coefficient * omega ** self.exponent


def small_omega_asymptotic(spec: TransformSpec, f: AnalyticFunction,
                           precision: PrecisionConfig | None = None,
                           budget: QuadratureBudget | None = None) -> LeadingTerm:
    """Dominant omega -> 0 term of the transform (tabulated leading laws)."""
    precision = precision or default_precision()
    budget = budget or QuadratureBudget()
    nu, a = spec.nu, spec.a
    v = spec.variant
    m, g = factor_zero(f)
    g0 = complex(g.evaluate(0.0)) if m else complex(f.evaluate(0.0))

    def integ(power: float, combo=None) -> complex:
        fn = combo if combo is not None else (lambda x: g.evaluate(x))

        def integrand(x: np.ndarray):
            return x ** power * fn(x)

        return regular_integral(integrand, 0.0, a, endpoint_nu=max(0.0, -power),
                                budget=budget, tail=g.tail, tail_extra_power=-power)

    def fpv(fn: AnalyticFunction, k: int, nu_: float) -> complex:
        return resolve_fp(fn, k, nu_, a, precision, budget).value

    def out(kind: str, coef: complex, expo: float = 0.0) -> LeadingTerm:
        if abs(coef) < PROVISO_FLOOR:
            raise ProvisoViolated(
                f"leading coefficient {coef} below {PROVISO_FLOOR}; "
                "the leading-term law's non-vanishing proviso fails")
        return LeadingTerm(kind, coef, expo)

    if v == "stieltjes":
        if m == 0:
            if nu == 0.0:
                return out(LEAD_LOG, -g0)
            return out(LEAD_POWER, math.pi / math.sin(math.pi * nu) * g0, -nu)
        return out(LEAD_CONSTANT, fpv(f, 1, nu))
    if v == "one_sided":
        if m == 0:
            if nu == 0.0:
                return out(LEAD_LOG, g0)
            return out(LEAD_POWER, -math.pi / math.tan(math.pi * nu) * g0, -nu)
        return out(LEAD_CONSTANT, -integ(m - 1 - nu))
    if v == "full_line":
        if m == 0 and f.parity != "even":
            fr = f.reflect()
            return out(LEAD_CONSTANT, fpv(fr, 1, 0.0) - fpv(f, 1, 0.0))
        if f.parity == "even" and m == 0:
            return out(LEAD_POWER, -2.0 * fpv(f, 2, 0.0), 1.0)
        if g.parity == "even":
            return out(LEAD_POWER, -2.0 * integ(2 * ((m - 1) // 2)),
                       2 * (m // 2) - m + 1)
        return out(LEAD_CONSTANT,
                   integ(m - 1, lambda x: (-1.0) ** m * g.evaluate(-x) - g.evaluate(x)))
    if v == "full_line_sgn":
        if m == 0:
            return out(LEAD_LOG, 2.0 * g0)
        if g.parity == "even":
            if m == 1:
                # at m = 1 the 2 omega g(omega) ln|omega| singular term beats
                # the omega * finite-part term
                return out(LEAD_POWER_LOG, 2.0 * g0, 1.0)
            return out(LEAD_POWER, -2.0 * integ(2 * ((m - 2) // 2) + 1),
                       2 * ((m + 1) // 2) - m)
        return out(LEAD_CONSTANT,
                   -integ(m - 1, lambda x: (-1.0) ** m * g.evaluate(-x) + g.evaluate(x)))
    if v == "full_line_branch":
        wgt = cmath.exp(-1j * math.pi * nu)
        if m == 0:
            return out(LEAD_POWER, -1j * math.pi * g0, -nu)
        if g.parity == "even":
            half = cmath.exp(-0.5j * math.pi * nu)
            if m % 2 == 1:
                return out(LEAD_CONSTANT,
                           -2.0 * half * math.cos(0.5 * math.pi * nu) * integ(m - nu - 1))
            return out(LEAD_CONSTANT,
                       -2j * half * math.sin(0.5 * math.pi * nu) * integ(m - nu - 1))
        return out(LEAD_CONSTANT,
                   integ(m - nu - 1,
                         lambda x: (-1.0) ** m * wgt * g.evaluate(-x) - g.evaluate(x)))
    if v == "full_line_abs":
        if m == 0:
            return out(LEAD_POWER, math.pi * math.tan(0.5 * math.pi * nu) * g0, -nu)
        if g.parity == "even":
            return out(LEAD_POWER, -2.0 * integ(2 * ((m - 1) // 2) - nu),
                       2 * (m // 2) - m + 1)
        return out(LEAD_CONSTANT,
                   integ(m - nu - 1,
                         lambda x: (-1.0) ** m * g.evaluate(-x) - g.evaluate(x)))
    if v == "full_line_abs_sgn":
        if m == 0:
            return out(LEAD_POWER, -math.pi / math.tan(0.5 * math.pi * nu) * g0, -nu)
        if g.parity == "even":
            if m == 1:
                # omega^{1-nu} singular term dominates the omega finite-part term
                return out(LEAD_POWER,
                           -math.pi / math.tan(0.5 * math.pi * nu) * g0, 1.0 - nu)
            return out(LEAD_POWER, -2.0 * integ(2 * ((m - 2) // 2) + 1 - nu),
                       2 * ((m + 1) // 2) - m)
        return out(LEAD_CONSTANT,
                   -integ(m - nu - 1,
                          lambda x: (-1.0) ** m * g.evaluate(-x) + g.evaluate(x)))
    if v == "sym_omega":
        if nu == 0.0:
            if m == 0:
                if f.parity == "even":
                    return out(LEAD_POWER, -fpv(f, 2, 0.0), 1.0)
                c1 = complex(f.maclaurin(1))
                return out(LEAD_POWER_LOG, c1, 1.0)
            if m == 1:
                return out(LEAD_POWER_LOG, g0, 1.0)
            return out(LEAD_POWER, -integ(m - 2), 1.0)
        if m == 0:
            return out(LEAD_POWER, 0.5 * math.pi * math.tan(0.5 * math.pi * nu) * g0, -nu)
        if m == 1:
            return out(LEAD_POWER, -0.5 * math.pi / math.tan(0.5 * math.pi * nu) * g0,
                       1.0 - nu)
        return out(LEAD_POWER, -integ(m - nu - 2), 1.0)
    if v == "sym_x":
        if nu == 0.0:
            if m == 0:
                return out(LEAD_LOG, g0)
            return out(LEAD_CONSTANT, -integ(m - 1))
        if m == 0:
            return out(LEAD_POWER, -0.5 * math.pi / math.tan(0.5 * math.pi * nu) * g0, -nu)
        return out(LEAD_CONSTANT, -integ(m - nu - 1))
    raise DomainError(f"unknown variant {v!r}")
