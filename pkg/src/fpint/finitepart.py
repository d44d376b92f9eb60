"""Finite parts ffp_0^a f(x) x^-(k+nu) dx.

Three routes: term-by-term Maclaurin extraction (the canonical construction
with the diverging eps-powers and log eps dropped), tabulated closed forms
(dtable / the quartic family), and an independent numeric eps-extraction
oracle that fits and removes the known divergent powers from int_eps^a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import dtable
from . import specfun as sf
from .errors import (DomainError, FitIllConditioned, NoConvergence,
                     TailNotIntegrable)
from .funcmodel import AnalyticFunction, TailDecay
from .precision import CONSECUTIVE_SMALL_TERMS, PrecisionConfig, default_precision
from .pvoracle import QuadratureBudget, adaptive_quad, tail_integral

NU_SNAP = 1e-6
EPS_GRID_LEN = 18
EPS_LADDER_FLOOR = -6.5
CONDITION_CAP = 1e10          # cap on the divergent-model design matrix
EXTENDED_CONDITION_CAP = 1e15  # guard on the ladder-augmented matrix


def snap_nu(nu: float) -> float:
    """Snap nu within 1e-6 of 0 to the log path; reject nu within 1e-6 of 1."""
    if nu < 0.0 or nu >= 1.0:
        raise DomainError(f"nu must lie in [0, 1), got {nu}")
    if nu < NU_SNAP:
        return 0.0
    if nu > 1.0 - NU_SNAP:
        raise DomainError(
            f"nu={nu} is within {NU_SNAP} of 1; re-index with k+1 and nu-1 instead")
    return nu


@dataclass(frozen=True)
class FpKernel:
    """Kernel x^-(k+nu) on (0, upper]; k integer, 0 <= nu < 1."""

    k: int
    nu: float = 0.0
    upper: float = math.inf

    def __post_init__(self) -> None:
        object.__setattr__(self, "nu", snap_nu(self.nu))
        if int(self.k) != self.k:
            raise DomainError("k must be an integer")
        object.__setattr__(self, "k", int(self.k))
        if self.k + self.nu <= 0.0:
            raise DomainError("k + nu must be positive (else the plain integral applies)")
        if self.nu == 0.0 and self.k < 1:
            raise DomainError("nu = 0 requires k >= 1")
        if not self.upper > 0.0:
            raise DomainError("upper limit must be positive")

    @property
    def exponent(self) -> float:
        return self.k + self.nu


@dataclass
class FpValue:
    value: complex
    route: str
    terms_used: int = 0
    tail_estimate: float = 0.0
    cancellation: float = 1.0     # peak intermediate magnitude over |value|
    notes: list[str] = field(default_factory=list)


def split_radius(f: AnalyticFunction, k: int) -> float:
    """Series/tail split point for the generic finite-part routes.

    rho0/2 suffices for mild kernels, but for steep ones the two halves grow
    like (rho0/a0)^k and cancel; pushing the split toward rho0 as 1 - 7/k
    keeps the cancellation below ~e^7 regardless of k.
    """
    if math.isfinite(f.rho0):
        return f.rho0 * max(0.5, min(0.95, 1.0 - 7.0 / max(k, 1)))
    return 1.0


def _series_term(c: complex, a: float, ln_a: float, expo: float) -> complex:
    """c * a**expo with log-space fallback outside the float range."""
    mag = expo * ln_a
    if abs(mag) < 600.0:
        return c * a ** expo
    if c == 0.0:
        return 0.0 + 0.0j
    ln_t = math.log(abs(c)) + mag
    if ln_t > 700.0:
        raise NoConvergence(
            f"series weight a^{expo:g} with a={a:g} exceeds the float range")
    return (c / abs(c)) * math.exp(ln_t)


def _series_on(f: AnalyticFunction, a: float, k: int, nu: float,
               precision: PrecisionConfig) -> tuple[complex, int, float]:
    """sum_n c_n a^{n-k-nu+1}/(n-k-nu+1), log weight at n = k-1 when nu = 0."""
    e = k + nu
    ln_a = math.log(a)
    # a zero of order m contributes m leading zero terms; the small-term stop
    # must not fire before real mass has arrived
    n_min = f.zero_order + k + 2
    total = 0.0 + 0.0j
    peak = 0.0
    peak_term = 0.0
    small = 0
    last = 0.0
    for n in range(precision.max_terms):
        c = f.maclaurin(n)
        if nu == 0.0 and n == k - 1:
            term = c * ln_a
        else:
            term = _series_term(c, a, ln_a, n - e + 1.0) / (n - e + 1.0)
        total += term
        peak = max(peak, abs(total))
        peak_term = max(peak_term, abs(term))
        last = abs(term)
        if last <= precision.rel_tol * max(abs(total), 1e-3 * peak, 1e-300):
            small += 1
            if small >= CONSECUTIVE_SMALL_TERMS and n >= n_min:
                return total, n + 1, last, peak_term
        else:
            small = 0
    raise NoConvergence(
        f"finite-part series for {f.name} (k={k}, nu={nu:g}, a={a:g}) "
        f"did not converge in {precision.max_terms} terms")


def fp_series_finite(f: AnalyticFunction, kernel: FpKernel,
                     precision: PrecisionConfig | None = None,
                     budget: QuadratureBudget | None = None,
                     scale_hint: float | None = None) -> FpValue:
    """Finite part over [0, a], a finite, by Maclaurin extraction.

    When a exceeds the series' safe split point the integral splits and
    [a_split, a] is handled by ordinary quadrature (integrand regular there).
    The split point honors scale_hint (the caller's omega scale): the halves
    of a split cancel like (omega/a_split)^k, so the series must reach past
    the caller's expansion point.
    """
    precision = precision or default_precision()
    budget = budget or QuadratureBudget()
    a = kernel.upper
    if not math.isfinite(a):
        raise DomainError("fp_series_finite needs a finite upper limit")
    k, nu = kernel.k, kernel.nu
    base = split_radius(f, k)
    if not math.isfinite(f.rho0) and scale_hint is not None:
        base = max(base, 1.25 * min(scale_hint, a))
    a_split = min(a, base)
    value, terms, tail, peak_term = _series_on(f, a_split, k, nu, precision)
    route = "series"
    quad_mag = 0.0
    if a_split < a:
        e = kernel.exponent

        def integrand(x: np.ndarray):
            return f.evaluate(x) * x ** (-e)

        piece = adaptive_quad(integrand, a_split, a, budget)
        value += piece
        quad_mag = abs(piece)
        route = "split_tail"
    cancel = (peak_term + quad_mag) / max(abs(value), 1e-300)
    return FpValue(value, route, terms, tail, max(cancel, 1.0))


def fp_infinite(f: AnalyticFunction, kernel: FpKernel,
                precision: PrecisionConfig | None = None,
                budget: QuadratureBudget | None = None,
                scale_hint: float | None = None) -> FpValue:
    """Finite part over [0, inf): series piece on [0, a0] plus a convergent tail.

    scale_hint (the caller's omega scale) pushes the split point outward for
    entire f, keeping the series/tail cancellation below the caller's powers.
    """
    precision = precision or default_precision()
    budget = budget or QuadratureBudget()
    if math.isfinite(kernel.upper):
        raise DomainError("fp_infinite expects upper = inf")
    e = kernel.exponent
    if not f.tail.admits_inverse_power(e):
        raise TailNotIntegrable(
            f"{f.name}: declared tail ({f.tail.kind}) does not admit x^-{e:g} at infinity")
    a0 = split_radius(f, kernel.k)
    if math.isfinite(f.rho0):
        a0 = min(a0, 1.0) if kernel.k <= 14 else a0
    elif scale_hint is not None:
        a0 = max(a0, 1.25 * scale_hint)
    head, terms, tail_est, peak_term = _series_on(f, a0, kernel.k, kernel.nu, precision)

    def integrand(x: np.ndarray):
        return f.evaluate(x) * x ** (-e)

    # aim the tail tolerance at the tail's own scale: steep kernels make the
    # tail tiny, and a caller weighting these finite parts by omega^k cannot
    # afford a fixed absolute error floor
    probe = abs(complex(np.asarray(f.evaluate(np.array([a0])))[0]))
    t_scale = probe * a0 ** (1.0 - e) / max(e - 1.0, 1.0)
    tail_budget = replace(budget, abs_tol=max(
        min(budget.abs_tol, budget.rel_tol * t_scale), 1e-250))
    tail_val = tail_integral(integrand, a0, f.tail, tail_budget, extra_power=e)
    value = head + tail_val
    cancel = (peak_term + abs(tail_val)) / max(abs(value), 1e-300)
    return FpValue(value, "split_tail", terms, tail_est, max(cancel, 1.0))


def fp_exp_osc(a: float, k: int) -> complex:
    """Closed form of ffp_0^inf e^{iax} x^-(k+1) dx for real a != 0, k >= 0."""
    if a == 0.0:
        raise DomainError("a must be nonzero")
    if k < 0 or int(k) != k:
        raise DomainError("k must be a non-negative integer")
    return (-((1j * a) ** k) / math.factorial(k)
            * (math.log(abs(a)) - 0.5j * math.pi * math.copysign(1.0, a)
               - sf.digamma(k + 1.0)))


def _quartic_binomial_sum(k: int, two_beta: float) -> float:
    total = 0.0
    for n in range(k // 2 + 1):
        total += (-1.0) ** n * math.comb(k - n, n) * two_beta ** (k - 2 * n)
    return total


def fp_quartic(beta: float, omega_j: float, k: int, method: str = "auto") -> float:
    """ffp_0^inf xi^{-2k-2} / (xi^4 - 2 beta w^2 xi^2 + w^4) d xi, beta < 1.

    method: 'three_branch' (trig / real-root forms), 'unified' (binomial-sum
    form), or 'auto' (stable branch per beta; the unified form is reserved for
    the branch boundaries beta ~ 0 and beta ~ -1 where the trig forms degrade).
    """
    if beta >= 1.0:
        raise DomainError("fp_quartic needs beta < 1")
    if omega_j <= 0.0:
        raise DomainError("fp_quartic needs omega_j > 0")
    if k < 0 or int(k) != k:
        raise DomainError("k must be a non-negative integer")
    wpow = omega_j ** (-(2 * k + 5))
    if method == "unified" or (method == "auto"
                               and (abs(beta) < 1e-8 or abs(beta + 1.0) < 1e-8)):
        s_k = _quartic_binomial_sum(k, 2.0 * beta)
        s_k1 = _quartic_binomial_sum(k + 1, 2.0 * beta)
        return math.pi * wpow / (2.0 * math.sqrt(2.0 * (1.0 - beta))) * (s_k1 - s_k)
    if method not in ("auto", "three_branch"):
        raise DomainError(f"unknown method {method!r}")
    if beta > -1.0:
        # both signs of beta collapse onto one expression via atan2
        phi = math.atan2(math.sqrt(1.0 - beta * beta), beta)
        return 0.5 * math.pi * wpow * math.cos(phi * (k + 1.5)) / math.sin(phi)
    if beta == -1.0:
        s_k = _quartic_binomial_sum(k, -2.0)
        s_k1 = _quartic_binomial_sum(k + 1, -2.0)
        return math.pi * wpow / (2.0 * math.sqrt(4.0)) * (s_k1 - s_k)
    root = math.sqrt(beta * beta - 1.0)
    a_big = -beta + root
    b_small = -beta - root
    return ((-1.0) ** k * math.pi * wpow / (4.0 * root)
            * (a_big ** (-(k + 1.5)) - b_small ** (-(k + 1.5))))


def fp_catalog(item_id: str, **params) -> complex:
    """Evaluate a tabulated half-line finite part by its table id (D.*)."""
    item = dtable.get_item(item_id)
    return item.evaluate(**params)


def fp_epsilon_oracle(f_eval, kernel: FpKernel,
                      precision: PrecisionConfig | None = None,
                      budget: QuadratureBudget | None = None,
                      tail: TailDecay | None = None,
                      split: float = 1.0,
                      eps0: float | None = None,
                      n_eps: int = EPS_GRID_LEN) -> FpValue:
    """Numeric finite part from I(eps) = int_eps^a f x^-(k+nu) dx.

    I(eps) is fitted to c0 + sum_j b_j eps^-(k+nu-j) (+ b_log ln eps when
    nu = 0) over a geometric eps grid by weighted least squares; c0 is the
    finite part.  Uses only point values of f - independent of the Maclaurin
    routes it cross-checks.  Infinite upper limits split at `split` (the
    divergence lives at 0) and need a declared tail.

    The fitted exponent set is the kernel ladder k+nu-1-j continued below
    zero: the vanishing remainder powers are kernel-known too, and dropping
    them contaminates c0 at the coarse end of the grid.
    """
    precision = precision or default_precision()
    budget = budget or QuadratureBudget()
    k, nu = kernel.k, kernel.nu
    e = kernel.exponent
    a = kernel.upper
    tail_part = 0.0 + 0.0j
    if not math.isfinite(a):
        if tail is None:
            raise TailNotIntegrable("infinite upper limit requires a declared tail")
        a = split

        def tail_integrand(x: np.ndarray):
            return np.asarray(f_eval(x)) * x ** (-e)

        tail_part = tail_integral(tail_integrand, a, tail, budget, extra_power=e)

    powers = []
    p = e - 1.0
    while p > EPS_LADDER_FLOOR:
        if abs(p) > 1e-9:
            powers.append(p)
        p -= 1.0
    n_cols = 1 + len(powers) + (1 if nu == 0.0 else 0)
    n_eps = max(n_eps, n_cols + 5)

    eps0 = eps0 if eps0 is not None else a / 2.0
    eps = np.array([eps0 * 2.0 ** (-j) for j in range(n_eps)])

    inner = QuadratureBudget(abs_tol=1e-14, rel_tol=5e-15,
                             max_subdivisions=budget.max_subdivisions)

    def log_integrand(u: np.ndarray):
        x = np.exp(u)
        return np.asarray(f_eval(x)) * np.exp(u * (1.0 - e))

    vals = np.empty(n_eps, dtype=complex)
    acc = 0.0 + 0.0j
    prev = math.log(a)
    for j in range(n_eps):
        lo = math.log(eps[j])
        acc += adaptive_quad(log_integrand, lo, prev, inner)
        prev = lo
        vals[j] = acc

    weights = 1.0 / np.maximum(np.abs(vals), 1e-30)

    def scaled_design(power_list: list[float]) -> np.ndarray:
        cols = [np.ones_like(eps)]
        cols += [eps ** (-q) for q in power_list]
        if nu == 0.0:
            cols.append(np.log(eps))
        dw = np.column_stack(cols) * weights[:, None]
        norms = np.linalg.norm(dw, axis=0)
        norms[norms == 0.0] = 1.0
        return dw / norms, norms

    # the divergent-only model matrix carries the hard condition cap
    dn_spec, _ = scaled_design([q for q in powers if q > 0])
    cond_spec = np.linalg.cond(dn_spec)
    if cond_spec > CONDITION_CAP:
        raise FitIllConditioned(
            f"divergent-model design condition {cond_spec:.3g} exceeds {CONDITION_CAP:g}")
    dn, scale = scaled_design(powers)
    cond = np.linalg.cond(dn)
    if cond > EXTENDED_CONDITION_CAP:
        raise FitIllConditioned(
            f"ladder-augmented design condition {cond:.3g} exceeds "
            f"{EXTENDED_CONDITION_CAP:g}")
    rhs = vals * weights
    coef, *_ = np.linalg.lstsq(dn, rhs, rcond=None)
    coef = coef / scale
    resid = float(np.max(np.abs(dn @ (coef * scale) - rhs)))
    c0 = complex(coef[0])
    return FpValue(c0 + tail_part, "epsilon_oracle", n_eps, resid)


def resolve_fp(f: AnalyticFunction, k: int, nu: float, upper: float,
               precision: PrecisionConfig | None = None,
               budget: QuadratureBudget | None = None,
               use_hook: bool = True,
               scale_hint: float | None = None) -> FpValue:
    """Finite part by the best available route: closed form, else series."""
    nu = snap_nu(nu)
    if use_hook and f.fp_hook is not None:
        val = f.fp_hook(k, nu, upper)
        if val is not None:
            return FpValue(complex(val), "closed_form", 1, 0.0)
    kernel = FpKernel(k, nu, upper)
    if math.isfinite(upper):
        return fp_series_finite(f, kernel, precision, budget, scale_hint=scale_hint)
    return fp_infinite(f, kernel, precision, budget, scale_hint=scale_hint)
