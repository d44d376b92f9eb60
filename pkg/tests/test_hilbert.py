import math

import numpy as np
import pytest

from fpint import funcmodel as fm
from fpint import hilbert as hb
from fpint import pvoracle as pv
from fpint.errors import ConvergenceDomain, DomainError, ProvisoViolated


def rel(got, want):
    return abs(got - want) / max(abs(want), 1e-300)


class TestStieltjes:
    def test_truncated_constant(self):
        # int_0^a dx/(w+x) = ln((w+a)/w)
        f = fm.builtin("const")
        w, a = 0.35, 1.4
        got = hb.stieltjes(f, 0.0, w, a).value
        assert rel(got, math.log((w + a) / w)) < 1e-10

    def test_exp_nu_half_reference(self):
        # frozen 20-digit quadrature reference
        f = fm.builtin("exp_decay", a=1.0)
        got = hb.stieltjes(f, 0.5, 0.3).value
        assert rel(got, 3.3956620305139279975) < 1e-11

    def test_geometric_truncated(self):
        # int_0^{1/2} dx/((1+x)(0.4+x)) = ln(1.5)/0.6
        f = fm.builtin("inv_linear", c=1.0)
        got = hb.stieltjes(f, 0.0, 0.4, 0.5).value
        assert rel(got, math.log(1.5) / 0.6) < 1e-10


class TestOneSided:
    def test_linear_times_const_truncated(self):
        # PV int_0^a x/(w-x) dx = -a - w ln((a-w)/w)
        f = fm.builtin("sin", a=1.0)   # m = 1, g(0) = 1; use small a so sin ~ x
        w, a = 0.3, 1.0
        got = hb.one_sided(f, 0.0, w, a).value
        want = pv.pv_transform("one_sided", f, 0.0, w, a)
        assert rel(got, want) < 1e-10

    def test_exp_nu_half_pv_reference(self):
        f = fm.builtin("exp_decay", a=1.0)
        got = hb.one_sided(f, 0.5, 0.3).value
        assert rel(got, 2.9141723823688594338) < 1e-11

    def test_report_splits(self):
        f = fm.builtin("power_gaussian", m=2, a=1.0)
        rep = hb.one_sided(f, 0.0, 0.4)
        assert rep.value == rep.convergent_prefix + rep.finite_part_sum \
            + rep.singular_contribution
        assert rep.convergent_prefix != 0.0

    def test_margin_rejection(self):
        f = fm.builtin("inv_linear", c=1.0)     # rho0 = 1
        with pytest.raises(ConvergenceDomain):
            hb.one_sided(f, 0.0, 0.999, math.inf)


class TestFullLine:
    @pytest.mark.parametrize("a_param", [-2.0, -1.0, 0.5, 1.0, 2.0])
    def test_exp_osc_identity(self, a_param):
        f = fm.builtin("exp_osc", a=a_param)
        for w in [0.1, 1.0, 5.0]:
            got = hb.full_line(f, w).value
            want = -1j * math.pi * math.copysign(1.0, a_param) * np.exp(1j * a_param * w)
            assert rel(got, want) < 1e-9

    def test_even_at_zero_omega(self):
        f = fm.builtin("gaussian", a=1.0)
        assert hb.full_line(f, 0.0).value == 0.0

    def test_odd_gaussian_pv_reference(self):
        # frozen 20-digit PV of x e^{-x^2}/(0.7 - x) over the line
        f = fm.builtin("power_gaussian", m=1, a=1.0)
        got = hb.full_line(f, 0.7).value
        assert rel(got, -0.5056710150922638218) < 1e-10

    def test_split_identity(self):
        # full line = Stieltjes of the reflection + one-sided part
        for name, kw in [("gaussian", dict(a=1.0)), ("exp_osc", dict(a=1.0))]:
            f = fm.builtin(name, **kw)
            for w in [0.2, 0.8]:
                lhs = hb.full_line(f, w).value
                rhs = hb.stieltjes(f.reflect(), 0.0, w).value \
                    + hb.one_sided(f, 0.0, w).value
                assert rel(lhs, rhs) < 1e-10


class TestFullLineSgn:
    def test_truncated_constant_closed_form(self):
        # PV int_{-a}^a sgn(x)/(w-x) dx = 2 ln w - ln|a^2 - w^2|
        f = fm.builtin("const")
        w, a = 0.45, 1.3
        got = hb.full_line_sgn(f, w, a).value
        want = 2.0 * math.log(w) - math.log(abs(a * a - w * w))
        assert rel(got, want) < 1e-10

    def test_gaussian_reference(self):
        f = fm.builtin("gaussian", a=1.0)
        got = hb.full_line_sgn(f, 0.5).value
        assert rel(got, -0.42253311936881487317) < 1e-10


class TestFullLineNu:
    def test_branch_truncated_constant(self):
        # frozen quadrature reference with the upper-branch weight
        f = fm.builtin("const")
        got = hb.full_line_branch(f, 0.5, 0.25, 1.0).value
        want = 2.1972245773362193828 - 4.4285948711763620121j
        assert rel(got, want) < 1e-10

    def test_branch_requires_nu(self):
        f = fm.builtin("gaussian", a=1.0)
        with pytest.raises(DomainError):
            hb.full_line_branch(f, 0.0, 0.3)

    def test_negative_omega_notes(self):
        f = fm.builtin("gaussian", a=1.0)
        rep = hb.full_line_branch(f, 0.5, -0.5)
        assert any("branch" in note for note in rep.route_notes)
        want = pv.pv_transform("full_line_branch", f, 0.5, -0.5, math.inf)
        assert rel(rep.value, want) < 1e-9

    @pytest.mark.parametrize("variant", ["full_line_abs", "full_line_abs_sgn"])
    def test_abs_exp_osc_vs_oracle(self, variant):
        f = fm.builtin("exp_osc", a=1.0)
        spec = hb.TransformSpec(variant, 0.5, 0.3, math.inf)
        got = hb.evaluate_transform(spec, f).value
        want = pv.pv_transform(variant, f, 0.3, 0.5, math.inf)
        assert rel(got, want) < 1e-8

    def test_abs_even_reduction_identity(self):
        # for even f: full-line |x|^-nu kernel equals twice the omega-kernel
        # half-line form (the parity collapse of the sgn-split integrals)
        f = fm.builtin("gaussian", a=1.0)
        nu, w = 0.4, 0.5
        lhs = hb.full_line_abs(f, nu, w).value
        rhs = 2.0 * hb.sym_omega(f, nu, w).value
        assert rel(lhs, rhs) < 1e-9

    def test_abs_sgn_even_reduction_identity(self):
        f = fm.builtin("gaussian", a=1.0)
        nu, w = 0.4, 0.5
        lhs = hb.full_line_abs_sgn(f, nu, w).value
        rhs = 2.0 * hb.sym_x(f, nu, w).value
        assert rel(lhs, rhs) < 1e-9


class TestSymKernels:
    def test_even_singular_vanishes_exactly(self):
        f = fm.builtin("gaussian", a=1.0)
        rep = hb.sym_omega(f, 0.0, 0.4)
        assert rep.singular_contribution == 0.0

    def test_decomposition_identity(self):
        # omega-kernel at nu=0 is half the Stieltjes plus one-sided sum
        for name, kw in [("exp_decay", dict(a=1.0)), ("fermi", dict(a=1.0)),
                         ("exp_decay_shift", dict(a=1.0, c=1.5))]:
            f = fm.builtin(name, **kw)
            for w in [0.15, 0.45]:
                lhs = hb.sym_omega(f, 0.0, w).value
                rhs = 0.5 * (hb.stieltjes(f, 0.0, w).value
                             + hb.one_sided(f, 0.0, w).value)
                assert rel(lhs, rhs) < 1e-10

    def test_sym_x_j0_closed_form(self):
        from fpint.catalog import eval_closed_form
        f = fm.builtin("j0_squared", a=1.0)
        got = hb.sym_x(f, 0.0, 0.4).value
        want = eval_closed_form("C.6", {"a": 1.0}, omega=0.4)
        assert rel(got, want) < 1e-8

    def test_sym_omega_exp_closed_form(self):
        from fpint.catalog import eval_closed_form
        f = fm.builtin("exp_decay", a=1.0)
        got = hb.sym_omega(f, 0.25, 0.3).value
        want = eval_closed_form("C.10", {"a": 1.0, "nu": 0.25}, omega=0.3)
        assert rel(got, want) < 1e-10

    def test_sym_x_exp_closed_form(self):
        from fpint.catalog import eval_closed_form
        f = fm.builtin("exp_decay", a=1.0)
        got = hb.sym_x(f, 0.25, 0.3).value
        want = eval_closed_form("C.11", {"a": 1.0, "nu": 0.25}, omega=0.3)
        assert rel(got, want) < 1e-10

    def test_positive_omega_required(self):
        f = fm.builtin("gaussian", a=1.0)
        with pytest.raises(DomainError):
            hb.sym_omega(f, 0.0, -0.3)


class TestParityReduction:
    @pytest.mark.parametrize("variant,nu", [
        ("full_line", 0.0), ("full_line_sgn", 0.0), ("full_line_branch", 0.4),
        ("full_line_abs", 0.4), ("full_line_abs_sgn", 0.4),
    ])
    def test_even_route_matches_generic(self, variant, nu):
        f = fm.builtin("gaussian", a=1.0)
        spec = hb.TransformSpec(variant, 0.5, nu, math.inf)
        fast = hb.evaluate_transform(spec, f).value
        generic = hb.evaluate_transform(spec, f, force_generic_parity=True).value
        assert rel(fast, generic) < 1e-10

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_zero_order_pv_match(self, m):
        # x^m g routing against the brute-force oracle
        f = fm.builtin("power_gaussian", m=m, a=1.0)
        for variant, nu in [("one_sided", 0.0), ("one_sided", 0.5),
                            ("sym_omega", 0.0), ("sym_omega", 0.5),
                            ("sym_x", 0.3), ("sym_x", 0.0),
                            ("full_line", 0.0), ("full_line_sgn", 0.0),
                            ("full_line_abs", 0.3), ("full_line_abs_sgn", 0.3),
                            ("full_line_branch", 0.3)]:
            spec = hb.TransformSpec(variant, 0.6, nu, math.inf)
            got = hb.evaluate_transform(spec, f).value
            want = pv.pv_transform(variant, f, nu, 0.6, math.inf)
            assert rel(got, want) < 1e-8, (variant, nu, m)


class TestOracleGrid:
    """Every variant against the quadrature oracle on a standard grid."""

    BUILTINS = [("exp_decay", dict(a=1.0)), ("gaussian", dict(a=1.0)),
                ("sqrt_inv_quad", dict(a=1.5)), ("fermi", dict(a=1.0)),
                ("power_gaussian", dict(m=1, a=1.0))]

    @pytest.mark.parametrize("variant,nu", [
        ("stieltjes", 0.0), ("stieltjes", 0.4), ("one_sided", 0.0),
        ("one_sided", 0.4), ("full_line", 0.0), ("full_line_sgn", 0.0),
        ("full_line_branch", 0.4), ("full_line_abs", 0.4),
        ("full_line_abs_sgn", 0.4), ("sym_omega", 0.0), ("sym_omega", 0.4),
        ("sym_x", 0.0), ("sym_x", 0.4),
    ])
    def test_grid(self, variant, nu):
        for name, kw in self.BUILTINS:
            f = fm.builtin(name, **kw)
            if variant.startswith("full_line") and f.tail_neg.kind == "none":
                continue          # one-sided-only integrands
            scale = min(f.rho0, 1.0)
            for frac in (0.1, 0.3, 0.5):
                w = frac * scale
                got = hb.evaluate_transform(
                    hb.TransformSpec(variant, w, nu, math.inf), f).value
                want = pv.pv_transform(variant, f, nu, w, math.inf)
                assert rel(got, want) < 1e-6, (variant, nu, name, w)


class TestLargeOmegaEntire:
    def test_exp_decay_far_from_origin(self):
        # entire f admits every omega; series must stay accurate at omega = 10
        f = fm.builtin("exp_decay", a=1.0)
        got = hb.one_sided(f, 0.0, 10.0).value
        want = pv.pv_transform("one_sided", f, 0.0, 10.0, math.inf)
        assert rel(got, want) < 1e-9

    def test_exp_osc_strong_oscillation(self):
        f = fm.builtin("exp_osc", a=0.8)
        got = hb.full_line(f, 8.0).value
        want = -1j * math.pi * np.exp(1j * 0.8 * 8.0)
        assert rel(got, want) < 1e-9

    def test_gaussian_refuses_when_binary64_cannot(self):
        # the omega-series transient dwarfs the sum by ~5e13 at omega = 6:
        # an honest refusal, not a silent garbage value
        f = fm.builtin("gaussian", a=1.0)
        with pytest.raises(ConvergenceDomain):
            hb.one_sided(f, 0.0, 6.0)

    def test_gaussian_moderate_omega_accuracy(self):
        f = fm.builtin("gaussian", a=1.0)
        rep = hb.one_sided(f, 0.0, 4.0)
        want = pv.pv_transform("one_sided", f, 0.0, 4.0, math.inf)
        assert rel(rep.value, want) < 1e-6

    def test_gaussian_notes_heavy_cancellation(self):
        # ~12 digits of transient cancellation at omega = 5: still usable,
        # flagged in the route notes, and honest against the oracle
        f = fm.builtin("gaussian", a=1.0)
        rep = hb.one_sided(f, 0.0, 5.0)
        assert any("cancellation" in n for n in rep.route_notes)
        want = pv.pv_transform("one_sided", f, 0.0, 5.0, math.inf)
        assert rel(rep.value, want) < 1e-3


class TestRealInRealOut:
    @pytest.mark.parametrize("variant,nu", [
        ("one_sided", 0.0), ("one_sided", 0.4), ("full_line", 0.0),
        ("full_line_sgn", 0.0), ("full_line_abs", 0.4),
        ("full_line_abs_sgn", 0.4), ("sym_omega", 0.4), ("sym_x", 0.4),
    ])
    def test_real_output(self, variant, nu):
        f = fm.builtin("gaussian", a=1.0)
        spec = hb.TransformSpec(variant, 0.5, nu, math.inf)
        val = hb.evaluate_transform(spec, f).value
        assert abs(val.imag) <= 1e-12 * max(abs(val), 1e-12)


class TestSmallOmega:
    def test_one_sided_log(self):
        f = fm.builtin("exp_decay", a=1.0)
        lead = hb.small_omega_asymptotic(hb.TransformSpec("one_sided", 1e-3), f)
        assert lead.kind == hb.LEAD_LOG
        assert rel(lead.coefficient, 1.0) < 1e-12

    def test_sym_x_even_log(self):
        f = fm.builtin("gaussian", a=1.0)
        lead = hb.small_omega_asymptotic(hb.TransformSpec("sym_x", 1e-3), f)
        assert lead.kind == hb.LEAD_LOG
        assert rel(lead.coefficient, 1.0) < 1e-12

    def test_full_line_even_power(self):
        from fpint.finitepart import resolve_fp
        f = fm.builtin("gaussian", a=1.0)
        lead = hb.small_omega_asymptotic(hb.TransformSpec("full_line", 1e-3), f)
        assert lead.kind == hb.LEAD_POWER and lead.exponent == 1.0
        want = -2.0 * resolve_fp(f, 2, 0.0, math.inf).value
        assert rel(lead.coefficient, want) < 1e-10

    def test_proviso_violated(self):
        # tuned even combination with vanishing ffp f/x^2: (1 + 2x^2) e^{-x^2}
        f = fm.linear_combination(1.0, fm.builtin("gaussian", a=1.0),
                                  2.0, fm.builtin("power_gaussian", m=2, a=1.0))
        with pytest.raises(ProvisoViolated):
            hb.small_omega_asymptotic(hb.TransformSpec("full_line", 1e-3), f)

    def test_ratio_convergence_one_sided(self):
        f = fm.builtin("gaussian", a=1.0)
        spec = hb.TransformSpec("one_sided", 1e-3)
        lead = hb.small_omega_asymptotic(spec, f)
        errs = []
        for w in [1e-2, 1e-3, 1e-4]:
            val = hb.one_sided(f, 0.0, w).value
            errs.append(abs(val / lead.evaluate(w) - 1.0))
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] <= 0.05

    @pytest.mark.parametrize("variant,nu,m,kind", [
        ("stieltjes", 0.4, 1, hb.LEAD_CONSTANT),
        ("one_sided", 0.0, 2, hb.LEAD_CONSTANT),
        ("one_sided", 0.5, 1, hb.LEAD_CONSTANT),
        ("full_line", 0.0, 1, hb.LEAD_POWER),
        ("full_line", 0.0, 2, hb.LEAD_POWER),
        ("full_line_sgn", 0.0, 1, hb.LEAD_POWER_LOG),
        ("full_line_sgn", 0.0, 2, hb.LEAD_POWER),
        ("full_line_branch", 0.4, 1, hb.LEAD_CONSTANT),
        ("full_line_branch", 0.4, 2, hb.LEAD_CONSTANT),
        ("full_line_abs", 0.4, 1, hb.LEAD_POWER),
        ("full_line_abs_sgn", 0.4, 1, hb.LEAD_POWER),
        ("full_line_abs_sgn", 0.4, 2, hb.LEAD_POWER),
        ("sym_omega", 0.0, 1, hb.LEAD_POWER_LOG),
        ("sym_omega", 0.0, 2, hb.LEAD_POWER),
        ("sym_omega", 0.4, 1, hb.LEAD_POWER),
        ("sym_x", 0.0, 1, hb.LEAD_CONSTANT),
        ("sym_x", 0.4, 1, hb.LEAD_CONSTANT),
    ])
    def test_zero_order_branches_ratio(self, variant, nu, m, kind):
        # every m-dependent case of the dominant-term table must actually
        # dominate: |transform/leading - 1| decreasing, final within 0.05
        f = fm.builtin("power_gaussian", m=m, a=1.0)
        lead = hb.small_omega_asymptotic(hb.TransformSpec(variant, 1e-3, nu), f)
        assert lead.kind == kind
        errs = []
        for w in (1e-2, 1e-3, 1e-4):
            val = hb.evaluate_transform(hb.TransformSpec(variant, w, nu), f).value
            errs.append(abs(val / lead.evaluate(w) - 1.0))
        assert errs[2] <= 0.05, errs
        assert errs[0] > errs[2], errs
