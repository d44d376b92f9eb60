import math

import numpy as np
import pytest

from fpint import funcmodel as fm
from fpint import pvoracle as pv


def rel(got, want):
    return abs(got - want) / max(abs(want), 1e-300)


B = pv.QuadratureBudget()


class TestRegular:
    def test_endpoint_half_power(self):
        got = pv.regular_integral(lambda x: x ** -0.5, 0.0, 1.0, endpoint_nu=0.5)
        assert rel(got, 2.0) < 1e-11

    def test_exponential(self):
        f = fm.builtin("exp_decay", a=1.0)
        got = pv.regular_integral(lambda x: np.exp(-x), 0.0, math.inf, tail=f.tail)
        assert rel(got, 1.0) < 1e-10

    def test_quartic_profile(self):
        # int_0^inf dxi/(xi^4 - 2 b xi^2 + 1) = pi/(2 sqrt(2(1-b)))
        f = fm.builtin("rational_quartic", beta=0.5, omega_j=1.0)
        got = pv.regular_integral(f.evaluate, 0.0, math.inf, tail=f.tail)
        assert rel(got, math.pi / (2.0 * math.sqrt(2.0 * 0.5))) < 1e-9


class TestPvLinear:
    def test_symmetric_constant(self):
        got = pv.pv_linear(lambda x: np.ones_like(x), 1.0, 0.0, 2.0)
        assert abs(got) < 1e-11

    def test_even_about_pole(self):
        # h(x) = 3 + (x-w)^2: antisymmetric kernel integrates to zero
        w, d = 1.3, 0.6
        got = pv.pv_linear(lambda x: 3.0 + (x - w) ** 2, w, w - d, w + d)
        assert abs(got) < 1e-11

    def test_exp_decay_reference(self):
        # frozen 20-digit reference
        f = fm.builtin("exp_decay", a=1.0)
        got = pv.pv_linear(lambda x: np.exp(-x), 0.5, 0.0, math.inf, tail=f.tail)
        assert rel(got, 0.27549829855127026213) < 1e-9

    @pytest.mark.parametrize("a_param", [-2.0, -1.0, 1.0, 2.0])
    @pytest.mark.parametrize("omega", [0.5, 1.0, 3.0])
    def test_oscillatory_full_line(self, a_param, omega):
        # PV over the whole line of e^{iax}/(w-x) = -i pi sgn(a) e^{iaw}
        f = fm.builtin("exp_osc", a=a_param)
        got = pv.pv_transform("full_line", f, 0.0, omega, math.inf)
        want = -1j * math.pi * math.copysign(1.0, a_param) * np.exp(1j * a_param * omega)
        assert rel(got, want) < 1e-9

    def test_pole_must_be_interior(self):
        with pytest.raises(pv.DomainError):
            pv.pv_linear(lambda x: np.ones_like(x), 3.0, 0.0, 2.0)


class TestPvQuadratic:
    def test_truncated_constant(self):
        # PV int_0^{2w} w/(w^2-x^2) dx = (1/2) ln 3
        got = pv.pv_quadratic(lambda x: np.ones_like(x), 0.7, 1.4, "omega_over", 0.0)
        assert rel(got, 0.5 * math.log(3.0)) < 1e-11

    def test_exp_decay_against_closed_form(self):
        # sym kernel on exp(-x) at nu=1/2: 1F2-plus-singular closed form
        from fpint.catalog import eval_closed_form
        f = fm.builtin("exp_decay", a=1.0)
        got = pv.pv_quadratic(f.evaluate, 0.3, math.inf, "omega_over", 0.5,
                              tail=f.tail)
        want = eval_closed_form("C.10", {"a": 1.0, "nu": 0.5}, omega=0.3)
        assert rel(got, want) < 1e-8

    def test_mesh_independence(self):
        f = fm.builtin("j0_squared", a=1.0)
        b1 = pv.QuadratureBudget(abs_tol=1e-10, rel_tol=1e-9)
        b2 = pv.QuadratureBudget(abs_tol=1e-12, rel_tol=1e-11)
        v1 = pv.pv_quadratic(f.evaluate, 0.4, math.inf, "x_over", 0.0,
                             budget=b1, tail=f.tail)
        v2 = pv.pv_quadratic(f.evaluate, 0.4, math.inf, "x_over", 0.0,
                             budget=b2, tail=f.tail)
        assert abs(v1 - v2) < 10.0 * b1.rel_tol * max(abs(v2), 1.0)


class TestTails:
    def test_algebraic_tail(self):
        got = pv.tail_integral(lambda x: x ** -3.0, 2.0,
                               fm.TailDecay(fm.TAIL_ALG, power=3.0), B)
        assert rel(got, 0.5 * 2.0 ** -2) < 1e-10

    def test_oscillatory_exp_tail(self):
        # int_T^inf e^{ix}/x dx = E_1(-iT) rotated; frozen reference
        import mpmath as mp
        t0 = 3.0
        tail = fm.TailDecay(fm.TAIL_OSC_ALG, power=0.0, phase_coeff=1.0,
                            phase_power=1.0)
        got = pv.tail_integral(lambda x: np.exp(1j * x) / x, t0, tail, B,
                               extra_power=1.0)
        want = complex(mp.e1(-1j * t0))   # rotate t = -iu in E_1
        assert rel(got, want) < 1e-8

    def test_tail_undeclared(self):
        with pytest.raises(pv.TailNotIntegrable):
            pv.tail_integral(lambda x: 1.0 / x, 1.0, fm.tail_none(), B)
