"""Equilibrium layer: Chebyshev h_V data, edge maps, contour checks.

Closed-form references: for V = x^2 everything is classical (semicircle,
ell = 1 + ln2); for the quartic family V = (1-3c) x^2 + c x^4 the density
closes as h_V = (1/pi)(1 - c + 2 c x^2) with ell = ln2 + (3/4 - c/2 + ...)
evaluated at c = 1/5 below; the asymmetric sextic V6 exercises every
left/right-distinct path and is checked against the mpmath pv oracle.
"""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from edgewise import equilibrium as eq
from edgewise.errors import DomainError, ModelRejectionError, RangeError

from .oracles import (
    mp_density_integral,
    mp_equilibrium_h,
    mp_log_potential,
)

S2 = math.sqrt(2.0)
V2 = eq.potential([0, 0, 1])
# (1-3c) x^2 + c x^4 at c = 1/5
V4 = eq.potential([0, 0, 0.4, 0, 0.2])
V6 = eq.potential([0, 0, 5 / 8, 1 / 10, 0, -1 / 25, 1 / 20])


# ---------------------------------------------------------------------------
# compute_equilibrium

def test_quadratic_closed_forms():
    d = eq.compute_equilibrium(V2)
    assert len(d.hv_cheb) == 1
    assert d.hv_cheb[0] == pytest.approx(1.0 / math.pi, abs=1e-15)
    assert d.ell == pytest.approx(1.0 + math.log(2.0), abs=1e-14)
    assert d.tau == pytest.approx(2.0 ** 0.75, abs=1e-14)
    assert d.normalization_defect < 1e-14
    assert d.h(S2) == pytest.approx(1.0 / math.pi, abs=1e-15)
    assert d.h(-S2) == pytest.approx(1.0 / math.pi, abs=1e-15)


def test_quartic_closed_forms():
    c = 0.2
    d = eq.compute_equilibrium(V4)
    xs = np.linspace(-S2, S2, 11)
    assert np.max(np.abs(d.h(xs) - (1 - c + 2 * c * xs ** 2) / math.pi)) < 1e-14
    assert d.ell == pytest.approx(math.log(2.0) + 0.7, abs=1e-13)
    assert d.tau == pytest.approx(math.pi * (1.6 / math.pi) * 2 ** 0.75, abs=1e-13)
    # derivative data feeding the conformal maps
    assert d.h_deriv(S2) == pytest.approx(0.8 * S2 / math.pi, abs=1e-13)
    assert d.h_deriv(S2, 2) == pytest.approx(0.8 / math.pi, abs=1e-13)


def test_sextic_matches_pv_oracle():
    d = eq.compute_equilibrium(V6)
    assert d.normalization_defect < 1e-12
    for x in (-1.0, 0.3, 1.2):
        assert d.h(x) == pytest.approx(
            mp_equilibrium_h(V6.coeffs, x), abs=1e-12)
    # frozen edge values (asymmetric on purpose)
    assert d.h(-S2) == pytest.approx(0.6245660245334168, abs=1e-12)
    assert d.h(S2) == pytest.approx(0.4895185771098508, abs=1e-12)


def test_density_mass_is_one():
    for V in (V2, V4, V6):
        d = eq.compute_equilibrium(V)
        assert mp_density_integral(d.hv_cheb, -S2, S2) == pytest.approx(
            1.0, abs=1e-12)


def test_not_supported_on_e_rejected():
    with pytest.raises(ModelRejectionError) as exc:
        eq.compute_equilibrium(eq.potential([0, 0, 0, 0, 1]))
    assert exc.value.defect == pytest.approx(2.0, abs=1e-12)


def test_odd_defect_channel_rejected():
    # mass integral alone is blind to this one: the remainder is odd
    with pytest.raises(ModelRejectionError) as exc:
        eq.compute_equilibrium(eq.potential([0, 0, 1, 0.3]))
    assert exc.value.defect == pytest.approx(3 * S2 * 0.3 / 2, abs=1e-12)


def test_not_one_cut_rejected():
    # positive leading coefficient, exact unit mass, h dips negative at 0
    b = 0.4
    with pytest.raises(ModelRejectionError) as exc:
        eq.compute_equilibrium(eq.potential([0, 0, 1 - 7.5 * b, 0, 0, 0, b]))
    assert exc.value.defect < 1e-8
    assert "one-cut" in str(exc.value)


def test_potential_validation():
    with pytest.raises(DomainError):
        eq.potential([1.0, 2.0])
    with pytest.raises(DomainError):
        eq.potential([0, 0, -1.0])
    with pytest.raises(DomainError):
        eq.potential([0, 0, 1, 0.5], even_hint=True)
    with pytest.raises(DomainError):
        eq.potential([0, 0, float("nan")])
    p = eq.potential([0, 0, 1, 0, 0])
    assert p.degree == 2 and p.even_hint


# ---------------------------------------------------------------------------
# theta interpolation

def test_v_theta_affine_law_matches_recompute():
    for th in (0.0, 0.25, 0.7, 1.0):
        pot, data = eq.v_theta(V6, th)
        direct = eq.compute_equilibrium(pot)
        a = np.asarray(data.hv_cheb)
        b = np.asarray(direct.hv_cheb)
        m = max(len(a), len(b))
        a = np.pad(a, (0, m - len(a)))
        b = np.pad(b, (0, m - len(b)))
        assert np.max(np.abs(a - b)) < 1e-13
        assert data.ell == pytest.approx(direct.ell, abs=1e-13)
        assert data.tau == pytest.approx(direct.tau, abs=1e-13)


def test_v_theta_pointwise():
    pot, data = eq.v_theta(V4, 0.3)
    x = 0.83
    assert pot(x) == pytest.approx(0.7 * x ** 2 + 0.3 * float(V4(x)), abs=1e-14)
    assert data.h(x) == pytest.approx(
        0.7 / math.pi + 0.3 * (0.8 + 0.4 * x * x) / math.pi, abs=1e-14)
    with pytest.raises(DomainError):
        eq.v_theta(V4, 1.2)
    with pytest.raises(DomainError):
        eq.v_theta(V4, -0.1)


def test_lambda_n():
    assert eq.lambda_n(V2, 1.0, 8, 0.0) == pytest.approx(
        S2 + (8 * 2 ** 0.75) ** (-2.0 / 3.0), abs=1e-15)
    _, d35 = eq.v_theta(V4, 0.35)
    assert eq.lambda_n(V4, -2.0, 100, 0.35) == pytest.approx(
        S2 - 2.0 / (100 * d35.tau) ** (2.0 / 3.0), abs=1e-15)
    with pytest.raises(DomainError):
        eq.lambda_n(V2, 0.0, 0, 0.0)


# ---------------------------------------------------------------------------
# g function

def test_g_large_z_expansion():
    d = eq.compute_equilibrium(V4)
    # moments of the quartic density: m1 = 0 (even), m2 = 3/5
    m2 = 0.6
    for z in (2000.0 + 0j, 300.0 + 400.0j):
        ref = cmath.log(z) - m2 / (2 * z * z)
        assert abs(eq.g_eval(V4, 1.0, z) - ref) < 1e-10
    del d


def test_g_interior_jump_even():
    jump = eq.g_eval(V4, 1.0, 0.15j) - eq.g_eval(V4, 1.0, -0.15j)
    # 2 pi i times the mass to the right of 0, which is 1/2 by symmetry
    assert abs(jump - 1j * math.pi) < 1e-12


def test_g_interior_jump_asymmetric():
    d = eq.compute_equilibrium(V6)
    x = 0.4
    mass_right = mp_density_integral(d.hv_cheb, x, S2)
    jump = eq.g_eval(V6, 1.0, complex(x, 1e-9)) - eq.g_eval(
        V6, 1.0, complex(x, -1e-9))
    assert abs(jump - 2j * math.pi * mass_right) < 1e-8


def test_g_domain():
    for z in (0.3 + 0j, -5.0 + 0j, S2 + 0j):
        with pytest.raises(DomainError):
            eq.g_eval(V2, 0.0, z)
    assert abs(eq.g_eval(V2, 0.0, 1.5 + 0j).imag) < 1e-15


# ---------------------------------------------------------------------------
# variational identity

def test_variational_identity_interior_and_exterior():
    for V, th in ((V4, 1.0), (V6, 1.0), (V4, 0.35)):
        for x in np.linspace(-1.41, 1.41, 21):
            assert abs(eq.variational_value(V, float(x), th)) < 1e-10
        for x in (-3.0, -2.0, -1.6, 1.6, 2.0, 3.0):
            assert eq.variational_value(V, x, th) < -1e-6


def test_log_potential_against_mpmath():
    d = eq.compute_equilibrium(V4)
    # F(x) = 2 int ln|x-y| rho - V + ell, oracle integral vs closed form
    x = 0.7
    f_oracle = 2 * mp_log_potential(d.hv_cheb, x) - float(V4(x)) + d.ell
    assert abs(f_oracle) < 1e-10
    x = 1.9
    f_oracle = 2 * mp_log_potential(d.hv_cheb, x) - float(V4(x)) + d.ell
    assert eq.variational_value(V4, x) == pytest.approx(f_oracle, abs=1e-10)


def test_exterior_identity_g_vs_xi():
    # on (sqrt2, inf): 2 g - V + ell = -xi with no shift
    for V in (V4, V6):
        d = eq.compute_equilibrium(V)
        for x in (1.6, 2.0):
            lhs = 2 * eq.g_eval(V, 1.0, complex(x)).real - float(V(x)) + d.ell
            xi = eq.xi_eval(V, 1.0, 5, 0.0, complex(x))
            assert abs(xi.imag) < 1e-13
            assert abs(lhs + xi.real) < 1e-12


# ---------------------------------------------------------------------------
# xi

def test_xi_empty_path_and_domain():
    assert eq.xi_eval(V2, 0.0, 10, 0.0, S2) == 0.0
    with pytest.raises(DomainError):
        eq.xi_eval(V2, 0.0, 10, 0.0, 0.0)
    with pytest.raises(DomainError):
        eq.xi_eval(V2, 0.0, 10, 0.0, -3.0)
    with pytest.raises(DomainError):
        eq.xi_eval(V2, 0.0, 0, 0.0, 2.0)


def test_xi_interior_boundary_value():
    # just above the band xi_+ = -2 pi i int_{x+s_n}^{sqrt2} rho: negative
    # real part of size O(delta), imaginary part set by the mass
    n, s = 50, 1.0
    _, data = eq.v_theta(V4, 1.0)
    shift = s / (n * data.tau) ** (2.0 / 3.0)
    x = -0.3
    xi = eq.xi_eval(V4, 1.0, n, s, complex(x, 1e-9))
    mass = mp_density_integral(data.hv_cheb, x + shift, S2)
    assert xi.real < 0.0
    assert abs(xi.real) < 1e-7
    assert xi.imag == pytest.approx(-2 * math.pi * mass, abs=1e-7)


# ---------------------------------------------------------------------------
# conformal coefficients

def test_zeta_right_quadratic_closed_form():
    cc = eq.zeta_coeffs(V2, 0.0, 100, 0.0, "right")
    assert cc.zeta1 == pytest.approx(S2, abs=1e-14)
    assert cc.zeta2 == pytest.approx(0.4 / (4 * S2), abs=1e-15)
    assert cc.zeta3 == pytest.approx(-1.0 / 175.0, abs=1e-15)
    assert cc.side == "right"


def test_zeta_quartic_closed_form():
    # h = (0.8 + 0.4 x^2)/pi: A = 5/(4 sqrt2), B = 23/64 at the right edge
    cc = eq.zeta_coeffs(V4, 1.0, 100, 0.0, "right")
    assert cc.zeta1 == pytest.approx(S2 * 1.6 ** (2.0 / 3.0), abs=1e-13)
    assert cc.zeta2 == pytest.approx(1.0 / (2 * S2), abs=1e-14)
    assert cc.zeta3 == pytest.approx(1.0 / 14.0, abs=1e-14)


def test_zeta_left_mirrors_right_for_even():
    r = eq.zeta_coeffs(V4, 1.0, 100, 0.0, "right")
    l = eq.zeta_coeffs(V4, 1.0, 100, 0.0, "left")
    assert l.zeta1 == pytest.approx(r.zeta1, abs=1e-14)
    assert l.zeta2 == pytest.approx(-r.zeta2, abs=1e-14)
    assert l.zeta3 == pytest.approx(r.zeta3, abs=1e-14)
    assert l.side == "left"
    # left coefficients never see the shift
    l2 = eq.zeta_coeffs(V4, 1.0, 7, 2.5, "left")
    assert l2.zeta1 == l.zeta1 and l2.zeta2 == l.zeta2


def test_zeta_taylor_matches_quadrature_map():
    for V, th in ((V2, 0.0), (V4, 1.0), (V6, 1.0)):
        cc = eq.zeta_coeffs(V, th, 50, 0.0, "right")
        for ang in (0.3, 1.3, 2.4, -2.0, 3.1):
            z = S2 + 0.02 * cmath.exp(1j * ang)
            v = z - S2
            taylor = cc.zeta1 * v * (1 + cc.zeta2 * v + cc.zeta3 * v * v)
            quad = eq._zeta_b_map(V, th, 50, 0.0, z)
            assert abs(taylor - quad) / abs(quad) < 2e-6


def test_zeta_shift_corrections_win():
    n, s = 40, 0.7
    cc = eq.zeta_coeffs(V4, 1.0, n, s, "right")
    cc0 = eq.zeta_coeffs(V4, 1.0, n, 0.0, "right")
    base = eq._zeta_b_map(V4, 1.0, n, s, S2)
    for ang in (0.5, 2.6):
        z = S2 + 0.05 * cmath.exp(1j * ang)
        v = z - S2
        quad = eq._zeta_b_map(V4, 1.0, n, s, z) - base
        err_c = abs(quad - cc.zeta1 * v * (1 + cc.zeta2 * v + cc.zeta3 * v * v))
        err_p = abs(quad - cc0.zeta1 * v * (1 + cc0.zeta2 * v + cc0.zeta3 * v * v))
        assert err_c / abs(quad) < 5e-4
        assert err_c < err_p / 20.0


def test_zeta_guards():
    with pytest.raises(DomainError):
        eq.zeta_coeffs(V2, 0.0, 10, 0.0, "top")
    with pytest.raises(DomainError):
        eq.zeta_coeffs(V2, 0.0, 0, 0.0, "right")
    with pytest.raises(RangeError):
        eq.zeta_coeffs(V4, 1.0, 1, -6.0, "right")


# ---------------------------------------------------------------------------
# Szego function

def test_szego_boundary_product():
    for alpha in (0.5, 1.5):
        for shift in (0.0, 0.03):
            for x in (-1.0, 0.0, 1.0):
                dp = eq.szego_d(alpha, complex(x, 1e-150), shift)
                dm = eq.szego_d(alpha, complex(x, -1e-150), shift)
                assert abs(dp * dm - abs(x - S2) ** alpha) < 1e-12


def test_szego_chi_at_infinity():
    for alpha in (0.5, 1.5):
        for shift in (0.0, 0.03):
            d = eq.szego_d(alpha, 1e10 + 0j, shift)
            assert abs(d - eq.szego_chi(alpha, shift)) < 1e-9


def test_szego_analytic_off_segment():
    a = eq.szego_d(0.7, complex(-3.0, 1e-150), 0.03)
    b = eq.szego_d(0.7, complex(-3.0, -1e-150), 0.03)
    assert abs(a - b) < 1e-12
    with pytest.raises(DomainError):
        eq.szego_d(0.5, 0.0 + 0j, 0.0)
    with pytest.raises(DomainError):
        eq.szego_d(0.5, complex(-S2 - 0.01, 0.0), 0.03)


# ---------------------------------------------------------------------------
# edge constants

def test_edge_constants_quadratic():
    e = eq.edge_constants(V2, 0.0)
    assert e.i1 == 0.0 and e.i2 == 0.0
    assert e.w_edge == 0.0 and e.wp_edge == 0.0
    assert e.rho1 == pytest.approx(0.5 * (1 - math.log(2.0)), abs=1e-15)
    assert e.rho2 == pytest.approx(1.0, abs=1e-15)
    assert e.removable_limit
    assert e.n13_factor == pytest.approx(1.0 / (2 * S2), abs=1e-15)


def test_edge_constants_quartic_frozen():
    e = eq.edge_constants(V4, 0.5)
    assert e.i1 == pytest.approx(-0.15, abs=1e-13)
    assert e.i2 == pytest.approx(-0.215, abs=1e-13)
    assert e.w_edge == pytest.approx(-0.4, abs=1e-13)
    assert e.wp_edge == pytest.approx(2 * S2 / 5, abs=1e-13)
    assert e.rho1 == pytest.approx(0.5 * (1 - math.log(2.0)) - 0.05, abs=1e-13)
    assert e.rho2 == pytest.approx(1.6 ** (1.0 / 3.0), abs=1e-13)
    assert not e.removable_limit
    assert e.s == 0.5


def test_edge_constants_sextic_oracle():
    # I1 via the smooth substitution x = sqrt2 cos(t), adaptive quadrature
    from mpmath import mp, quad as mpquad, cos as mpcos, pi as mppi

    e = eq.edge_constants(V6, 0.0)
    w = np.asarray(V6.coeffs).copy()
    w[2] -= 1.0
    with mp.workdps(30):
        def f(t):
            x = S2 * mpcos(t)
            total = mp.mpf(0)
            for c in reversed(w):
                total = total * x + float(c)
            return total
        ref = float(mpquad(f, [0, mppi]) / (2 * mppi))
    assert e.i1 == pytest.approx(ref, abs=1e-12)


def test_edge_constants_theta_scaling():
    e1 = eq.edge_constants(V4, 0.0)
    for th in (0.35, 0.8):
        pot, _ = eq.v_theta(V4, th)
        et = eq.edge_constants(pot, 0.0)
        # W scales linearly, so i1 does; i2 mixes h_theta and W_theta
        assert et.i1 == pytest.approx(th * e1.i1, abs=1e-13)
        i2_sc = -0.2  # semicircle part of i2 for the quartic
        assert et.i2 == pytest.approx(
            th * th * (e1.i2 - i2_sc) + th * i2_sc, abs=1e-12)
        assert et.w_edge == pytest.approx(th * e1.w_edge, abs=1e-13)


# ---------------------------------------------------------------------------
# model contour integrals

def test_model_integral_rates_quartic():
    rates = {"h12": 2 / 3, "h13": 4 / 3, "h17": 2 / 3, "h18": 2 / 3,
             "h19": 2 / 3, "h20": 2 / 3}
    for kind, rate in rates.items():
        r64 = eq.model_integral_check(V4, 64, kind)
        r1024 = eq.model_integral_check(V4, 1024, kind)
        assert r1024 <= 3.0 * r64 * (64 / 1024) ** rate, kind


def test_model_integral_quadratic_identities():
    # for V = x^2 these three have no subleading term at all
    for kind in ("h12", "h13", "h20"):
        assert eq.model_integral_check(V2, 64, kind) < 1e-12
        assert eq.model_integral_check(V2, 513, kind) < 1e-12


def test_model_integral_guards():
    with pytest.raises(DomainError):
        eq.model_integral_check(V2, 64, "h99")
    with pytest.raises(DomainError):
        eq.model_integral_check(V2, 0, "h12")


# ---------------------------------------------------------------------------
# property checks

@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.0, max_value=0.95))
def test_quartic_family_properties(c):
    V = eq.potential([0, 0, 1 - 3 * c, 0, c]) if c != 0 else V2
    d = eq.compute_equilibrium(V)
    assert d.normalization_defect < 1e-12
    assert d.tau > 0.0
    assert d.h(S2) == pytest.approx((1 + 3 * c) / math.pi, abs=1e-12)
    assert abs(eq.variational_value(V, 0.7)) < 1e-9
    assert eq.variational_value(V, 1.8) < 0.0


@settings(max_examples=15, deadline=None)
@given(st.floats(min_value=0.0, max_value=1.0),
       st.floats(min_value=-1.4, max_value=1.4))
def test_theta_interpolation_properties(th, x):
    _, data = eq.v_theta(V6, th)
    base = eq.compute_equilibrium(V6)
    expect = (1 - th) / math.pi + th * float(base.h(x))
    assert float(data.h(x)) == pytest.approx(expect, abs=1e-12)
    assert data.ell == pytest.approx(
        (1 - th) * (1 + math.log(2.0)) + th * base.ell, abs=1e-12)
