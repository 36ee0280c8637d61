"""Equilibrium-measure data for polynomial potentials on E = [-sqrt2, sqrt2].

The support is prescribed, not solved for: a potential is accepted only if
the candidate density h_V(x) sqrt(2 - x^2) produced by the principal value
transform actually closes into a polynomial h_V, which happens exactly when
the transform numerator is divisible by (2 - x^2) in Chebyshev form. The
division remainder measures how badly the equilibrium problem wants to leave
E, and is reported as the normalization defect.

Everything downstream of that division is closed form. Writing j(u) =
u + sqrt(u^2 - 1) for the exterior conformal map of [-1, 1] and mu_m for the
weighted Chebyshev moments of h_V, the log potential of the density is a
finite sum

    int ln(z - x) rho(x) dx = ln((z + sqrt(z^2 - 2))/2) - 4 sum mu_m/(m j^m)

outside the cut, with the bilinear variant ln|u - t| = -ln2
- 2 sum T_m(u) T_m(t)/m doing the same job on the interior. No quadrature
error enters the Euler-Lagrange constant or the variational residuals.

The contour integrals of model_integral_check are the one genuinely numeric
piece: Gauss-Legendre panels on a rectangle enclosing [kappa, sqrt2],
compared against their h_V leading forms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as _cheb

from .errors import DomainError, ModelRejectionError, RangeError
from .special import gauss_legendre

_SQRT2 = math.sqrt(2.0)
_TAU_SCALE = 2.0 ** 0.75
# grid used for the positivity certificate of h_V
_POSITIVITY_GRID = np.linspace(-1.0, 1.0, 101)
_DEFECT_LIMIT = 1e-8


# ---------------------------------------------------------------------------
# potential

@dataclass(frozen=True)
class Potential:
    """Polynomial confining potential, coefficients in ascending degree."""

    coeffs: tuple
    even_hint: bool

    def __call__(self, x):
        return np.polynomial.polynomial.polyval(x, np.asarray(self.coeffs))

    def deriv_coeffs(self, order=1):
        c = np.asarray(self.coeffs, dtype=float)
        for _ in range(order):
            c = np.polynomial.polynomial.polyder(c)
        return c

    @property
    def degree(self):
        return len(self.coeffs) - 1


def potential(coeffs, even_hint=None) -> Potential:
    """Validate and build a Potential from ascending coefficients."""
    arr = np.asarray(coeffs, dtype=float)
    if arr.ndim != 1 or arr.size < 3:
        raise DomainError("potential needs real coefficients up to degree >= 2")
    if not np.all(np.isfinite(arr)):
        raise DomainError("potential coefficients must be finite")
    while arr.size > 3 and arr[-1] == 0.0:
        arr = arr[:-1]
    if arr[-1] <= 0.0:
        raise DomainError("potential needs a positive leading coefficient")
    is_even = not np.any(arr[1::2])
    if even_hint is True and not is_even:
        raise DomainError("even_hint set but odd-degree coefficients present")
    if even_hint is None:
        even_hint = is_even
    return Potential(coeffs=tuple(float(c) for c in arr), even_hint=bool(even_hint))


# ---------------------------------------------------------------------------
# basis plumbing on the rescaled interval y = x / sqrt2

def _power_to_u(p):
    """Rewrite sum p_j t^j as a Chebyshev-U series, exactly."""
    m = max(len(p), 1) + 2
    out = np.zeros(m)
    basis = np.zeros(m)
    basis[0] = 1.0  # t^0 = U_0
    for pj in p:
        out += pj * basis
        nxt = np.zeros(m)
        nxt[1:] += 0.5 * basis[:-1]  # t U_k picks up U_{k+1}/2
        nxt[:-1] += 0.5 * basis[1:]  # ... and U_{k-1}/2, U_{-1} drops
        basis = nxt
    return out[: max(len(p), 1)]


def _t_to_u(q):
    """Chebyshev-T series to Chebyshev-U series, exactly."""
    out = np.zeros(max(len(q), 1))
    out[0] = q[0]
    if len(q) > 1:
        out[1] += 0.5 * q[1]
    for m in range(2, len(q)):
        out[m] += 0.5 * q[m]
        out[m - 2] -= 0.5 * q[m]
    return out


def _vprime_u_coeffs(V: Potential):
    """U-series of V'(sqrt2 t), the input to the pv transform."""
    d = V.deriv_coeffs()
    scaled = d * _SQRT2 ** np.arange(len(d))
    return _power_to_u(scaled)


def _hv_series(V: Potential):
    """Divide the transform numerator by (1 - y^2); return (h cheb, defect).

    The numerator is N(y) = 2 pi - sqrt2 pi sum u_k T_{k+1}(y) where u_k are
    the U-coefficients of V'(sqrt2 t). Exact divisibility is the one-cut-on-E
    condition; the degree <= 1 remainder is returned as scalar defect
    |int rho - 1| plus the odd counterpart that the mass integral cannot see.
    """
    u = _vprime_u_coeffs(V)
    n_ser = np.zeros(len(u) + 2)
    n_ser[0] = 2.0 * math.pi
    n_ser[1 : len(u) + 1] -= _SQRT2 * math.pi * u
    quo, rem = _cheb.chebdiv(n_ser, np.array([0.5, 0.0, -0.5]))
    h = quo / (4.0 * math.pi ** 2)
    r0 = float(rem[0]) if len(rem) > 0 else 0.0
    r1 = float(rem[1]) if len(rem) > 1 else 0.0
    defect = (abs(r0) + abs(r1)) / (2.0 * math.pi)
    return np.atleast_1d(h), defect


def _u_moments(h_cheb):
    """mu_m = int sqrt(1-t^2) T_m(t) h(t) dt for the h Chebyshev series."""
    hu = _t_to_u(np.asarray(h_cheb, dtype=float))
    mu = np.zeros(len(hu) + 2)
    mu[0] = 0.5 * math.pi * hu[0]
    if len(hu) > 1:
        mu[1] = 0.25 * math.pi * hu[1]
    for m in range(2, len(hu) + 2):
        a = hu[m] if m < len(hu) else 0.0
        mu[m] = 0.25 * math.pi * (a - hu[m - 2])
    return mu


def _log_potential_interior(mu, y):
    # int ln|y - t| h(t) sqrt(1-t^2) dt for y in [-1, 1]
    acc = -0.5 * math.log(2.0) * 2.0 * mu[0]
    tm1, tm = 1.0, y
    for m in range(1, len(mu)):
        acc -= 2.0 * mu[m] * tm / m
        tm1, tm = tm, 2.0 * y * tm - tm1
    return acc


def _log_potential_exterior(mu, u):
    # same integral for complex u off [-1, 1], via the exterior map j(u)
    j = u + np.sqrt(complex(u) - 1.0) * np.sqrt(complex(u) + 1.0)
    acc = np.log(0.5 * j) * mu[0]
    jm = 1.0 + 0.0j
    for m in range(1, len(mu)):
        jm *= j
        acc -= 2.0 * mu[m] / (m * jm)
    return acc


# ---------------------------------------------------------------------------
# equilibrium data

@dataclass(frozen=True)
class EquilibriumData:
    """h_V Chebyshev series (argument x/sqrt2), Euler-Lagrange constant,
    edge time constant tau, and the support-mismatch defect."""

    hv_cheb: tuple
    ell: float
    tau: float
    normalization_defect: float

    def h(self, x):
        return _cheb.chebval(np.asarray(x) / _SQRT2, np.asarray(self.hv_cheb))

    def h_deriv(self, x, order=1):
        c = _cheb.chebder(np.asarray(self.hv_cheb), m=order, scl=1.0 / _SQRT2)
        return _cheb.chebval(np.asarray(x) / _SQRT2, c)


def _ell_from(V: Potential, mu):
    # Euler-Lagrange constant anchored at x = 0:
    # ell = V(0) - 2 int ln|y| rho(y) dy, with the log integral exact.
    log_int = math.log(_SQRT2) + 2.0 * _log_potential_interior(mu, 0.0)
    return float(V(0.0)) - 2.0 * log_int


def compute_equilibrium(V: Potential) -> EquilibriumData:
    """Equilibrium data of V on the prescribed support E.

    Rejects potentials whose equilibrium measure is not supported on E
    (division remainder, reported as normalization defect) and potentials
    whose density is not strictly one-cut (h_V <= 0 somewhere on E).
    """
    if not isinstance(V, Potential):
        V = potential(V)
    h, defect = _hv_series(V)
    if defect > _DEFECT_LIMIT:
        raise ModelRejectionError(
            f"equilibrium measure of the potential is not supported on E: "
            f"normalization defect {defect:.6e}", defect=defect)
    vals = _cheb.chebval(_POSITIVITY_GRID, h)
    if np.min(vals) <= 0.0:
        worst = float(np.min(vals))
        raise ModelRejectionError(
            f"potential is not one-cut regular on E: min h_V = {worst:.6e}",
            defect=defect)
    mu = _u_moments(h)
    ell = _ell_from(V, mu)
    tau = math.pi * float(_cheb.chebval(1.0, h)) * _TAU_SCALE
    return EquilibriumData(
        hv_cheb=tuple(float(c) for c in h), ell=ell, tau=tau,
        normalization_defect=defect)


def v_theta(V: Potential, theta: float):
    """Convex interpolation (1-theta) x^2 + theta V with its affine data.

    Returns (potential, data); the data follows the affine law
    h = (1-theta)/pi + theta h_V, ell = (1-theta)(1+ln2) + theta ell_V,
    which compute_equilibrium on the returned potential reproduces.
    """
    theta = float(theta)
    if not 0.0 <= theta <= 1.0:
        raise DomainError("theta must lie in [0, 1]")
    if not isinstance(V, Potential):
        V = potential(V)
    base = compute_equilibrium(V)
    coeffs = np.zeros(max(len(V.coeffs), 3))
    coeffs[: len(V.coeffs)] = np.asarray(V.coeffs) * theta
    coeffs[2] += 1.0 - theta
    pot = potential(coeffs, even_hint=V.even_hint if theta > 0.0 else True)
    h = np.asarray(base.hv_cheb) * theta
    h[0] += (1.0 - theta) / math.pi
    ell = (1.0 - theta) * (1.0 + math.log(2.0)) + theta * base.ell
    tau = math.pi * float(_cheb.chebval(1.0, h)) * _TAU_SCALE
    data = EquilibriumData(
        hv_cheb=tuple(float(c) for c in h), ell=ell, tau=tau,
        normalization_defect=theta * base.normalization_defect)
    return pot, data


def lambda_n(V: Potential, s: float, n: int, theta: float) -> float:
    """Edge scaling point sqrt2 + s/(n tau_theta)^(2/3)."""
    n = int(n)
    if n < 1:
        raise DomainError("lambda_n needs n >= 1")
    _, data = v_theta(V, theta)
    return _SQRT2 + float(s) / (n * data.tau) ** (2.0 / 3.0)


def _s_shift(data: EquilibriumData, n: int, s: float) -> float:
    return float(s) / (n * data.tau) ** (2.0 / 3.0)


def g_eval(V: Potential, theta: float, z: complex) -> complex:
    """Log potential g(z) = int ln(z - x) rho_theta(x) dx, principal branch.

    Exact finite Chebyshev sum; z may approach E from either side but the
    half line (-inf, sqrt2] itself is outside the domain.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= _SQRT2:
        raise DomainError("g is evaluated off the half line (-inf, sqrt2]")
    _, data = v_theta(V, theta)
    mu = _u_moments(np.asarray(data.hv_cheb))
    val = math.log(_SQRT2) + 2.0 * _log_potential_exterior(mu, z / _SQRT2)
    return complex(val)


def variational_value(V: Potential, x: float, theta: float = 1.0) -> float:
    """Euler-Lagrange functional 2 int ln|x-y| rho dy - V(x) + ell.

    Zero on the support, strictly negative outside for admissible
    potentials. Interior points use the exact bilinear log expansion, outer
    points the exterior map; both are finite sums.
    """
    x = float(x)
    pot, data = v_theta(V, theta)
    mu = _u_moments(np.asarray(data.hv_cheb))
    u = x / _SQRT2
    if abs(u) <= 1.0:
        log_int = math.log(_SQRT2) + 2.0 * _log_potential_interior(mu, u)
    else:
        log_int = math.log(_SQRT2) + 2.0 * float(
            np.real(_log_potential_exterior(mu, complex(u))))
    return 2.0 * log_int - float(pot(x)) + data.ell


# ---------------------------------------------------------------------------
# edge maps

def xi_eval(V: Potential, theta: float, n: int, s: float, z: complex) -> complex:
    """Phase integral 2 pi int_{sqrt2}^{z + s_n} h(w) sqrt(w^2 - 2) dw.

    The path is the straight segment mapped through w = sqrt2 + (z_s -
    sqrt2) t^2, which starts tangent to the cut and never crosses it; the
    square root is the branch that behaves like +w at +infinity.
    """
    n = int(n)
    if n < 1:
        raise DomainError("xi_eval needs n >= 1")
    _, data = v_theta(V, theta)
    zs = complex(z) + _s_shift(data, n, s)
    if zs.imag == 0.0 and zs.real <= _SQRT2:
        if zs.real == _SQRT2:
            return 0.0 + 0.0j
        raise DomainError("xi path would cross the support cut")
    return _xi_from_right(data, zs)


def _edge_profile(data: EquilibriumData, zs: complex) -> complex:
    """int_0^1 t^2 h(w) sqrt(w + sqrt2) dt along w = sqrt2 + (zs - sqrt2) t^2.

    The substitution keeps w + sqrt2 inside the right half plane (it is a
    convex combination of 2 sqrt2 and zs + sqrt2), so the principal square
    root realizes the branch that grows like +w without crossing a cut.
    """
    rule = gauss_legendre(96)
    t = 0.5 * (rule.nodes + 1.0)
    wts = 0.5 * rule.weights
    d = complex(zs) - _SQRT2
    w = _SQRT2 + d * t * t
    vals = _cheb.chebval(w / _SQRT2, np.asarray(data.hv_cheb)) * np.sqrt(w + _SQRT2)
    return complex(np.sum(wts * t * t * vals))


def _xi_from_right(data: EquilibriumData, zs: complex) -> complex:
    """2 pi int_sqrt2^{zs} h sqrt(w^2-2) dw along the parabolic segment."""
    d = complex(zs) - _SQRT2
    return 4.0 * math.pi * cmath.sqrt(d) * d * _edge_profile(data, zs)


def _zeta_b_map(V: Potential, theta: float, n: int, s: float, z: complex) -> complex:
    """Conformal coordinate at the right edge, [3/4 xi]^(2/3) by quadrature.

    Written as (zs - sqrt2) (3 pi profile)^(2/3): the fractional power then
    acts on a near-real quantity, so the map stays single valued on a full
    punctured neighbourhood instead of inheriting the principal-branch cut
    of d^(3/2).
    """
    _, data = v_theta(V, theta)
    zs = complex(z) + _s_shift(data, n, s)
    if zs == _SQRT2:
        return 0.0 + 0.0j
    prof = _edge_profile(data, zs)
    return (zs - _SQRT2) * (3.0 * math.pi * prof) ** (2.0 / 3.0)


@dataclass(frozen=True)
class ConformalCoeffs:
    """Taylor data zeta1 (z +- sqrt2) [1 + zeta2 (...) + zeta3 (...)^2]."""

    zeta1: float
    zeta2: float
    zeta3: float
    side: str


def zeta_coeffs(V: Potential, theta: float, n: int, s: float,
                side: str = "right") -> ConformalCoeffs:
    """Taylor coefficients of the edge conformal maps from h derivatives.

    The right-edge map expands around the fixed point sqrt2, so its
    coefficients carry corrections linear in the shift s/(n tau)^(2/3); the
    left-edge map expands around the moving endpoint and its coefficients
    are shift free.
    """
    n = int(n)
    if n < 1:
        raise DomainError("zeta_coeffs needs n >= 1")
    if side not in ("right", "left"):
        raise DomainError("side must be 'right' or 'left'")
    _, data = v_theta(V, theta)
    if side == "right":
        h0 = float(data.h(_SQRT2))
        ratio1 = float(data.h_deriv(_SQRT2)) / h0
        ratio2 = float(data.h_deriv(_SQRT2, 2)) / (2.0 * h0)
        a = ratio1 + 1.0 / (4.0 * _SQRT2)
        b = ratio2 + ratio1 / (4.0 * _SQRT2) - 1.0 / 64.0
        shift = _s_shift(data, n, s)
        z1 = _SQRT2 * (math.pi * h0) ** (2.0 / 3.0) * (1.0 + 0.8 * shift * a)
        z2 = 0.4 * a + 0.4 * shift * ((15.0 / 7.0) * b - 1.1 * a * a)
        z3 = (2.0 / 7.0) * b - a * a / 25.0
    else:
        h0 = float(data.h(-_SQRT2))
        ratio1 = float(data.h_deriv(-_SQRT2)) / h0
        ratio2 = float(data.h_deriv(-_SQRT2, 2)) / (2.0 * h0)
        a = -ratio1 + 1.0 / (4.0 * _SQRT2)
        b = ratio2 - ratio1 / (4.0 * _SQRT2) - 1.0 / 64.0
        z1 = _SQRT2 * (math.pi * h0) ** (2.0 / 3.0)
        z2 = -0.4 * a
        z3 = (2.0 / 7.0) * b - a * a / 25.0
    if not z1 > 0.0:
        raise RangeError("edge shift too large: zeta1 must stay positive")
    return ConformalCoeffs(zeta1=float(z1), zeta2=float(z2), zeta3=float(z3),
                           side=side)


# ---------------------------------------------------------------------------
# Szego function of the algebraic singularity

def szego_d(alpha: float, z: complex, s_shift: float = 0.0) -> complex:
    """Szego function ((z - sqrt2)/j(affine(z)))^(alpha/2).

    j maps the complement of [-sqrt2 - s_shift, sqrt2] onto the exterior of
    the unit disk; boundary products from opposite sides collapse to
    |z - sqrt2|^alpha.
    """
    z = complex(z)
    length = 2.0 * _SQRT2 + float(s_shift)
    if z.imag == 0.0 and -_SQRT2 - s_shift <= z.real <= _SQRT2:
        raise DomainError("szego_d is defined off the segment")
    w = 1.0 + 2.0 * (z - _SQRT2) / length
    j = w + np.sqrt(w - 1.0) * np.sqrt(w + 1.0)
    return ((z - _SQRT2) / j) ** (0.5 * float(alpha))


def szego_chi(alpha: float, s_shift: float = 0.0) -> float:
    """Value of the Szego function at infinity."""
    return float(((2.0 * _SQRT2 + float(s_shift)) / 4.0) ** (0.5 * float(alpha)))


# ---------------------------------------------------------------------------
# edge constants of the determinant ratio and the CLT normalization

@dataclass(frozen=True)
class EdgeConstants:
    """Functionals of W = V - x^2 entering the ratio asymptotics and the
    characteristic polynomial CLT."""

    i1: float
    i2: float
    w_edge: float
    wp_edge: float
    n13_factor: float
    rho1: float
    rho2: float
    s: float
    removable_limit: bool


def edge_constants(V: Potential, s: float) -> EdgeConstants:
    """Edge functionals of V: the two W integrals, edge values of W, the
    n^(1/3) coefficient factor, and the CLT centering constants.

    The factor (3/(2 sqrt2)) ((pi h)^(1/3) - 1)/(pi h - 1) is computed in the
    algebraically equivalent form 1/(x^(2/3) + x^(1/3) + 1), which is finite
    and smooth through pi h = 1; the flag records when that removable point
    was hit.
    """
    if not isinstance(V, Potential):
        V = potential(V)
    data = compute_equilibrium(V)
    w_coeffs = np.zeros(max(len(V.coeffs), 3))
    w_coeffs[: len(V.coeffs)] = V.coeffs
    w_coeffs[2] -= 1.0

    def w_val(x):
        return np.polynomial.polynomial.polyval(x, w_coeffs)

    deg = len(w_coeffs) + len(data.hv_cheb) + 4
    # first kind nodes for I1, second kind for I2; both exact for polynomials
    kmax = max(deg, 8)
    k = np.arange(1, kmax + 1)
    th1 = (2.0 * k - 1.0) * math.pi / (2.0 * kmax)
    y1 = np.cos(th1)
    i1 = float(np.sum(w_val(_SQRT2 * y1)) * (math.pi / kmax)) / (2.0 * math.pi)
    th2 = k * math.pi / (kmax + 1.0)
    y2 = np.cos(th2)
    wt2 = (math.pi / (kmax + 1.0)) * np.sin(th2) ** 2
    f2 = 0.5 * (_cheb.chebval(y2, np.asarray(data.hv_cheb)) + 1.0 / math.pi) \
        * w_val(_SQRT2 * y2)
    i2 = float(np.sum(wt2 * f2)) * 2.0

    w_edge = float(w_val(_SQRT2))
    wp = np.polynomial.polynomial.polyder(w_coeffs)
    wp_edge = float(np.polynomial.polynomial.polyval(_SQRT2, wp))
    x = math.pi * float(data.h(_SQRT2))
    cube = x ** (1.0 / 3.0)
    n13_factor = (3.0 / (2.0 * _SQRT2)) / (cube * cube + cube + 1.0)
    rho1 = 0.5 * (1.0 - math.log(2.0)) - i1 + 0.5 * w_edge
    rho2 = 1.0 + n13_factor * wp_edge
    return EdgeConstants(
        i1=i1, i2=i2, w_edge=w_edge, wp_edge=wp_edge, n13_factor=n13_factor,
        rho1=rho1, rho2=rho2, s=float(s),
        removable_limit=bool(abs(x - 1.0) < 1e-8))


# ---------------------------------------------------------------------------
# model contour integrals

_MODEL_KINDS = ("h12", "h13", "h17", "h18", "h19", "h20")
# internal scaling parameters of the checks
_MODEL_S = 1.0


def _nu2(z, kappa):
    # ((z - sqrt2)/(z - kappa))^(1/2), cut exactly on [kappa, sqrt2]
    return np.exp(0.5 * (np.log(z - _SQRT2) - np.log(z - kappa)))


def _model_integrand(kind, z, kappa, vfun, shift):
    v = vfun(z + shift)
    if kind == "h12":
        return _nu2(z, kappa) / (z - _SQRT2) ** 3 * v
    if kind == "h13":
        return _nu2(z, kappa) / (z - _SQRT2) ** 2 * v
    if kind == "h17":
        return v / (_nu2(z, kappa) * (z - _SQRT2) ** 2)
    if kind == "h18":
        return v / (_nu2(z, kappa) * (z - kappa) ** 2)
    if kind == "h19":
        return _nu2(z, kappa) / (z - kappa) ** 2 * v
    return v / (_nu2(z, kappa) * (z - kappa) ** 3)


def model_integral(V: Potential, n: int, kind: str):
    """Contour integral and its h_V leading form; returns (numeric, leading).

    Clockwise rectangle around [kappa, sqrt2] with kappa = -sqrt2 - s_n,
    shift s_n = 1/(2^(3/4) n)^(2/3) from the quadratic reference potential,
    Gauss-Legendre 64 per side.
    """
    n = int(n)
    if n < 1:
        raise DomainError("model_integral needs n >= 1")
    if kind not in _MODEL_KINDS:
        raise DomainError(f"kind must be one of {_MODEL_KINDS}")
    if not isinstance(V, Potential):
        V = potential(V)
    data = compute_equilibrium(V)
    shift = _MODEL_S / (_TAU_SCALE * n) ** (2.0 / 3.0)
    kappa = -_SQRT2 - shift
    corners = [complex(kappa - 0.5, 0.5), complex(_SQRT2 + 0.5, 0.5),
               complex(_SQRT2 + 0.5, -0.5), complex(kappa - 0.5, -0.5)]
    if corners[0].real >= corners[1].real:
        raise DomainError("contour rectangle degenerated onto the cut")
    rule = gauss_legendre(64)
    total = 0.0 + 0.0j
    vfun = np.polynomial.polynomial.Polynomial(np.asarray(V.coeffs))
    for a, b in zip(corners, corners[1:] + corners[:1]):
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        z = mid + half * rule.nodes
        total += half * np.sum(rule.weights * _model_integrand(
            kind, z, kappa, vfun, shift))

    h_r = float(data.h(_SQRT2))
    h_l = float(data.h(-_SQRT2))
    if kind == "h12":
        lead = (2.0j * math.pi / 3.0) * (1.0 - 4.0 * math.pi * h_r)
    elif kind == "h13":
        lead = (-4.0j * math.pi / _SQRT2) * (
            1.0 + shift * (math.pi * _SQRT2 * h_r - 1.0 / (2.0 * _SQRT2)))
    elif kind == "h17":
        lead = (-4.0j * math.pi / (3.0 * _SQRT2)) * (1.0 + 8.0 * math.pi * h_r)
    elif kind == "h18":
        lead = 4.0j * math.pi / _SQRT2
    elif kind == "h19":
        lead = (4.0j * math.pi / (3.0 * _SQRT2)) * (1.0 + 8.0 * math.pi * h_l)
    else:
        lead = (2.0j * math.pi / 3.0) * (1.0 - 4.0 * math.pi * h_l)
    return complex(total), complex(lead)


def model_integral_check(V: Potential, n: int, kind: str) -> float:
    """Absolute deviation of the contour integral from its leading form."""
    numeric, lead = model_integral(V, n, kind)
    return abs(numeric - lead)
