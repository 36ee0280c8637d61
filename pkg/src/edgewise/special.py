"""Airy functions, the Gamma function, Gauss rules, and a principal value
transform against the square root weight.

The Airy evaluations are built from scratch in numpy longdouble rather than
wrapped from a library, because they feed boundary data whose error budget
(1e-13 absolute on the moderate range) is tighter than a plain double
precision Maclaurin sum delivers. Region layout for the real functions:

* Maclaurin series about 0 on [-7.4, 4.6]. For Bi the series has no
  leading-order cancellation on the positive side, so it is used up to 12.
* For Ai on (4.6, 12], Taylor steps of y'' = xy seeded at knots that were
  propagated down from the x = 12 asymptotic anchor at import time. Stepping
  downward follows the growing direction for Ai, so the recessive solution
  cannot contaminate it.
* Exponential asymptotic series beyond 12, oscillatory asymptotic forms
  below -16, and Taylor-stepped knots covering [-16, -7.4].

The complex evaluation uses the Maclaurin series inside |z| <= 8 and the
principal sector asymptotic series outside; close to the negative real axis
it rotates onto the adjacent sectors through the connection identity
Ai(z) = -w Ai(wz) - w^2 Ai(w^2 z), w = exp(2 pi i / 3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError

_LD = np.longdouble
_CLD = np.clongdouble

# Ai(0) = 3^(-2/3)/Gamma(2/3) and friends, 30 digits, parsed to longdouble.
_AI_ZERO = _LD("0.355028053887817239260063186004")
_AI_PRIME_ZERO = _LD("-0.258819403792806798405183560189")
_BI_ZERO = _LD("0.614926627446000735150922369094")
_BI_PRIME_ZERO = _LD("0.448288357353826357914823710399")

_SQRT_PI = _LD("1.772453850905516027298167483341")
_PI = _LD("3.141592653589793238462643383280")

_MACLAURIN_CUT_LO = -7.4
_MACLAURIN_CUT_HI = 4.6
_ASYM_CUT_POS = 12.0
_ASYM_CUT_NEG = -16.0
_RANGE_LIMIT = 120.0
# (2/3) x^(3/2) crosses ln(DBL_MAX) near x = 104; beyond it Bi overflows and
# Ai falls out of the normal range.
_OVERFLOW_X = 104.0

_KNOT_STEP = 0.25


def _maclaurin(x):
    """Airy Maclaurin basis (f, g, f', g') at longdouble x."""
    x = _LD(x)
    x2 = x * x
    x3 = x2 * x
    a = _LD(1)
    b = x
    f, g = a, b
    fp = _LD(0)
    gp = _LD(1)
    eps = _LD("1e-21")
    for k in range(1, 400):
        fp += a * x2 / (3 * k - 1)
        gp += b * x2 / (3 * k)
        a = a * x3 / ((3 * k - 1) * (3 * k))
        b = b * x3 / ((3 * k) * (3 * k + 1))
        f += a
        g += b
        if abs(a) + abs(b) < eps * (abs(f) + abs(g)):
            break
    return f, g, fp, gp


def _maclaurin_all(x):
    f, g, fp, gp = _maclaurin(x)
    ai = _AI_ZERO * f + _AI_PRIME_ZERO * g
    aip = _AI_ZERO * fp + _AI_PRIME_ZERO * gp
    bi = _BI_ZERO * f + _BI_PRIME_ZERO * g
    bip = _BI_ZERO * fp + _BI_PRIME_ZERO * gp
    return ai, aip, bi, bip


def _asym_pos(x):
    """(Ai, Ai', Bi, Bi') from the exponential asymptotic series, x >= 12."""
    x = _LD(x)
    xi = _LD(2) / 3 * x * np.sqrt(x)
    sa = sap = sb = sbp = _LD(1)
    u = _LD(1)
    sgn = _LD(1)
    prev = None
    for k in range(1, 80):
        u = u * ((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / _LD(216 * k * (2 * k - 1))
        v = u * (6 * k + 1) / _LD(1 - 6 * k)
        t = u / xi**k
        tv = v / xi**k
        if prev is not None and abs(t) > prev:
            break  # asymptotic tail starting to diverge
        sgn = -sgn
        sa += sgn * t
        sap += sgn * tv
        sb += t
        sbp += tv
        prev = abs(t)
        if prev < 1e-20:
            break
    q = x**_LD(0.25)
    em = np.exp(-xi)
    ep = np.exp(xi)
    ai = em * sa / (2 * _SQRT_PI * q)
    aip = -q * em * sap / (2 * _SQRT_PI)
    bi = ep * sb / (_SQRT_PI * q)
    bip = q * ep * sbp / _SQRT_PI
    return ai, aip, bi, bip


def _asym_neg(x):
    """(Ai, Ai', Bi, Bi') from the oscillatory asymptotic series, x <= -16."""
    t = -_LD(x)
    zeta = _LD(2) / 3 * t * np.sqrt(t)
    # Even/odd splits of the u and v coefficient series.
    pe = _LD(1)
    po = _LD(0)
    re = _LD(1)
    ro = _LD(0)
    u = _LD(1)
    zk = _LD(1)
    for k in range(1, 40):
        u = u * ((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / _LD(216 * k * (2 * k - 1))
        v = u * (6 * k + 1) / _LD(1 - 6 * k)
        zk = zk / zeta
        sgn = _LD(-1) ** (k // 2)
        term = sgn * u * zk
        tv = sgn * v * zk
        if k % 2 == 1:
            po += term
            ro += tv
        else:
            pe += term
            re += tv
        if abs(u * zk) < 1e-20:
            break
    th = zeta - _PI / 4
    c = np.cos(th)
    s = np.sin(th)
    q = t**_LD(0.25)
    ai = (c * pe + s * po) / (_SQRT_PI * q)
    aip = (s * re - c * ro) * q / _SQRT_PI
    bi = (-s * pe + c * po) / (_SQRT_PI * q)
    bip = (c * re + s * ro) * q / _SQRT_PI
    return ai, aip, bi, bip


def _taylor_coeffs(x0, y, yp, terms):
    # c_{k+2} = (x0 c_k + c_{k-1}) / ((k+1)(k+2)) for y'' = x y about x0
    c = [y, yp]
    for k in range(terms - 2):
        prev = c[k - 1] if k >= 1 else _LD(0)
        c.append((x0 * c[k] + prev) / _LD((k + 1) * (k + 2)))
    return c


def _taylor_eval(c, h):
    val = c[-1]
    for ck in reversed(c[:-1]):
        val = ck + h * val
    der = c[-1] * (len(c) - 1)
    for k in range(len(c) - 2, 0, -1):
        der = c[k] * k + h * der
    return val, der


def _build_knots():
    """Propagate anchor values across the Taylor-stepped regions at import."""
    # Positive side: anchor at 12, step down to 4.5. Two solution families.
    xs = np.arange(_ASYM_CUT_POS, 4.5 - 1e-9, -_KNOT_STEP)
    ai, aip, bi, bip = _asym_pos(xs[0])
    pos = {}
    pos[float(xs[0])] = (ai, aip)
    for x0, x1 in zip(xs[:-1], xs[1:]):
        c = _taylor_coeffs(_LD(x0), ai, aip, 40)
        ai, aip = _taylor_eval(c, _LD(x1) - _LD(x0))
        pos[float(x1)] = (ai, aip)
    # Negative side: anchor at -16, step up to -7.25, all four values.
    xs = np.arange(_ASYM_CUT_NEG, -7.25 + 1e-9, _KNOT_STEP)
    ai, aip, bi, bip = _asym_neg(xs[0])
    neg = {float(xs[0]): (ai, aip, bi, bip)}
    for x0, x1 in zip(xs[:-1], xs[1:]):
        h = _LD(x1) - _LD(x0)
        ca = _taylor_coeffs(_LD(x0), ai, aip, 40)
        cb = _taylor_coeffs(_LD(x0), bi, bip, 40)
        ai, aip = _taylor_eval(ca, h)
        bi, bip = _taylor_eval(cb, h)
        neg[float(x1)] = (ai, aip, bi, bip)
    return pos, neg


_POS_KNOTS, _NEG_KNOTS = _build_knots()


def _nearest_knot(x, lo, hi):
    k = lo + _KNOT_STEP * round((x - lo) / _KNOT_STEP)
    return float(min(max(k, lo), hi))


def _check_real_arg(x):
    # longdouble arguments keep their extra digits through the dispatch
    xf = float(x)
    if not isinstance(x, np.longdouble):
        x = xf
    if not math.isfinite(xf):
        raise DomainError("airy functions require a finite argument")
    if abs(xf) > _RANGE_LIMIT:
        raise RangeError(f"airy functions are evaluated on |x| <= {_RANGE_LIMIT:g}")
    if xf > _OVERFLOW_X:
        raise RangeError(
            "Ai underflows and Bi overflows double precision beyond "
            f"x = {_OVERFLOW_X:g}"
        )
    return x


def _airy_real(x):
    x = _check_real_arg(x)
    if x > _ASYM_CUT_POS:
        return _asym_pos(x)
    if x > _MACLAURIN_CUT_HI:
        # Ai from the stepped knots, Bi from the cancellation-free Maclaurin.
        k = _nearest_knot(x, 4.5, _ASYM_CUT_POS)
        ai0, aip0 = _POS_KNOTS[k]
        ai, aip = _taylor_eval(_taylor_coeffs(_LD(k), ai0, aip0, 34), _LD(x) - _LD(k))
        _, _, bi, bip = _maclaurin_all(x)
        return ai, aip, bi, bip
    if x >= _MACLAURIN_CUT_LO:
        return _maclaurin_all(x)
    if x >= _ASYM_CUT_NEG:
        k = _nearest_knot(x, _ASYM_CUT_NEG, -7.25)
        ai0, aip0, bi0, bip0 = _NEG_KNOTS[k]
        h = _LD(x) - _LD(k)
        ai, aip = _taylor_eval(_taylor_coeffs(_LD(k), ai0, aip0, 34), h)
        bi, bip = _taylor_eval(_taylor_coeffs(_LD(k), bi0, bip0, 34), h)
        return ai, aip, bi, bip
    return _asym_neg(x)


def airy_ai(x: float) -> float:
    """Airy function Ai on [-120, 120]."""
    return float(_airy_real(x)[0])


def airy_ai_prime(x: float) -> float:
    """Derivative Ai' on [-120, 120]."""
    return float(_airy_real(x)[1])


def airy_bi(x: float) -> float:
    """Airy function Bi on [-120, 104]."""
    return float(_airy_real(x)[2])


def airy_bi_prime(x: float) -> float:
    """Derivative Bi' on [-120, 104]."""
    return float(_airy_real(x)[3])


# ---------------------------------------------------------------------------
# complex plane

_OMEGA = _CLD(-0.5) + 1j * (np.sqrt(_LD(3)) / 2)
_COMPLEX_TAYLOR_RADIUS = 8.0
_COMPLEX_SECTOR = 2.5
_COMPLEX_RANGE = 40.0


def _airy_complex_taylor(z):
    z = _CLD(z)
    z2 = z * z
    z3 = z2 * z
    a = _CLD(1)
    b = z
    f, g = a, b
    for k in range(1, 400):
        a = a * z3 / ((3 * k - 1) * (3 * k))
        b = b * z3 / ((3 * k) * (3 * k + 1))
        f += a
        g += b
        if abs(a) + abs(b) < 1e-22 * (abs(f) + abs(g)):
            break
    return _AI_ZERO * f + _AI_PRIME_ZERO * g


def _airy_complex_asym(z):
    z = _CLD(z)
    xi = _LD(2) / 3 * z * np.sqrt(z)
    s = _CLD(1)
    u = _LD(1)
    sgn = 1
    prev = None
    for k in range(1, 40):
        u = u * ((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / _LD(216 * k * (2 * k - 1))
        t = u / xi**k
        if prev is not None and abs(t) > prev:
            break
        sgn = -sgn
        s += sgn * t
        prev = abs(t)
        if prev < 1e-20:
            break
    return np.exp(-xi) * s / (2 * _SQRT_PI * z**_CLD(0.25))


def _airy_complex_ladder(z):
    # Near the positive real axis at moderate |z| the Maclaurin series
    # cancels catastrophically (growing f, g against tiny Ai). Seed from
    # the real-axis values and Taylor-step parallel to the imaginary
    # axis; |Ai| grows off-axis, so injected error shrinks relative to it.
    x0 = z.real
    f, fp = _airy_real(x0)[:2]
    f, fp = _CLD(f), _CLD(fp)
    steps = max(1, int(math.ceil(abs(z.imag))))
    h = _CLD(1j * z.imag / steps)
    zc = _CLD(x0)
    for _ in range(steps):
        c = _taylor_coeffs(zc, f, fp, 40)
        f, fp = _taylor_eval(c, h)
        zc = zc + h
    return f


def airy_ai_complex(z: complex) -> complex:
    """Ai on the disc |z| <= 40."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("airy_ai_complex requires a finite argument")
    if abs(z) > _COMPLEX_RANGE:
        raise RangeError(f"airy_ai_complex is evaluated on |z| <= {_COMPLEX_RANGE:g}")
    if 5.2 <= z.real <= 8.2 and abs(z.imag) <= 5.0:
        return complex(_airy_complex_ladder(z))
    if abs(z) <= _COMPLEX_TAYLOR_RADIUS:
        return complex(_airy_complex_taylor(z))
    if abs(math.atan2(z.imag, z.real)) <= _COMPLEX_SECTOR:
        return complex(_airy_complex_asym(z))
    # Near the negative axis, rotate onto the adjacent principal sectors.
    zc = _CLD(z)
    v1 = _airy_complex_asym(_OMEGA * zc)
    v2 = _airy_complex_asym(_OMEGA * _OMEGA * zc)
    return complex(-_OMEGA * v1 - _OMEGA * _OMEGA * v2)


# ---------------------------------------------------------------------------
# gamma

# Stirling series coefficients B_{2n} / (2n (2n-1)), exact rationals.
_STIRLING = [
    (1, 12),
    (-1, 360),
    (1, 1260),
    (-1, 1680),
    (1, 1188),
    (-691, 360360),
    (1, 156),
    (-3617, 122400),
    (43867, 244188),
]
_STIRLING_CUT = _LD(12)
_HALF_LOG_2PI = _LD("0.918938533204672741780329736406")


def gamma_fn(x: float) -> float:
    """Gamma function for x > 0 (Stirling series, longdouble intermediates).

    Arguments below 12 are lifted by the recurrence before the asymptotic
    series is applied, keeping the series truncation under 1e-19 relative.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0:
        raise DomainError("gamma_fn is defined here for x > 0 only")
    if x > 171.62:
        raise RangeError("gamma_fn overflows double precision beyond x = 171.62")
    shift = _LD(1)
    xl = _LD(x)
    while xl < _STIRLING_CUT:
        shift *= xl
        xl += 1
    series = _LD(0)
    xp = xl
    x2 = xl * xl
    for num, den in _STIRLING:
        series += _LD(num) / (_LD(den) * xp)
        xp *= x2
    lg = (xl - _LD(0.5)) * np.log(xl) - xl + _HALF_LOG_2PI + series
    return float(np.exp(lg) / shift)


# ---------------------------------------------------------------------------
# quadrature

_MAX_RULE = 4096


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of a Gauss rule.

    kind is one of "legendre" ([-1,1], unit weight), "jacobi" ([0,1],
    weight x**a_exp), "chebyshev" ([-1,1], weight sqrt(1-x^2)).
    """

    nodes: np.ndarray
    weights: np.ndarray
    kind: str
    a_exp: float | None = None


def gauss_legendre(m: int) -> QuadratureRule:
    """Gauss-Legendre rule on [-1, 1], exact through degree 2m-1."""
    m = int(m)
    if not 1 <= m <= _MAX_RULE:
        raise DomainError(f"gauss_legendre needs 1 <= m <= {_MAX_RULE}")
    i = np.arange(m)
    x = np.cos(np.pi * (4 * i + 3) / (4 * m + 2))
    dp = np.ones_like(x)
    for _ in range(100):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for k in range(2, m + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        if m == 1:
            p0 = np.ones_like(x)
        dp = m * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    order = np.argsort(x)
    return QuadratureRule(nodes=x[order], weights=w[order], kind="legendre")


def _gauss_legendre_ld(m):
    """Longdouble Gauss-Legendre nodes and weights on [-1, 1].

    Private: the Fredholm determinants need rule data coherent to
    ~1e-19 so that the near-singular resolvent does not amplify
    node-weight rounding into the log-determinant.
    """
    m = int(m)
    i = np.arange(m)
    x = np.cos(np.pi * (4 * i + 3) / (4 * m + 2)).astype(np.longdouble)
    dp = np.ones_like(x)
    for _ in range(100):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for k in range(2, m + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        if m == 1:
            p0 = np.ones_like(x)
        dp = m * (x * p1 - p0) / (x * x - 1)
        dx = p1 / dp
        x -= dx
        if np.max(np.abs(dx)) < 5e-19:
            break
    w = 2 / ((1 - x * x) * dp * dp)
    order = np.argsort(x)
    return x[order], w[order]


def gauss_jacobi(m: int, a_exp: float) -> QuadratureRule:
    """Gauss rule on [0, 1] against the weight x**a_exp, a_exp > -1."""
    m = int(m)
    a = float(a_exp)
    if not 1 <= m <= _MAX_RULE:
        raise DomainError(f"gauss_jacobi needs 1 <= m <= {_MAX_RULE}")
    if not (math.isfinite(a) and a > -1):
        raise DomainError("gauss_jacobi weight exponent must satisfy a_exp > -1")
    from scipy.linalg import eigh_tridiagonal

    # Recurrence of Jacobi polynomials with (A, B) = (0, a_exp) on [-1, 1],
    # in extended precision. ad[k] = a_k, bo[k] = b_{k+1} (orthonormal form).
    al = _LD(a)
    kk = np.arange(1, m + 1, dtype=np.longdouble)
    ad = np.empty(m, dtype=np.longdouble)
    ad[0] = al / (al + 2)
    if m > 1:
        ad[1:] = al * al / ((2 * kk[:-1] + al) * (2 * kk[:-1] + al + 2))
    bo = np.sqrt(
        4 * kk * kk * (kk + al) ** 2
        / ((2 * kk + al) ** 2 * ((2 * kk + al) ** 2 - 1))
    )
    mu0 = _LD(2) ** (al + 1) / (al + 1)

    # Eigenvalues of the double-precision Jacobi matrix seed a Newton polish.
    if m == 1:
        x = np.array([float(ad[0])]).astype(np.longdouble)
    else:
        t = eigh_tridiagonal(
            ad.astype(float), bo[:-1].astype(float), eigvals_only=True
        )
        x = t.astype(np.longdouble)

    p0 = 1 / np.sqrt(mu0)
    for _ in range(2):
        pk = np.full(m, p0, dtype=np.longdouble)
        pm = np.zeros(m, dtype=np.longdouble)
        dk = np.zeros(m, dtype=np.longdouble)
        dm = np.zeros(m, dtype=np.longdouble)
        for k in range(m):
            bk = bo[k - 1] if k >= 1 else _LD(0)
            pk, pm = ((x - ad[k]) * pk - bk * pm) / bo[k], pk
            dk, dm = (pm + (x - ad[k]) * dk - bk * dm) / bo[k], dk
        x = x - pk / dk
    # Christoffel weights: 1 / sum_{k<m} p_k(x_i)^2 for the orthonormal family.
    s = np.full(m, p0 * p0, dtype=np.longdouble)
    pk = np.full(m, p0, dtype=np.longdouble)
    pm = np.zeros(m, dtype=np.longdouble)
    for k in range(m - 1):
        bk = bo[k - 1] if k >= 1 else _LD(0)
        pk, pm = ((x - ad[k]) * pk - bk * pm) / bo[k], pk
        s += pk * pk
    nodes = ((1 + x) / 2).astype(float)
    weights = (_LD(2) ** (-(al + 1)) / s).astype(float)
    return QuadratureRule(nodes=nodes, weights=weights, kind="jacobi", a_exp=a)


def gauss_chebyshev(m: int) -> QuadratureRule:
    """Gauss rule on [-1, 1] against the weight sqrt(1 - x^2)."""
    m = int(m)
    if not 1 <= m <= _MAX_RULE:
        raise DomainError(f"gauss_chebyshev needs 1 <= m <= {_MAX_RULE}")
    i = np.arange(1, m + 1, dtype=float)
    th = i * np.pi / (m + 1)
    nodes = np.cos(th)[::-1]
    weights = (np.pi / (m + 1)) * np.sin(th) ** 2
    return QuadratureRule(nodes=nodes.copy(), weights=weights[::-1].copy(), kind="chebyshev")


# ---------------------------------------------------------------------------
# principal value transform

_SQRT2 = math.sqrt(2.0)


def pv_sqrt_transform(cheb_coeffs, x: float) -> float:
    """Principal value of int sqrt(2 - t^2) f(t) / (t - x) dt over E.

    E = [-sqrt2, sqrt2] and cheb_coeffs are the Chebyshev-U coefficients of
    the rescaled density, f(sqrt2 * t) = sum_k c_k U_k(t). Each basis element
    maps in closed form: pv int sqrt(1-t^2) U_{k-1}(t)/(t-y) dt = -pi T_k(y),
    so no quadrature touches the singularity.
    """
    x = float(x)
    if not math.isfinite(x) or abs(x) >= _SQRT2:
        raise DomainError("pv_sqrt_transform needs x strictly inside (-sqrt2, sqrt2)")
    y = x / _SQRT2
    c = np.asarray(cheb_coeffs, dtype=float)
    if c.ndim != 1 or c.size == 0:
        raise DomainError("cheb_coeffs must be a nonempty 1-d sequence")
    # s = sum_k c_k T_{k+1}(y)
    t0, t1 = 1.0, y
    s = 0.0
    for ck in c:
        t0, t1 = t1, 2.0 * y * t1 - t0
        s += ck * t0
    return float(-_SQRT2 * math.pi * s)
