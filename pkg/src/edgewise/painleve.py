"""Painleve-XXXIV transcendents from asymptotic boundary data.

The Jimbo-Miwa-Okamoto sigma function and the associated P-XXXIV
solution q are computed by integrating a five-component polynomial
first-order flow in (a, b, p, q, r).  The flow preserves two algebraic
constraints,

    q = x/2 - b - a**2        and        4*(p**2 + r*q) = alpha**2,

and sigma = x**2/4 - a, q = sigma'.  Boundary data at large positive x
consist of an algebraic series in x**(-3/2) plus an exponentially small
connection mode proportional to

    kappa = -(e^{i pi alpha} - gamma) * Gamma(1+alpha) / (2^{3(1+alpha)} pi).

gamma only enters through kappa, and the mode that carries it decays
like exp(-(4/3) x^(3/2)), so naive integration of the raw system from
x0 ~ 8 would bury gamma under rounding noise of the O(x**2) state.
Integration therefore runs in two phases:

* above x = 4 the unknown is the deviation from the truncated series.
  The series is built so that its defect concentrates in the r-equation;
  the deviation starts at exactly zero and relative error control then
  acts on the connection-mode scale rather than on the state scale.
* below x = 4 the raw polynomial system is integrated.

Series, chain and defect coefficients are assembled once per alpha in
exact rational arithmetic (polynomials in alpha over Q).  All the large
positive powers that must cancel in the defect cancel exactly, so the
evaluated defect carries no floating-point cancellation residue.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.integrate import solve_ivp

from . import fredholm as _fredholm
from .errors import DomainError, NumericalError, PoleError
from .special import airy_ai, airy_ai_prime, gamma_fn, gauss_legendre

_LD = np.longdouble
_PI_LD = _LD("3.14159265358979323846264338328")

# Default launch abscissa candidates, preferred first.  The admissible
# window moves right as alpha grows (the series coefficients grow) and is
# capped above by representability of the connection mode.
_T0_CANDIDATES = (8.0, 9.0, 10.0, 12.0, 14.0, 17.0, 20.0, 25.0, 30.0, 38.0,
                  7.5, 7.0, 6.5)
_X_SWITCH = 4.0
_SERIES_TOL = 1e-10      # admissibility: last retained algebraic term, relative
_EXP_FLOOR = 1e-290      # admissibility: connection mode must stay representable


# --------------------------------------------------------------------------
# exact coefficient tables
# --------------------------------------------------------------------------

def _poly(den, *pairs):
    """Polynomial in alpha as {degree: Fraction}, pairs are (degree, num)."""
    return {d: Fraction(n, den) for d, n in pairs}


# Algebraic series a(x) = x**2/4 + alpha*sqrt(x) + sum a_k x**((1-3k)/2).
# a_1 is forced by the constraint; the higher coefficients follow from the
# recursion generated by the sigma-form and were cross-checked against the
# P-XXXIV equation in exact arithmetic.
_A_SERIES = (
    _poly(4, (2, 1)),
    _poly(32, (3, -4), (1, -1)),
    _poly(64, (4, 8), (2, 7)),
    _poly(2048, (5, -336), (3, -664), (1, -105)),
    _poly(1024, (6, 256), (4, 932), (2, 507)),
    _poly(65536, (7, -27456), (5, -163248), (3, -198396), (1, -25025)),
    _poly(4096, (8, 3072), (6, 27532), (4, 61185), (2, 26261)),
    _poly(8388608, (9, -11824384), (7, -150820608), (5, -544475232),
          (3, -518329776), (1, -56581525)),
    _poly(262144, (10, 720896), (8, 12532800), (6, 67924512),
          (4, 117645272), (2, 43360295)),
    _poly(268435456, (11, -1483422720), (9, -33984353024), (7, -261319231872),
          (5, -732500475744), (3, -595631260140), (1, -58561878375)),
    _poly(4194304, (12, 47710208), (10, 1401842432), (8, 14655868416),
          (6, 61499685840), (4, 90634444004), (2, 29908125975)),
    _poly(17179869184, (13, -410337546240), (11, -15123300476928),
          (9, -207935109778176), (7, -1235193522503424),
          (5, -2937574565734512), (3, -2129663970135720),
          (1, -193039471750125)),
    _poly(16777216, (14, 855638016), (12, 38827804928), (10, 683567393088),
          (8, 5511042475008), (6, 19576707835128), (4, 25642631632032),
          (2, 7763718516925)),
)

# Connection-mode bracket: the mode is
#   kappa * x**(-1-3*alpha/2) * E(x) * (1 + g1*x**(-3/2) + ... + g10*x**-15)
# with E(x) = exp(-(4/3) x**(3/2)).  Depth 10 keeps the bracket truncation
# below 1e-8 relative at x = 4 so the mode coefficient survives the descent.
_G_BRACKET = (
    _poly(24, (2, -21), (1, -33), (0, -17)),
    _poly(1152, (4, 441), (3, 2124), (2, 3711), (1, 3408), (0, 1225)),
    _poly(82944, (6, -9261), (5, -90153), (4, -346518), (3, -705699),
          (2, -908262), (1, -649989), (0, -199115)),
    _poly(7962624, (8, 194481), (7, 3175200), (6, 21551886), (5, 80358804),
          (4, 188757891), (3, 309355956), (2, 328506702), (1, 207528240),
          (0, 57482425)),
    _poly(955514880, (10, -4084101), (9, -100435545), (8, -1061948475),
          (7, -6369452010), (6, -24386997753), (5, -65044094715),
          (4, -128759880465), (3, -180485731530), (2, -173420158731),
          (1, -100067700225), (0, -25906005125)),
    _poly(137594142720, (12, 85766121), (11, 2961556668), (10, 45012639357),
          (9, 397774373940), (8, 2287141803198), (7, 9182635638804),
          (6, 27416568079881), (5, 63399092153400), (4, 110139555049686),
          (3, 142051868141688), (2, 125901725941557), (1, 68378331142800),
          (0, 16802732571625)),
    _poly(3302259425280, (14, -257298363), (13, -11872481607),
          (12, -245322111888), (11, -3003021875259), (10, -24344965491039),
          (9, -139249526988906), (8, -590908731120729),
          (7, -1951507067534667), (6, -5151605549281623),
          (5, -10661803536474162), (4, -17241663943634553),
          (3, -20686313129616099), (2, -17380199903804580),
          (1, -8974845334578075), (0, -2118386389744625)),
    _poly(634033809653760, (16, 5403265623), (15, 321108357024),
          (14, 8658730535364), (13, 140339038494312), (12, 1528826489429670),
          (11, 11895594775289784), (10, 68990318584422912),
          (9, 310159339434239976), (8, 1121891664358607301),
          (7, 3324532640915282760), (6, 7976951716935134304),
          (5, 15496637214157313112), (4, 23482828490882049846),
          (3, 26870261570383073832), (2, 21526392607245051780),
          (1, 10699211340655044000), (0, 2441308339289194375)),
    _poly(136951302885212160, (18, -113468578083), (17, -8440672798215),
          (16, -287867136099123), (15, -5969040697721052),
          (14, -84204521259196842), (13, -858220820127877878),
          (12, -6572421316852445790), (11, -39057008486942056896),
          (10, -185983535055364140897), (9, -730824283290404370069),
          (8, -2400115718958855742341), (7, -6545111602551700192992),
          (6, -14833488171266218358838), (5, -27174973153375841066118),
          (4, -39466117680736359397986), (3, -43192776678411054090780),
          (2, -33400243930247977839975), (1, -16047309149603751828375),
          (0, -3560332516566059609375)),
    _poly(32868312692450918400, (20, 2382840139743), (19, 216887082107220),
          (18, 9126984019222125), (17, 235685820775791960),
          (16, 4181903209628612433), (15, 54150567951139597080),
          (14, 531453720374154677790), (13, 4066973726438859278760),
          (12, 24910220097781848978003), (11, 125465338155944981240100),
          (10, 531964826270078579283195), (9, 1916640490971438463109400),
          (8, 5850609600790453866731523), (7, 15143251212256264901675280),
          (6, 32545932128098781958472590), (5, 57366166833268832403910080),
          (4, 79925908772991020768145873), (3, 84672038272764939130396620),
          (2, 63351070333045987239181725), (1, 29612625690207722950326000),
          (0, 6409726132696745242759375)),
)

_HALF = Fraction(1, 2)
_DELTA_POLY = {0: Fraction(-1), 1: Fraction(-3, 2)}   # exponent shift -1 - 3a/2


def _padd(p1, p2):
    out = dict(p1)
    for d, c in p2.items():
        out[d] = out.get(d, Fraction(0)) + c
        if out[d] == 0:
            del out[d]
    return out


def _pmul(p1, p2):
    out = {}
    for d1, c1 in p1.items():
        for d2, c2 in p2.items():
            d = d1 + d2
            c = out.get(d, Fraction(0)) + c1 * c2
            if c == 0:
                out.pop(d, None)
            else:
                out[d] = c
    return out


def _pscale(p, s):
    s = Fraction(s)
    return {} if s == 0 else {d: c * s for d, c in p.items()}


# Termlists are {k2: poly} with k2 twice the x-exponent; exponential-mode
# lists carry an implicit extra factor x**delta * E(x).

def _tadd(*ts):
    out = {}
    for t in ts:
        for k, p in t.items():
            out[k] = _padd(out.get(k, {}), p)
            if not out[k]:
                del out[k]
    return out


def _tscale(t, s):
    return {k: _pscale(p, s) for k, p in t.items() if _pscale(p, s)}


def _tmul(t1, t2):
    out = {}
    for k1, p1 in t1.items():
        for k2, p2 in t2.items():
            k = k1 + k2
            out[k] = _padd(out.get(k, {}), _pmul(p1, p2))
            if not out[k]:
                del out[k]
    return out


def _tdx(t, exponential=False):
    """d/dx of a termlist; the exponential flag adds the E'(x) = -2 sqrt(x) E(x)
    and x**delta contributions."""
    out = {}
    for k, p in t.items():
        mult = {0: Fraction(k, 2)}
        if exponential:
            mult = _padd(mult, _DELTA_POLY)
        dn = _pmul(p, mult)
        if dn:
            out[k - 2] = _padd(out.get(k - 2, {}), dn)
            if not out[k - 2]:
                del out[k - 2]
        if exponential:
            out[k + 1] = _padd(out.get(k + 1, {}), _pscale(p, -2))
            if not out[k + 1]:
                del out[k + 1]
    return out


def _peval_ld(p, alpha_ld):
    acc = _LD(0)
    for d in sorted(p, reverse=True):
        c = p[d]
        acc += (_LD(c.numerator) / _LD(c.denominator)) * alpha_ld ** d
    return acc


class _Chain:
    """Per-alpha compiled series: state backbone, connection mode, defect."""

    def __init__(self, alpha):
        self.alpha = float(alpha)
        a_alg = {4: _poly(4, (0, 1)), 1: {1: Fraction(1)}}
        for k, coeff in enumerate(_A_SERIES, start=1):
            if coeff:
                a_alg = _tadd(a_alg, {1 - 3 * k: coeff})
        a_em = {0: {0: Fraction(1)}}
        for j, g in enumerate(_G_BRACKET, start=1):
            a_em = _tadd(a_em, {-3 * j: g})

        half_x = {2: {0: _HALF}}
        q_alg = _tadd(half_x, _tscale(_tdx(a_alg), -1))
        q_em = _tscale(_tdx(a_em, exponential=True), -1)
        b_alg = _tadd(half_x, _tscale(q_alg, -1), _tscale(_tmul(a_alg, a_alg), -1))
        b_em = _tadd(_tscale(q_em, -1), _tscale(_tmul(a_alg, a_em), -2))
        p_alg = _tadd(_tmul(a_alg, q_alg), _tscale(_tdx(q_alg), -_HALF))
        p_em = _tadd(_tmul(a_alg, q_em), _tmul(a_em, q_alg),
                     _tscale(_tdx(q_em, exponential=True), -_HALF))
        r_alg = _tadd(_tdx(p_alg), _tmul(q_alg, b_alg))
        r_em = _tadd(_tdx(p_em, exponential=True), _tmul(q_alg, b_em),
                     _tmul(q_em, b_alg))

        # The chain construction satisfies the a, b, p, q equations
        # identically; the whole series defect sits in the r equation.
        d_alg = _tadd(_tdx(r_alg),
                      _tscale(_tmul(b_alg, p_alg), -2),
                      _tscale(_tmul(a_alg, r_alg), 2))
        d_em = _tadd(_tdx(r_em, exponential=True),
                     _tscale(_tadd(_tmul(b_alg, p_em), _tmul(b_em, p_alg)), -2),
                     _tscale(_tadd(_tmul(a_alg, r_em), _tmul(a_em, r_alg)), 2))
        # Quadratic connection-mode part of the defect (E**2 terms): needed so
        # that the deviation phase sees the right forcing at first order in
        # the omitted E**2 content of the backbone.
        d_e2 = _tadd(_tscale(_tmul(b_em, p_em), -2), _tscale(_tmul(a_em, r_em), 2))

        al = _LD(self.alpha)
        self._delta = float(-1 - 1.5 * self.alpha)
        self._lists = {}
        for name, t, em in (("a", a_alg, 0), ("b", b_alg, 0), ("p", p_alg, 0),
                            ("q", q_alg, 0), ("r", r_alg, 0),
                            ("a_em", a_em, 1), ("b_em", b_em, 1),
                            ("p_em", p_em, 1), ("q_em", q_em, 1),
                            ("r_em", r_em, 1),
                            ("def", d_alg, 0), ("def_em", d_em, 1),
                            ("def_e2", d_e2, 2)):
            pows, coefs = [], []
            for k in sorted(t, reverse=True):
                c = _peval_ld(t[k], al)
                if c != 0:
                    pows.append(_LD(k) / 2 + em * _LD(self._delta))
                    coefs.append(c)
            self._lists[name] = (np.array(pows, dtype=_LD),
                                 np.array(coefs, dtype=_LD))
        # The last retained coefficient drives the admissibility window;
        # zero for alpha = 0 where the algebraic series terminates at x**2/4.
        self._a_last = abs(_peval_ld(_A_SERIES[-1], al))
        self._k_last = len(_A_SERIES)

    def _ev(self, name, x):
        pows, coefs = self._lists[name]
        xs = np.atleast_1d(np.asarray(x, dtype=_LD))
        if len(pows) == 0:
            res = np.zeros(xs.shape, dtype=_LD)
        else:
            res = np.power(xs[:, None], pows[None, :]) @ coefs
        return res if np.ndim(x) else res[0]

    def state_many(self, x, kappa):
        """Backbone state rows (a, b, p, q, r), shape (5, n), complex."""
        xs = np.atleast_1d(np.asarray(x, dtype=_LD))
        emode = np.exp(-(_LD(4) / 3) * xs ** _LD(1.5))
        out = []
        for name in ("a", "b", "p", "q", "r"):
            alg = self._ev(name, xs)
            em = self._ev(name + "_em", xs)
            out.append(np.asarray(alg, dtype=np.complex128)
                       + complex(kappa) * np.asarray(em * emode,
                                                     dtype=np.complex128))
        return np.stack(out)

    def state_precise(self, x, kappa):
        """Backbone state at scalar x in extended precision."""
        xl = _LD(x)
        emode = np.exp(-(_LD(4) / 3) * xl ** _LD(1.5))
        kap = np.clongdouble(kappa)
        return np.array([np.clongdouble(self._ev(n, xl))
                         + kap * np.clongdouble(self._ev(n + "_em", xl) * emode)
                         for n in ("a", "b", "p", "q", "r")])

    def defect(self, x, kappa):
        """Residual of the r-equation along the truncated backbone."""
        xl = _LD(x)
        emode = np.exp(-(_LD(4) / 3) * xl ** _LD(1.5))
        val = (np.clongdouble(self._ev("def", xl))
               + np.clongdouble(kappa) * np.clongdouble(self._ev("def_em", xl) * emode)
               + np.clongdouble(kappa) ** 2
               * np.clongdouble(self._ev("def_e2", xl) * emode * emode))
        return complex(val)

    def last_term_rel(self, x):
        """Relative size of the last retained algebraic term at x."""
        if self._a_last == 0:
            return 0.0
        pw = _LD(1 - 3 * self._k_last) / 2
        return float(self._a_last * _LD(x) ** pw / (_LD(x) ** 2 / 4))

    def em_terms(self, which):
        """(powers, coeffs) of the connection-mode bracket for 'a' or 'q'."""
        return self._lists[which + "_em"]


_CHAIN_CACHE = {}


def _chain_for(alpha):
    key = float(alpha)
    if key not in _CHAIN_CACHE:
        if len(_CHAIN_CACHE) > 24:
            _CHAIN_CACHE.pop(next(iter(_CHAIN_CACHE)))
        _CHAIN_CACHE[key] = _Chain(key)
    return _CHAIN_CACHE[key]


# --------------------------------------------------------------------------
# parameters and state containers
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PainleveParams:
    """Parameter pair (alpha, gamma) of the transcendent family.

    alpha > -1 is the singularity exponent; gamma is the connection
    parameter (the thinning weight gamma in [0, 1] gives the classical
    deformations; gamma = e^{i pi alpha} switches the connection mode off).
    Weight-parameter uses additionally require gamma off the ray (-inf, 0);
    that is enforced where it matters, not here, so that the mode-free
    gamma = e^{i pi alpha} stays admissible for every alpha.
    """

    alpha: float
    gamma: complex

    def __post_init__(self):
        a = self.alpha
        if not (isinstance(a, (int, float)) and math.isfinite(a) and a > -1):
            raise DomainError(f"alpha must be a finite real > -1, got {a!r}")
        g = complex(self.gamma)
        if not (math.isfinite(g.real) and math.isfinite(g.imag)):
            raise DomainError(f"gamma must be finite, got {self.gamma!r}")

    @property
    def exp_ipa(self):
        a = self.alpha
        if a == int(a):
            return complex((-1) ** int(a), 0.0)
        return cmath.exp(1j * math.pi * a)

    @property
    def kappa(self):
        """Connection-mode amplitude -(e^{i pi alpha} - gamma) c_alpha."""
        c_alpha = gamma_fn(1.0 + self.alpha) / (2.0 ** (3 * (1 + self.alpha)) * math.pi)
        return -(self.exp_ipa - complex(self.gamma)) * c_alpha


@dataclass(frozen=True)
class LaxState:
    """State of the five-component flow at abscissa x."""

    x: float
    a: complex
    b: complex
    p: complex
    q: complex
    r: complex

    def constraint_residuals(self, alpha):
        """(|q - (x/2 - b - a^2)|, |4(p^2 + r q) - alpha^2|)."""
        c1 = abs(self.q - (self.x / 2 - self.b - self.a * self.a))
        c2 = abs(4.0 * (self.p * self.p + self.r * self.q) - alpha * alpha)
        return float(c1), float(c2)


@dataclass(frozen=True)
class SpecconData:
    """Closed-form (alpha, gamma) = (0, 1) spectral data at one abscissa."""

    a: float
    b: float
    q1_21: float
    q2_12: float
    q2_11: float


class LaxTrajectory:
    """Immutable solved trajectory on a decreasing grid from t0 to t_min.

    grid holds the accepted step abscissae, states the five-component
    state at each of them, dense_coefficients the per-step interpolant
    coefficient stacks.  Evaluation between grid points goes through the
    dense output (plus the series backbone above the phase switch).
    """

    def __init__(self, params, chain, kappa, t0, t_min, x_switch,
                 sol_dev, sol_raw, rtol, *, sol_z=None, z_cut=None):
        self.params = params
        self.t0 = float(t0)
        self.t_min = float(t_min)
        self.rtol = float(rtol)
        self._chain = chain
        self._kappa = kappa
        self._x_switch = None if x_switch is None else float(x_switch)
        self._sol_dev = sol_dev
        self._sol_raw = sol_raw
        self._sol_z = sol_z
        self._z_cut = z_cut

        if sol_z is not None:
            tz = np.asarray(sol_z.t, dtype=float)
            tz = tz[tz <= self.t0 + 1e-12]
            if tz.size == 0 or tz[0] < self.t0 - 1e-12:
                tz = np.concatenate([[self.t0], tz])
            ts = [tz]
        else:
            ts = [np.asarray(sol_dev.t, dtype=float)]
        if sol_raw is not None:
            ts.append(np.asarray(sol_raw.t, dtype=float)[1:])
        self.grid = np.concatenate(ts)
        if not np.all(np.diff(self.grid) < 0):
            raise NumericalError("trajectory grid is not strictly decreasing")
        vecs = self.states_many(self.grid)
        if not np.all(np.isfinite(vecs)):
            raise NumericalError("non-finite state on trajectory grid")
        self.states = tuple(
            LaxState(float(t), *(complex(v) for v in vecs[:, i]))
            for i, t in enumerate(self.grid))
        dense = []
        for sol in (sol_z, sol_dev, sol_raw):
            if sol is not None:
                dense += [seg.F if hasattr(seg, "F") else seg.Q
                          for seg in sol.sol.interpolants]
        self.dense_coefficients = tuple(np.asarray(f) for f in dense)

    def _check_range(self, t):
        if not (self.t_min - 1e-12 <= t <= self.t0 + 1e-12):
            raise DomainError(
                f"t = {t} outside trajectory range [{self.t_min}, {self.t0}]")

    def states_many(self, ts):
        """(5, n) complex state array at the given abscissae."""
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        for t in ts:
            self._check_range(t)
        out = np.empty((5, ts.size), dtype=np.complex128)
        if self._sol_z is not None:
            hi = ts >= self._z_cut if self._sol_raw is not None \
                else np.ones(ts.shape, dtype=bool)
            if np.any(hi):
                th = ts[hi]
                emode = np.exp(-(4.0 / 3.0) * th ** 1.5)
                out[:, hi] = _a5_many(th) + emode[None, :] * self._sol_z.sol(th)
            if np.any(~hi):
                out[:, ~hi] = self._sol_raw.sol(ts[~hi])
            return out
        hi = ts >= self._x_switch if self._sol_raw is not None \
            else np.ones(ts.shape, dtype=bool)
        if np.any(hi):
            th = np.clip(ts[hi], None, self.t0)
            back = self._chain.state_many(th, self._kappa)
            dev = self._sol_dev.sol(th)
            out[:, hi] = back + dev
        if np.any(~hi):
            out[:, ~hi] = self._sol_raw.sol(ts[~hi])
        return out

    def state_at(self, t):
        v = self.states_many([t])[:, 0]
        return LaxState(float(t), *(complex(c) for c in v))


# --------------------------------------------------------------------------
# initialization
# --------------------------------------------------------------------------

def _constraint2_at(chain, kappa, alpha, t):
    a, b, p, q, r = chain.state_precise(t, kappa)
    return abs(complex(4.0 * (p * p + r * q)) - alpha * alpha)


def _window(params):
    """Admissible [lo, hi] for the launch abscissa t0."""
    chain = _chain_for(params.alpha)
    if chain._a_last == 0:
        lo = 1.0
    else:
        # where the last retained term falls below _SERIES_TOL relative to x**2/4
        expo = 2.0 - (1.0 - 3.0 * chain._k_last) / 2.0
        lo = float((4.0 * chain._a_last / _SERIES_TOL) ** (1.0 / expo))
        lo = max(lo, 1.0)
    # The series criterion alone does not bound the quadratic-constraint
    # residual of the boundary state; push the floor up until that residual
    # sits at half the documented 1e-9 budget.
    kappa_c = complex(params.kappa)
    alpha = params.alpha

    def bad(t):
        return _constraint2_at(chain, kappa_c, alpha, t) > 5e-10

    if bad(lo):
        t_hi = lo
        for _ in range(400):
            t_hi *= 1.05
            if not bad(t_hi):
                break
        else:
            return lo, lo - 1.0   # empty window, reported by the callers
        t_lo = t_hi / 1.05
        for _ in range(40):
            m = 0.5 * (t_lo + t_hi)
            if bad(m):
                t_lo = m
            else:
                t_hi = m
        lo = t_hi
    kap = abs(params.kappa)
    if kap == 0.0:
        return lo, math.inf
    p = -1.0 - 1.5 * params.alpha

    def log_mode(t):
        return math.log(kap) + p * math.log(t) - (4.0 / 3.0) * t ** 1.5

    target = math.log(_EXP_FLOOR)
    t_hi = max(lo, 2.0)
    if log_mode(t_hi) <= target:
        return lo, t_hi
    step = t_hi
    while log_mode(t_hi + step) > target:
        t_hi += step
    a, b = t_hi, t_hi + step
    for _ in range(80):
        m = 0.5 * (a + b)
        if log_mode(m) > target:
            a = m
        else:
            b = m
    return lo, a


def init_lax(t0, params):
    """Series boundary state at t0; t0 must lie in the admissible window."""
    if not isinstance(params, PainleveParams):
        params = PainleveParams(*params)
    lo, hi = _window(params)
    if not (lo <= t0 <= hi):
        raise DomainError(
            f"t0 = {t0} outside the admissible launch window "
            f"[{lo:.3f}, {hi if math.isinf(hi) else round(hi, 3)}]: below it the "
            f"truncated series is unreliable, above it the connection mode "
            f"underflows and the gamma-dependence is lost")
    chain = _chain_for(params.alpha)
    vec = chain.state_precise(t0, params.kappa)
    return LaxState(float(t0), *(complex(v) for v in vec))


def _default_t0(params):
    lo, hi = _window(params)
    for cand in _T0_CANDIDATES:
        if lo <= cand <= hi:
            return cand
    if lo < hi:
        return min(max(lo * 1.02, lo + 0.05), hi)
    raise DomainError(
        f"no admissible launch abscissa: window [{lo:.3f}, {hi:.3f}] is empty")


# --------------------------------------------------------------------------
# the two-phase solve
# --------------------------------------------------------------------------

def _rhs_raw(x, y):
    a, b, p, q, r = y
    return [x / 2 - q,
            0.5 - x * a + 2 * p,
            r - q * b,
            2 * (a * q - p),
            2 * (b * p - a * r)]


_Z_TOP = 12.0   # launch abscissa of the amplitude form (alpha = 0)
_Z_CUT = 1.0    # below here the amplitude form hands off to the raw flow


def _a5_many(xs):
    """Exact alpha = 0 backbone (a, b, p, q, r) as a (5, n) array."""
    out = np.zeros((5, xs.size), dtype=np.complex128)
    out[0] = xs * xs / 4.0
    out[1] = xs / 2.0 - xs ** 4 / 16.0
    return out


def _rhs_zmode(x, z):
    """Amplitude flow for alpha = 0, where state = backbone + E(x) Z(x).

    E = exp(-(4/3) x**1.5) carries all the stiffness; Z itself obeys a
    mild system, so integrating it from 12 down to 1 amplifies nothing.
    The raw five-component descent would instead magnify its launch-point
    representation error by E(0)/E(x_launch), which for launches above
    x ~ 2 already forfeits the accuracy the deep-left evaluations need.
    """
    za, zb, zp, zq, zr = z
    a_b = x * x / 4.0
    b_b = x / 2.0 - x ** 4 / 16.0
    e = math.exp(-(4.0 / 3.0) * x ** 1.5)
    s = 2.0 * math.sqrt(x)
    return [s * za - zq,
            s * zb - x * za + 2.0 * zp,
            s * zp - b_b * zq + zr - e * zq * zb,
            s * zq - 2.0 * zp + 2.0 * a_b * zq + 2.0 * e * za * zq,
            s * zr + 2.0 * b_b * zp - 2.0 * a_b * zr
            + 2.0 * e * (zb * zp - za * zr)]


def solve_lax(params, t_min, *, rtol=1e-11, atol=1e-13, t0=None):
    """Integrate the five-component flow from series data down to t_min.

    The trajectory is returned with dense output; rtol must be >= 1e-12
    (interpolation error of the dense output stays below it).  A pole of
    the transcendent (possible for gamma outside the closed admissible
    set, e.g. real gamma > 1) raises PoleError with the abscissa.
    """
    if not isinstance(params, PainleveParams):
        params = PainleveParams(*params)
    if rtol < 1e-12:
        raise DomainError(f"rtol must be >= 1e-12, got {rtol}")
    if t0 is None:
        t0 = _default_t0(params)
    else:
        lo, hi = _window(params)
        if not (lo <= t0 <= hi):
            raise DomainError(
                f"t0 = {t0} outside the admissible launch window "
                f"[{lo:.3f}, {hi if math.isinf(hi) else round(hi, 3)}]")
    if not t_min < t0:
        raise DomainError(f"t_min = {t_min} must be below t0 = {t0}")

    chain = _chain_for(params.alpha)
    kappa = complex(params.kappa)

    if params.alpha == 0.0:
        # The algebraic backbone terminates at alpha = 0, so the whole
        # gamma-dependence is the mode amplitude Z and the state can be
        # integrated in amplitude form (see _rhs_zmode).  Launch at 12 or
        # above: there the truncated mode bracket is ~2e-12 accurate.
        top = max(_Z_TOP, t0)
        z0 = kappa * np.array(
            [chain._ev(n + "_em", top) for n in ("a", "b", "p", "q", "r")],
            dtype=np.complex128)
        cut = max(_Z_CUT, t_min)
        sol_z = solve_ivp(_rhs_zmode, (top, cut), z0, method="DOP853",
                          rtol=1e-13, atol=1e-18, dense_output=True)
        if sol_z.status != 0 or not np.all(np.isfinite(sol_z.y)):
            raise NumericalError(
                f"amplitude phase failed near x = {sol_z.t[-1]:.6f}: "
                f"{sol_z.message}")
        sol_raw = None
        if t_min < cut:
            emode = math.exp(-(4.0 / 3.0) * cut ** 1.5)
            y0 = _a5_many(np.array([cut]))[:, 0] + emode * sol_z.sol(cut)
            sol_raw = solve_ivp(_rhs_raw, (cut, t_min), y0, method="DOP853",
                                rtol=max(rtol / 100.0, 2e-14),
                                atol=max(atol / 100.0, 1e-16),
                                dense_output=True)
            if sol_raw.status != 0 or not np.all(np.isfinite(sol_raw.y)):
                raise PoleError(
                    f"integration broke down near t = {sol_raw.t[-1]:.6f}; "
                    f"the transcendent appears to have a pole there",
                    abscissa=float(sol_raw.t[-1]))
        traj = LaxTrajectory(params, chain, kappa, t0, t_min, None,
                             None, sol_raw, rtol, sol_z=sol_z, z_cut=cut)
        return _constraint_checked(traj, params.alpha, rtol)

    # The switch abscissa balances two error sources: below ~4 the mode
    # bracket's asymptotic tail blows up (divergent series), above ~4 the
    # raw phase amplifies its own injection noise over a longer span.
    x_switch = max(_X_SWITCH, t_min)

    def rhs_dev(x, d):
        a_s, b_s, p_s, q_s, r_s = chain.state_many(x, kappa)[:, 0]
        da, db, dp, dq, dr = d
        return [-dq,
                -x * da + 2 * dp,
                dr - q_s * db - b_s * dq - dq * db,
                2 * (a_s * dq + q_s * da + da * dq) - 2 * dp,
                2 * (b_s * dp + p_s * db - a_s * dr - r_s * da
                     + db * dp - da * dr) - chain.defect(x, kappa)]

    sol_dev = solve_ivp(rhs_dev, (t0, x_switch),
                        np.zeros(5, dtype=np.complex128), method="DOP853",
                        rtol=1e-12, atol=1e-60, dense_output=True,
                        first_step=1e-4)
    if sol_dev.status != 0:
        raise NumericalError(
            f"deviation phase failed near x = {sol_dev.t[-1]:.6f}: "
            f"{sol_dev.message}")

    sol_raw = None
    if t_min < x_switch:
        y0 = (np.asarray(chain.state_precise(x_switch, kappa)).astype(np.complex128)
              + sol_dev.sol(x_switch))
        sol_raw = solve_ivp(_rhs_raw, (x_switch, t_min), y0, method="DOP853",
                            rtol=max(rtol / 100.0, 2e-14),
                            atol=max(atol / 100.0, 1e-16),
                            dense_output=True)
        if sol_raw.status != 0 or not np.all(np.isfinite(sol_raw.y)):
            raise PoleError(
                f"integration broke down near t = {sol_raw.t[-1]:.6f}; "
                f"the transcendent appears to have a pole there",
                abscissa=float(sol_raw.t[-1]))

    traj = LaxTrajectory(params, chain, kappa, t0, t_min, x_switch,
                         sol_dev, sol_raw, rtol)
    return _constraint_checked(traj, params.alpha, rtol)


def _constraint_checked(traj, alpha, rtol):
    for st in traj.states:
        c1, c2 = st.constraint_residuals(alpha)
        scale = 1.0 + max(abs(st.a), abs(st.b), abs(st.p), abs(st.q), abs(st.r))
        if max(c1, c2) > 10.0 * rtol * scale:
            raise NumericalError(
                f"constraint drift {max(c1, c2):.3e} at t = {st.x:.4f} "
                f"exceeds {10.0 * rtol * scale:.3e}")
    return traj


def sigma_of(traj, t):
    """sigma(t) = t**2/4 - a(t) on the trajectory."""
    return t * t / 4.0 - complex(traj.states_many([t])[0, 0])


def q_of(traj, t):
    """q(t) on the trajectory (q = sigma')."""
    return complex(traj.states_many([t])[3, 0])


# --------------------------------------------------------------------------
# Hastings-McLeod Painleve-II
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PiiTrajectory:
    """Hastings-McLeod solution of u'' = t u + 2 u^3 with u ~ Ai at +inf.

    Above t_switch the stored object is the deviation w = u - Ai; adding
    Ai back at evaluation keeps the relative error near the machine
    floor even where u is exponentially small.
    """

    t0: float
    t_min: float
    t_switch: float
    _sol_w: object
    _sol_raw: object

    def _check(self, t):
        if not (self.t_min - 1e-12 <= t <= self.t0 + 1e-12):
            raise DomainError(f"t = {t} outside [{self.t_min}, {self.t0}]")

    def u_of(self, t):
        self._check(t)
        if t >= self.t_switch:
            return airy_ai(t) + float(self._sol_w.sol(t)[0])
        return float(self._sol_raw.sol(t)[0])

    def up_of(self, t):
        self._check(t)
        if t >= self.t_switch:
            return airy_ai_prime(t) + float(self._sol_w.sol(t)[1])
        return float(self._sol_raw.sol(t)[1])

    def u_many(self, ts):
        ts = np.asarray(ts, dtype=float)
        out = np.empty(ts.shape, dtype=float)
        hi = ts >= self.t_switch
        if np.any(hi):
            th = np.clip(ts[hi], None, self.t0)
            out[hi] = [airy_ai(t) for t in th] + self._sol_w.sol(th)[0]
        if np.any(~hi):
            out[~hi] = self._sol_raw.sol(ts[~hi])[0]
        return out


_PII_CACHE = []


def solve_pii_hm():
    """Integrate the Hastings-McLeod solution from Airy data down to -8.

    Two phases, as in solve_lax: the deviation w = u - Ai (which starts
    below 1e-30) is integrated from t = 12 down to 4, then the
    reconstructed state continues through the raw flow.  The solution is
    pole-free on the real line, but numerical deviations from it grow
    like exp((2 sqrt(2)/3)|t|**1.5) on the left, so relative accuracy
    (1e-9 down to t = -6) degrades below that; the distribution
    evaluators switch to the tail series before it matters.  Blow-up
    (possible only with a corrupted seed) raises PoleError.
    """
    if _PII_CACHE:
        return _PII_CACHE[0]
    t0, t_switch, t_end = 12.0, 4.0, -8.0

    def rhs_w(t, w):
        u = airy_ai(t) + w[0]
        return [w[1], t * w[0] + 2.0 * u ** 3]

    sol_w = solve_ivp(rhs_w, (t0, t_switch), [0.0, 0.0], method="DOP853",
                      rtol=1e-12, atol=1e-40, dense_output=True,
                      first_step=1e-3)
    if sol_w.status != 0:
        raise NumericalError(
            f"deviation phase failed near t = {sol_w.t[-1]:.4f} while "
            f"integrating the Hastings-McLeod solution")

    def rhs(t, y):
        return [y[1], t * y[0] + 2.0 * y[0] ** 3]

    y0 = [airy_ai(t_switch) + sol_w.y[0, -1],
          airy_ai_prime(t_switch) + sol_w.y[1, -1]]
    sol = solve_ivp(rhs, (t_switch, t_end), y0, method="DOP853",
                    rtol=2.3e-14, atol=1e-16, dense_output=True)
    if sol.status != 0 or not np.all(np.isfinite(sol.y)):
        raise PoleError(
            f"blow-up near t = {sol.t[-1]:.4f} while integrating the "
            f"Hastings-McLeod solution", abscissa=float(sol.t[-1]))
    traj = PiiTrajectory(t0, t_end, t_switch, sol_w, sol)
    _PII_CACHE.append(traj)
    return traj


# --------------------------------------------------------------------------
# distribution evaluators
# --------------------------------------------------------------------------

_GL20 = None


def _panel_integral(f_many, lo, hi):
    """Integral of a vectorized callable by 20-node Gauss panels of width <= 1."""
    global _GL20
    if _GL20 is None:
        _GL20 = gauss_legendre(20)
    if hi <= lo:
        return 0.0 + 0.0j
    n_panels = max(1, int(math.ceil(hi - lo)))
    edges = np.linspace(lo, hi, n_panels + 1)
    xs, ws = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        xs.append((a + b) / 2 + (b - a) / 2 * _GL20.nodes)
        ws.append((b - a) / 2 * _GL20.weights)
    xs = np.concatenate(xs)
    ws = np.concatenate(ws)
    return complex(np.sum(ws * f_many(xs)))


def _tail_ip(p, t, depth=5):
    """int_t^inf x**p exp(-(4/3) x**(3/2)) dx by integration-by-parts descent;
    each level is down by O(t**-3/2), five levels overshoot the 1e-9 budget."""
    tl = _LD(t)
    val = _LD(0)
    coef = _LD(1)
    for _ in range(depth):
        val += coef * _LD(0.5) * tl ** (_LD(p) - _LD(0.5)) \
            * np.exp(-(_LD(4) / 3) * tl ** _LD(1.5))
        coef *= (_LD(2 * p) - 1) / 4
        p -= 1.5
    return float(val)


# --------------------------------------------------------------------------
# deep-left tail series at (alpha, gamma) = (0, 0)
# --------------------------------------------------------------------------

# sigma(x) = x**2/4 + sum_k e_k x**(2-3k) solves the sigma-form equation
# (sigma'')**2 = -4 sigma' ((sigma')**2 - x sigma' + sigma); the e_k follow
# by matching powers.  The series is asymptotic, so the depth is fixed
# where the terms bottom out at the shallow end of the served range
# [-8, -4.5]: six terms leave ~7e-6 at x = -4.5 and ~2e-10 at x = -8,
# while further terms only help below x = -10.
_TW_LEFT_E = tuple(float(Fraction(n, d)) for n, d in (
    (-1, 8),
    (9, 64),
    (-189, 128),
    (21663, 512),
    (-4825971, 2048),
    (3540311739, 16384),
))

# u(x) = sqrt(-x/2) (1 + sum_k c_k x**(-3k)) solves u'' = x u + 2 u**3;
# same asymptotic character and depth rationale as the sigma tail.  The
# two series are tied by sigma' = -u**2, which the tests cross-check.
_HM_LEFT_C = tuple(float(Fraction(n, d)) for n, d in (
    (1, 8),
    (-73, 128),
    (10657, 1024),
    (-13912277, 32768),
    (8045883943, 262144),
    (-14518451390349, 4194304),
))

_S_MATCH = -4.5     # tail series takes over below here
_LEFT_CUT = -4.75   # evaluation points this deep use the spliced form


def _horner_inv_cubed(coefs, xs):
    """sum_k coefs[k-1] x**(-3k) for the tail series, Horner in x**-3."""
    t = xs ** -3.0
    acc = np.zeros_like(xs)
    for c in reversed(coefs):
        acc = (acc + c) * t
    return acc


def _sigma_left(xs):
    """Tail-series sigma at (0, 0); valid for x <= -4.5."""
    xs = np.asarray(xs, dtype=float)
    return xs * xs * (0.25 + _horner_inv_cubed(_TW_LEFT_E, xs))


def _q_left(xs):
    """Tail-series sigma' at (0, 0); valid for x <= -4.5."""
    xs = np.asarray(xs, dtype=float)
    dcoefs = tuple((2.0 - 3.0 * (k + 1)) * e for k, e in enumerate(_TW_LEFT_E))
    return xs / 2.0 + _horner_inv_cubed(dcoefs, xs) * xs


def _u_left(xs):
    """Tail-series Hastings-McLeod u; valid for x <= -4.5."""
    xs = np.asarray(xs, dtype=float)
    return np.sqrt(-xs / 2.0) * (1.0 + _horner_inv_cubed(_HM_LEFT_C, xs))


_TRAJ_CACHE = {}


def _shared_traj(alpha, gamma, s, t0=None):
    """Cached solve down to s; trajectories are immutable.

    Shallow targets are deepened to -4.75 so one solve serves a whole
    grid of evaluation points.  Deep targets get no extra margin: on the
    far left the flow amplifies noise like exp((2 sqrt(2)/3)|x|**1.5),
    so every unit below the requested point costs accuracy.
    """
    key = (float(alpha), complex(gamma), t0)
    traj = _TRAJ_CACHE.get(key)
    if traj is None or traj.t_min > s:
        t_min = min(float(s) - 0.25, -4.75) if s > -4.75 else float(s)
        traj = solve_lax(PainleveParams(alpha, gamma), t_min, t0=t0)
        if len(_TRAJ_CACHE) > 16:
            _TRAJ_CACHE.pop(next(iter(_TRAJ_CACHE)))
        _TRAJ_CACHE[key] = traj
    return traj


def _f_pair(s, alpha, beta):
    beta = complex(beta)
    if beta.imag == 0.0 and beta.real < 1.0:
        raise DomainError(
            f"beta = {beta} lies on the excluded ray (-inf, 1)")
    alpha = float(alpha)
    if not alpha > -1:
        raise DomainError(f"alpha must be > -1, got {alpha}")
    p1 = PainleveParams(alpha, beta - 1)
    p2 = PainleveParams(alpha, beta)
    t0 = max(_default_t0(p1), _default_t0(p2))
    lo1, hi1 = _window(p1)
    lo2, hi2 = _window(p2)
    if not (max(lo1, lo2) <= t0 <= min(hi1, hi2)):
        raise DomainError(
            f"no common admissible launch abscissa for beta = {beta}")
    t1 = _shared_traj(alpha, beta - 1, s, t0=t0)
    t2 = _shared_traj(alpha, beta, s, t0=t0)
    return t1, t2, t0


def F_eval_sigma(s, alpha, beta):
    """F(s; alpha, beta) from the sigma-integral representation.

    For the plain determinant pair (alpha, beta) = (0, 1) the body
    integral switches to the tail series below -4.5: the downward solve
    loses accuracy there and eventually poles, while the series error
    shrinks with depth.
    """
    if s >= 8.0:
        return 1.0 + 0.0j
    left = alpha == 0.0 and complex(beta) == 1.0 and s < _LEFT_CUT
    s_body = _S_MATCH if left else s
    t1, t2, t0 = _f_pair(s_body, alpha, beta)

    def integrand(xs):
        # sigma1 - sigma2 = a2 - a1: the x**2/4 parts cancel exactly.
        return t2.states_many(xs)[0] - t1.states_many(xs)[0]

    body = _panel_integral(integrand, s_body, t0)
    if left:
        body += _panel_integral(_sigma_left, s, _S_MATCH)
    dkap = t1.params.kappa - t2.params.kappa
    pows, coefs = _chain_for(alpha).em_terms("a")
    tail = -dkap * sum(float(c) * _tail_ip(float(p), t0)
                       for p, c in zip(pows, coefs))
    return cmath.exp(-(body + tail))


def F_eval_q(s, alpha, beta):
    """F(s; alpha, beta) from the (x-s)-weighted q-integral representation."""
    if s >= 8.0:
        return 1.0 + 0.0j
    left = alpha == 0.0 and complex(beta) == 1.0 and s < _LEFT_CUT
    s_body = _S_MATCH if left else s
    t1, t2, t0 = _f_pair(s_body, alpha, beta)

    def integrand(xs):
        return (xs - s) * (t1.states_many(xs)[3] - t2.states_many(xs)[3])

    body = _panel_integral(integrand, s_body, t0)
    if left:
        body += _panel_integral(lambda xs: (xs - s) * _q_left(xs),
                                s, _S_MATCH)
    dkap = t1.params.kappa - t2.params.kappa
    pows, coefs = _chain_for(alpha).em_terms("q")
    tail = dkap * sum(float(c) * (_tail_ip(float(p) + 1.0, t0)
                                  - s * _tail_ip(float(p), t0))
                      for p, c in zip(pows, coefs))
    return cmath.exp(body + tail)


def _tw2_pii(s):
    traj = solve_pii_hm()
    t0 = traj.t0
    s_body = _S_MATCH if s < _LEFT_CUT else s

    def integrand(xs):
        u = traj.u_many(xs)
        return (xs - s) * u * u

    body = complex(_panel_integral(integrand, s_body, t0)).real
    if s < _LEFT_CUT:
        body += complex(_panel_integral(
            lambda xs: (xs - s) * _u_left(xs) ** 2, s, _S_MATCH)).real
    ai, aip = airy_ai(t0), airy_ai_prime(t0)
    m0 = aip * aip - t0 * ai * ai
    m1 = (t0 * aip * aip - t0 * t0 * ai * ai - ai * aip) / 3.0
    return math.exp(-(body + m1 - s * m0))


def tw2(s, route):
    """Tracy-Widom GUE distribution F2(s) by one of four routes:
    'sigma' and 'q' via the transcendent integrals, 'pii' via the
    Hastings-McLeod representation, 'fredholm' via the Nystrom
    determinant of the Airy kernel."""
    s = float(s)
    if s < -8.0:
        raise DomainError(f"s must be >= -8, got {s}")
    if route == "sigma":
        return F_eval_sigma(s, 0.0, 1.0).real
    if route == "q":
        return F_eval_q(s, 0.0, 1.0).real
    if route == "pii":
        return 1.0 if s >= 8.0 else _tw2_pii(s)
    if route == "fredholm":
        return math.exp(_fredholm.nystrom_logdet(
            _fredholm.airy_kernel_spec(), s, 80).log_det)
    raise DomainError(
        f"unknown route {route!r}: expected sigma, q, pii or fredholm")


# --------------------------------------------------------------------------
# closed forms at (alpha, gamma) = (0, 1)
# --------------------------------------------------------------------------

def speccon(x):
    """Closed-form spectral data of the mode-free solution at (0, 1)."""
    x = float(x)
    return SpecconData(
        a=x * x / 4.0,
        b=(x / 2.0) * (1.0 - x ** 3 / 8.0),
        q1_21=(x ** 3 - x ** 6 / 16.0 - 7.0 / 4.0) / 12.0,
        q2_12=(5.0 - 5.0 * x ** 3 + x ** 6 / 8.0) / 48.0,
        q2_11=(35.0 - 1.4 * x ** 5 + x ** 8 / 32.0) / 192.0,
    )


def theta01(s):
    """s^3/6 - s a - (2/3)(Q1_21 + 2 Q2_12) with the (0, 1) data; the cubic
    terms cancel and the value is identically -1/24."""
    d = speccon(s)
    return s ** 3 / 6.0 - s * d.a - (2.0 / 3.0) * (d.q1_21 + 2.0 * d.q2_12)
