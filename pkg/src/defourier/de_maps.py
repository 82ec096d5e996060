"""The two double-exponential maps and their first derivatives.

Both maps send the real line onto (0, +inf), vanishing double-exponentially
on the left and approaching the identity double-exponentially on the right:

    phi1(xi) = xi / (1 - exp(-2*pi*sinh(xi)))
    phi2(xi) = xi / (1 - exp(-v(xi))),
               v(xi) = 2*xi + alpha*(1 - exp(-xi)) + beta*(exp(xi) - 1)

with 0 < alpha < beta < 1.  The quotient has a removable singularity at
xi = 0 (and, for complex arguments, genuine poles where the denominator
vanishes away from 0); evaluation here is arranged so that all real
arguments and complex arguments off the pole set give full accuracy, with
overflow-free tails.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, MapPoleError

__all__ = [
    "DEMap", "PHI1", "phi1_map", "phi2_map",
    "phi", "phi_prime", "default_alpha_beta",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class DEMap:
    """Selects one of the two transformations; phi2 carries (alpha, beta)."""

    kind: str
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self):
        if self.kind == "phi1":
            if self.alpha is not None or self.beta is not None:
                raise DomainError("DEMap: phi1 takes no (alpha, beta)")
        elif self.kind == "phi2":
            a, b = self.alpha, self.beta
            if a is None or b is None:
                raise DomainError("DEMap: phi2 requires (alpha, beta)")
            if not (0.0 < a < b < 1.0):
                raise DomainError(
                    f"DEMap: need 0 < alpha < beta < 1, got alpha={a}, beta={b}")
        else:
            raise DomainError(f"DEMap: unknown kind {self.kind!r}")


PHI1 = DEMap("phi1")


def phi1_map():
    return PHI1


def phi2_map(tau=None, alpha=None, beta=None):
    """phi2 map with explicit (alpha, beta), or defaults derived from tau."""
    if alpha is None or beta is None:
        if tau is None:
            raise DomainError("phi2_map: give (alpha, beta) or tau")
        alpha, beta = default_alpha_beta(tau)
    return DEMap("phi2", alpha, beta)


def default_alpha_beta(tau):
    """Default phi2 parameters: beta = 1/4, alpha shrinking with tau."""
    tau = float(tau)
    if not tau > 0.0:
        raise DomainError(f"default_alpha_beta: tau must be positive, got {tau}")
    beta = 0.25
    alpha = beta / math.sqrt(1.0 + tau / (4.0 * math.pi) * math.log1p(tau))
    return alpha, beta


def _cexpm1(u):
    """exp(u) - 1 for complex u, accurate near 0."""
    if abs(u) < 1e-3:
        return u * (1.0 + u * (0.5 + u * (1.0 / 6.0 + u * (1.0 / 24.0 + u / 120.0))))
    return cmath.exp(u) - 1.0


# ---------------------------------------------------------------------------
# phi1

def _phi1_real(xi):
    if xi == 0.0:
        return 1.0 / _TWO_PI
    # exp(-2*pi*sinh(7)) underflows, so the limits are exact from here on.
    if xi >= 7.0:
        return xi
    if xi <= -7.0:
        return 0.0
    u = _TWO_PI * math.sinh(xi)
    if abs(u) < 1e-6:
        # 1 - exp(-u) = u*(1 - u/2 + u^2/6 - u^3/24 + ...)
        poly = 1.0 - u * (0.5 - u * (1.0 / 6.0 - u / 24.0))
        return (xi / u) / poly
    if u > 0.0:
        return xi / (-math.expm1(-u))
    eu = math.exp(u)
    return xi * eu / math.expm1(u)


def _phi1_prime_real(xi):
    if xi == 0.0:
        return 0.5
    if xi >= 7.0:
        return 1.0
    if xi <= -7.0:
        return 0.0
    u = _TWO_PI * math.sinh(xi)
    up = _TWO_PI * math.cosh(xi)
    if u > 36.0:
        e = math.exp(-u)
        if e == 0.0:
            return 1.0
        return 1.0 - (1.0 + xi * up) * e
    if u < -36.0:
        eu = math.exp(u)
        if eu == 0.0:
            return 0.0
        em = math.expm1(u)
        return eu * (em - xi * up) / (em * em)
    if abs(u) < 1e-4:
        # (sinh - xi*cosh) and (expm1(u) - u) by series; the direct
        # difference loses all digits as xi -> 0.
        x2 = xi * xi
        s = -_TWO_PI * xi * x2 * (1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 / 840.0))
        e2 = 0.5 * u * u * (1.0 + u * (1.0 / 3.0 + u * (1.0 / 12.0 + u / 60.0)))
        em = math.expm1(u)
        return math.exp(u) * (s + e2) / (em * em)
    em = math.expm1(u)
    return math.exp(u) * (em - xi * up) / (em * em)


def _phi1_complex(xi):
    u = _TWO_PI * cmath.sinh(xi)
    if abs(u) < 1e-6:
        if u == 0.0:
            if xi == 0.0:
                return complex(1.0 / _TWO_PI, 0.0)
            raise MapPoleError(f"phi1: pole at xi={xi!r}")
        poly = 1.0 - u * (0.5 - u * (1.0 / 6.0 - u / 24.0))
        return (xi / u) / poly
    if u.real < -690.0:
        eu = cmath.exp(u)
        return xi * eu / (eu - 1.0)
    den = -_cexpm1(-u)
    if abs(den) < 1e-300:
        raise MapPoleError(f"phi1: pole at xi={xi!r}")
    return xi / den


def _phi1_prime_complex(xi):
    u = _TWO_PI * cmath.sinh(xi)
    up = _TWO_PI * cmath.cosh(xi)
    if abs(xi) < 1e-4:
        x2 = xi * xi
        s = -_TWO_PI * xi * x2 * (1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 / 840.0))
        e2 = 0.5 * u * u * (1.0 + u * (1.0 / 3.0 + u * (1.0 / 12.0 + u / 60.0)))
        em = _cexpm1(u)
        return cmath.exp(u) * (s + e2) / (em * em)
    if u.real > 36.0:
        e = cmath.exp(-u)
        return 1.0 - (1.0 + xi * up) * e
    if u.real < -36.0:
        eu = cmath.exp(u)
        if eu == 0.0:
            return complex(0.0, 0.0)
        em = _cexpm1(u)
        return eu * (em - xi * up) / (em * em)
    em = _cexpm1(u)
    if abs(em) < 1e-300:
        raise MapPoleError(f"phi1: derivative pole at xi={xi!r}")
    return cmath.exp(u) * (em - xi * up) / (em * em)


# ---------------------------------------------------------------------------
# phi2

def _phi2_v_real(xi, a, b):
    return 2.0 * xi + a * (-math.expm1(-xi)) + b * math.expm1(xi)


def _phi2_real(xi, a, b):
    # beta*exp(45) (resp. -alpha*exp(45)) puts v far past exp underflow.
    if xi >= 45.0:
        return xi
    if xi <= -45.0:
        return 0.0
    v = _phi2_v_real(xi, a, b)
    if abs(v) < 1e-6:
        if xi == 0.0:
            return 1.0 / (2.0 + a + b)
        r = 2.0 + a * (-math.expm1(-xi) / xi) + b * (math.expm1(xi) / xi)
        poly = 1.0 - v * (0.5 - v * (1.0 / 6.0 - v / 24.0))
        return 1.0 / (r * poly)
    if v > 0.0:
        return xi / (-math.expm1(-v))
    ev = math.exp(v)
    return xi * ev / math.expm1(v)


def _phi2_prime_real(xi, a, b):
    if xi == 0.0:
        c = 2.0 + a + b
        return 0.5 + (a - b) / (2.0 * c * c)
    if xi >= 45.0:
        return 1.0
    if xi <= -45.0:
        return 0.0
    v = _phi2_v_real(xi, a, b)
    if v > 36.0:
        e = math.exp(-v)
        if e == 0.0:
            return 1.0
        vp = 2.0 + a * math.exp(-xi) + b * math.exp(xi)
        return 1.0 - (1.0 + xi * vp) * e
    if v < -36.0:
        ev = math.exp(v)
        if ev == 0.0:
            return 0.0
        vp = 2.0 + a * math.exp(-xi) + b * math.exp(xi)
        em = math.expm1(v)
        return ev * (em - xi * vp) / (em * em)
    if abs(v) < 1e-4:
        x2 = xi * xi
        sa = x2 * (0.5 + x2 / 8.0) - xi * x2 * (1.0 / 3.0 + x2 / 30.0)
        sb = -x2 * (0.5 + x2 / 8.0) - xi * x2 * (1.0 / 3.0 + x2 / 30.0)
        e2 = 0.5 * v * v * (1.0 + v * (1.0 / 3.0 + v * (1.0 / 12.0 + v / 60.0)))
        em = math.expm1(v)
        return math.exp(v) * (a * sa + b * sb + e2) / (em * em)
    vp = 2.0 + a * math.exp(-xi) + b * math.exp(xi)
    em = math.expm1(v)
    return math.exp(v) * (em - xi * vp) / (em * em)


def _phi2_v_complex(xi, a, b):
    return 2.0 * xi + a * (-_cexpm1(-xi)) + b * _cexpm1(xi)


def _phi2_complex(xi, a, b):
    v = _phi2_v_complex(xi, a, b)
    if abs(v) < 1e-6:
        if v == 0.0:
            if xi == 0.0:
                return complex(1.0 / (2.0 + a + b), 0.0)
            raise MapPoleError(f"phi2: pole at xi={xi!r}")
        r = 2.0 + a * (-_cexpm1(-xi) / xi) + b * (_cexpm1(xi) / xi)
        poly = 1.0 - v * (0.5 - v * (1.0 / 6.0 - v / 24.0))
        return 1.0 / (r * poly)
    if v.real < -690.0:
        ev = cmath.exp(v)
        return xi * ev / (ev - 1.0)
    den = -_cexpm1(-v)
    if abs(den) < 1e-300:
        raise MapPoleError(f"phi2: pole at xi={xi!r}")
    return xi / den


def _phi2_prime_complex(xi, a, b):
    v = _phi2_v_complex(xi, a, b)
    if abs(xi) < 1e-4:
        x2 = xi * xi
        sa = x2 * (0.5 + x2 / 8.0) - xi * x2 * (1.0 / 3.0 + x2 / 30.0)
        sb = -x2 * (0.5 + x2 / 8.0) - xi * x2 * (1.0 / 3.0 + x2 / 30.0)
        e2 = 0.5 * v * v * (1.0 + v * (1.0 / 3.0 + v * (1.0 / 12.0 + v / 60.0)))
        em = _cexpm1(v)
        if em == 0.0:
            c = 2.0 + a + b
            return complex(0.5 + (a - b) / (2.0 * c * c), 0.0)
        return cmath.exp(v) * (a * sa + b * sb + e2) / (em * em)
    if v.real > 36.0:
        vp = 2.0 + a * cmath.exp(-xi) + b * cmath.exp(xi)
        return 1.0 - (1.0 + xi * vp) * cmath.exp(-v)
    if v.real < -36.0:
        ev = cmath.exp(v)
        if ev == 0.0:
            return complex(0.0, 0.0)
        vp = 2.0 + a * cmath.exp(-xi) + b * cmath.exp(xi)
        em = _cexpm1(v)
        return ev * (em - xi * vp) / (em * em)
    em = _cexpm1(v)
    if abs(em) < 1e-300:
        raise MapPoleError(f"phi2: derivative pole at xi={xi!r}")
    vp = 2.0 + a * cmath.exp(-xi) + b * cmath.exp(xi)
    return cmath.exp(v) * (em - xi * vp) / (em * em)


# ---------------------------------------------------------------------------
# public dispatch

def phi(m, xi):
    """Evaluate the map at a real or complex argument.

    Real input gives real output; raises MapPoleError if a complex argument
    hits a pole of the map.
    """
    if isinstance(xi, complex):
        if xi.imag == 0.0:
            return complex(phi(m, xi.real), 0.0)
        if abs(xi.real) > 700.0:
            raise DomainError(f"phi: complex argument {xi!r} overflows exp")
        if m.kind == "phi1":
            return _phi1_complex(xi)
        return _phi2_complex(xi, m.alpha, m.beta)
    xi = float(xi)
    if m.kind == "phi1":
        return _phi1_real(xi)
    return _phi2_real(xi, m.alpha, m.beta)


def phi_prime(m, xi):
    """First derivative of the map; same conventions as phi."""
    if isinstance(xi, complex):
        if xi.imag == 0.0:
            return complex(phi_prime(m, xi.real), 0.0)
        if abs(xi.real) > 700.0:
            raise DomainError(f"phi_prime: complex argument {xi!r} overflows exp")
        if m.kind == "phi1":
            return _phi1_prime_complex(xi)
        return _phi2_prime_complex(xi, m.alpha, m.beta)
    xi = float(xi)
    if m.kind == "phi1":
        return _phi1_prime_real(xi)
    return _phi2_prime_real(xi, m.alpha, m.beta)
