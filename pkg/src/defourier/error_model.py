"""A priori parameter selection and error estimation for both maps.

The three error contributions of a truncated rule are the two truncation
tails and the discretization error of the infinite sum.  For meromorphic
integrands the discretization error is modelled by the nearest conjugate
pole pair through the residue bound 4π|ρ₀|e^{-2πd/h}, where d is the
distance of the transformed integrand's nearest singularity from the real
axis.  That distance is tracked exactly through the map by a Lambert W
inversion with an explicit branch-selection rule, with the cruder
asymptotic d ≈ θ/ln(π/h) (phi1) or d ≈ θ/2 (phi2) as fallback.

All estimates are estimates, not certified bounds; tests hold them to
order-of-magnitude fidelity.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .de_maps import DEMap, default_alpha_beta
from .errors import DomainError
from .quadrature import as_integrand
from .specfun import branch_of, lambert_w0, lambert_w_complex

__all__ = [
    "PoleGeometry", "ErrorEstimate",
    "d_estimate_phi1", "d_estimate_phi2",
    "pole_image_phi1", "pole_image_phi1_with_branch",
    "select_h_phi1", "select_h_phi2", "select_M_phi2",
    "truncation_bounds",
    "discretization_bound_residue", "discretization_bound_strip",
    "error_estimate_phi1", "error_estimate_phi2",
    "effective_bound", "estimate_error",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PoleGeometry:
    """One conjugate pole pair of the integrand: location and residue."""

    z0: complex
    rho0: complex

    def __post_init__(self):
        z0 = complex(self.z0)
        if z0.imag == 0.0:
            raise DomainError(f"PoleGeometry: {z0!r} lies on the real axis")
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "rho0", complex(self.rho0))

    @property
    def theta(self):
        """Opening angle |arg(z0)|, always derived from z0."""
        return abs(cmath.phase(self.z0))


@dataclass(frozen=True)
class ErrorEstimate:
    """Discretization and left/right truncation components."""

    e_d: float
    e_tl: float
    e_tr: float

    def __post_init__(self):
        for name in ("e_d", "e_tl", "e_tr"):
            v = float(getattr(self, name))
            if not (math.isfinite(v) and v >= 0.0):
                raise DomainError(f"ErrorEstimate: {name}={v!r} invalid")
            object.__setattr__(self, name, v)

    @property
    def total(self):
        return self.e_d + self.e_tl + self.e_tr


def _check_theta(theta):
    theta = float(theta)
    if not (0.0 < theta < math.pi):
        raise DomainError(f"theta must lie in (0, pi), got {theta}")
    return theta


def d_estimate_phi1(theta, h):
    """Asymptotic strip half-width for phi1: theta / ln(pi/h)."""
    theta = _check_theta(theta)
    h = float(h)
    if not (0.0 < h < math.pi):
        raise DomainError(f"d_estimate_phi1: need 0 < h < pi, got {h}")
    return theta / math.log(math.pi / h)


def d_estimate_phi2(theta):
    """Asymptotic strip half-width for phi2: theta / 2."""
    return _check_theta(theta) / 2.0


def pole_image_phi1_with_branch(z0, omega, h):
    """Image of an integrand pole under the phi1 change of variable.

    Solves the sinh-form of phi1(xi) = z0*omega*h/pi via Lambert W.  The
    W branch is the one adjacent to the region of q = -2*z0*omega*h:
    one up for Im(z0) > 0, one down for Im(z0) < 0.  Returns (xi, branch);
    the caller adds h/2 to move to the cosine-rule variable.
    """
    z0 = complex(z0)
    if z0.imag == 0.0:
        raise DomainError("pole_image_phi1: pole must be off the real axis")
    if not (omega > 0.0 and h > 0.0):
        raise DomainError("pole_image_phi1: omega and h must be positive")
    q = -2.0 * z0 * omega * h
    n = branch_of(q)
    branch = n + 1 if z0.imag > 0.0 else n - 1
    w = lambert_w_complex(branch, q * cmath.exp(q))
    if abs(w - q) <= 1e-12 * max(1.0, abs(q)):
        raise DomainError(
            "pole_image_phi1: W equals q, which collapses the image to "
            "xi = 0 (not a pole of the transformed integrand)")
    s = z0 * omega * h / math.pi + w / _TWO_PI
    return cmath.asinh(s), branch


def pole_image_phi1(z0, omega, h):
    return pole_image_phi1_with_branch(z0, omega, h)[0]


def select_h_phi1(n, theta):
    """A-priori phi1 mesh equalizing discretization and truncation decay."""
    theta = _check_theta(theta)
    n = int(n)
    if n < 1:
        raise DomainError(f"select_h_phi1: need n >= 1, got {n}")
    return (2.0 / n) * lambert_w0(math.sqrt(n * theta / 2.0))


def select_h_phi2(n, theta, beta):
    """A-priori phi2 mesh for the default d = theta/2."""
    theta = _check_theta(theta)
    n = int(n)
    if n < 1:
        raise DomainError(f"select_h_phi2: need n >= 1, got {n}")
    if not (0.0 < beta < 1.0):
        raise DomainError(f"select_h_phi2: beta must be in (0,1), got {beta}")
    return lambert_w0(n * math.pi * theta / beta) / n


def select_M_phi2(n, h, alpha, beta):
    """Left truncation index equalizing the two phi2 tails; M >= N."""
    if not (0.0 < alpha < beta):
        raise DomainError(
            f"select_M_phi2: need 0 < alpha < beta, got {alpha}, {beta}")
    if not h > 0.0:
        raise DomainError("select_M_phi2: h must be positive")
    return math.ceil(n - math.log(alpha / beta) / h)


def _exp_neg(x):
    """exp(-x) for x >= 0 with graceful saturation for huge x."""
    if x > 700.0:
        return 0.0
    return math.exp(-x)


def truncation_bounds(m, n, mm, h, omega, c):
    """Right/left truncation estimates (e_tr, e_tl) for either map."""
    if c is None or not c >= 0.0:
        raise DomainError(f"truncation_bounds: need C >= 0, got {c}")
    if not (h > 0.0 and omega > 0.0):
        raise DomainError("truncation_bounds: h and omega must be positive")
    tau = math.pi / h
    if m.kind == "phi1":
        right = 2.0 * math.pi * math.sinh(min(n * h, 700.0))
        left = 2.0 * math.pi * math.sinh(min(mm * h, 700.0))
        e_tr = tau * tau * c / (_TWO_PI * omega) * _exp_neg(right)
        e_tl = tau * c / omega * mm * h * _exp_neg(left)
    else:
        right = 2.0 * m.beta * math.sinh(min(n * h, 700.0))
        left = m.alpha * math.exp(min(mm * h, 700.0))
        e_tr = tau * tau * c / (2.0 * m.beta * omega) * _exp_neg(right)
        e_tl = tau * c / omega * mm * h * _exp_neg(left)
    return e_tr, e_tl


def discretization_bound_residue(rho0, d, h):
    """Residue model of the discretization error: 4*pi*|rho0|*exp(-2*pi*d/h)."""
    if not (d > 0.0 and h > 0.0):
        raise DomainError("discretization_bound_residue: d and h must be positive")
    return 4.0 * math.pi * abs(rho0) * _exp_neg(_TWO_PI * d / h)


def discretization_bound_strip(n_fd, d, h):
    """Strip model with user-supplied integral norm of f on the strip edge."""
    if not n_fd >= 0.0:
        raise DomainError(f"discretization_bound_strip: need N(f,d) >= 0, got {n_fd}")
    if not (d > 0.0 and h > 0.0):
        raise DomainError("discretization_bound_strip: d and h must be positive")
    arg = math.pi * d / h
    if arg > 700.0:
        return 0.0
    return n_fd / (2.0 * math.sinh(arg)) * math.exp(-arg)


def error_estimate_phi1(n, h, omega, c, rho0, d):
    """Total phi1 estimate at M = N, split into its three components."""
    if not (n >= 1 and h > 0.0 and omega > 0.0 and c >= 0.0 and d > 0.0):
        raise DomainError("error_estimate_phi1: invalid arguments")
    decay = _exp_neg(2.0 * math.pi * math.sinh(min(n * h, 700.0)))
    e_tr = math.pi * c / (2.0 * omega * h * h) * decay
    e_tl = math.pi * c * n / omega * decay
    e_d = discretization_bound_residue(rho0, d, h)
    return ErrorEstimate(e_d=e_d, e_tl=e_tl, e_tr=e_tr)


def error_estimate_phi2(n, mm, h, omega, c, rho0, d, alpha, beta):
    """Total phi2 estimate with separate left index M."""
    if not (n >= 1 and mm >= 1 and h > 0.0 and omega > 0.0 and c >= 0.0
            and d > 0.0 and 0.0 < alpha < beta < 1.0):
        raise DomainError("error_estimate_phi2: invalid arguments")
    e_tr = (math.pi ** 2 * c / (2.0 * beta * omega * h * h)
            * _exp_neg(2.0 * beta * math.sinh(min(n * h, 700.0))))
    e_tl = (math.pi * c / omega * mm
            * _exp_neg(alpha * math.exp(min(mm * h, 700.0))))
    e_d = discretization_bound_residue(rho0, d, h)
    return ErrorEstimate(e_d=e_d, e_tl=e_tl, e_tr=e_tr)


def effective_bound(f, omega):
    """Uniform bound C for the integrand: stored value, or a sampled one.

    Without metadata, |f| is sampled on a 128-point log grid spanning the
    node range at this frequency and inflated by a safety factor 1.5.
    """
    f = as_integrand(f)
    if f.bound_C is not None:
        return f.bound_C
    xs = np.logspace(math.log10(1e-6 / omega), math.log10(1e3 / omega), 128)
    peak = max(abs(f.eval(float(x))) for x in xs)
    return 1.5 * peak


def _pole_distances_phi1(f, omega, h):
    out = []
    for z0, rho0 in f.poles:
        try:
            xi = pole_image_phi1(z0, omega, h)
            d = abs(xi.imag)
        except DomainError:
            d = d_estimate_phi1(abs(cmath.phase(z0)), h)
        out.append((d, abs(rho0)))
    return out


def estimate_error(f, m, omega, params):
    """Full a-priori estimate for an integrand with pole metadata.

    The pole pair whose image sits closest to the real axis drives the
    decay rate; residues of pairs within twice that distance are summed.
    """
    f = as_integrand(f)
    if not f.poles:
        raise DomainError("estimate_error: integrand carries no pole metadata")
    c = effective_bound(f, omega)
    if m.kind == "phi1":
        dist = _pole_distances_phi1(f, omega, params.h)
    else:
        dist = [(d_estimate_phi2(abs(cmath.phase(z0))), abs(rho0))
                for z0, rho0 in f.poles]
    d_min = min(d for d, _ in dist)
    rho_sum = sum(r for d, r in dist if d <= 2.0 * d_min)
    if m.kind == "phi1":
        return error_estimate_phi1(params.n, params.h, omega, c, rho_sum, d_min)
    return error_estimate_phi2(params.n, params.m, params.h, omega, c,
                               rho_sum, d_min, m.alpha, m.beta)


def phi2_params_for(n, theta):
    """Bundle the phi2 a-priori choices: mesh, map, left index."""
    h = select_h_phi2(n, theta, 0.25)
    alpha, beta = default_alpha_beta(math.pi / h)
    mm = select_M_phi2(n, h, alpha, beta)
    return h, DEMap("phi2", alpha, beta), mm
