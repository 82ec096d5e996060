"""Truncated trapezoidal rules for semi-infinite cosine/sine transforms.

The integral ∫_0^∞ f(x) cos(ω x) dx (resp. sin) is computed after the
change of variable x = (τ/ω)·φ(ξ) as

    (τ/ω) h Σ_{j=-M}^{N} f((τ/ω)φ(ξ_j)) trig(τ φ(ξ_j)) φ'(ξ_j),

with τh = π enforced, ξ_j = jh - h/2 for the cosine rule and ξ_j = jh for
the sine rule.  Summation is Kahan-compensated in fixed order j = -M..N so
results are reproducible bit for bit.
"""

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from ._backend import kernels
from .de_maps import DEMap
from .errors import DomainError, IntegrandError

__all__ = [
    "Integrand", "TransformKind", "QuadratureParams",
    "as_integrand", "transform", "fourier_transform", "nodes",
]

# Terms whose weight magnitude falls below this are dropped without ever
# calling the integrand (the node may have underflowed to the edge of the
# double range where user code could overflow).
WEIGHT_FLOOR = 1e-320


class TransformKind(enum.Enum):
    """Which half-line transform: cosine (shifted mesh) or sine (unshifted)."""

    COSINE = "cosine"
    SINE = "sine"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise DomainError(f"unknown transform kind {name!r}") from None


@dataclass(frozen=True)
class Integrand:
    """An integrand on (0, ∞) with optional analyticity metadata.

    ``eval`` must be pure.  ``bound_C`` is a uniform bound |f| <= C when
    known.  ``poles`` lists one representative (z0, residue) per conjugate
    pole pair, Im(z0) != 0, sorted by |Im z0| ascending.
    """

    eval: Callable[[float], float]
    bound_C: Optional[float] = None
    poles: Optional[Tuple[Tuple[complex, complex], ...]] = None

    def __post_init__(self):
        if self.bound_C is not None and not self.bound_C >= 0.0:
            raise DomainError(f"Integrand: bound_C must be >= 0, got {self.bound_C}")
        if self.poles is not None:
            entries = []
            for z0, rho0 in self.poles:
                z0, rho0 = complex(z0), complex(rho0)
                if z0.imag == 0.0:
                    raise DomainError(f"Integrand: pole {z0!r} lies on the real axis")
                entries.append((z0, rho0))
            entries.sort(key=lambda e: abs(e[0].imag))
            object.__setattr__(self, "poles", tuple(entries))


def as_integrand(f):
    """Wrap a bare callable; pass Integrand instances through."""
    if isinstance(f, Integrand):
        return f
    if callable(f):
        return Integrand(eval=f)
    raise DomainError(f"not an integrand: {f!r}")


@dataclass(frozen=True)
class QuadratureParams:
    """Mesh size and truncation indices; tau = pi/h is always derived."""

    h: float
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise DomainError("QuadratureParams: m and n must be integers")
        if not self.h > 0.0:
            raise DomainError(f"QuadratureParams: h must be positive, got {self.h}")
        if self.m < 0 or self.n < 0:
            raise DomainError("QuadratureParams: m and n must be >= 0")

    @property
    def tau(self):
        return math.pi / self.h

    @property
    def total_nodes(self):
        return self.m + self.n + 1


def _kernel_args(m: DEMap):
    if m.kind == "phi1":
        return kernels.KIND_PHI1, 0.0, 0.0
    return kernels.KIND_PHI2, m.alpha, m.beta


def _node_arrays(m, kind, omega, params):
    kind = TransformKind.parse(kind)
    if not omega > 0.0:
        raise DomainError(f"omega must be positive, got {omega}")
    kcode, alpha, beta = _kernel_args(m)
    trig = kernels.TRIG_COS if kind is TransformKind.COSINE else kernels.TRIG_SIN
    return kernels.nodes_weights(
        kcode, alpha, beta, params.h, params.m, params.n, omega, trig)


def nodes(m, kind, omega, params):
    """Abscissae/weight pairs of the rule, in summation order j = -M..N."""
    xs, ws = _node_arrays(m, kind, omega, params)
    return list(zip(xs.tolist(), ws.tolist()))


def transform(f, kind, omega, m, params):
    """Apply the truncated rule; returns the transform approximation.

    Integrand failures (exceptions, non-finite values) are re-raised as
    IntegrandError carrying the offending node.
    """
    f = as_integrand(f)
    xs, ws = _node_arrays(m, kind, omega, params)
    total = params.total_nodes
    fs = np.zeros(total)
    for i in range(total):
        if abs(ws[i]) < WEIGHT_FLOOR:
            continue
        x = float(xs[i])
        try:
            v = float(f.eval(x))
        except Exception as exc:
            raise IntegrandError(
                f"integrand evaluation failed at node x={x!r} (j={i - params.m})",
                node=x, index=i - params.m) from exc
        if not math.isfinite(v):
            raise IntegrandError(
                f"integrand returned {v!r} at node x={x!r} (j={i - params.m})",
                node=x, index=i - params.m)
        fs[i] = v
    return kernels.kahan_dot(ws, fs)


def fourier_transform(f, omega, m, params_c, params_s):
    """Complex transform ∫ f e^{iωx}: cosine part real, sine part imaginary."""
    re = transform(f, TransformKind.COSINE, omega, m, params_c)
    im = transform(f, TransformKind.SINE, omega, m, params_s)
    return complex(re, im)
