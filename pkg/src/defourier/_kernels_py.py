"""Pure-Python kernel backend.

Mirrors the compiled extension in defourier._kernels operation for
operation; the two must stay interchangeable (same node order, same
compensated-summation order).
"""

import math

import numpy as np

from .de_maps import (
    _phi1_prime_real,
    _phi1_real,
    _phi2_prime_real,
    _phi2_real,
)

BACKEND_NAME = "python"

_PI = math.pi

KIND_PHI1 = 0
KIND_PHI2 = 1
TRIG_COS = 0
TRIG_SIN = 1


def nodes_weights(kind, alpha, beta, h, m, n, omega, trig):
    """Abscissae and weights of the truncated rule, j = -m..n.

    Cosine rule shifts the mesh by h/2 and uses a cos factor; the sine rule
    is unshifted with a sin factor.  Returns two float64 arrays of length
    m + n + 1.
    """
    tau = _PI / h
    c = tau / omega
    shift = 0.5 * h if trig == TRIG_COS else 0.0
    total = m + n + 1
    xs = np.empty(total)
    ws = np.empty(total)
    for idx in range(total):
        xi = (idx - m) * h - shift
        if kind == KIND_PHI1:
            p = _phi1_real(xi)
            dp = _phi1_prime_real(xi)
        else:
            p = _phi2_real(xi, alpha, beta)
            dp = _phi2_prime_real(xi, alpha, beta)
        t = math.cos(tau * p) if trig == TRIG_COS else math.sin(tau * p)
        xs[idx] = c * p
        ws[idx] = c * h * t * dp
    return xs, ws


def kahan_dot(ws, fs):
    """Compensated dot product in fixed (ascending-index) order."""
    s = 0.0
    comp = 0.0
    for i in range(len(ws)):
        y = float(ws[i]) * float(fs[i]) - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return s


def map_arrays(kind, alpha, beta, xi):
    """Map values and derivatives over an array (benchmark surface)."""
    out_p = np.empty(len(xi))
    out_dp = np.empty(len(xi))
    for i in range(len(xi)):
        x = xi[i]
        if kind == KIND_PHI1:
            out_p[i] = _phi1_real(x)
            out_dp[i] = _phi1_prime_real(x)
        else:
            out_p[i] = _phi2_real(x, alpha, beta)
            out_dp[i] = _phi2_prime_real(x, alpha, beta)
    return out_p, out_dp
