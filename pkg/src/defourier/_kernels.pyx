# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Same arithmetic as defourier._kernels_py, statement for statement; both
backends must produce identical node/weight streams.
"""

from libc.math cimport cos, cosh, exp, expm1, fabs, sin, sinh

import numpy as np

BACKEND_NAME = "compiled"

cdef double TWO_PI = 6.283185307179586476925286766559
cdef double PI = 3.1415926535897932384626433832795

KIND_PHI1 = 0
KIND_PHI2 = 1
TRIG_COS = 0
TRIG_SIN = 1


cdef double phi1_real(double xi) noexcept nogil:
    cdef double u, poly, eu
    if xi == 0.0:
        return 1.0 / TWO_PI
    if xi >= 7.0:
        return xi
    if xi <= -7.0:
        return 0.0
    u = TWO_PI * sinh(xi)
    if fabs(u) < 1e-6:
        poly = 1.0 - u * (0.5 - u * (1.0 / 6.0 - u / 24.0))
        return (xi / u) / poly
    if u > 0.0:
        return xi / (-expm1(-u))
    eu = exp(u)
    return xi * eu / expm1(u)


cdef double phi1_prime_real(double xi) noexcept nogil:
    cdef double u, up, e, eu, em, x2, s, e2
    if xi == 0.0:
        return 0.5
    if xi >= 7.0:
        return 1.0
    if xi <= -7.0:
        return 0.0
    u = TWO_PI * sinh(xi)
    up = TWO_PI * cosh(xi)
    if u > 36.0:
        e = exp(-u)
        if e == 0.0:
            return 1.0
        return 1.0 - (1.0 + xi * up) * e
    if u < -36.0:
        eu = exp(u)
        if eu == 0.0:
            return 0.0
        em = expm1(u)
        return eu * (em - xi * up) / (em * em)
    if fabs(u) < 1e-4:
        x2 = xi * xi
        s = -TWO_PI * xi * x2 * (1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 / 840.0))
        e2 = 0.5 * u * u * (1.0 + u * (1.0 / 3.0 + u * (1.0 / 12.0 + u / 60.0)))
        em = expm1(u)
        return exp(u) * (s + e2) / (em * em)
    em = expm1(u)
    return exp(u) * (em - xi * up) / (em * em)


cdef double phi2_real(double xi, double a, double b) noexcept nogil:
    cdef double v, r, poly, ev
    if xi >= 45.0:
        return xi
    if xi <= -45.0:
        return 0.0
    v = 2.0 * xi + a * (-expm1(-xi)) + b * expm1(xi)
    if fabs(v) < 1e-6:
        if xi == 0.0:
            return 1.0 / (2.0 + a + b)
        r = 2.0 + a * (-expm1(-xi) / xi) + b * (expm1(xi) / xi)
        poly = 1.0 - v * (0.5 - v * (1.0 / 6.0 - v / 24.0))
        return 1.0 / (r * poly)
    if v > 0.0:
        return xi / (-expm1(-v))
    ev = exp(v)
    return xi * ev / expm1(v)


cdef double phi2_prime_real(double xi, double a, double b) noexcept nogil:
    cdef double v, e, ev, vp, em, x2, sa, sb, e2, c
    if xi == 0.0:
        c = 2.0 + a + b
        return 0.5 + (a - b) / (2.0 * c * c)
    if xi >= 45.0:
        return 1.0
    if xi <= -45.0:
        return 0.0
    v = 2.0 * xi + a * (-expm1(-xi)) + b * expm1(xi)
    if v > 36.0:
        e = exp(-v)
        if e == 0.0:
            return 1.0
        vp = 2.0 + a * exp(-xi) + b * exp(xi)
        return 1.0 - (1.0 + xi * vp) * e
    if v < -36.0:
        ev = exp(v)
        if ev == 0.0:
            return 0.0
        vp = 2.0 + a * exp(-xi) + b * exp(xi)
        em = expm1(v)
        return ev * (em - xi * vp) / (em * em)
    if fabs(v) < 1e-4:
        x2 = xi * xi
        sa = x2 * (0.5 + x2 / 8.0) - xi * x2 * (1.0 / 3.0 + x2 / 30.0)
        sb = -x2 * (0.5 + x2 / 8.0) - xi * x2 * (1.0 / 3.0 + x2 / 30.0)
        e2 = 0.5 * v * v * (1.0 + v * (1.0 / 3.0 + v * (1.0 / 12.0 + v / 60.0)))
        em = expm1(v)
        return exp(v) * (a * sa + b * sb + e2) / (em * em)
    vp = 2.0 + a * exp(-xi) + b * exp(xi)
    em = expm1(v)
    return exp(v) * (em - xi * vp) / (em * em)


def nodes_weights(int kind, double alpha, double beta, double h,
                  long m, long n, double omega, int trig):
    """Abscissae and weights of the truncated rule, j = -m..n."""
    cdef double tau = PI / h
    cdef double c = tau / omega
    cdef double shift = 0.5 * h if trig == 0 else 0.0
    cdef long total = m + n + 1
    xs_arr = np.empty(total)
    ws_arr = np.empty(total)
    cdef double[::1] xs = xs_arr
    cdef double[::1] ws = ws_arr
    cdef long idx
    cdef double xi, p, dp, t
    with nogil:
        for idx in range(total):
            xi = (idx - m) * h - shift
            if kind == 0:
                p = phi1_real(xi)
                dp = phi1_prime_real(xi)
            else:
                p = phi2_real(xi, alpha, beta)
                dp = phi2_prime_real(xi, alpha, beta)
            t = cos(tau * p) if trig == 0 else sin(tau * p)
            xs[idx] = c * p
            ws[idx] = c * h * t * dp
    return xs_arr, ws_arr


def kahan_dot(double[::1] ws, double[::1] fs):
    """Compensated dot product in fixed (ascending-index) order."""
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double y, t
    cdef Py_ssize_t i
    for i in range(ws.shape[0]):
        y = ws[i] * fs[i] - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return s


def map_arrays(int kind, double alpha, double beta, double[::1] xi):
    """Map values and derivatives over an array (benchmark surface)."""
    cdef Py_ssize_t total = xi.shape[0]
    out_p_arr = np.empty(total)
    out_dp_arr = np.empty(total)
    cdef double[::1] out_p = out_p_arr
    cdef double[::1] out_dp = out_dp_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(total):
            if kind == 0:
                out_p[i] = phi1_real(xi[i])
                out_dp[i] = phi1_prime_real(xi[i])
            else:
                out_p[i] = phi2_real(xi[i], alpha, beta)
                out_dp[i] = phi2_prime_real(xi[i], alpha, beta)
    return out_p_arr, out_dp_arr
