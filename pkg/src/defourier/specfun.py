"""Lambert W on the real branches, on arbitrary complex branches, and the
branch-region classifier.

The Lambert W function inverts ``w * exp(w)``.  Branch ``n`` is written
``W_n``; ``W_0`` is the principal branch (real for ``x >= -1/e``) and
``W_-1`` the lower real branch (real on ``[-1/e, 0)``).  All solvers use
Halley iteration from a branch-aware starting guess and certify the
defining identity before returning.
"""

import cmath
import math

from .errors import BranchAmbiguityError, ConvergenceError, DomainError

__all__ = ["lambert_w0", "lambert_wm1", "lambert_w_complex", "branch_of"]

_INV_E = math.exp(-1.0)
_TWO_PI = 2.0 * math.pi
_MAX_ITER = 100


def _halley_real(w, x):
    """Halley refinement of ``w*exp(w) = x`` for real arguments."""
    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        if f == 0.0:
            return w
        wp1 = w + 1.0
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        step = f / denom
        w -= step
        if abs(step) <= 4e-16 * (abs(w) + 0.25):
            return w
    return w


def _halley_complex(w, z):
    for _ in range(_MAX_ITER):
        ew = cmath.exp(w)
        f = w * ew - z
        if f == 0.0:
            return w
        wp1 = w + 1.0
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        step = f / denom
        w -= step
        if abs(step) <= 4e-16 * (abs(w) + 0.25):
            return w
    return w


def _branch_point_series(p):
    """Series for W about the branch point -1/e, in p = +-sqrt(2(e*z+1))."""
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0
            + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))))


def lambert_w0(x):
    """Principal branch of the Lambert W function on the real axis.

    Defined for ``x >= -1/e``; satisfies ``w >= -1`` and
    ``w * exp(w) == x`` to a relative residual of ``1e-13``.
    """
    x = float(x)
    if x != x:
        raise DomainError("lambert_w0: argument must not be NaN")
    if x < -_INV_E:
        if x < -_INV_E - 1e-14:
            raise DomainError(f"lambert_w0: {x!r} is below -1/e")
        x = -_INV_E
    if x == 0.0:
        return 0.0
    if x == -_INV_E:
        return -1.0

    if x > 1e16:
        # Direct iteration would overflow exp(w); solve w + ln(w) = ln(x).
        lx = math.log(x)
        w = lx - math.log(lx)
        for _ in range(_MAX_ITER):
            step = (w + math.log(w) - lx) / (1.0 + 1.0 / w)
            w -= step
            if abs(step) <= 1e-16 * w:
                break
        if abs(math.expm1(w + math.log(w) - lx)) > 1e-13:
            raise ConvergenceError("lambert_w0: large-argument solve stalled")
        return w

    if abs(x + _INV_E) < 1e-4:
        w = _branch_point_series(math.sqrt(2.0 * (math.e * x + 1.0)))
    elif x < 0.0:
        w = x * (1.0 - x + 1.5 * x * x)
    elif x < 3.0:
        w = math.log1p(x)
    else:
        l1 = math.log(x)
        l2 = math.log(l1)
        w = l1 - l2 + l2 / l1
    w = _halley_real(w, x)
    if w < -1.0:
        w = -1.0
    if abs(w * math.exp(w) - x) > 1e-13 * max(1.0, abs(x)):
        raise ConvergenceError("lambert_w0: residual above tolerance",
                               residual=abs(w * math.exp(w) - x))
    return w


def lambert_wm1(x):
    """Lower real branch W_-1, defined on ``[-1/e, 0)`` with values <= -1."""
    x = float(x)
    if x != x:
        raise DomainError("lambert_wm1: argument must not be NaN")
    if x >= 0.0:
        raise DomainError(f"lambert_wm1: {x!r} is not negative")
    if x < -_INV_E:
        if x < -_INV_E - 1e-14:
            raise DomainError(f"lambert_wm1: {x!r} is below -1/e")
        x = -_INV_E
    if x == -_INV_E:
        return -1.0

    if abs(x + _INV_E) < 1e-4:
        w = _branch_point_series(-math.sqrt(2.0 * (math.e * x + 1.0)))
    elif x < -0.27:
        w = _branch_point_series(-math.sqrt(2.0 * (math.e * x + 1.0)))
    else:
        l1 = math.log(-x)
        l2 = math.log(-l1)
        w = l1 - l2 + l2 / l1
    w = _halley_real(w, x)
    if w > -1.0:
        w = -1.0
    if abs(w * math.exp(w) - x) > 1e-13 * abs(x):
        raise ConvergenceError("lambert_wm1: residual above tolerance",
                               residual=abs(w * math.exp(w) - x))
    return w


def _initial_guess(n, z):
    """Branch-aware starting point for Halley iteration on branch n."""
    if n == 0:
        if abs(z + _INV_E) < 0.5:
            return _branch_point_series(cmath.sqrt(2.0 * (math.e * z + 1.0)))
        if abs(z) < 0.5:
            return z * (1.0 - z)
        if abs(z) <= 3.0:
            if abs(1.0 + z) > 0.4:
                return cmath.log(1.0 + z)
            # Small pocket around z = -1 not covered by the other seeds.
            return complex(-0.3, 1.4 if z.imag >= 0.0 else -1.4)
        ln = cmath.log(z)
        return ln - cmath.log(ln)
    ln = cmath.log(z) + complex(0.0, _TWO_PI * n)
    return ln - cmath.log(ln)


def lambert_w_complex(n, z):
    """Lambert W on an arbitrary integer branch ``n`` for complex ``z``.

    Certifies ``|w*exp(w) - z| <= 1e-12 * max(1, |z|)``; raises
    ``ConvergenceError`` (with the final residual) otherwise.  ``z = 0``
    is only in the domain of branch 0.
    """
    n = int(n)
    z = complex(z)
    if z != z:
        raise DomainError("lambert_w_complex: argument must not be NaN")
    if z == 0.0:
        if n == 0:
            return 0.0 + 0.0j
        raise DomainError(f"lambert_w_complex: z=0 is singular on branch {n}")

    # Real segments delegate to the real solvers so that real inputs give
    # exactly-real outputs (and exact agreement with the real API).
    if z.imag == 0.0:
        if n == 0 and z.real >= -_INV_E:
            return complex(lambert_w0(z.real), 0.0)
        if n == -1 and -_INV_E <= z.real < 0.0:
            return complex(lambert_wm1(z.real), 0.0)

    if abs(z) > 1e16:
        # Overflow-safe asymptotic regime: solve w + Log(w) = Log(z) + 2*pi*i*n.
        target = cmath.log(z) + complex(0.0, _TWO_PI * n)
        w = target - cmath.log(target)
        for _ in range(_MAX_ITER):
            step = (w + cmath.log(w) - target) / (1.0 + 1.0 / w)
            w -= step
            if abs(step) <= 1e-16 * abs(w):
                break
        residual = abs(cmath.exp(w + cmath.log(w) - cmath.log(z)) - 1.0)
        if residual > 1e-12:
            raise ConvergenceError(
                f"lambert_w_complex: stalled on branch {n}", residual=residual)
        return w

    w = _halley_complex(_initial_guess(n, z), z)
    residual = abs(w * cmath.exp(w) - z)
    if residual > 1e-12 * max(1.0, abs(z)):
        raise ConvergenceError(
            f"lambert_w_complex: residual above tolerance on branch {n} "
            f"for z={z!r}", residual=residual)
    return w


def branch_of(q):
    """Branch index ``n`` such that ``W_n(q * exp(q)) == q``.

    Candidates are ``round(Im(q)/2pi)`` and its two neighbours, widened by
    one more ring if none verifies.  Points that two branches both claim
    (branch-region boundaries) are rejected rather than resolved.
    """
    q = complex(q)
    if q != q or cmath.isinf(q):
        raise DomainError("branch_of: argument must be finite")
    try:
        qe = q * cmath.exp(q)
    except OverflowError:
        raise DomainError(f"branch_of: q*exp(q) overflows for q={q!r}") from None
    if qe != qe or cmath.isinf(qe):
        raise DomainError(f"branch_of: q*exp(q) overflows for q={q!r}")
    tol = 1e-9 * max(1.0, abs(q))

    def verifies(n):
        try:
            return abs(lambert_w_complex(n, qe) - q) <= tol
        except (DomainError, ConvergenceError):
            return False

    n_hat = round(q.imag / _TWO_PI)
    matches = [n for n in (n_hat - 1, n_hat, n_hat + 1) if verifies(n)]
    if not matches:
        matches = [n for n in (n_hat - 2, n_hat + 2) if verifies(n)]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        raise BranchAmbiguityError(
            f"branch_of: no branch in round(Im(q)/2pi)+-2 reproduces q={q!r}")
    raise BranchAmbiguityError(
        f"branch_of: branches {matches} all reproduce q={q!r} "
        "(branch-region boundary)")
