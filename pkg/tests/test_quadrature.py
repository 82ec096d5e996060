import math

import numpy as np
import pytest

from defourier.de_maps import PHI1, phi, phi2_map, phi_prime
from defourier.errors import DomainError, IntegrandError
from defourier.quadrature import (
    Integrand,
    QuadratureParams,
    TransformKind,
    as_integrand,
    fourier_transform,
    nodes,
    transform,
)
from defourier.specfun import lambert_w0

TWO_PI = 2.0 * math.pi


def h_star(n, theta):
    """A-priori phi1 mesh used by several examples."""
    return (2.0 / n) * lambert_w0(math.sqrt(n * theta / 2.0))


F1 = Integrand(eval=lambda x: 1.0 / (1.0 + x * x), bound_C=1.0,
               poles=(((1j), -0.5j),))


class TestValidation:
    def test_params(self):
        with pytest.raises(DomainError):
            QuadratureParams(h=0.0, m=1, n=1)
        with pytest.raises(DomainError):
            QuadratureParams(h=0.1, m=-1, n=1)
        with pytest.raises(DomainError):
            QuadratureParams(h=0.1, m=1.5, n=1)
        p = QuadratureParams(h=0.1, m=3, n=4)
        assert p.tau * p.h == pytest.approx(math.pi, abs=0)
        assert p.total_nodes == 8

    def test_kind_parse(self):
        assert TransformKind.parse("cosine") is TransformKind.COSINE
        assert TransformKind.parse(TransformKind.SINE) is TransformKind.SINE
        with pytest.raises(DomainError):
            TransformKind.parse("tangent")

    def test_integrand_pole_on_axis_rejected(self):
        with pytest.raises(DomainError):
            Integrand(eval=lambda x: x, poles=((complex(1.0, 0.0), 1.0),))

    def test_integrand_sorts_poles(self):
        f = Integrand(eval=lambda x: x,
                      poles=((3j, 1.0), (1j, 2.0), (-2j, 0.5)))
        assert [abs(z.imag) for z, _ in f.poles] == [1.0, 2.0, 3.0]

    def test_omega_positive(self):
        p = QuadratureParams(h=0.1, m=5, n=5)
        with pytest.raises(DomainError):
            transform(F1, "cosine", 0.0, PHI1, p)


class TestTransformValues:
    def test_zero_integrand(self):
        p = QuadratureParams(h=0.1, m=10, n=10)
        assert transform(lambda x: 0.0, "cosine", 1.0, PHI1, p) == 0.0
        assert transform(lambda x: 0.0, "sine", 2.0, PHI1, p) == 0.0

    def test_lorentzian_cosine_analytic(self):
        # F(ω) = (π/2) e^{-ω} at ω = 1.
        h = h_star(40, math.pi / 2.0)
        p = QuadratureParams(h=h, m=40, n=40)
        got = transform(F1, "cosine", 1.0, PHI1, p)
        want = 0.5 * math.pi * math.exp(-1.0)
        assert want == pytest.approx(0.5778636748954609, abs=1e-15)
        assert got == pytest.approx(want, abs=1e-8)

    def test_inverse_sqrt_sine_analytic(self):
        # ∫ x^{-1/2} sin x dx = sqrt(π/2); cross-checked with a larger rule.
        h = h_star(60, math.pi / 2.0)
        p = QuadratureParams(h=h, m=60, n=60)
        got = transform(lambda x: 1.0 / math.sqrt(x), "sine", 1.0, PHI1, p)
        want = math.sqrt(math.pi / 2.0)
        assert want == pytest.approx(1.2533141373155003, abs=1e-15)
        assert got == pytest.approx(want, abs=1e-8)
        h2 = h_star(120, math.pi / 2.0)
        p2 = QuadratureParams(h=h2, m=120, n=120)
        refined = transform(lambda x: 1.0 / math.sqrt(x), "sine", 1.0, PHI1, p2)
        assert refined == pytest.approx(want, abs=1e-12)

    def test_phi2_map_also_converges(self):
        n = 40
        h = lambert_w0(n * math.pi * (math.pi / 2.0) / 0.25) / n
        m2 = phi2_map(tau=math.pi / h)
        mm = int(math.ceil(n - math.log(m2.alpha / m2.beta) / h))
        p = QuadratureParams(h=h, m=mm, n=n)
        got = transform(F1, "cosine", 1.0, m2, p)
        want = 0.5 * math.pi * math.exp(-1.0)
        assert got == pytest.approx(want, abs=1e-10)

    def test_fourier_combination(self):
        p = QuadratureParams(h=h_star(30, math.pi / 2), m=30, n=30)
        z = fourier_transform(F1, 1.0, PHI1, p, p)
        assert z.real == transform(F1, "cosine", 1.0, PHI1, p)
        assert z.imag == transform(F1, "sine", 1.0, PHI1, p)
        zero = fourier_transform(lambda x: 0.0, 1.0, PHI1, p, p)
        assert zero == 0.0 + 0.0j


class TestNodes:
    def test_single_node_sine(self):
        p = QuadratureParams(h=0.5, m=0, n=0)
        pts = nodes(PHI1, "sine", 2.0, p)
        assert len(pts) == 1
        x, w = pts[0]
        tau = math.pi / 0.5
        assert x == pytest.approx((tau / 2.0) / TWO_PI, rel=1e-15)
        assert w == pytest.approx(
            (tau / 2.0) * 0.5 * math.sin(tau / TWO_PI) * 0.5, rel=1e-15)

    def test_positivity_and_length(self):
        rng = np.random.default_rng(8)
        for _ in range(25):
            p = QuadratureParams(
                h=float(rng.uniform(0.02, 0.5)),
                m=int(rng.integers(0, 80)),
                n=int(rng.integers(0, 80)),
            )
            kind = "cosine" if rng.integers(2) else "sine"
            m = PHI1 if rng.integers(2) else phi2_map(tau=p.tau)
            pts = nodes(m, kind, float(rng.uniform(0.5, 20.0)), p)
            assert len(pts) == p.total_nodes
            # Node positivity, except where the map has underflowed to +0
            # (those nodes carry weights below the evaluation floor).
            for x, w in pts:
                assert x > 0.0 or (x == 0.0 and abs(w) < 1e-320)

    def test_weighted_sum_matches_transform(self):
        p = QuadratureParams(h=0.08, m=30, n=30)
        pts = nodes(PHI1, "cosine", 2.0, p)
        s = 0.0
        comp = 0.0
        for x, w in pts:
            y = w * F1.eval(x) - comp
            t = s + y
            comp = (t - s) - y
            s = t
        assert s == transform(F1, "cosine", 2.0, PHI1, p)

    def test_frequency_scaling(self):
        p = QuadratureParams(h=0.09, m=20, n=20)
        base = nodes(PHI1, "cosine", 1.0, p)
        scaled = nodes(PHI1, "cosine", 4.0, p)
        for (x1, _), (x4, _) in zip(base, scaled):
            assert x4 == pytest.approx(x1 / 4.0, rel=1e-14)

    def test_cosine_mesh_is_shifted(self):
        p = QuadratureParams(h=0.2, m=0, n=0)
        (xc, _), = nodes(PHI1, "cosine", 1.0, p)
        tau = math.pi / 0.2
        assert xc == pytest.approx(tau * phi(PHI1, -0.1), rel=1e-15)


class TestRobustness:
    def test_sine_of_constant_is_finite(self):
        p = QuadratureParams(h=0.07, m=50, n=50)
        val = transform(lambda x: 1.0, "sine", 1.0, PHI1, p)
        assert math.isfinite(val)

    def test_tail_terms_decay_double_exponentially(self):
        p = QuadratureParams(h=0.1, m=40, n=40)
        pts = nodes(PHI1, "cosine", 1.0, p)
        terms = np.array([abs(w * F1.eval(x)) for x, w in pts])
        peak = terms.max()
        assert terms[0] < 1e-30 * peak  # left tail truly underflows
        assert terms[-1] < 1e-13 * peak  # right tail reaches the noise floor
        # Envelope fit: ln(-ln|term|) grows linearly in |j|h on the right
        # tail.  Fit only above the rounding noise floor of the cosine
        # factor (~1e-16 relative), below which terms flatten out.
        xs, ys = [], []
        for idx in range(55, len(terms)):
            t = terms[idx] / peak
            if 1e-14 < t < 1e-3:
                xs.append((idx - 40) * p.h)
                ys.append(math.log(-math.log(t)))
        assert len(xs) >= 4
        slope = np.polyfit(xs, ys, 1)[0]
        assert slope > 0.3

    def test_order_independence_of_sum(self):
        p = QuadratureParams(h=0.08, m=35, n=35)
        value = transform(F1, "cosine", 1.0, PHI1, p)
        pts = nodes(PHI1, "cosine", 1.0, p)
        rng = np.random.default_rng(17)
        for _ in range(5):
            idx = rng.permutation(len(pts))
            s = 0.0
            comp = 0.0
            for i in idx:
                x, w = pts[i]
                y = w * F1.eval(x) - comp
                t = s + y
                comp = (t - s) - y
                s = t
            assert s == pytest.approx(value, rel=1e-15)

    def test_integrand_exception_reports_node(self):
        def bad(x):
            if x > 1.0:
                raise ValueError("boom")
            return 1.0

        p = QuadratureParams(h=0.1, m=10, n=30)
        with pytest.raises(IntegrandError) as err:
            transform(bad, "cosine", 1.0, PHI1, p)
        assert err.value.node is not None and err.value.node > 1.0

    def test_non_finite_value_reports_node(self):
        p = QuadratureParams(h=0.1, m=5, n=5)
        with pytest.raises(IntegrandError):
            transform(lambda x: float("nan"), "cosine", 1.0, PHI1, p)

    def test_underflowing_weights_skip_evaluation(self):
        calls = []

        def probe(x):
            calls.append(x)
            return 1.0 / math.sqrt(x)

        p = QuadratureParams(h=0.1, m=150, n=40)
        val = transform(probe, "sine", 1.0, PHI1, p)
        assert math.isfinite(val)
        assert len(calls) < p.total_nodes  # deep-left nodes never evaluated

    def test_as_integrand(self):
        assert as_integrand(F1) is F1
        wrapped = as_integrand(lambda x: x)
        assert isinstance(wrapped, Integrand)
        with pytest.raises(DomainError):
            as_integrand(42)
