import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from nicholson import DomainError, f1_bessel, f3_lommel, lommel_s0, scorer_gi, airy_ai
from nicholson.lattice import LatticeParams, u_exact, u_quasifront, v_exact, v_quasifront
from nicholson.series import bessel_j_series


def P(k, t, c=1.0):
    return LatticeParams(c, k, t)


class TestParams:
    @pytest.mark.parametrize(
        "c,k,t", [(0.0, 1, 1.0), (-1.0, 1, 1.0), (1.0, -1, 1.0), (1.0, 1.5, 1.0), (1.0, 1, -0.1), (math.nan, 1, 1.0)]
    )
    def test_rejects_invalid(self, c, k, t):
        with pytest.raises(DomainError):
            LatticeParams(c, k, t)

    def test_quasifront_needs_positive_time(self):
        with pytest.raises(DomainError):
            u_quasifront(P(2, 0.0))
        with pytest.raises(DomainError):
            v_quasifront(P(2, 0.0))


class TestExact:
    def test_origin(self):
        assert u_exact(P(0, 0.0)) == 1.0
        for k in (1, 2, 7):
            assert abs(u_exact(P(k, 0.0))) < 1e-15
            assert v_exact(P(k, 0.0)) == 0.0

    def test_u_two_paths(self):
        k, c, t = 3, 1.0, 5.0
        direct, _ = integrate.quad(
            lambda s: 2 / math.pi * math.cos(2 * k * s) * math.cos(2 * c * t * math.sin(s)),
            0,
            math.pi / 2,
            epsabs=1e-14,
        )
        assert u_exact(P(k, t, c)) == pytest.approx(direct, abs=1e-9)
        assert u_exact(P(k, t, c)) == pytest.approx(bessel_j_series(6, 10.0), abs=1e-9)

    def test_v_is_scaled_lommel(self):
        assert v_exact(P(3, 5.0)) == pytest.approx(lommel_s0(6, 10.0).value / math.pi, abs=1e-12)

    def test_v_velocity_scaling(self):
        assert v_exact(P(3, 5.0, c=2.0)) == pytest.approx(0.5 * lommel_s0(6, 20.0).value / math.pi, abs=1e-12)


class TestQuasiFront:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 200), st.floats(0.1, 300), st.floats(0.2, 5))
    def test_reduces_to_approximants(self, k, t, c):
        p = P(k, t, c)
        assert u_quasifront(p) == pytest.approx(f1_bessel(2 * k, 2 * c * t), rel=1e-14, abs=1e-300)
        assert v_quasifront(p) == pytest.approx(f3_lommel(2 * k, 2 * c * t) / (math.pi * c), rel=1e-14, abs=1e-300)

    def test_on_the_front(self):
        p = P(20, 10.0, c=2.0)
        assert u_quasifront(p) == pytest.approx(airy_ai(0).value / 20 ** (1 / 3), rel=1e-15)
        v = v_quasifront(p)
        assert v == pytest.approx(-scorer_gi(0).value / (2 * 2.0 * 20 ** (1 / 3)), rel=1e-15)
        assert v < 0

    def test_peak_amplitudes_at_k50(self):
        ts = np.arange(40.0, 62.0, 0.05)

        def peak(fn):
            return max(abs(fn(P(50, t))) for t in ts)

        assert peak(u_quasifront) == pytest.approx(peak(u_exact), rel=0.03)
        assert peak(v_quasifront) == pytest.approx(peak(v_exact), rel=0.06)

    def test_front_error_shrinks(self):
        errs = []
        for k in (10, 100, 1000):
            p = P(k, float(k))
            errs.append(abs(u_exact(p) - u_quasifront(p)) / abs(u_quasifront(p)))
        assert errs[0] > errs[1] > errs[2]
