import random
from fractions import Fraction

import pytest

from holmcurve import (
    ConsistencyError,
    CurvePoly,
    DivPolyCache,
    EPoint,
    INFINITY,
    TorsionDenominatorError,
    ValidationError,
    WeierstrassCurve,
    e_scalar_mul,
    holm_curve,
    mul_via_divpolys,
    on_E,
    scaled_integrality,
    check_divisibility,
    x_triple_closed_form,
)
from holmcurve.division_polys import _pmul_kronecker, _pmul_schoolbook
from conftest import affine_samples

C12 = holm_curve(1, 2)
C31 = holm_curve(3, 1)


@pytest.fixture(scope="module")
def cache12():
    return DivPolyCache(C12)


@pytest.fixture(scope="module")
def cache31():
    return DivPolyCache(C31)


class TestCurvePolyRing:
    def test_y_squared_reduces_to_cubic(self):
        y = CurvePoly(C12, g=(1,))
        assert y * y == CurvePoly(C12, f=(20, -12, 0, 1))

    def test_mixed_product(self):
        # (1 + y)(1 - y) = 1 - y^2 = 1 - (x^3 - 12x + 20)
        p = CurvePoly(C12, f=(1,), g=(1,))
        q = CurvePoly(C12, f=(1,), g=(-1,))
        assert p * q == CurvePoly(C12, f=(-19, 12, 0, -1))

    def test_scalar_and_negation(self):
        p = CurvePoly(C12, f=(1, 2), g=(3,))
        assert 2 * p == CurvePoly(C12, f=(2, 4), g=(6,))
        assert -p + p == CurvePoly(C12)

    def test_cross_curve_rejected(self):
        with pytest.raises(ValidationError):
            CurvePoly(C12, f=(1,)) * CurvePoly(C31, f=(1,))

    def test_evaluate_mixed_needs_y(self):
        p = CurvePoly(C12, f=(1,), g=(1,))
        assert p.evaluate(1, -3) == -2
        with pytest.raises(ValidationError):
            p.evaluate(1)

    def test_div_exact_y(self):
        # 2y * y = 2C: dividing back by 2y recovers y
        c2 = CurvePoly(C12, f=(40, -24, 0, 2))
        assert c2.div_exact_y(2) == CurvePoly(C12, g=(1,))

    def test_div_inexact_coefficient(self):
        with pytest.raises(ConsistencyError):
            CurvePoly(C12, g=(3,)).div_exact_y(2)

    def test_div_inexact_remainder(self):
        with pytest.raises(ConsistencyError):
            CurvePoly(C12, f=(1,)).div_exact_y(2)


class TestMultiplicationBackends:
    def test_kronecker_matches_schoolbook(self):
        rng = random.Random(99)
        for _ in range(40):
            u = tuple(rng.randint(-(10**18), 10**18) for _ in range(rng.randint(1, 80)))
            v = tuple(rng.randint(-(10**18), 10**18) for _ in range(rng.randint(1, 80)))
            assert _pmul_kronecker(u, v) == _pmul_schoolbook(u, v)


class TestPsi:
    def test_base_cases(self, cache12):
        assert cache12.psi(0) == CurvePoly(C12)
        assert cache12.psi(1) == CurvePoly(C12, f=(1,))
        assert cache12.psi(2) == CurvePoly(C12, g=(2,))
        assert cache12.psi(3) == CurvePoly(C12, f=(-144, 240, -72, 0, 3))
        assert cache12.psi(4) == CurvePoly(
            C12, g=(-5888, 3840, -2880, 1600, -240, 0, 4)
        )

    def test_parity_shape(self, cache12):
        for n in range(1, 16):
            poly = cache12.psi(n)
            if n % 2:
                assert poly.is_pure_x, n
            else:
                assert not poly.f, n

    def test_psi5_square_degree_and_lead(self, cache12):
        sq = cache12.psi_squared(5)
        assert sq.x_degree == 24
        assert sq.f[-1] == 25

    def test_negative_index_rejected(self, cache12):
        with pytest.raises(ValidationError):
            cache12.psi(-1)

    def test_exact_divisions_up_to_40(self):
        # every 2y division in the even recurrence and every 4y division in
        # omega must be exact in the ring for n in 0..40
        cache = DivPolyCache(C12)
        for n in range(0, 41):
            cache.psi(n)
            if n >= 2:
                cache.omega(n)


class TestPhi:
    def test_phi1_is_x(self, cache12):
        assert cache12.phi(1) == CurvePoly(C12, f=(0, 1))

    def test_phi2_matches_doubling_numerator(self, cache12):
        # x^4 - 2ax^2 - 8bx + a^2 at a = -12, b = 20
        assert cache12.phi(2) == CurvePoly(C12, f=(144, -160, 24, 0, 1))

    def test_degree_lead_and_subleading(self, cache12):
        for n in range(1, 13):
            phi = cache12.phi(n)
            assert phi.x_degree == n * n
            assert phi.f[-1] == 1
            if n >= 2:
                assert phi.f[n * n - 1] == 0

    def test_index_zero_rejected(self, cache12):
        with pytest.raises(ValidationError):
            cache12.phi(0)


class TestOmega:
    def test_omega2_is_quarter_psi4(self, cache12):
        # psi_1^2 psi_4 - psi_0 psi_3^2 = psi_4 = y * (4 ...), so omega_2 is
        # the pure-x polynomial psi_4.g / 4
        omega2 = cache12.omega(2)
        assert omega2.is_pure_x
        assert omega2.f == tuple(c // 4 for c in cache12.psi(4).g)

    def test_omega2_value_at_base_point(self, cache12):
        assert cache12.omega(2).evaluate(1, -3) == -891
        psi2_cubed = cache12.psi(2).evaluate(1, -3) ** 3
        assert psi2_cubed == -216
        # quotient is exactly y(2P), fixing the normalization
        assert Fraction(-891, 1) / psi2_cubed == Fraction(33, 8)

    def test_omega3_over_psi_cubed_is_y_of_triple(self, cache12):
        for p in affine_samples(C12, 6):
            y3 = cache12.omega(3).evaluate(p.x, p.y) / cache12.psi(3).evaluate(p.x, p.y) ** 3
            assert y3 == e_scalar_mul(C12, 3, p).y

    def test_index_one_rejected(self, cache12):
        with pytest.raises(ValidationError):
            cache12.omega(1)


class TestMulViaDivPolys:
    def test_doubling_worked_value(self, cache12):
        assert mul_via_divpolys(cache12, 2, EPoint(1, -3)) == EPoint(
            Fraction(1, 4), Fraction(33, 8)
        )

    def test_tripling_matches_group_law(self, cache12):
        p = EPoint(4, 6)
        assert mul_via_divpolys(cache12, 3, p) == e_scalar_mul(C12, 3, p)

    def test_equivalence_across_n(self, cache12):
        for p in affine_samples(C12, 4):
            for n in range(2, 13):
                assert mul_via_divpolys(cache12, n, p) == e_scalar_mul(C12, n, p)

    def test_infinity_rejected(self, cache12):
        with pytest.raises(ValidationError):
            mul_via_divpolys(cache12, 2, INFINITY)

    def test_small_n_rejected(self, cache12):
        with pytest.raises(ValidationError):
            mul_via_divpolys(cache12, 1, EPoint(1, -3))

    def test_off_curve_rejected(self, cache12):
        with pytest.raises(ValidationError):
            mul_via_divpolys(cache12, 2, EPoint(1, 1))

    def test_torsion_denominator(self):
        # (1, 0) is 2-torsion on y^2 = x^3 - 1, so psi_2 = 2y vanishes there
        curve = WeierstrassCurve(0, -1)
        cache = DivPolyCache(curve)
        with pytest.raises(TorsionDenominatorError):
            mul_via_divpolys(cache, 2, EPoint(1, 0))
        # the group-law route returns infinity in exactly this case
        assert e_scalar_mul(curve, 2, EPoint(1, 0)) == INFINITY


class TestTripleClosedForm:
    def test_matches_group_law(self):
        for curve, x, y in [(C31, 9, 24), (C12, 1, -3)]:
            p = EPoint(x, y)
            assert on_E(curve, p)
            assert x_triple_closed_form(curve, x) == e_scalar_mul(curve, 3, p).x

    def test_symbolic_identity_with_phi3(self, cache12, cache31):
        # the closed-form numerator is phi_3 and the denominator is psi_3^2
        for cache in (cache12, cache31):
            a, b = cache.curve.a, cache.curve.b
            numerator = (
                8 * b * (a**3 + 8 * b * b),
                3 * a * (3 * a**3 + 32 * b * b),
                48 * a * a * b,
                12 * (3 * a**3 + 4 * b * b),
                -24 * a * b,
                30 * a * a,
                -96 * b,
                -12 * a,
                0,
                1,
            )
            assert cache.phi(3).f == numerator

    def test_three_torsion_denominator(self):
        # psi_3 = 3x^4 - 12x = 3x(x^3 - 4) on y^2 = x^3 - 1 vanishes at x = 0
        with pytest.raises(TorsionDenominatorError):
            x_triple_closed_form(WeierstrassCurve(0, -1), 0)


class TestDivisibility:
    def test_worked_instances(self, cache12, cache31):
        assert check_divisibility(cache12, 3, 4)
        assert check_divisibility(cache31, 5, 9)
        assert check_divisibility(cache12, 7, 1)

    def test_non_divisor_rejected(self, cache12):
        with pytest.raises(ValidationError):
            check_divisibility(cache12, 3, 7)


class TestScaledIntegrality:
    def test_worked_instance(self, cache12):
        # at x = 1/4 with d = (kl)^2 = 4: psi-side 4*(-48/4 + 80) = 272,
        # phi-side 16*(24/16 - 40 + 144) = 1688
        values, flags = scaled_integrality(cache12, 2, 1, 4, 4)
        assert values == (272, 1688)
        assert flags == (True, True)

    def test_z_one_reduces_to_coefficient_divisibility(self, cache31):
        values, flags = scaled_integrality(cache31, 3, 9, 1, 9)
        assert flags == (True, True)

    def test_random_small_fractions(self):
        cache = DivPolyCache(holm_curve(1, 3))
        rng = random.Random(5)
        for n in (2, 3, 5):
            for _ in range(5):
                w = rng.choice([i for i in range(-9, 10) if i])
                z = rng.choice([i for i in range(-9, 10) if i])
                _, flags = scaled_integrality(cache, n, w, z, 9)
                assert flags == (True, True)

    def test_zero_inputs_rejected(self, cache12):
        with pytest.raises(ValidationError):
            scaled_integrality(cache12, 2, 0, 4, 4)
        with pytest.raises(ValidationError):
            scaled_integrality(cache12, 1, 1, 4, 4)
