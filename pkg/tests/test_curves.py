from fractions import Fraction

import pytest

from holmcurve import (
    EPoint,
    HPoint,
    HolmParams,
    INFINITY,
    ValidationError,
    WeierstrassCurve,
    curve_from_params,
    default_x_bound,
    find_integral_points,
    holm_curve,
    on_E,
    on_H,
)
from conftest import canonical_points

BATTERY = [(1, 2), (2, 3), (3, 1), (1, 5), (5, 6), (3, 5), (1, 6), (7, 2)]


class TestHolmParams:
    def test_valid(self):
        HolmParams(1, 2)
        HolmParams(7, 30)

    @pytest.mark.parametrize(
        "k,l",
        [(2, 2), (0, 1), (1, 0), (-1, 2), (2, 4), (4, 3), (3, 12), (9, 2)],
    )
    def test_invalid(self, k, l):
        with pytest.raises(ValidationError):
            HolmParams(k, l)

    def test_messages_name_the_constraint(self):
        with pytest.raises(ValidationError, match="squarefree"):
            HolmParams(4, 3)
        with pytest.raises(ValidationError, match="distinct"):
            HolmParams(3, 3)
        with pytest.raises(ValidationError, match="coprime"):
            HolmParams(2, 4)


class TestWeierstrassCurve:
    def test_from_params(self):
        c = holm_curve(1, 2)
        assert (c.a, c.b) == (-12, 20)
        c = holm_curve(3, 1)
        assert (c.a, c.b) == (-27, 90)

    def test_discriminant(self):
        assert holm_curve(1, 2).discriminant == -62208
        # closed form: -432 k^4 l^4 (k^2 - l^2)^2
        for k, l in BATTERY:
            c = holm_curve(k, l)
            assert c.discriminant == -432 * k**4 * l**4 * (k * k - l * l) ** 2
            assert c.discriminant != 0

    def test_singular_rejected(self):
        with pytest.raises(ValidationError):
            WeierstrassCurve(0, 0)
        with pytest.raises(ValidationError):
            WeierstrassCurve(-3, 2)  # 4*(-27) + 27*4 = 0

    def test_params_mismatch_rejected(self):
        with pytest.raises(ValidationError):
            WeierstrassCurve(1, 2, params=HolmParams(1, 2))

    def test_bare_curve_allowed(self):
        WeierstrassCurve(0, -1)


class TestPoints:
    def test_epoint_coercion_and_equality(self):
        assert EPoint("1/4", "33/8") == EPoint(Fraction(1, 4), Fraction(33, 8))
        assert EPoint(1, -3) != EPoint(1, 3)
        assert INFINITY.is_infinity
        assert str(INFINITY) == "INFINITY"
        assert str(EPoint(1, -3)) == "(1, -3)"
        assert str(EPoint("1/4", "33/8")) == "(1/4, 33/8)"

    def test_epoint_half_specified_rejected(self):
        with pytest.raises(ValidationError):
            EPoint(1, None)

    def test_is_integral(self):
        assert EPoint(4, 6).is_integral()
        assert not EPoint("1/4", "33/8").is_integral()
        assert not INFINITY.is_integral()

    def test_hpoint(self):
        p = HPoint("-10/11", "-4/11")
        assert p.x == Fraction(-10, 11)
        assert not p.is_identity
        assert HPoint(0, 0).is_identity


class TestOnCurve:
    def test_on_E(self):
        c = holm_curve(1, 2)
        assert on_E(c, EPoint(1, -3))
        assert on_E(c, EPoint(4, 6))
        assert on_E(c, INFINITY)
        assert not on_E(c, EPoint(1, 3 + Fraction(1, 10**9)))
        assert not on_E(c, EPoint(0, 0))

    def test_on_H(self):
        p = HolmParams(1, 2)
        assert on_H(p, HPoint(0, 0))
        assert on_H(p, HPoint(1, 0))
        assert not on_H(p, HPoint(2, 2))

    def test_gamma_images_of_trivial_points_on_E(self):
        for k, l in BATTERY:
            c = holm_curve(k, l)
            for p in canonical_points(c):
                assert on_E(c, p), (k, l, p)


class TestIntegralPoints:
    def test_curve_1_2_bound_10_exact_list(self):
        # independent oracle: a direct sweep of x in [-10, 10] testing
        # whether x^3 - 12x + 20 is a perfect square
        expected = [
            EPoint(-4, -2), EPoint(-4, 2),
            EPoint(-2, -6), EPoint(-2, 6),
            EPoint(1, -3), EPoint(1, 3),
            EPoint(2, -2), EPoint(2, 2),
            EPoint(4, -6), EPoint(4, 6),
            EPoint(10, -30), EPoint(10, 30),
        ]
        assert find_integral_points(holm_curve(1, 2), 10) == expected

    def test_curve_3_1_includes_canonical(self):
        points = find_integral_points(holm_curve(3, 1), 10)
        assert EPoint(9, 24) in points and EPoint(9, -24) in points

    def test_bound_zero_rejected(self):
        with pytest.raises(ValidationError):
            find_integral_points(holm_curve(1, 2), 0)

    def test_y_zero_listed_once(self):
        # non-Holm curve with a rational 2-torsion point
        points = find_integral_points(WeierstrassCurve(0, -1), 5)
        assert points.count(EPoint(1, 0)) == 1

    def test_all_points_on_curve_and_sorted(self):
        for k, l in [(1, 2), (3, 1), (2, 3)]:
            c = holm_curve(k, l)
            pts = find_integral_points(c, 200)
            assert pts == sorted(pts, key=lambda p: (p.x, p.y))
            for p in pts:
                assert on_E(c, p)

    def test_nonzero_x_on_holm_curves(self):
        # any x = 0 hit would be a counterexample to the nonvanishing claim
        offenders = []
        for k, l in BATTERY:
            c = holm_curve(k, l)
            offenders += [(k, l, p) for p in find_integral_points(c, 500) if p.x == 0]
        assert offenders == []

    def test_default_bound(self):
        assert default_x_bound(holm_curve(1, 2)) == 10**4
        assert default_x_bound(holm_curve(5, 6)) == 4 * 54900
        assert default_x_bound(WeierstrassCurve(0, -1)) == 10**4
        canonical_inside = [
            k**2 <= default_x_bound(holm_curve(k, l)) for k, l in BATTERY
        ]
        assert all(canonical_inside)
