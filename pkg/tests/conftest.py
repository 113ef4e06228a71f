"""Shared test helpers: canonical points and sampled point families."""

from holmcurve import EPoint, WeierstrassCurve, e_add, e_scalar_mul


def canonical_points(curve: WeierstrassCurve) -> list[EPoint]:
    """The two integral points every Holm-derived curve carries:
    (k^2, k(k^2 - l^2)) and (l^2, l(l^2 - k^2))."""
    k, l = curve.params.k, curve.params.l
    return [
        EPoint(k * k, k * (k * k - l * l)),
        EPoint(l * l, l * (l * l - k * k)),
    ]


def combo_points(curve: WeierstrassCurve, span: int = 2) -> list[EPoint]:
    """Distinct small group-law combinations m*P1 + n*P2 of the canonical
    points, m, n in [-span, span].  Includes the point at infinity."""
    p1, p2 = canonical_points(curve)
    seen: set[EPoint] = set()
    points: list[EPoint] = []
    for m in range(-span, span + 1):
        for n in range(-span, span + 1):
            q = e_add(curve, e_scalar_mul(curve, m, p1), e_scalar_mul(curve, n, p2))
            if q not in seen:
                seen.add(q)
                points.append(q)
    return points


def affine_samples(curve: WeierstrassCurve, count: int) -> list[EPoint]:
    """At least ``count`` distinct affine on-curve points built from
    combinations of the canonical points."""
    span = 2
    while True:
        points = [p for p in combo_points(curve, span) if not p.is_infinity]
        if len(points) >= count:
            return points[:count]
        span += 1
        if span > 6:
            raise AssertionError(f"could not generate {count} points on {curve}")
