"""Piecewise-linear membership functions and centroid defuzzification.

Inputs: one "high" set over agreement values in [0, 1] and a
dislike/normal/like triple over favorite values in [-1, 1].  Outputs:
negative/normal/positive recommendation sets over [0, 1], collapsed to
a single strength by the centroid of their clipped union on a fixed
101-point grid.  Breakpoints are data and ship in the bundle config.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from concierge.errors import ValidationError

GRID_POINTS = 101
NEUTRAL_STRENGTH = 0.5


@dataclass(frozen=True)
class PiecewiseLinear:
    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValidationError("membership function needs at least two breakpoints")
        xs = [x for x, _ in self.points]
        if xs != sorted(xs) or len(set(xs)) != len(xs):
            raise ValidationError("breakpoint x values must be strictly increasing")
        if not all(0.0 <= y <= 1.0 for _, y in self.points):
            raise ValidationError("membership degrees must be in [0, 1]")

    def __call__(self, x: float) -> float:
        pts = self.points
        if x <= pts[0][0]:
            return pts[0][1]
        if x >= pts[-1][0]:
            return pts[-1][1]
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        raise AssertionError("unreachable")


class FVMembership(NamedTuple):
    dislike: float
    normal: float
    like: float


_DEFAULTS = {
    "av_high": [(0.0, 0.0), (0.3, 0.0), (0.7, 1.0), (1.0, 1.0)],
    "fv_dislike": [(-1.0, 1.0), (-0.2, 0.0), (1.0, 0.0)],
    "fv_normal": [(-1.0, 0.0), (-0.6, 0.0), (0.0, 1.0), (0.6, 0.0), (1.0, 0.0)],
    "fv_like": [(-1.0, 0.0), (0.2, 0.0), (1.0, 1.0)],
    "out_negative": [(0.0, 0.75), (0.1, 1.0), (0.5, 0.0), (1.0, 0.0)],
    "out_normal": [(0.0, 0.0), (0.1, 0.0), (0.5, 1.0), (0.9, 0.0), (1.0, 0.0)],
    "out_positive": [(0.0, 0.0), (0.5, 0.0), (0.9, 1.0), (1.0, 0.75)],
}
FUNCTION_NAMES = tuple(_DEFAULTS)


@dataclass(frozen=True)
class MembershipFunctionSet:
    av_high: PiecewiseLinear
    fv_dislike: PiecewiseLinear
    fv_normal: PiecewiseLinear
    fv_like: PiecewiseLinear
    out_negative: PiecewiseLinear
    out_normal: PiecewiseLinear
    out_positive: PiecewiseLinear

    @classmethod
    def default(cls) -> "MembershipFunctionSet":
        return cls.from_dict({})

    @classmethod
    def from_dict(cls, doc: dict) -> "MembershipFunctionSet":
        if not isinstance(doc, dict):
            raise ValidationError("membership config must be an object")
        functions = {}
        for name in FUNCTION_NAMES:
            raw = doc.get(name, _DEFAULTS[name])
            try:
                points = tuple((float(x), float(y)) for x, y in raw)
            except (TypeError, ValueError):
                raise ValidationError("breakpoints must be [x, y] pairs", name) from None
            functions[name] = PiecewiseLinear(points)
        return cls(**functions)

    def fuzzify_av(self, av: float) -> float:
        """Degree to which an agreement value counts as high."""
        return self.av_high(av)

    def fuzzify_fv(self, fv: float) -> FVMembership:
        return FVMembership(self.fv_dislike(fv), self.fv_normal(fv), self.fv_like(fv))


def defuzzify(
    neg: float,
    norm: float,
    pos: float,
    mfs: MembershipFunctionSet | None = None,
    diagnostics: list[str] | None = None,
) -> float:
    """Centroid of the clipped union of the three output sets."""
    for name, degree in (("neg", neg), ("norm", norm), ("pos", pos)):
        if not 0.0 <= degree <= 1.0:
            raise ValidationError(f"{name} degree {degree!r} outside [0, 1]")
    mfs = mfs or MembershipFunctionSet.default()
    moment = 0.0
    area = 0.0
    for i in range(GRID_POINTS):
        x = i / (GRID_POINTS - 1)
        m = max(
            min(neg, mfs.out_negative(x)),
            min(norm, mfs.out_normal(x)),
            min(pos, mfs.out_positive(x)),
        )
        moment += x * m
        area += m
    if area == 0.0:
        if diagnostics is not None:
            diagnostics.append("defuzzify:all-zero-memberships")
        return NEUTRAL_STRENGTH
    return moment / area
