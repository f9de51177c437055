"""Convex polygons with exact rational vertices and per-constraint openness.

A polygon is the intersection of its ``constraints``. ``vertices`` is the closure of that
set: counter-clockwise, lexicographically smallest vertex first, no collinear vertices.
A closure of one or two points is a degenerate polygon. A polygon with no vertices is empty.
Constraints that hold strictly at every vertex are dropped; they cannot change the set.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, Sequence

from scramble_attack.errors import EmptyPolygonError
from scramble_attack.exact_geometry.halfplane import HalfPlane, Number

Point = tuple[Fraction, Fraction]


def _cross(o: Point, p: Point, q: Point) -> Fraction:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def _as_point(x: Number, y: Number) -> Point:
    return Fraction(x), Fraction(y)


@dataclass(frozen=True, eq=False)
class RationalConvexPolygon:
    vertices: tuple[Point, ...]
    constraints: tuple[HalfPlane, ...]

    # --- construction ---

    @classmethod
    def from_box(
        cls, x0: Number, y0: Number, x1: Number, y1: Number, *, open_high: bool = False
    ) -> "RationalConvexPolygon":
        """The rectangle ``[x0, x1] x [y0, y1]``; ``open_high`` drops the top and right edges."""
        closed_high = not open_high
        constraints = [
            HalfPlane.at_least(1, 0, x0),
            HalfPlane.at_least(0, 1, y0),
            HalfPlane.make(1, 0, x1, closed_high),
            HalfPlane.make(0, 1, y1, closed_high),
        ]
        return _build(
            [_as_point(x0, y0), _as_point(x1, y0), _as_point(x1, y1), _as_point(x0, y1)],
            constraints,
        )

    @classmethod
    def from_vertices(
        cls, points: Iterable[tuple[Number, Number]], open_edges: Sequence[bool] | None = None
    ) -> "RationalConvexPolygon":
        """Convex hull of ``points`` with closed edges.

        ``open_edges`` marks edges of the canonical hull (in ``vertices`` order) as open.
        """
        hull = _convex_hull([_as_point(x, y) for x, y in points])
        if not hull:
            return EMPTY_POLYGON

        constraints = _hull_constraints(hull)
        if open_edges is not None:
            for idx, is_open in enumerate(open_edges):
                if is_open:
                    p, q = hull[idx], hull[(idx + 1) % len(hull)]
                    constraints.append(_edge_halfplane(p, q, closed=False))
        return _build(hull, constraints)

    # --- set queries ---

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_degenerate(self) -> bool:
        """Nonempty with zero area: a segment or a point."""
        return 0 < len(self.vertices) < 3

    def contains(self, x: Number, y: Number) -> bool:
        if self.is_empty:
            return False
        return all(hp.contains(Fraction(x), Fraction(y)) for hp in self.constraints)

    @property
    def open_edges(self) -> tuple[bool, ...]:
        """Per edge ``vertices[i] -> vertices[i+1]``: whether it is excluded from the set."""
        k = len(self.vertices)
        return tuple(
            any(
                not hp.closed and hp.side(*self.vertices[i]) == 0 and hp.side(*self.vertices[(i + 1) % k]) == 0
                for hp in self.constraints
            )
            for i in range(k)
        )

    @property
    def excluded_vertices(self) -> tuple[bool, ...]:
        return tuple(any(not hp.closed and hp.side(*v) == 0 for hp in self.constraints) for v in self.vertices)

    @property
    def key(self) -> tuple:
        """Canonical identity of the point set."""
        return self.vertices, self.open_edges, self.excluded_vertices

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalConvexPolygon):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        points = ", ".join(f"({x}, {y})" for x, y in self.vertices)
        return f"RationalConvexPolygon([{points}])"

    # --- measures ---

    def area(self) -> Fraction:
        """Shoelace area of the closure; zero when empty or degenerate."""
        k = len(self.vertices)
        if k < 3:
            return Fraction(0)
        twice = sum(
            self.vertices[i][0] * self.vertices[(i + 1) % k][1] - self.vertices[(i + 1) % k][0] * self.vertices[i][1]
            for i in range(k)
        )
        return Fraction(twice) / 2

    def functional_range(self, a: Number, b: Number) -> tuple[Fraction, Fraction]:
        """Min and max of ``a*x + b*y`` over the closure."""
        if self.is_empty:
            raise EmptyPolygonError("functional_range of an empty polygon")
        values = [a * x + b * y for x, y in self.vertices]
        return min(values), max(values)

    def bounding_box(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """``(xmin, ymin, xmax, ymax)`` of the closure."""
        if self.is_empty:
            raise EmptyPolygonError("bounding_box of an empty polygon")
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    # --- transforms ---

    def intersect(self, hp: HalfPlane) -> "RationalConvexPolygon":
        """Exact clip by one half-plane (Sutherland-Hodgman on the closure)."""
        if self.is_empty or hp in self.constraints:
            return self

        signs = [hp.side(x, y) for x, y in self.vertices]
        if all(s < 0 for s in signs):
            return self
        if all(s <= 0 for s in signs) and hp.closed:
            return self
        if all(s > 0 for s in signs):
            return EMPTY_POLYGON

        k = len(self.vertices)
        clipped: list[Point] = []
        for i in range(k):
            prev, cur = self.vertices[i - 1], self.vertices[i]
            s_prev, s_cur = signs[i - 1], signs[i]
            if s_cur <= 0:
                if s_prev > 0:
                    clipped.append(_crossing(prev, cur, hp))
                clipped.append(cur)
            elif s_prev < 0:
                clipped.append(_crossing(prev, cur, hp))

        return _build(clipped, [*self.constraints, hp])

    def translate(self, dx: int, dy: int) -> "RationalConvexPolygon":
        if self.is_empty:
            return self
        return RationalConvexPolygon(
            vertices=tuple((x + dx, y + dy) for x, y in self.vertices),
            constraints=tuple(sorted(hp.translate(dx, dy) for hp in self.constraints)),
        )


EMPTY_POLYGON = RationalConvexPolygon(vertices=(), constraints=())


def _crossing(p: Point, q: Point, hp: HalfPlane) -> Point:
    sp, sq = hp.evaluate(*p), hp.evaluate(*q)
    t = sp / (sp - sq)
    return p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])


def _canonical_vertices(points: list[Point]) -> tuple[Point, ...]:
    # consecutive duplicates, cyclically
    pts = [p for i, p in enumerate(points) if p != points[i - 1]] or points[:1]
    if len(pts) >= 3:
        k = len(pts)
        if any(_cross(pts[i - 1], pts[i], pts[(i + 1) % k]) != 0 for i in range(k)):
            pts = [pts[i] for i in range(k) if _cross(pts[i - 1], pts[i], pts[(i + 1) % k]) != 0]
            start = min(range(len(pts)), key=pts.__getitem__)
            return tuple(pts[start:] + pts[:start])
    if not pts:
        return ()
    low, high = min(pts), max(pts)
    return (low,) if low == high else (low, high)


def _is_empty_set(vertices: tuple[Point, ...], constraints: Iterable[HalfPlane]) -> bool:
    if len(vertices) >= 3:
        return False
    return any(not hp.closed and all(hp.side(*v) == 0 for v in vertices) for hp in constraints)


def _build(points: list[Point], constraints: Iterable[HalfPlane]) -> RationalConvexPolygon:
    vertices = _canonical_vertices(points)
    if not vertices:
        return EMPTY_POLYGON
    kept = sorted({hp for hp in constraints if any(hp.side(*v) >= 0 for v in vertices)})
    if _is_empty_set(vertices, kept):
        return EMPTY_POLYGON
    return RationalConvexPolygon(vertices=vertices, constraints=tuple(kept))


def _convex_hull(points: list[Point]) -> list[Point]:
    """Andrew's monotone chain, counter-clockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def chain(seq: list[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = chain(pts), chain(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 3 else [pts[0], pts[-1]]


def _edge_halfplane(p: Point, q: Point, closed: bool = True) -> HalfPlane:
    # interior lies to the left of p -> q
    dx, dy = q[0] - p[0], q[1] - p[1]
    return HalfPlane.make(dy, -dx, dy * p[0] - dx * p[1], closed)


def _hull_constraints(hull: list[Point]) -> list[HalfPlane]:
    if len(hull) >= 3:
        return [_edge_halfplane(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]
    if len(hull) == 2:
        p, q = hull
        dx, dy = q[0] - p[0], q[1] - p[1]
        return [
            _edge_halfplane(p, q),
            _edge_halfplane(q, p),
            HalfPlane.at_least(dx, dy, dx * p[0] + dy * p[1]),
            HalfPlane.make(dx, dy, dx * q[0] + dy * q[1]),
        ]
    (x, y) = hull[0]
    return [HalfPlane.make(1, 0, x), HalfPlane.at_least(1, 0, x), HalfPlane.make(0, 1, y), HalfPlane.at_least(0, 1, y)]


def intersect_halfplane(poly: RationalConvexPolygon, hp: HalfPlane) -> RationalConvexPolygon:
    return poly.intersect(hp)


def translate(poly: RationalConvexPolygon, dx: int, dy: int) -> RationalConvexPolygon:
    return poly.translate(dx, dy)


def area(poly: RationalConvexPolygon) -> Fraction:
    return poly.area()


def functional_range(poly: RationalConvexPolygon, a: Number, b: Number) -> tuple[Fraction, Fraction]:
    return poly.functional_range(a, b)


def floor_div(value: Fraction, step: int) -> int:
    """``floor(value / step)`` for a positive integer step."""
    return floor(value / step)
