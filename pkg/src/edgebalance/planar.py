"""Convex planar shapes and the balanced self-similar excision.

The construction: pick a boundary point O of a convex body, draw the chord
from O through the body centroid C to the opposite boundary point Q, and cut
out a copy of the body scaled about O so that it stays internally tangent at
O with the same orientation.  The centroid offset fraction beta = |OC|/|OQ|
feeds the dimension-2 balance polynomial; its positive root x is the unique
ratio for which the centroid of body-minus-cavity lands exactly on the
cavity boundary, at the image P of Q under the scaling.

All geometry here is closed form: shoelace areas and exact polygon
centroids, quadratic chord intersections for circles and ellipses, and
segment-line intersection with vertex tie-breaking for polygons.  Geometric
predicates use absolute tolerances around 1e-12 and assume unit-scale
coordinates; pre-normalize shapes with very large coordinates.
"""

import math
from dataclasses import dataclass

import numpy as np

from .polynomials import (
    BalanceProblem,
    PhysicalityError,
    build_general,
    evaluate,
    physicality_threshold,
    positive_root,
)

Point = tuple[float, float]

_COLLINEAR_RTOL = 1e-12
_BOUNDARY_RTOL = 1e-9
_MIN_EXCISION_MARGIN = 1e-9  # scale ratios this close to 1 leave no usable cavity


def _as_point(p) -> Point:
    x, y = p
    return (float(x), float(y))


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def _dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def _cross(a: Point, b: Point) -> float:
    return a[0] * b[1] - a[1] * b[0]


@dataclass(frozen=True)
class Polygon:
    """Strictly convex polygon, vertices ordered counterclockwise."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vertices = tuple(_as_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vertices)
        n = len(vertices)
        if n < 3:
            raise ValueError(f"polygon needs at least 3 vertices, got {n}")
        for i in range(n):
            a = vertices[i]
            b = vertices[(i + 1) % n]
            c = vertices[(i + 2) % n]
            turn = _cross(_sub(b, a), _sub(c, b))
            if turn == 0.0:
                raise ValueError(f"degenerate or collinear vertices around index {i}")
            if turn < 0.0:
                raise ValueError(
                    "vertices must be strictly convex and wind counterclockwise"
                )


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", _as_point(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius > 0.0:
            raise ValueError(f"radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class Ellipse:
    """Axis lengths ``semi_axes = (a, b)``, rotated by ``rotation`` radians."""

    center: Point
    semi_axes: tuple[float, float]
    rotation: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "center", _as_point(self.center))
        a, b = self.semi_axes
        object.__setattr__(self, "semi_axes", (float(a), float(b)))
        object.__setattr__(self, "rotation", float(self.rotation))
        if not (self.semi_axes[0] > 0.0 and self.semi_axes[1] > 0.0):
            raise ValueError(f"semi-axes must be positive, got {self.semi_axes}")


Shape2D = Polygon | Circle | Ellipse


def regular_polygon(
    n: int, circumradius: float, orientation: float = 0.0, center: Point = (0.0, 0.0)
) -> Polygon:
    """Regular n-gon as an explicit vertex list, first vertex at ``orientation``."""
    if n < 3:
        raise ValueError(f"need at least 3 sides, got {n}")
    if not circumradius > 0.0:
        raise ValueError(f"circumradius must be positive, got {circumradius}")
    cx, cy = _as_point(center)
    step = 2.0 * math.pi / n
    return Polygon(
        tuple(
            (cx + circumradius * math.cos(orientation + step * i),
             cy + circumradius * math.sin(orientation + step * i))
            for i in range(n)
        )
    )


def _extent(shape: Shape2D) -> float:
    if isinstance(shape, Polygon):
        xs = [v[0] for v in shape.vertices]
        ys = [v[1] for v in shape.vertices]
        return max(max(xs) - min(xs), max(ys) - min(ys))
    if isinstance(shape, Circle):
        return 2.0 * shape.radius
    return 2.0 * max(shape.semi_axes)


def area(shape: Shape2D) -> float:
    """Exact area: shoelace for polygons, pi r^2 / pi a b for conics."""
    if isinstance(shape, Polygon):
        v = shape.vertices
        acc = 0.0
        for i in range(len(v)):
            a = v[i]
            b = v[(i + 1) % len(v)]
            acc += a[0] * b[1] - b[0] * a[1]
        return 0.5 * acc
    if isinstance(shape, Circle):
        return math.pi * shape.radius**2
    return math.pi * shape.semi_axes[0] * shape.semi_axes[1]


def centroid(shape: Shape2D) -> Point:
    if isinstance(shape, Polygon):
        v = shape.vertices
        ax = ay = acc = 0.0
        for i in range(len(v)):
            a = v[i]
            b = v[(i + 1) % len(v)]
            f = a[0] * b[1] - b[0] * a[1]
            acc += f
            ax += (a[0] + b[0]) * f
            ay += (a[1] + b[1]) * f
        scale = 1.0 / (3.0 * acc)
        return (ax * scale, ay * scale)
    return shape.center


@dataclass(frozen=True)
class Chord:
    """Chord through the centroid: tangency end O, centroid C, far end Q.

    ``beta`` is |OC|/|OQ|.  The three points are collinear by construction;
    C lies strictly between the ends.
    """

    tangent_point: Point
    far_point: Point
    centroid: Point
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "tangent_point", _as_point(self.tangent_point))
        object.__setattr__(self, "far_point", _as_point(self.far_point))
        object.__setattr__(self, "centroid", _as_point(self.centroid))
        o, q, c = self.tangent_point, self.far_point, self.centroid
        d = _dist(o, q)
        if d == 0.0:
            raise ValueError("chord endpoints coincide")
        if abs(_cross(_sub(q, o), _sub(c, o))) > _COLLINEAR_RTOL * d * d:
            raise ValueError("centroid is not on the chord line")
        along = ((c[0] - o[0]) * (q[0] - o[0]) + (c[1] - o[1]) * (q[1] - o[1])) / (d * d)
        if not 0.0 < along < 1.0:
            raise ValueError("centroid must lie strictly between the chord ends")
        if not 0.0 < self.beta < 1.0:
            raise ValueError(f"beta must be in (0, 1), got {self.beta}")
        if abs(self.beta - _dist(o, c) / d) > 1e-9:
            raise ValueError("beta inconsistent with the stored points")

    @property
    def length(self) -> float:
        return _dist(self.tangent_point, self.far_point)


def _polygon_line_crossings(
    vertices: tuple[Point, ...], origin: Point, u: Point, scale: float
) -> list[tuple[float, Point]]:
    """Parameters t where ``origin + t*u`` crosses the polygon boundary.

    A crossing exactly at a vertex is shared by two edges; near-identical
    hits are merged so it counts once.
    """
    hits: list[tuple[float, Point]] = []
    n = len(vertices)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        e = _sub(b, a)
        denom = _cross(u, e)
        if denom == 0.0:
            continue  # supporting lines of a convex polygon never cross its interior
        w = _sub(a, origin)
        t = _cross(w, e) / denom
        s = _cross(w, u) / denom
        if -1e-9 <= s <= 1.0 + 1e-9:
            hits.append((t, (origin[0] + t * u[0], origin[1] + t * u[1])))
    hits.sort(key=lambda h: h[0])
    merged: list[tuple[float, Point]] = []
    for t, p in hits:
        if merged and abs(t - merged[-1][0]) <= 1e-9 * max(scale, 1.0):
            continue
        merged.append((t, p))
    return merged


def chord_through_centroid(shape: Shape2D, theta: float) -> Chord:
    """Chord through the centroid along direction ``theta``.

    The tangency end O is the boundary crossing opposite the direction, the
    far end Q the crossing along it.  Circles and ellipses are centrally
    symmetric about their centroid, so beta is exactly 1/2 there.
    """
    c = centroid(shape)
    u = (math.cos(theta), math.sin(theta))

    if isinstance(shape, Circle):
        t = shape.radius
    elif isinstance(shape, Ellipse):
        cr, sr = math.cos(shape.rotation), math.sin(shape.rotation)
        ux = cr * u[0] + sr * u[1]
        uy = -sr * u[0] + cr * u[1]
        a, b = shape.semi_axes
        t = 1.0 / math.hypot(ux / a, uy / b)
    else:
        crossings = _polygon_line_crossings(shape.vertices, c, u, _extent(shape))
        if len(crossings) != 2:
            raise ValueError(
                f"degenerate boundary intersection: {len(crossings)} crossings"
            )
        (t_neg, o), (t_pos, q) = crossings
        if not t_neg < 0.0 < t_pos:
            raise ValueError("centroid is not interior to the polygon")
        return Chord(
            tangent_point=o,
            far_point=q,
            centroid=c,
            beta=-t_neg / (t_pos - t_neg),
        )

    o = (c[0] - t * u[0], c[1] - t * u[1])
    q = (c[0] + t * u[0], c[1] + t * u[1])
    return Chord(tangent_point=o, far_point=q, centroid=c, beta=0.5)


def beta_complement(shape: Shape2D, theta: float) -> tuple[float, float]:
    """Offsets of the same chord traversed both ways; the pair sums to 1."""
    return (
        chord_through_centroid(shape, theta).beta,
        chord_through_centroid(shape, theta + math.pi).beta,
    )


def find_balanced_chord(shape: Shape2D, tol: float = 1e-12) -> Chord:
    """Chord with beta within ``tol`` of 1/2, found by rotating about the centroid.

    Reversing a chord complements beta, so beta - 1/2 changes sign somewhere
    on any half-turn unless it is identically zero; bisection on the angle
    then converges regardless of the kinks a polygon boundary puts into
    beta(theta).  Centrally symmetric shapes return the horizontal chord.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if isinstance(shape, (Circle, Ellipse)):
        return chord_through_centroid(shape, 0.0)

    c = centroid(shape)
    v0 = shape.vertices[0]
    theta0 = math.atan2(v0[1] - c[1], v0[0] - c[0])
    lo, hi = theta0, theta0 + math.pi
    g_lo = chord_through_centroid(shape, lo).beta - 0.5
    if abs(g_lo) <= tol:
        return chord_through_centroid(shape, lo)
    for _ in range(256):
        mid = 0.5 * (lo + hi)
        chord = chord_through_centroid(shape, mid)
        g_mid = chord.beta - 0.5
        if abs(g_mid) <= tol:
            return chord
        if (g_mid > 0.0) == (g_lo > 0.0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    raise RuntimeError(f"balanced chord search did not reach tolerance {tol}")


def find_chord_with_beta(
    shape: Shape2D, beta_target: float, tol: float = 1e-12, samples: int = 256
) -> Chord:
    """Chord whose centroid offset matches ``beta_target`` within ``tol``.

    Scans a full turn of chord directions (each geometric chord appears
    twice, with complementary offsets) for a sign change of
    beta(theta) - target and bisects it.  Raises ValueError when no chord
    with the requested offset exists: convex planar bodies only admit
    offsets in [1/3, 2/3] (the centroid cuts every chord through it no more
    unevenly than 2:1), and round shapes admit an even narrower band.
    """
    if not 0.0 < beta_target < 1.0:
        raise ValueError(f"beta target must be in (0, 1), got {beta_target}")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if isinstance(shape, (Circle, Ellipse)):
        if abs(beta_target - 0.5) <= tol:
            return chord_through_centroid(shape, 0.0)
        raise ValueError("centrally symmetric shapes only admit beta = 1/2")

    c = centroid(shape)
    v0 = shape.vertices[0]
    theta0 = math.atan2(v0[1] - c[1], v0[0] - c[0])
    thetas = [theta0 + 2.0 * math.pi * i / samples for i in range(samples + 1)]
    gs = [chord_through_centroid(shape, t).beta - beta_target for t in thetas]
    for i, g in enumerate(gs):
        if abs(g) <= tol:
            return chord_through_centroid(shape, thetas[i])
    for i in range(samples):
        if (gs[i] > 0.0) != (gs[i + 1] > 0.0):
            lo, hi, g_lo = thetas[i], thetas[i + 1], gs[i]
            for _ in range(256):
                mid = 0.5 * (lo + hi)
                chord = chord_through_centroid(shape, mid)
                g_mid = chord.beta - beta_target
                if abs(g_mid) <= tol:
                    return chord
                if (g_mid > 0.0) == (g_lo > 0.0):
                    lo, g_lo = mid, g_mid
                else:
                    hi = mid
            raise RuntimeError(f"chord refinement stalled at target {beta_target}")
    raise ValueError(
        f"no chord with offset {beta_target} found; attainable offsets on this "
        f"shape span [{min(b + beta_target for b in gs):.4f}, "
        f"{max(b + beta_target for b in gs):.4f}] on the sampled grid"
    )


def scan_balanced_chords(
    shape: Shape2D, samples: int = 720, tol: float = 1e-12
) -> list[Chord]:
    """All beta = 1/2 chords detected on a half-turn grid, each refined.

    Complements mean a full turn carries the same chords twice, so the scan
    covers [theta0, theta0 + pi).  For centrally symmetric shapes every
    direction balances; the horizontal chord is returned alone.
    """
    if isinstance(shape, (Circle, Ellipse)):
        return [chord_through_centroid(shape, 0.0)]
    c = centroid(shape)
    v0 = shape.vertices[0]
    theta0 = math.atan2(v0[1] - c[1], v0[0] - c[0])
    thetas = [theta0 + math.pi * i / samples for i in range(samples + 1)]
    gs = [chord_through_centroid(shape, t).beta - 0.5 for t in thetas]
    found: list[Chord] = []

    def refine(a: float, b: float, ga: float) -> Chord:
        for _ in range(256):
            mid = 0.5 * (a + b)
            chord = chord_through_centroid(shape, mid)
            g = chord.beta - 0.5
            if abs(g) <= tol:
                return chord
            if (g > 0.0) == (ga > 0.0):
                a, ga = mid, g
            else:
                b = mid
        raise RuntimeError("chord refinement stalled")

    i = 0
    while i <= samples:
        if abs(gs[i]) <= tol:
            found.append(chord_through_centroid(shape, thetas[i]))
            while i <= samples and abs(gs[i]) <= tol:
                i += 1
            continue
        if i < samples and abs(gs[i + 1]) > tol and (gs[i] > 0.0) != (gs[i + 1] > 0.0):
            found.append(refine(thetas[i], thetas[i + 1], gs[i]))
        i += 1
    return found


def _scale_about(shape: Shape2D, origin: Point, factor: float) -> Shape2D:
    ox, oy = origin
    if isinstance(shape, Polygon):
        return Polygon(
            tuple(
                (ox + (v[0] - ox) * factor, oy + (v[1] - oy) * factor)
                for v in shape.vertices
            )
        )
    cx = ox + (shape.center[0] - ox) * factor
    cy = oy + (shape.center[1] - oy) * factor
    if isinstance(shape, Circle):
        return Circle(center=(cx, cy), radius=shape.radius * factor)
    return Ellipse(
        center=(cx, cy),
        semi_axes=(shape.semi_axes[0] * factor, shape.semi_axes[1] * factor),
        rotation=shape.rotation,
    )


def _on_boundary(shape: Shape2D, p: Point, tol: float) -> bool:
    if isinstance(shape, Circle):
        return abs(_dist(p, shape.center) - shape.radius) <= tol
    if isinstance(shape, Ellipse):
        cr, sr = math.cos(shape.rotation), math.sin(shape.rotation)
        dx, dy = p[0] - shape.center[0], p[1] - shape.center[1]
        q = math.hypot(
            (cr * dx + sr * dy) / shape.semi_axes[0],
            (-sr * dx + cr * dy) / shape.semi_axes[1],
        )
        return abs(q - 1.0) <= tol / min(shape.semi_axes)
    v = shape.vertices
    best = math.inf
    for i in range(len(v)):
        a = v[i]
        b = v[(i + 1) % len(v)]
        e = _sub(b, a)
        ee = e[0] * e[0] + e[1] * e[1]
        s = ((p[0] - a[0]) * e[0] + (p[1] - a[1]) * e[1]) / ee
        s = min(1.0, max(0.0, s))
        best = min(best, _dist(p, (a[0] + s * e[0], a[1] + s * e[1])))
    return best <= tol


@dataclass(frozen=True)
class ExcisionPlan:
    """A concrete excision: the body, the chord, the solved scale ratio,
    the cavity (the body scaled by 1/ratio about the tangency point), and
    the predicted balance point P on the cavity edge.

    For convex bodies the cavity is automatically contained: each cavity
    point is a convex combination of the tangency point and a body point.
    """

    shape: Shape2D
    chord: Chord
    scale_ratio: float
    cavity: Shape2D
    balance_point: Point


def excision_with_ratio(shape: Shape2D, chord: Chord, scale_ratio: float) -> ExcisionPlan:
    """Build a plan with an explicit scale ratio (no balance solve).

    Useful for what-if checks; ``verify_balance`` will fail unless the ratio
    solves the balance polynomial for the chord's beta.
    """
    if not scale_ratio > 1.0 + _MIN_EXCISION_MARGIN:
        raise PhysicalityError(
            f"scale ratio {scale_ratio} leaves no cavity strictly inside the body"
        )
    inv = 1.0 / scale_ratio
    o, q = chord.tangent_point, chord.far_point
    return ExcisionPlan(
        shape=shape,
        chord=chord,
        scale_ratio=scale_ratio,
        cavity=_scale_about(shape, o, inv),
        balance_point=(o[0] + (q[0] - o[0]) * inv, o[1] + (q[1] - o[1]) * inv),
    )


def plan_excision(shape: Shape2D, chord: Chord, tol: float = 1e-12) -> ExcisionPlan:
    """Solve the balance equation for the chord and build the excision.

    Requires ``chord.beta < 2/3``; at or above that threshold the balance
    root does not exceed 1 and no physical cavity exists.
    """
    scale = max(_extent(shape), 1.0)
    if _dist(chord.centroid, centroid(shape)) > _BOUNDARY_RTOL * scale:
        raise ValueError("chord centroid does not match the shape centroid")
    for p in (chord.tangent_point, chord.far_point):
        if not _on_boundary(shape, p, _BOUNDARY_RTOL * scale):
            raise ValueError(f"chord endpoint {p} is not on the shape boundary")
    root = positive_root(BalanceProblem(k=2, beta=chord.beta), tol=tol)
    if not root.physical:
        raise PhysicalityError(
            f"beta = {chord.beta} is at or above {physicality_threshold(2)!r}; "
            f"no balance ratio above 1 exists"
        )
    return excision_with_ratio(shape, chord, root.value)


def composite_centroid(plan: ExcisionPlan) -> Point:
    """Centroid of body minus cavity, by exact area-weighted subtraction."""
    a = area(plan.shape)
    a_cav = area(plan.cavity)
    if a - a_cav <= 0.0:
        raise ValueError("cavity area must be strictly smaller than the body area")
    c = centroid(plan.shape)
    c_cav = centroid(plan.cavity)
    inv = 1.0 / (a - a_cav)
    return (
        (a * c[0] - a_cav * c_cav[0]) * inv,
        (a * c[1] - a_cav * c_cav[1]) * inv,
    )


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of checking a plan's remainder centroid against its balance point.

    ``passed`` compares the chord-relative distance against ``tolerance``;
    ``polynomial_residual`` is the balance polynomial evaluated at the
    plan's scale ratio (zero exactly when the ratio solves the equation).
    """

    distance: float
    chord_length: float
    relative_distance: float
    tolerance: float
    passed: bool
    polynomial_residual: float
    composite_centroid: tuple[float, ...]
    balance_point: tuple[float, ...]
    dimension: int = 2


def verify_balance(plan: ExcisionPlan, tol: float = 1e-10) -> BalanceReport:
    """Measure how far the remainder centroid is from the balance point."""
    com = composite_centroid(plan)
    dist = _dist(com, plan.balance_point)
    length = plan.chord.length
    poly = build_general(BalanceProblem(k=2, beta=plan.chord.beta))
    rel = dist / length
    return BalanceReport(
        distance=dist,
        chord_length=length,
        relative_distance=rel,
        tolerance=tol,
        passed=rel <= tol,
        polynomial_residual=evaluate(poly, plan.scale_ratio),
        composite_centroid=com,
        balance_point=plan.balance_point,
        dimension=2,
    )


def regular_polygon_betas(n: int) -> tuple[float, float]:
    """Centroid offsets of an odd regular n-gon's two symmetric excisions.

    Tangency at a vertex gives beta = 1/(1 + cos(pi/n)); tangency at the
    midpoint of the opposite side gives the complement cos(pi/n)/(1 + cos(pi/n)).
    Even n is rejected: every vertex-to-vertex chord there already has
    beta = 1/2.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"defined for odd n >= 3, got {n}")
    c = math.cos(math.pi / n)
    return (1.0 / (1.0 + c), c / (1.0 + c))


def boundary_points(shape: Shape2D, count: int) -> list[Point]:
    """``count`` points along the boundary (arc-length spaced for polygons)."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    if isinstance(shape, Circle):
        cx, cy = shape.center
        return [
            (cx + shape.radius * math.cos(2.0 * math.pi * i / count),
             cy + shape.radius * math.sin(2.0 * math.pi * i / count))
            for i in range(count)
        ]
    if isinstance(shape, Ellipse):
        cr, sr = math.cos(shape.rotation), math.sin(shape.rotation)
        a, b = shape.semi_axes
        cx, cy = shape.center
        pts = []
        for i in range(count):
            ang = 2.0 * math.pi * i / count
            ex, ey = a * math.cos(ang), b * math.sin(ang)
            pts.append((cx + cr * ex - sr * ey, cy + sr * ex + cr * ey))
        return pts
    v = shape.vertices
    n = len(v)
    lengths = [_dist(v[i], v[(i + 1) % n]) for i in range(n)]
    perimeter = sum(lengths)
    pts = []
    edge = 0
    start = 0.0
    for i in range(count):
        target = perimeter * i / count
        while target > start + lengths[edge]:
            start += lengths[edge]
            edge += 1
        frac = (target - start) / lengths[edge]
        a = v[edge]
        b = v[(edge + 1) % n]
        pts.append((a[0] + (b[0] - a[0]) * frac, a[1] + (b[1] - a[1]) * frac))
    return pts


def random_convex_polygon(
    n_vertices: int, rng: np.random.Generator, scale: float = 1.0
) -> Polygon:
    """Random strictly convex polygon with exactly ``n_vertices`` vertices.

    Valtr's construction: draw coordinate pools, split each into two
    monotone chains, pair the resulting displacement components at random,
    and sort the displacement vectors by angle.  The angular sort makes the
    cumulative path convex and counterclockwise.
    """
    if n_vertices < 3:
        raise ValueError(f"need at least 3 vertices, got {n_vertices}")
    while True:
        def deltas(values: np.ndarray) -> np.ndarray:
            values = np.sort(values)
            lo, hi = values[0], values[-1]
            interior = values[1:-1]
            mask = rng.random(interior.size) < 0.5
            up = np.concatenate(([lo], interior[mask], [hi]))
            down = np.concatenate(([lo], interior[~mask], [hi]))
            return np.concatenate((np.diff(up), -np.diff(down)))

        dx = deltas(rng.random(n_vertices))
        dy = deltas(rng.random(n_vertices))
        rng.shuffle(dy)
        order = np.argsort(np.arctan2(dy, dx))
        xs = np.cumsum(dx[order]) * scale
        ys = np.cumsum(dy[order]) * scale
        xs -= xs.mean()
        ys -= ys.mean()
        try:
            return Polygon(tuple(zip(xs.tolist(), ys.tolist())))
        except ValueError:
            continue  # angular ties are measure zero but cheap to resample


def shape_from_dict(data: dict) -> Shape2D:
    """Load a planar shape from its JSON dictionary form.

    Accepted forms::

        {"type": "polygon", "vertices": [[x, y], ...]}
        {"type": "circle", "center": [x, y], "radius": r}
        {"type": "ellipse", "center": [x, y], "semi_axes": [a, b], "rotation": t}
        {"type": "regular_polygon", "n": n, "circumradius": r, "orientation": t}

    ``rotation`` and ``orientation`` default to 0.  Regular polygons load as
    explicit vertex lists.
    """
    if not isinstance(data, dict) or "type" not in data:
        raise ValueError("shape dictionary needs a 'type' key")
    kind = data["type"]
    try:
        if kind == "polygon":
            return Polygon(tuple(tuple(v) for v in data["vertices"]))
        if kind == "circle":
            return Circle(center=tuple(data["center"]), radius=data["radius"])
        if kind == "ellipse":
            return Ellipse(
                center=tuple(data["center"]),
                semi_axes=tuple(data["semi_axes"]),
                rotation=data.get("rotation", 0.0),
            )
        if kind == "regular_polygon":
            return regular_polygon(
                n=data["n"],
                circumradius=data["circumradius"],
                orientation=data.get("orientation", 0.0),
            )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed {kind} shape: {exc}") from exc
    raise ValueError(f"unknown shape type {kind!r}")


def shape_to_dict(shape: Shape2D) -> dict:
    if isinstance(shape, Polygon):
        return {"type": "polygon", "vertices": [list(v) for v in shape.vertices]}
    if isinstance(shape, Circle):
        return {"type": "circle", "center": list(shape.center), "radius": shape.radius}
    return {
        "type": "ellipse",
        "center": list(shape.center),
        "semi_axes": list(shape.semi_axes),
        "rotation": shape.rotation,
    }
