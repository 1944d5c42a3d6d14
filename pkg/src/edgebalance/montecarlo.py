"""Monte Carlo centroid oracle for body-minus-cavity regions.

Uniform rejection sampling from the body's axis-aligned bounding box gives a
centroid estimate with quantified statistical error, fully independent of
the closed-form geometry it cross-checks.

Reproducibility contract: the generator is numpy's PCG64; batch ``i`` of a
run seeded with ``s`` uses ``SeedSequence((s, i))`` and batches have a fixed
size, so estimates are bit-identical across runs and independent of how
batches might be distributed over workers.  Batch sums are merged with
exactly rounded summation, which makes the merge order irrelevant.

Rejection from the bounding box degrades with dimension (the ball fills
fewer than 0.25% of its box at k = 10), so treat k <= 10 as the practical
ceiling for the oracle.
"""

import math
from dataclasses import dataclass

import numpy as np

from .ndim import Hyperball, Hypercube, Simplex
from .planar import Circle, Ellipse, Polygon

BATCH_SIZE = 1_000_000

Shape = Polygon | Circle | Ellipse | Hyperball | Hypercube | Simplex


def bounding_box(shape: Shape) -> tuple[np.ndarray, np.ndarray]:
    """Axis-aligned (lower, upper) corners enclosing the shape."""
    if isinstance(shape, Polygon):
        v = np.asarray(shape.vertices)
        return v.min(axis=0), v.max(axis=0)
    if isinstance(shape, Circle):
        c = np.asarray(shape.center)
        return c - shape.radius, c + shape.radius
    if isinstance(shape, Ellipse):
        a, b = shape.semi_axes
        cr, sr = math.cos(shape.rotation), math.sin(shape.rotation)
        half = np.array(
            [math.hypot(a * cr, b * sr), math.hypot(a * sr, b * cr)]
        )
        c = np.asarray(shape.center)
        return c - half, c + half
    if isinstance(shape, Hyperball):
        c = np.asarray(shape.center)
        return c - shape.radius, c + shape.radius
    if isinstance(shape, Hypercube):
        lo = np.asarray(shape.min_corner)
        return lo, lo + shape.side
    v = np.asarray(shape.vertices)
    return v.min(axis=0), v.max(axis=0)


def contains(shape: Shape, points: np.ndarray) -> np.ndarray:
    """Vectorized closed-region membership for an (n, dim) point array."""
    points = np.asarray(points, dtype=float)
    if isinstance(shape, Polygon):
        v = np.asarray(shape.vertices)
        edges = np.roll(v, -1, axis=0) - v
        rel = points[:, None, :] - v[None, :, :]
        cross = edges[None, :, 0] * rel[:, :, 1] - edges[None, :, 1] * rel[:, :, 0]
        return np.all(cross >= 0.0, axis=1)
    if isinstance(shape, Circle):
        d = points - np.asarray(shape.center)
        return np.einsum("ij,ij->i", d, d) <= shape.radius**2
    if isinstance(shape, Ellipse):
        cr, sr = math.cos(shape.rotation), math.sin(shape.rotation)
        d = points - np.asarray(shape.center)
        ex = (cr * d[:, 0] + sr * d[:, 1]) / shape.semi_axes[0]
        ey = (-sr * d[:, 0] + cr * d[:, 1]) / shape.semi_axes[1]
        return ex * ex + ey * ey <= 1.0
    if isinstance(shape, Hyperball):
        d = points - np.asarray(shape.center)
        return np.einsum("ij,ij->i", d, d) <= shape.radius**2
    if isinstance(shape, Hypercube):
        lo = np.asarray(shape.min_corner)
        return np.all((points >= lo) & (points <= lo + shape.side), axis=1)
    lam = np.linalg.solve(
        shape._edge_matrix(), (points - np.asarray(shape.vertices[0])).T
    ).T
    return np.all(lam >= 0.0, axis=1) & (lam.sum(axis=1) <= 1.0)


def point_in_shape(shape: Shape, p) -> bool:
    """Exact membership of a single point (boundary counts as inside)."""
    return bool(contains(shape, np.asarray(p, dtype=float)[None, :])[0])


@dataclass(frozen=True)
class McEstimate:
    """Sampled centroid of body minus cavity.

    ``std_error`` is the per-coordinate sample standard deviation divided by
    the square root of the accepted count; the acceptance fraction times
    ``box_volume`` estimates the region's area/volume.
    """

    centroid_estimate: tuple[float, ...]
    samples_accepted: int
    samples_total: int
    std_error: tuple[float, ...]
    seed: int
    box_volume: float

    @property
    def acceptance_fraction(self) -> float:
        return self.samples_accepted / self.samples_total

    @property
    def region_measure(self) -> float:
        return self.acceptance_fraction * self.box_volume


def _batch_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, index))))


def sample_region_centroid(
    shape: Shape, cavity: Shape | None, n: int, seed: int
) -> McEstimate:
    """Estimate the centroid of ``shape`` minus ``cavity`` from ``n`` box samples.

    ``cavity`` may be None to sample the full shape.  Points are accepted
    when inside the shape and not inside the cavity.  Raises ValueError when
    nothing is accepted (cavity covering the body, or hopeless acceptance).
    """
    if n < 1000:
        raise ValueError(f"need at least 1000 samples for a meaningful error bar, got {n}")
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise ValueError(f"seed must be a non-negative integer, got {seed!r}")
    lo, hi = bounding_box(shape)
    span = hi - lo
    dim = lo.size
    box_volume = float(np.prod(span))

    counts: list[int] = []
    sums: list[np.ndarray] = []
    sq_sums: list[np.ndarray] = []
    for index, start in enumerate(range(0, n, BATCH_SIZE)):
        m = min(BATCH_SIZE, n - start)
        pts = lo + _batch_rng(seed, index).random((m, dim)) * span
        accept = contains(shape, pts)
        if cavity is not None:
            accept &= ~contains(cavity, pts)
        kept = pts[accept]
        counts.append(int(kept.shape[0]))
        sums.append(kept.sum(axis=0))
        sq_sums.append((kept * kept).sum(axis=0))

    accepted = sum(counts)
    if accepted == 0:
        raise ValueError("no samples accepted; cavity covers the body or box is degenerate")
    # exactly rounded merge keeps the result independent of batch order
    total = np.array([math.fsum(s[j] for s in sums) for j in range(dim)])
    total_sq = np.array([math.fsum(s[j] for s in sq_sums) for j in range(dim)])
    mean = total / accepted
    if accepted > 1:
        variance = np.maximum(total_sq - accepted * mean * mean, 0.0) / (accepted - 1)
        std_error = np.sqrt(variance / accepted)
    else:
        std_error = np.full(dim, math.inf)
    return McEstimate(
        centroid_estimate=tuple(float(x) for x in mean),
        samples_accepted=accepted,
        samples_total=n,
        std_error=tuple(float(x) for x in std_error),
        seed=seed,
        box_volume=box_volume,
    )
