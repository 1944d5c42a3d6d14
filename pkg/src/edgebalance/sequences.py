"""Generalized Fibonacci sequences over exact integers.

An order-k sequence starts from k seed values and continues with each term
equal to the sum of its k predecessors.  Successive-term ratios converge to
the same constant that solves the order-k balance polynomial at offset 1/2,
which makes these sequences an independent numeric oracle for the root
solver: the two never share any arithmetic.

Everything runs on Python's arbitrary-precision integers; ratios are taken
as exact big-integer quotients and only converted to float at the end, so
convergence measurements carry no accumulated rounding.
"""

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_MAX_TERMS = 10_000


class ConvergenceError(RuntimeError):
    """Ratio convergence was not reached within the term budget."""


@dataclass(frozen=True)
class KnacciSequence:
    """Materialized order-k generalized Fibonacci sequence.

    Invariant: every term with index >= k is the sum of the k terms before
    it.  Once the look-back window contains only positive terms, consecutive
    ratios satisfy 1 < F(n)/F(n-1) < 2 for k > 1.
    """

    k: int
    seeds: tuple[int, ...]
    terms: tuple[int, ...]


@dataclass(frozen=True)
class DoublingSequence:
    """The boundless-memory doubling sequence: k-1 zeros, a one, then every
    term equal to the sum of all previous terms.

    After the repeated 1 each term is exactly twice its predecessor, which
    is the cleanest illustration of why the order-k ratio limits approach 2
    as k grows.  Note this is not an order-k windowed recurrence: a bounded
    window eventually drops the leading 1 and the doubling breaks (the
    order-4 sequence runs 1, 1, 2, 4, 8, 15, ...).

    ``doubling_span`` is the inclusive index range over which
    ``terms[i] == 2 * terms[i-1]`` holds exactly, or None if the prefix is
    too short to contain any doubling step.
    """

    k: int
    terms: tuple[int, ...]
    doubling_span: tuple[int, int] | None


def _validate_order(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"order must be a positive integer, got {k!r}")


def generate(k: int, seeds: list[int] | tuple[int, ...], count: int) -> KnacciSequence:
    """Generate the first ``count`` terms from ``k`` seed values.

    Seeds must be non-negative integers, exactly k of them, not all zero
    (an all-zero sequence has no ratio limit).  Arithmetic is exact at any
    count.
    """
    _validate_order(k)
    seeds = tuple(seeds)
    if len(seeds) != k:
        raise ValueError(f"expected {k} seeds, got {len(seeds)}")
    for s in seeds:
        if not isinstance(s, int) or isinstance(s, bool):
            raise ValueError(f"seeds must be integers, got {s!r}")
        if s < 0:
            raise ValueError(f"seeds must be non-negative, got {s}")
    if not any(seeds):
        raise ValueError("seeds must not all be zero")
    if count < k:
        raise ValueError(f"count must be at least the order ({k}), got {count}")

    terms = list(seeds)
    window_sum = sum(seeds)
    while len(terms) < count:
        nxt = window_sum
        window_sum += nxt - terms[len(terms) - k]
        terms.append(nxt)
    return KnacciSequence(k=k, seeds=seeds, terms=tuple(terms))


def doubling_prefix(k: int, count: int) -> DoublingSequence:
    """Doubling sequence starting from k-1 zeros and a single one.

    Each term after the seed block is the sum of every term before it,
    so the values run 1, 1, 2, 4, 8, 16, ... with ratios exactly 2 from the
    second nonzero term on.
    """
    _validate_order(k)
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    terms = [0] * (k - 1) + [1]
    total = 1
    while len(terms) < count:
        terms.append(total)
        total += total
    terms = terms[:count]

    span = None
    for i in range(1, len(terms)):
        if terms[i - 1] > 0 and terms[i] == 2 * terms[i - 1]:
            span = (i, len(terms) - 1)
            break
    return DoublingSequence(k=k, terms=tuple(terms), doubling_span=span)


def ratio(seq: KnacciSequence, n: int) -> float:
    """Ratio terms[n] / terms[n-1] as a correctly rounded float.

    The quotient is formed exactly over the integers first, then rounded
    once on conversion.  Indices are 0-based.
    """
    if not 1 <= n < len(seq.terms):
        raise IndexError(f"ratio index {n} out of range for {len(seq.terms)} terms")
    if seq.terms[n - 1] == 0:
        raise ValueError(f"term {n - 1} is zero, ratio undefined")
    return float(Fraction(seq.terms[n], seq.terms[n - 1]))


def converged_ratio(k: int, tol: float, max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Successive-term ratio limit of the order-k sequence with unit seeds.

    Terms are generated until the ratio difference stays below ``tol`` for
    two consecutive steps (a single small difference can be an oscillation
    artifact when the subdominant recurrence roots are complex).  The limit
    does not depend on the seed values, only on k.
    """
    _validate_order(k)
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    terms = [1] * k
    window_sum = k
    prev_ratio = None
    small_streak = 0
    while len(terms) < max_terms:
        nxt = window_sum
        window_sum += nxt - terms[len(terms) - k]
        terms.append(nxt)
        r = float(Fraction(terms[-1], terms[-2]))
        if prev_ratio is not None:
            if abs(r - prev_ratio) < tol:
                small_streak += 1
                if small_streak >= 2:
                    return r
            else:
                small_streak = 0
        prev_ratio = r
    raise ConvergenceError(
        f"ratio did not converge to {tol} within {max_terms} terms for order {k}"
    )
