"""Balance polynomials, their unique positive roots, and the k-nacci constants.

Excising a scaled-down, internally tangent copy of a uniform convex body
shifts the centroid of what remains.  Demanding that the shifted centroid
land exactly on the cavity edge fixes the body-to-cavity scale ratio as the
unique positive root of a small polynomial.  The polynomial depends only on
the dimension ``k`` and on ``beta``, the fraction of the construction chord
at which the body centroid sits.  For ``beta = 1/2`` the roots are the
golden ratio and its higher-order relatives (tribonacci constant,
tetranacci constant, ...), here called the k-nacci constants.

All numeric work is plain binary64.  Roots are simple in the physical
regime, so a certified bisection bracket followed by a Newton polish gives
full double precision.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

MAX_DIMENSION = 64


class RootSolverError(RuntimeError):
    """The bracketing root solver could not certify a root."""


class PhysicalityError(ValueError):
    """An excision was requested whose balance ratio admits no cavity
    strictly smaller than the body (scale ratio not above 1)."""


def physicality_threshold(k: int) -> float:
    """Largest centroid offset ``beta`` admitting a scale ratio above 1.

    The balance polynomial evaluates to ``(k + 1)*beta - k`` at ``x = 1``,
    so a root greater than 1 exists exactly when ``beta < k/(k + 1)``.
    """
    if k < 1:
        raise ValueError(f"dimension must be a positive integer, got {k}")
    return k / (k + 1)


@dataclass(frozen=True)
class BalanceProblem:
    """Dimension ``k`` and centroid offset ``beta`` of one balance equation.

    ``beta`` is the ratio of the centroid's distance from the tangency end
    of the chord to the full chord length; it must lie strictly between
    0 and 1.  Rational inputs (``fractions.Fraction``) are accepted and
    converted to float.
    """

    k: int
    beta: float

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise TypeError(f"dimension must be an integer, got {self.k!r}")
        if self.k < 1:
            raise ValueError(f"dimension must be >= 1, got {self.k}")
        if self.k > MAX_DIMENSION:
            raise ValueError(
                f"dimension capped at {MAX_DIMENSION}; beyond that the root is "
                f"indistinguishable from its limit in binary64"
            )
        beta = float(self.beta) if isinstance(self.beta, Fraction) else self.beta
        if not isinstance(beta, (int, float)):
            raise TypeError(f"beta must be a real number, got {self.beta!r}")
        beta = float(beta)
        if not 0.0 < beta < 1.0 or math.isnan(beta):
            raise ValueError(f"beta must lie strictly in (0, 1), got {beta}")
        object.__setattr__(self, "beta", beta)


@dataclass(frozen=True)
class BalancePolynomial:
    """Dense polynomial ``beta*x^k + (beta-1)*(x^(k-1) + ... + x + 1)``.

    ``coefficients`` are ordered leading first: one leading ``beta``
    followed by ``k`` trailing copies of ``beta - 1``.  The trivial root
    at ``x = 1`` of the raw centroid equation is already factored out
    symbolically, never deflated numerically.
    """

    degree: int
    coefficients: tuple[float, ...]

    def __call__(self, x: float) -> float:
        return evaluate(self, x)


def build_general(problem: BalanceProblem) -> BalancePolynomial:
    """Build the balance polynomial for a dimension/offset pair."""
    beta = problem.beta
    return BalancePolynomial(
        degree=problem.k,
        coefficients=(beta,) + (beta - 1.0,) * problem.k,
    )


def evaluate(poly: BalancePolynomial, x: float) -> float:
    """Horner evaluation.  At ``x = 1`` the value is ``(k+1)*beta - k``."""
    acc = 0.0
    for c in poly.coefficients:
        acc = acc * x + c
    return acc


def _evaluate_with_derivative(coefficients: tuple[float, ...], x: float) -> tuple[float, float]:
    acc = 0.0
    dacc = 0.0
    for c in coefficients:
        dacc = dacc * x + acc
        acc = acc * x + c
    return acc, dacc


@dataclass(frozen=True)
class RootResult:
    """The unique positive root of a balance polynomial.

    ``bracket`` is an interval certified (by evaluated sign change) to
    contain the root.  ``residual`` is the absolute polynomial value at
    ``value``; for steep high-degree cases it is floored by the polynomial's
    coefficient scale times machine epsilon even at the best representable
    root, so accuracy guarantees live in the bracket, not the residual.
    ``physical`` is true exactly when ``beta < k/(k+1)``, the condition for
    the root to exceed 1 (a cavity strictly smaller than the body).
    """

    value: float
    residual: float
    bracket: tuple[float, float]
    physical: bool
    iterations: int


_BISECT_WIDTH = 1e-13
_MAX_BISECT = 300
_MAX_NEWTON = 16


def _linear_root(problem: BalanceProblem, poly: BalancePolynomial) -> RootResult:
    # degree 1 solves in closed form: beta*x + (beta - 1) = 0
    beta = problem.beta
    value = (1.0 - beta) / beta
    lo = math.nextafter(value, 0.0)
    hi = math.nextafter(value, math.inf)
    widenings = 0
    while evaluate(poly, lo) >= 0.0 and widenings < 64:
        lo = value - (value - lo) * 2.0
        widenings += 1
    while evaluate(poly, hi) <= 0.0 and widenings < 128:
        hi = value + (hi - value) * 2.0
        widenings += 1
    return RootResult(
        value=value,
        residual=abs(evaluate(poly, value)),
        bracket=(lo, hi),
        physical=beta < physicality_threshold(1),
        iterations=widenings,
    )


def positive_root(problem: BalanceProblem, tol: float = 1e-12) -> RootResult:
    """Find the unique positive root of the balance polynomial.

    The coefficient signs (one positive, then ``k`` negatives) give exactly
    one positive root.  For ``beta = 1/2`` and ``k >= 2`` it lies in (1, 2)
    and the bracket starts there; otherwise the upper end is found by
    doubling from 1.  Bisection certifies the bracket down to width
    ``min(tol, 1e-13)`` (scale relative), then Newton steps polish the
    midpoint without ever leaving the bracket.

    Raises RootSolverError if a sign-changing bracket cannot be certified
    or the iteration caps are exhausted before reaching the width target.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    poly = build_general(problem)
    if problem.k == 1:
        return _linear_root(problem, poly)

    beta = problem.beta
    k = problem.k
    iterations = 0

    if beta == 0.5:
        lo, hi = 1.0 + 1e-15, 2.0
    else:
        lo, hi = 1e-15, 1.0
        while evaluate(poly, hi) <= 0.0:
            hi *= 2.0
            iterations += 1
            if iterations > 1100:
                raise RootSolverError("no sign change found while doubling the bracket")
    flo = evaluate(poly, lo)
    fhi = evaluate(poly, hi)
    if fhi == 0.0:
        # landed on the root exactly; widen one ulp to keep a signed bracket
        hi = math.nextafter(hi, math.inf)
        fhi = evaluate(poly, hi)
    if not (flo < 0.0 < fhi):
        raise RootSolverError(
            f"bracket ({lo}, {hi}) does not straddle a sign change for k={k}, beta={beta}"
        )

    width_goal = min(tol, _BISECT_WIDTH)
    while hi - lo > width_goal * max(1.0, lo):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break  # float spacing exhausted
        iterations += 1
        if iterations > _MAX_BISECT:
            raise RootSolverError(
                f"bisection failed to reach width {width_goal} within {_MAX_BISECT} steps"
            )
        if evaluate(poly, mid) > 0.0:
            hi = mid
        else:
            lo = mid
    bracket = (lo, hi)

    x = 0.5 * (lo + hi)
    coeffs = poly.coefficients
    for _ in range(_MAX_NEWTON):
        fx, dfx = _evaluate_with_derivative(coeffs, x)
        if dfx == 0.0 or fx == 0.0:
            break
        step = fx / dfx
        x_next = x - step
        if not bracket[0] <= x_next <= bracket[1]:
            break  # never trust a step outside the certified bracket
        iterations += 1
        if abs(step) <= 2.0 * math.ulp(x):
            x = x_next
            break
        x = x_next

    return RootResult(
        value=x,
        residual=abs(evaluate(poly, x)),
        bracket=bracket,
        physical=beta < physicality_threshold(k),
        iterations=iterations,
    )


def knacci_constant(k: int, tol: float = 1e-12) -> RootResult:
    """Root of the ``beta = 1/2`` balance polynomial of dimension ``k``.

    This is the asymptotic term ratio of the order-k generalized Fibonacci
    sequence: the golden ratio at k=2, the tribonacci constant at k=3, and
    so on, rising toward 2 as k grows.  k=1 degenerates to exactly 1.
    In binary64 the constants saturate one ulp below 2 around k=53.
    """
    return positive_root(BalanceProblem(k=k, beta=0.5), tol=tol)
