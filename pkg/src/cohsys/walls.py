"""Candidate critical values of alpha and slope tests for coherent systems."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from cohsys.arith import clifford_max_k

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class SubType:
    """Numerical type (n', d', k') of a subsystem of a type (n, d, k) system."""

    n_sub: int
    d_sub: int
    k_sub: int

    def check_inside(self, n: int, k: int) -> None:
        if not 0 < self.n_sub < n:
            raise ValueError(f"sub-rank must lie in (0, {n}), got {self.n_sub}")
        if not 0 <= self.k_sub <= k:
            raise ValueError(f"sub section count must lie in [0, {k}], got {self.k_sub}")


@dataclass(frozen=True)
class WallSet:
    """Sorted candidate walls; ``upper_cutoff`` is None when unbounded."""

    walls: tuple
    upper_cutoff: Optional[Fraction]
    d_sub_range: tuple

    def __len__(self):
        return len(self.walls)

    def __iter__(self):
        return iter(self.walls)


def alpha_slope(n: int, d: int, k: int, alpha: Rational) -> Fraction:
    """(d + alpha*k)/n."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return (d + alpha * k) / n


def wall_alpha(n: int, d: int, k: int, sub: SubType) -> Optional[Fraction]:
    """Alpha at which the subsystem's alpha-slope equals the system's, if any."""
    denom = sub.n_sub * k - n * sub.k_sub
    if denom == 0:
        return None
    return Fraction(n * sub.d_sub - sub.n_sub * d, denom)


def subtypes(n: int, k: int, d_range: Iterable[int]) -> Iterable[SubType]:
    d_values = list(d_range)
    for n_sub in range(1, n):
        for k_sub in range(k + 1):
            for d_sub in d_values:
                yield SubType(n_sub, d_sub, k_sub)


def wall_candidates(n: int, d: int, k: int, d_sub_range: Optional[tuple] = None) -> WallSet:
    """Enumerate positive candidate walls from subtypes with 0 <= d' <= d.

    For k < n, alpha-stable systems only exist for alpha < d/(n-k), so walls
    at or beyond that value are dropped.  ``d_sub_range`` (inclusive) widens
    or narrows the d' scan for auditing.
    """
    if n < 2:
        raise ValueError(f"walls need n >= 2, got n={n}")
    if d <= 0:
        raise ValueError(f"walls need d > 0, got d={d}")
    lo, hi = d_sub_range if d_sub_range is not None else (0, d)
    cutoff = Fraction(d, n - k) if k < n else None
    found = set()
    for sub in subtypes(n, k, range(lo, hi + 1)):
        alpha = wall_alpha(n, d, k, sub)
        if alpha is None or alpha <= 0:
            continue
        if cutoff is not None and alpha >= cutoff:
            continue
        found.add(alpha)
    return WallSet(tuple(sorted(found)), cutoff, (lo, hi))


def subsystem_ratio_ok(n: int, k: int, n_sub: int, k_sub: int) -> bool:
    """k'/n' <= k/n, by cross-multiplication."""
    if not 0 < n_sub < n:
        raise ValueError(f"sub-rank must lie in (0, {n}), got {n_sub}")
    return k_sub * n <= k * n_sub


def clifford_feasible(g: int, n: int, d: int, k: int) -> bool:
    return k <= clifford_max_k(g, n, d)
