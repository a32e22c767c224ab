"""Closed-form invariants of coherent systems of type (n, d, k) on a genus g curve.

Everything here is integer or :class:`fractions.Fraction` arithmetic; no
function in this module touches floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

__all__ = [
    "SystemType",
    "SegreStratum",
    "epsilon",
    "rho",
    "clifford_max_k",
    "lambda_gap",
    "delta_r",
    "vartheta",
    "delta2",
    "tilde_s",
    "s_delta",
    "dim_stratum",
    "segre_strata",
    "dim_a0a_complement",
    "dim_fiber",
    "grass_dim",
]


@dataclass(frozen=True)
class SystemType:
    """Numerical type (g; n, d, k) of a coherent system."""

    g: int
    n: int
    d: int
    k: int

    def __post_init__(self):
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")
        if self.n < 1:
            raise ValueError(f"rank must be >= 1, got {self.n}")
        if self.k < 0:
            raise ValueError(f"section count must be >= 0, got {self.k}")

    @property
    def k0(self) -> int:
        """Euler characteristic d + n(1 - g), the generic h^0 for large d."""
        return self.d + self.n * (1 - self.g)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.d, self.n)


@dataclass(frozen=True)
class SegreStratum:
    """Locus of stable bundles whose m-Segre invariant equals s.

    ``dim`` is None when the stratum is empty.
    """

    m: int
    s: int
    dim: Optional[int]

    @property
    def empty(self) -> bool:
        return self.dim is None


def _check_sub_rank(n: int, m: int, name: str = "m") -> None:
    if not 1 <= m <= n - 1:
        raise ValueError(f"{name} must lie in [1, {n - 1}], got {m}")


def epsilon(g: int, n: int, d: int) -> int:
    """1 if d = g - 1 mod n, else 0."""
    return 1 if (d - (g - 1)) % n == 0 else 0


def rho(g: int, n: int, d: int, k: int) -> int:
    """Brill-Noether number n^2(g-1) + 1 - k(k - d + n(g-1))."""
    return n * n * (g - 1) + 1 - k * (k - d + n * (g - 1))


def clifford_max_k(g: int, n: int, d: int) -> int:
    """Largest k allowed by Clifford's bound for alpha-semistable systems.

    For d < 2gn the bound d/2 + n is floored, since k counts sections.
    """
    if d <= 0:
        raise ValueError(f"Clifford bound needs d > 0, got d={d}")
    if d >= 2 * g * n:
        return d + n * (1 - g)
    return d // 2 + n


def lambda_gap(n: int, d: int, k: int) -> int:
    return d - 2 * (k - n)


def delta_r(g: int, n: int, d: int, r: int) -> int:
    """Residue 0 <= delta < n with r(n-r)(g-1) + delta = r*d mod n."""
    _check_sub_rank(n, r, "r")
    return (r * d - r * (n - r) * (g - 1)) % n


def vartheta(d: int, a: int) -> int:
    """Rank-3 correction: 1, -1, 0 as d - a is 0, 1, 2 mod 3.

    This is the labelling used in the rank-3 criterion as published.  The
    value actually consistent with the Segre computation is
    ``dim_a0a_complement(g, 3, d, a) - 7*(g-1) - 2*a``; see
    :func:`cohsys.criteria.check_bn3`.
    """
    return {0: 1, 1: -1, 2: 0}[(d - a) % 3]


def delta2(d: int, a: int) -> int:
    return 2 if (a - d) % 2 == 0 else 3


def tilde_s(n: int, d: int, a: int, m: int) -> int:
    """Largest s <= m*a with s = m*d mod n.

    Defined for every a >= 0; the result may be zero or negative, in which
    case no Segre stratum of that value exists.
    """
    _check_sub_rank(n, m)
    if a < 0:
        raise ValueError(f"a must be >= 0, got {a}")
    return m * a - (m * a - m * d) % n


def s_delta(g: int, n: int, d: int, a: int) -> int:
    if n < 2:
        raise ValueError(f"s_delta needs n >= 2, got n={n}")
    return min(m * (n - m) * (g - 1) - tilde_s(n, d, a, m) for m in range(1, n))


def dim_stratum(g: int, n: int, d: int, m: int, s: int) -> Optional[int]:
    """Dimension of the m-Segre stratum with invariant s, or None if empty."""
    _check_sub_rank(n, m)
    top = m * (n - m) * (g - 1)
    if not 0 < s <= top or (s - m * d) % n != 0:
        return None
    return n * n * (g - 1) + 1 + s - top


def segre_strata(g: int, n: int, d: int, m: int) -> list[SegreStratum]:
    """All non-empty m-Segre strata, in increasing s."""
    _check_sub_rank(n, m)
    top = m * (n - m) * (g - 1)
    return [
        SegreStratum(m, s, dim_stratum(g, n, d, m, s))
        for s in range(1, top + 1)
        if (s - m * d) % n == 0
    ]


def dim_a0a_complement(g: int, n: int, d: int, a: int) -> int:
    """Dimension of the complement of the (0,a)-stable locus in M(n,d).

    Computed as n^2(g-1) + 1 - s_delta.  Only 0 <= a <= g-1-epsilon is
    accepted.
    """
    top = g - 1 - epsilon(g, n, d)
    if not 0 <= a <= top:
        raise ValueError(f"a must lie in [0, {top}] for (g,n,d)=({g},{n},{d}), got {a}")
    return n * n * (g - 1) + 1 - s_delta(g, n, d, a)


def dim_fiber(g: int, n: int, d: int, k: int, imath: int, c: int) -> int:
    """Dimension of the forgetful-map preimage of the stratum h^0 = k0 + imath.

    ``c`` is the codimension of that stratum in M(n,d).
    """
    if d < n * (g - 1):
        raise ValueError(f"need d >= n(g-1) = {n * (g - 1)}, got d={d}")
    top = n * g - (d + 1) // 2
    if not 0 <= imath <= top:
        raise ValueError(f"imath must lie in [0, {top}], got {imath}")
    k0 = d + n * (1 - g)
    if not 0 <= k <= k0 + imath:
        raise ValueError(f"k must lie in [0, {k0 + imath}], got {k}")
    if c < 0:
        raise ValueError(f"codimension must be >= 0, got {c}")
    return rho(g, n, d, k) + k * imath - c


def grass_dim(dim_base: int, s: int, k: int) -> int:
    """Dimension of the Grassmann bundle of s-planes in a rank-k bundle."""
    if not 0 <= s <= k:
        raise ValueError(f"s must lie in [0, {k}], got {s}")
    if dim_base < 0:
        raise ValueError(f"base dimension must be >= 0, got {dim_base}")
    return dim_base + s * (k - s)
