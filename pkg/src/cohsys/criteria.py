"""Sufficient criteria for U(n,d,k) to be non-empty, with witness certificates.

The ``*_at`` predicates test one criterion at a fixed a; each ``check_*``
function scans a upwards and returns the first witness, or None.  :func:`verdict`
combines them with the Clifford bound into a three-way answer.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from cohsys.arith import (
    SystemType,
    clifford_max_k,
    delta2,
    delta_r,
    dim_a0a_complement,
    epsilon,
    lambda_gap,
    rho,
    vartheta,
)

class Theorem(str, enum.Enum):
    TEO1 = "TEO1"
    TEO12 = "TEO12"
    BN2 = "BN2"
    BN3 = "BN3"
    SPECIAL_REMARK = "SPECIAL_REMARK"


class Outcome(str, enum.Enum):
    GUARANTEED_NONEMPTY = "GUARANTEED_NONEMPTY"
    CLIFFORD_INFEASIBLE = "CLIFFORD_INFEASIBLE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Witness:
    """Parameters under which a named criterion fires.

    ``notes`` records the intermediate quantities (epsilon, lambda, bounds,
    ...) so the inequalities can be re-checked without re-running the search.
    """

    theorem: Theorem
    a: int
    t: Optional[int] = None
    s: Optional[int] = None
    imath: Optional[int] = None
    notes: dict = field(default_factory=dict, compare=False)

    def describe(self) -> str:
        parts = [f"theorem={self.theorem.value}", f"a={self.a}"]
        for name in ("t", "s", "imath"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        return " ".join(parts)


@dataclass(frozen=True)
class Verdict:
    """Outcome for one type (g, n, d, k).

    ``witness`` is the first certificate in dispatch order and is set exactly
    when the outcome is GUARANTEED_NONEMPTY; ``certificates`` lists every
    criterion that fired with certified non-emptiness.  ``conditional`` holds
    a TEO1/TEO12 witness whose inclusion A_a in U holds but for which
    non-emptiness of A_a could not be certified.
    """

    outcome: Outcome
    witness: Optional[Witness] = None
    expected_dim_component: Optional[int] = None
    conditional: Optional[Witness] = None
    certificates: tuple = ()

    @property
    def theorem(self) -> Optional[Theorem]:
        return self.witness.theorem if self.witness else None


def a_max(g: int, n: int, d: int) -> int:
    """Largest a for which (0,a)-stable bundles of rank n, degree d exist."""
    return g - 1 - epsilon(g, n, d)


def tl_nonempty(g: int, n: int, d: int, t: int, l: int) -> bool:
    """Whether (t,l)-stable bundles of rank n and degree d exist."""
    if n < 2:
        raise ValueError(f"(t,l)-stability needs n >= 2, got n={n}")
    return all(
        t * (n - r) + r * l < r * (n - r) * (g - 1) + delta_r(g, n, d, r)
        for r in range(1, n)
    )


def _check_a(g: int, n: int, d: int, a: int) -> None:
    top = a_max(g, n, d)
    if not 0 <= a <= top:
        raise ValueError(f"a must lie in [0, {top}], got {a}")


def teo1_at(g: int, n: int, d: int, k: int, a: int) -> Optional[Witness]:
    """Large-degree criterion at a fixed a, smallest t first.

    Needs d >= 2ng + s, k >= k0 - t, 0 <= t <= a and 2t - s <= a; s is taken
    as large as allowed, s = d - 2ng.  When k <= k0 the witness also carries
    the expected dimension rho of the resulting component.
    """
    _check_a(g, n, d, a)
    s = d - 2 * n * g
    k0 = d + n * (1 - g)
    for t in range(a + 1):
        if 2 * t - s <= a and k >= k0 - t:
            notes = {"epsilon": epsilon(g, n, d), "k0": k0}
            if k <= k0:
                notes["expected_dim"] = rho(g, n, d, k)
            return Witness(Theorem.TEO1, a=a, t=t, s=s, notes=notes)
    return None


def teo12_at(g: int, n: int, d: int, k: int, a: int) -> Optional[Witness]:
    """Low-degree criterion: 0 < d <= 2gn and lambda = d - 2(k-n) <= a."""
    _check_a(g, n, d, a)
    lam = lambda_gap(n, d, k)
    if 0 < d <= 2 * g * n and lam <= a:
        return Witness(Theorem.TEO12, a=a, notes={"epsilon": epsilon(g, n, d), "lambda": lam})
    return None


def bn2_at(g: int, d: int, k: int, a: int) -> Optional[Witness]:
    """Rank-2 criterion with r = k - 2:

        max(d - 2g - a, (d - a)/2) <= r < d - 2g + (g - a + delta - 3)/(2 + r)
    """
    _check_a(g, 2, d, a)
    r = k - 2
    delta = delta2(d, a)
    lower = max(Fraction(d - 2 * g - a), Fraction(d - a, 2))
    upper = d - 2 * g + Fraction(g - a + delta - 3, 2 + r)
    if not lower <= r < upper:
        return None
    notes = {"epsilon": epsilon(g, 2, d), "r": r, "delta": delta, "lower": lower, "upper": upper}
    return Witness(Theorem.BN2, a=a, notes=notes)


def bn3_at(g: int, d: int, k: int, a: int) -> Optional[Witness]:
    """Rank-3 criterion with r = k - 3:

        max(d - 3g - a, (d - a)/2) <= r < d - 3g + (2g - 2a - 1 - theta)/(3 + r)

    The published theta (``vartheta``) has the residues 1 and 2 of d - a
    swapped relative to the Segre-invariant dimension count.  Both values are
    computed and the larger one (the stricter bound) is used, so a witness
    satisfies the inequality as printed and the dimension estimate it rests on.
    """
    _check_a(g, 3, d, a)
    r = k - 3
    theta_printed = vartheta(d, a)
    theta_segre = dim_a0a_complement(g, 3, d, a) - 7 * (g - 1) - 2 * a
    theta = max(theta_printed, theta_segre)
    lower = max(Fraction(d - 3 * g - a), Fraction(d - a, 2))
    upper = d - 3 * g + Fraction(2 * g - 2 * a - 1 - theta, 3 + r)
    if not lower <= r < upper:
        return None
    notes = {
        "epsilon": epsilon(g, 3, d),
        "r": r,
        "vartheta": theta_printed,
        "theta_segre": theta_segre,
        "theta": theta,
        "lower": lower,
        "upper": upper,
    }
    return Witness(Theorem.BN3, a=a, notes=notes)


def _first(at, g, n, d, *args) -> Optional[Witness]:
    for a in range(a_max(g, n, d) + 1):
        w = at(*args, a)
        if w is not None:
            return w
    return None


def check_teo1(g: int, n: int, d: int, k: int) -> Optional[Witness]:
    """Witness of :func:`teo1_at` with the smallest a, then smallest t."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if d <= 0:
        raise ValueError(f"need d > 0, got d={d}")
    return _first(teo1_at, g, n, d, g, n, d, k)


def check_teo12(g: int, n: int, d: int, k: int) -> Optional[Witness]:
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    a = max(0, lambda_gap(n, d, k))
    if a > a_max(g, n, d):
        return None
    return teo12_at(g, n, d, k, a)


def check_bn2(g: int, d: int, k: int) -> Optional[Witness]:
    if k < 3:
        raise ValueError(f"rank-2 criterion needs k >= 3, got k={k}")
    return _first(bn2_at, g, 2, d, g, d, k)


def check_bn3(g: int, d: int, k: int) -> Optional[Witness]:
    if k < 4:
        raise ValueError(f"rank-3 criterion needs k >= 4, got k={k}")
    return _first(bn3_at, g, 3, d, g, d, k)


def check_special(g: int, n: int, d: int, k: int, imath: int) -> Optional[Witness]:
    """Variant of the large-degree criterion for special bundles with h^0 = k0 + imath.

    Needs 0 <= t - imath <= a, d >= 2ng + 2(t - imath) - a and k >= k0 - t.
    Only valid if such a special bundle exists, which is not decided here, so
    the result is never used by :func:`verdict`.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if imath < 1:
        raise ValueError(f"imath must be >= 1, got {imath}")
    k0 = d + n * (1 - g)
    for a in range(a_max(g, n, d) + 1):
        for t in range(imath, imath + a + 1):
            if d >= 2 * n * g + 2 * (t - imath) - a and k >= k0 - t:
                notes = {"epsilon": epsilon(g, n, d), "k0": k0, "conditional": True}
                return Witness(Theorem.SPECIAL_REMARK, a=a, t=t, imath=imath, notes=notes)
    return None


def check_prop31(g: int, n: int, d: int, k: int, a: int) -> bool:
    """Whether A_a(n,d,k) is certified non-empty.

    Either d >= n(g-1) and k <= k0, or the complement of the (0,a)-stable
    locus has dimension below rho, a lower bound for every component of the
    Brill-Noether locus.
    """
    _check_a(g, n, d, a)
    if d >= n * (g - 1) and k <= d + n * (1 - g):
        return True
    return dim_a0a_complement(g, n, d, a) < rho(g, n, d, k)


def verdict(g: int, n: int, d: int, k: int) -> Verdict:
    SystemType(g, n, d, k)
    if d <= 0:
        raise ValueError(f"need d > 0, got d={d}")
    if k > clifford_max_k(g, n, d):
        return Verdict(Outcome.CLIFFORD_INFEASIBLE)
    if n < 2:
        return Verdict(Outcome.UNKNOWN)

    certified = []
    conditional = None
    for check in (check_teo1, check_teo12):
        w = check(g, n, d, k)
        if w is None:
            continue
        if check_prop31(g, n, d, k, w.a):
            certified.append(w)
        elif conditional is None:
            conditional = w
    if n == 2 and k >= 3:
        w = check_bn2(g, d, k)
        if w is not None:
            certified.append(w)
    if n == 3 and k >= 4:
        w = check_bn3(g, d, k)
        if w is not None:
            certified.append(w)

    if not certified:
        return Verdict(Outcome.UNKNOWN, conditional=conditional)
    first = certified[0]
    return Verdict(
        Outcome.GUARANTEED_NONEMPTY,
        witness=first,
        expected_dim_component=first.notes.get("expected_dim"),
        certificates=tuple(certified),
    )
