"""Surface bookkeeping: complexity, filling-pair intersection tables, twist bounds.

The minimal filling-pair intersection numbers come in five parameter
cases; all are exact except odd-puncture genus 2, which is only an
upper bound.  Separating filling pairs are handled through a two-step
recursion from configurable seed values (the construction glues a
two-holed genus-2 piece, adding a fixed arc-pair intersection count per
step).  The twist inequality is exported as exact interval arithmetic
so filling and intersection-growth arguments become certified
computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .tree import DistanceInterval


class UnsupportedSurfaceError(ValueError):
    """Parameters outside the supported (genus, punctures) range."""


def complexity(g: int, p: int) -> int:
    """3g + p - 4; all constructions here need this to be positive."""
    return 3 * g + p - 4


@dataclass(frozen=True)
class SurfaceParams:
    genus: int
    punctures: int

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise UnsupportedSurfaceError("genus and punctures must be nonnegative")
        if self.omega <= 0:
            raise UnsupportedSurfaceError(
                f"complexity 3g+p-4 = {self.omega} must be positive "
                f"(got g={self.genus}, p={self.punctures})"
            )

    @property
    def omega(self) -> int:
        return complexity(self.genus, self.punctures)


@dataclass(frozen=True)
class IntersectionValue:
    value: int
    kind: str  # "exact" or "upper_bound"

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("intersection numbers are positive")
        if self.kind not in ("exact", "upper_bound"):
            raise ValueError(f"unknown kind {self.kind!r}")


def min_filling_intersection(g: int, p: int) -> IntersectionValue:
    """Minimal geometric intersection number of a filling pair on S_{g,p}.

    Cases:
      (1) g not in {0, 2}, p == 0:        2g - 1
      (2) g not in {0, 2}, p >= 1:        2g + p - 2
      (3) g == 0, even p >= 6:            p - 2;   odd p >= 5: p - 1
      (4) g == 2, p <= 2:                 4
      (5) g == 2, even p >= 2:            2g + p - 2;  odd p >= 3: <= 2g + p - 1

    Cases (4) and (5) overlap at (2, 2) and agree there.
    """
    if complexity(g, p) <= 0:
        raise UnsupportedSurfaceError(
            f"(g, p) = ({g}, {p}) has complexity {complexity(g, p)} <= 0; "
            "no filling pair table entry"
        )
    if g == 0:
        if p % 2 == 0:
            return IntersectionValue(p - 2, "exact")
        return IntersectionValue(p - 1, "exact")
    if g == 2:
        if p <= 2:
            if p == 2:
                assert 2 * g + p - 2 == 4  # case (5) overlap
            return IntersectionValue(4, "exact")
        if p % 2 == 0:
            return IntersectionValue(2 * g + p - 2, "exact")
        return IntersectionValue(2 * g + p - 1, "upper_bound")
    if p == 0:
        return IntersectionValue(2 * g - 1, "exact")
    return IntersectionValue(2 * g + p - 2, "exact")


def filling_table(gmax: int, pmax: int) -> Iterator[tuple[int, int, int, int, str]]:
    """(g, p, omega, i_min, kind) rows for every supported surface in range."""
    for g in range(gmax + 1):
        for p in range(pmax + 1):
            if complexity(g, p) <= 0:
                continue
            iv = min_filling_intersection(g, p)
            yield (g, p, complexity(g, p), iv.value, iv.kind)


@dataclass(frozen=True)
class SeparatingSeeds:
    """Seed intersection counts for the separating-pair recursion.

    The defaults are placeholders: the construction only needs *some*
    separating filling pairs on the genus 2 and 3 closed surfaces and an
    essential filling arc pair on the two-holed genus-2 piece.  Reports
    always echo the seeds used.
    """

    genus2: int = 4
    genus3: int = 8
    arc_pair: int = 4

    def __post_init__(self):
        if min(self.genus2, self.genus3, self.arc_pair) < 1:
            raise ValueError("seed intersection counts must be positive")

    def as_dict(self) -> dict[str, int]:
        return {"genus2": self.genus2, "genus3": self.genus3, "arc_pair": self.arc_pair}


DEFAULT_SEEDS = SeparatingSeeds()


def separating_pair_bound(
    g: int, p: int, seeds: SeparatingSeeds = DEFAULT_SEEDS
) -> IntersectionValue:
    """Upper bound for a filling pair of separating curves on S_{g,p}.

    Two-step recursion i(g+2) <= i(g) + arc_pair from the genus 2 and 3
    seeds; a single puncture reuses the closed-surface pair (puncture a
    complementary region).
    """
    if g < 2:
        raise UnsupportedSurfaceError("separating filling pairs need genus >= 2")
    if p not in (0, 1):
        raise UnsupportedSurfaceError("supported puncture counts are 0 and 1")
    base = seeds.genus2 if g % 2 == 0 else seeds.genus3
    steps = (g - 2) // 2 if g % 2 == 0 else (g - 3) // 2
    return IntersectionValue(base + steps * seeds.arc_pair, "upper_bound")


# Lower-bound coefficient variants for the twist inequality.
VARIANT_ABS_OF_DIFF = "abs-of-diff"  # |s_i - 2|
VARIANT_DIFF_OF_ABS = "diff-of-abs"  # |s_i| - 2
TWIST_VARIANTS = (VARIANT_ABS_OF_DIFF, VARIANT_DIFF_OF_ABS)


def twist_intersection_bounds(
    s: Sequence[int],
    i_rho_c: Sequence[int],
    i_c_gamma: Sequence[int],
    i_rho_gamma: int,
    variant: str = VARIANT_ABS_OF_DIFF,
) -> DistanceInterval:
    """Interval for i(T(rho), gamma) after multitwisting rho along disjoint curves c_i.

    Upper bound: sum |s_i| i(rho, c_i) i(c_i, gamma) + i(rho, gamma).
    Lower bound: sum L_i i(rho, c_i) i(c_i, gamma) - i(rho, gamma),
    clamped into [0, upper], with L_i = |s_i - 2| (abs-of-diff, default)
    or |s_i| - 2 (diff-of-abs).  The abs-of-diff coefficient exceeds
    |s_i| when s_i < 1, where its raw "lower bound" can cross the upper
    bound; clamping keeps the interval well formed (diff-of-abs is the
    sound variant there).
    """
    if not (len(s) == len(i_rho_c) == len(i_c_gamma)):
        raise ValueError("twist exponents and intersection sequences must have equal length")
    if len(s) < 1:
        raise ValueError("at least one twisting curve is required")
    if variant not in TWIST_VARIANTS:
        raise ValueError(f"variant must be one of {TWIST_VARIANTS}")
    if variant == VARIANT_ABS_OF_DIFF:
        coeffs = [abs(si - 2) for si in s]
    else:
        coeffs = [abs(si) - 2 for si in s]
    lower = sum(c * a * b for c, a, b in zip(coeffs, i_rho_c, i_c_gamma)) - i_rho_gamma
    upper = sum(abs(si) * a * b for si, a, b in zip(s, i_rho_c, i_c_gamma)) + i_rho_gamma
    return DistanceInterval(min(max(0, lower), upper), upper)


def pointpush_intersection_bound(n: int) -> IntersectionValue:
    """6 n^2: intersection growth of a curve pushed by opposite triple twists.

    The point-push map twists +3 and -3 along two parallel copies of the
    partner curve; with i(rho, copy) = n on each copy and gamma = rho the
    twist inequality pins the count to exactly 6 n^2 on both sides.
    """
    if n < 1:
        raise ValueError("base intersection number must be positive")
    interval = twist_intersection_bounds((3, -3), (n, n), (n, n), 0)
    assert interval.lower == interval.upper == 6 * n * n
    return IntersectionValue(interval.upper, "upper_bound")
