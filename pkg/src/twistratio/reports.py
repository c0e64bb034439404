"""Certified ratio reports for twist words, and the optimizer families.

A report pins down, for one word w and one surface configuration:

  * the exact trace of its matrix image and whether it is hyperbolic
    (equivalently: whether w is pseudo-Anosov in the twist subgroup),
  * ell_T, the Teichmueller translation length (log of the dilatation),
  * a certified interval [l, 3l] for ell_C, the stable curve-graph
    translation length, with l the cyclic syllable length,
  * the resulting interval for tau = ell_T / ell_C,
  * the bound log(2 B i(alpha, beta)) that tau is certified against.

The configuration carries M (the bounded-geodesic-image constant, an
input here) and B = 2M + 7; the twist generators are B-th powers, so
the effective matrix parameter is B times the pair's intersection
number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterator

from .matrices import dilatation, evaluate
from .surfaces import (
    DEFAULT_SEEDS,
    IntersectionValue,
    SeparatingSeeds,
    SurfaceParams,
    min_filling_intersection,
    pointpush_intersection_bound,
    separating_pair_bound,
)
from .tree import DistanceInterval, curve_translation_interval
from .words import Word, commutator, cyclic_reduce, enumerate_optimizer_words, parse_word, primitive_root

DEFAULT_M = 100
BOUND_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Config:
    """Surface/constant configuration for ratio reports.

    B is always 2M + 7 and the effective matrix parameter is
    B * pair_intersection.value; both are derived, never stored.
    """

    surface: SurfaceParams
    pair_intersection: IntersectionValue
    M: int = DEFAULT_M
    separating: bool = False
    seeds: SeparatingSeeds | None = None

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("M must be a positive integer")

    @property
    def B(self) -> int:
        return 2 * self.M + 7

    @property
    def n_eff(self) -> int:
        return self.B * self.pair_intersection.value

    @property
    def theorem_bound(self) -> float:
        return math.log(2 * self.B * self.pair_intersection.value)

    @property
    def corollary_bound(self) -> float:
        return math.log(2 * self.B * self.surface.omega)

    def to_dict(self) -> dict[str, Any]:
        return {
            "M": self.M,
            "B": self.B,
            "genus": self.surface.genus,
            "punctures": self.surface.punctures,
            "omega": self.surface.omega,
            "pair_intersection": {
                "value": self.pair_intersection.value,
                "kind": self.pair_intersection.kind,
            },
            "n_eff": self.n_eff,
            "separating": self.separating,
            "seeds": self.seeds.as_dict() if self.seeds else None,
        }


def standard_config(g: int, p: int = 0, M: int = DEFAULT_M) -> Config:
    """Configuration over a minimally intersecting filling pair."""
    return Config(
        surface=SurfaceParams(g, p),
        pair_intersection=min_filling_intersection(g, p),
        M=M,
    )


def separating_config(
    g: int, p: int = 0, M: int = DEFAULT_M, seeds: SeparatingSeeds = DEFAULT_SEEDS
) -> Config:
    """Configuration over a filling pair of separating curves."""
    return Config(
        surface=SurfaceParams(g, p),
        pair_intersection=separating_pair_bound(g, p, seeds),
        M=M,
        separating=True,
        seeds=seeds,
    )


@dataclass
class RatioReport:
    word: str
    is_pseudo_anosov: bool
    trace_abs: int
    ell_T: float | None
    ell_C_interval: DistanceInterval
    tau_interval: tuple[float, float] | None
    theorem_bound: float
    corollary_bound: float
    certificates: dict[str, Any]
    config: Config
    family: str | None = None
    family_data: dict[str, Any] = field(default_factory=dict)

    @property
    def bound_satisfied(self) -> bool | None:
        return self.certificates["bound_satisfied"]

    def to_dict(self, short: bool = False) -> dict[str, Any]:
        return {
            "word": self.word,
            "is_pseudo_anosov": self.is_pseudo_anosov,
            "trace_abs": _format_bigint(self.trace_abs, short),
            "ell_T": _round12(self.ell_T),
            "ell_C_interval": {
                "lower": self.ell_C_interval.lower,
                "upper": self.ell_C_interval.upper,
            },
            "tau_interval": None
            if self.tau_interval is None
            else {
                "lower": _round12(self.tau_interval[0]),
                "upper": _round12(self.tau_interval[1]),
            },
            "theorem_bound": _round12(self.theorem_bound),
            "corollary_bound": _round12(self.corollary_bound),
            "certificates": dict(self.certificates),
            "family": self.family,
            "family_data": {k: _round12_maybe(v) for k, v in self.family_data.items()},
            "config": self.config.to_dict(),
        }


def _round12(x: float | None) -> float | None:
    if x is None:
        return None
    return float(f"{x:.12g}")


def _round12_maybe(v: Any) -> Any:
    return _round12(v) if isinstance(v, float) else v


def _format_bigint(n: int, short: bool) -> str:
    s = str(n)
    if short and len(s) > 15:
        mantissa = s[0] + "." + s[1:12]
        return f"{mantissa}e+{len(s) - 1}"
    return s


def ratio_report(w: Word, cfg: Config) -> RatioReport:
    """Full certified report for one word.

    The matrix is evaluated on the canonical cyclically reduced
    representative, so conjugate inputs produce identical trace, ell_T
    and ell_C data.  Non-hyperbolic words are reported (not raised) with
    is_pseudo_anosov False and no tau.
    """
    cyc, _ = cyclic_reduce(w)
    rep = cyc.representative
    mat = evaluate(rep, cfg.n_eff)
    trace_abs = abs(mat.trace())
    ell_c = curve_translation_interval(rep)
    hyperbolic = trace_abs > 2 and ell_c.lower > 0

    certificates: dict[str, Any] = {
        "cyclically_reduced": w.is_cyclically_reduced(),
        "letter_eq_syllable": rep.letter_length == rep.syllable_length,
        "primitive": (not w.is_identity) and primitive_root(w)[1] == 1,
    }

    ell_t: float | None = None
    tau: tuple[float, float] | None = None
    bound_ok: bool | None = None
    if hyperbolic:
        ell_t = dilatation(mat).log_lambda
        tau = (ell_t / ell_c.upper, ell_t / ell_c.lower)
        bound_ok = tau[1] <= cfg.theorem_bound + BOUND_TOLERANCE
    certificates["bound_satisfied"] = bound_ok

    return RatioReport(
        word=str(w),
        is_pseudo_anosov=hyperbolic,
        trace_abs=trace_abs,
        ell_T=ell_t,
        ell_C_interval=ell_c,
        tau_interval=tau,
        theorem_bound=cfg.theorem_bound,
        corollary_bound=cfg.corollary_bound,
        certificates=certificates,
        config=cfg,
    )


# -- deep commutator family ----------------------------------------------------

JOHNSON_SEED_1 = "aba"
JOHNSON_SEED_2 = "bab"


@dataclass(frozen=True)
class CommutatorNesting:
    """Records how an iterated commutator word was assembled."""

    depth: int
    seed_pair: tuple[str, str]
    iterated_args: tuple[str, ...]

    def as_dict(self) -> dict[str, Any]:
        return {
            "depth": self.depth,
            "seed_pair": list(self.seed_pair),
            "iterated_args": list(self.iterated_args),
        }


def johnson_word(k: int) -> tuple[Word, CommutatorNesting]:
    """Depth-k iterated commutator of the twist words aba and bab.

    f_1 = [aba, bab] and f_k = [f_{k-1}, bab]; each level crosses one
    more commutator bracket, which is what descending one step in the
    Johnson filtration needs (membership itself is a theorem input, not
    recomputed here).  Every f_k has all syllable exponents +-1; the
    letter length doubles each level (exactly one junction cancels).
    """
    if k < 1:
        raise ValueError("depth k must be a positive integer")
    w1 = parse_word(JOHNSON_SEED_1)
    w2 = parse_word(JOHNSON_SEED_2)
    f = commutator(w1, w2)
    for _ in range(k - 1):
        f = commutator(f, w2)
    nesting = CommutatorNesting(
        depth=k,
        seed_pair=(JOHNSON_SEED_1, JOHNSON_SEED_2),
        iterated_args=(JOHNSON_SEED_2,) * (k - 1),
    )
    return f, nesting


def johnson_report(k: int, cfg: Config) -> RatioReport:
    """Ratio report for the depth-k commutator word over a separating pair."""
    if not cfg.separating:
        raise ValueError("johnson reports need a separating-pair configuration")
    w, nesting = johnson_word(k)
    rep = ratio_report(w, cfg)
    rep.family = "johnson"
    rep.family_data = {
        "k": k,
        "C_J": cfg.theorem_bound / math.log(cfg.surface.omega),
        "nesting": nesting.as_dict(),
    }
    return rep


# -- point-pushing family -------------------------------------------------------


def pointpush_report(g: int, M: int = DEFAULT_M) -> RatioReport:
    """Ratio report for the opposite-twist word a b^-1 in the point-push setup.

    The filling pair on the punctured surface is a curve and its image
    under a point-push map; the effective intersection number is the
    certified 6 n^2 bound with n the minimal filling-pair intersection
    on the closed surface.
    """
    if g < 2:
        raise ValueError("point pushing needs genus >= 2")
    n = min_filling_intersection(g, 0).value
    cfg = Config(
        surface=SurfaceParams(g, 1),
        pair_intersection=pointpush_intersection_bound(n),
        M=M,
    )
    rep = ratio_report(parse_word("aB"), cfg)
    rep.family = "point_push"
    rep.family_data = {
        "base_intersection": n,
        "C_P": cfg.theorem_bound / math.log(cfg.surface.omega),
    }
    return rep


# -- infinite optimizer stream ---------------------------------------------------


def enumerate_ratio_optimizers(
    count: int, cfg: Config, prefix_stable: bool = False
) -> Iterator[tuple[Word, RatioReport]]:
    """Stream (word, report) pairs for the infinite optimizer family.

    Words come from enumerate_optimizer_words: cyclically reduced, all
    exponents +-1, primitive, pairwise distinct axes.  All of them live
    in the twist subgroup, so they share one invariant flat-structure
    disk; that is recorded as a static certificate.
    """
    for w in enumerate_optimizer_words(count, prefix_stable=prefix_stable):
        rep = ratio_report(w, cfg)
        rep.family = "optimizer_stream"
        rep.family_data = {"shared_invariant_disk": True}
        yield w, rep
