"""K3-specific arithmetic for nodal curves and du Val singularities.

Covers the even-set size classification through Euler numbers, the code
dimension bound from the second Betti number, the constraints forced on
the code of a set of disjoint nodal curves, the assembled certificate
that no K3 surface carries 17 of them, and the delta/mu calculator with
admissibility verdicts for ADE singularity configurations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator, Mapping

from .codes import (
    ExtensionCertificate,
    LinearCode,
    code_d,
    is_isomorphic_to_d,
    verify_no_extension,
    weight_distribution,
)

K3_EULER = 24
K3_B2 = 22


class CoverVerdict(str, Enum):
    EMPTY = "Empty"
    K3_COVER = "K3Cover"
    TORUS_COVER = "TorusCover"
    IMPOSSIBLE = "Impossible"


@dataclass(frozen=True)
class EvenSetClass:
    k: int
    verdict: CoverVerdict
    euler_of_cover: int | None


def classify_even_set(k: int) -> EvenSetClass:
    """Classify the double cover branched over an even set of k disjoint
    nodal curves on a K3 surface.

    The cover's Euler number is e = 48 - 3k.  Noether's formula forces
    e/12 = 2 - q with q = 0 (a K3 cover) or q = 2 (a complex torus); any
    other k is impossible.  The verdicts are derived from this arithmetic,
    never from a hard-coded list of sizes.
    """
    if k < 0:
        raise ValueError("set size must be nonnegative")
    if k == 0:
        return EvenSetClass(0, CoverVerdict.EMPTY, 2 * K3_EULER)
    euler = 2 * K3_EULER - 3 * k
    if euler % 12 == 0:
        irregularity = 2 - euler // 12
        if irregularity == 0:
            return EvenSetClass(k, CoverVerdict.K3_COVER, euler)
        if irregularity == 2:
            return EvenSetClass(k, CoverVerdict.TORUS_COVER, euler)
    return EvenSetClass(k, CoverVerdict.IMPOSSIBLE, None)


def code_dim_lower_bound(n: int, b2: int = K3_B2) -> int:
    """Lower bound n - b2/2 (clamped at 0) for the dimension of the code
    of n disjoint nodal curves on a surface with second Betti number b2."""
    if n < 0:
        raise ValueError("curve count must be nonnegative")
    if b2 < 0 or b2 % 2:
        raise ValueError("b2 must be an even nonnegative integer")
    return max(0, n - b2 // 2)


@dataclass(frozen=True)
class NodalCodeConstraints:
    """What the K3 arithmetic forces on the code of n disjoint nodal curves."""

    n: int
    allowed_nonzero_weights: tuple[int, ...]
    dim_lower_bound: int
    forced_code: LinearCode | None
    forced_code_name: str | None


def nodal_code_constraints(n: int) -> NodalCodeConstraints:
    """Allowed weights {8, 16} within reach of n, the dimension bound for
    b2 = 22, and the forced code identity where one exists: D_5 at n = 16,
    the all-ones line at n = 8, the zero code below 8."""
    if n < 1:
        raise ValueError("curve count must be positive")
    allowed = tuple(w for w in (8, 16) if w <= n)
    bound = code_dim_lower_bound(n)
    forced: LinearCode | None = None
    name: str | None = None
    if n == 16:
        forced, name = code_d(5), "D5"
    elif n == 8:
        forced, name = LinearCode.repetition(8), "line"
    elif n < 8:
        forced, name = LinearCode.zero(n), "zero"
    return NodalCodeConstraints(n, allowed, bound, forced, name)


@dataclass(frozen=True)
class TheoremCertificate:
    """Machine-checkable composition proving the 16-curve bound."""

    statement: str
    sixteen_step: dict
    seventeen_step: ExtensionCertificate
    monotonicity: str
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "statement": self.statement,
            "sixteen_curve_step": self.sixteen_step,
            "seventeen_curve_step": self.seventeen_step.to_json_dict(),
            "monotonicity": self.monotonicity,
            "ok": self.ok,
        }


def verify_max_sixteen() -> TheoremCertificate:
    """Assemble and check the chain showing a complex K3 surface carries at
    most 16 disjoint nodal curves.

    Step one: for 16 curves the code has dimension >= 16 - 22/2 = 5 and
    nonzero weights in {8, 16}, so all nonzero weights reach half of
    16 = 2^4; the extremal characterization then forces the code to be
    D_5.  Step two: the no-extension certificate rules out a seventeenth
    coordinate.  Larger sets reduce to seventeen by deleting surplus
    coordinates first, recorded as the monotonicity note.
    """
    cons = nodal_code_constraints(16)
    d5 = code_d(5)
    dist = weight_distribution(d5)
    sixteen = {
        "n": 16,
        "dim_lower_bound": cons.dim_lower_bound,
        "allowed_nonzero_weights": list(cons.allowed_nonzero_weights),
        "length_is_extremal": 16 == 1 << (cons.dim_lower_bound - 1),
        "forced_code": cons.forced_code_name,
        "forced_code_parameters": {"n": d5.n, "k": d5.k},
        "forced_code_weight_counts": {str(w): c for w, c in dist.counts.items()},
        "forced_code_passes_characterization": is_isomorphic_to_d(d5),
    }
    sixteen_ok = (
        cons.dim_lower_bound == 5
        and cons.allowed_nonzero_weights == (8, 16)
        and sixteen["length_is_extremal"]
        and cons.forced_code == d5
        and sixteen["forced_code_passes_characterization"]
        and dist.counts == {0: 1, 8: 30, 16: 1}
    )
    cert = verify_no_extension(5)
    half = cert.block_length // 2
    seventeen_ok = (
        not cert.degenerate
        and len(cert.entries) == cert.block_length * (cert.block_length - 1)
        and all(e.weight in (half - 1, half + 1) for e in cert.entries)
    )
    return TheoremCertificate(
        statement="a complex K3 surface carries at most 16 disjoint nodal curves",
        sixteen_step=sixteen,
        seventeen_step=cert,
        monotonicity=(
            "any set of more than 16 disjoint nodal curves contains 17; every "
            "16-curve subset forces the code D_5 on those coordinates, and the "
            "witness table shows a 17th coordinate is impossible, so ruling out "
            "17 rules out every larger count"
        ),
        ok=sixteen_ok and seventeen_ok,
    )


_TERM_RE = re.compile(r"^([ADE])(\d+)(?:X(\d+))?$")


@dataclass(frozen=True)
class DuValConfig:
    """Multiset of ADE singularity types: counts of A_n (n >= 1),
    D_n (n >= 4) and E_n (n in {6, 7, 8})."""

    a: Mapping[int, int] = field(default_factory=dict)
    d: Mapping[int, int] = field(default_factory=dict)
    e: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for label, counts, check in (
            ("A", self.a, lambda n: n >= 1),
            ("D", self.d, lambda n: n >= 4),
            ("E", self.e, lambda n: n in (6, 7, 8)),
        ):
            cleaned = {}
            for n, count in sorted(counts.items()):
                if not check(n):
                    raise ValueError(f"{label}{n} is not a du Val singularity type")
                if count < 0:
                    raise ValueError(f"negative count for {label}{n}")
                if count:
                    cleaned[n] = count
            object.__setattr__(self, label.lower(), cleaned)

    @classmethod
    def parse(cls, text: str) -> DuValConfig:
        """Parse the configuration grammar: comma-separated ``<T><n>[x<count>]``
        terms, case-insensitive, e.g. ``A1x16`` or ``A2,D4x2,E7``."""
        a: dict[int, int] = {}
        d: dict[int, int] = {}
        e: dict[int, int] = {}
        for raw in text.split(","):
            term = raw.strip().upper()
            if not term:
                raise ValueError(f"empty term in configuration {text!r}")
            match = _TERM_RE.match(term)
            if not match:
                raise ValueError(f"cannot parse term {raw.strip()!r}")
            letter, n, count = match.group(1), int(match.group(2)), int(match.group(3) or 1)
            target = {"A": a, "D": d, "E": e}[letter]
            target[n] = target.get(n, 0) + count
        return cls(a, d, e)

    def terms(self) -> Iterator[tuple[str, int, int]]:
        """(letter, index, count) triples, sorted A before D before E."""
        for letter, counts in (("A", self.a), ("D", self.d), ("E", self.e)):
            for n, count in sorted(counts.items()):
                yield letter, n, count

    def canonical(self) -> str:
        parts = [
            f"{letter}{n}" + (f"x{count}" if count > 1 else "")
            for letter, n, count in self.terms()
        ]
        return ",".join(parts) if parts else "(empty)"

    def is_empty(self) -> bool:
        return not (self.a or self.d or self.e)


def _delta_per_singularity(letter: str, n: int) -> int:
    # disjoint nodal curves extracted from one singularity of the type
    if letter == "D":
        return (n + 2) // 2
    return (n + 1) // 2


def delta(cfg: DuValConfig) -> int:
    """Number of disjoint nodal curves produced by resolving the
    configuration: sum of (a_n + e_n) * floor((n+1)/2) + d_n * floor((n+2)/2)."""
    return sum(count * _delta_per_singularity(letter, n) for letter, n, count in cfg.terms())


def milnor(cfg: DuValConfig) -> int:
    """Total Milnor number: sum of n over all singularities."""
    return sum(n * count for _, n, count in cfg.terms())


@dataclass(frozen=True)
class TypeBreakdown:
    label: str
    count: int
    delta_each: int
    delta_total: int
    milnor_total: int


@dataclass(frozen=True)
class AdmissibilityReport:
    config: DuValConfig
    delta: int
    mu: int
    ratio: Fraction | None
    nodal_count_per_type: tuple[TypeBreakdown, ...]
    admissible: bool
    reasons: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "config": self.config.canonical(),
            "delta": self.delta,
            "mu": self.mu,
            "ratio": (
                {"num": self.ratio.numerator, "den": self.ratio.denominator}
                if self.ratio is not None
                else None
            ),
            "per_type": [
                {
                    "type": t.label,
                    "count": t.count,
                    "delta_each": t.delta_each,
                    "delta_total": t.delta_total,
                    "milnor_total": t.milnor_total,
                }
                for t in self.nodal_count_per_type
            ],
            "admissible": self.admissible,
            "reasons": list(self.reasons),
        }


def admissible(cfg: DuValConfig) -> AdmissibilityReport:
    """Admissibility on a K3 surface: the resolved nodal curves must not
    exceed 16.  The report carries delta, mu, their exact ratio and a
    per-type breakdown."""
    breakdown = []
    for letter, n, count in cfg.terms():
        each = _delta_per_singularity(letter, n)
        breakdown.append(TypeBreakdown(f"{letter}{n}", count, each, each * count, n * count))
    d = delta(cfg)
    mu = milnor(cfg)
    ok = d <= 16
    reasons = () if ok else (f"delta {d} exceeds the bound of 16 disjoint nodal curves",)
    ratio = Fraction(d, mu) if mu else None
    return AdmissibilityReport(cfg, d, mu, ratio, tuple(breakdown), ok, reasons)
