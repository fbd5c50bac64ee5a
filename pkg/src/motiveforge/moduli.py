"""Flip-chain pipelines for the moduli classes.

The pair-moduli chain M_0, ..., M_ω (ω = ⌊(d-1)/2⌋) starts at a projective
space and changes by one flip term per wall; summing the terms gives the class
of any M_i.  Dividing the last one by a projective-space factor yields the
class of the odd-degree bundle moduli space, which is also computed from a
closed binomial expression as an independent path.  The even-degree case runs
the four-step pipeline: strictly-semistable preimage, Gysin subtraction,
series division by the projective fibration, Kummer correction; its known
rough edges (a division that fails to terminate, closed forms that disagree
with the stepwise classes) are surfaced as diagnostics in the report rather
than hidden.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import ExactDivisionError, LaurentInt
from .motive import MotiveClass, lambda_binomial
from .macdonald import sym_power_curve

REPORT_SCHEMA = "pipeline-report/v1"


class PipelineIntegrityError(ArithmeticError):
    """Two computation paths that must agree did not."""


def omega_index(d: int) -> int:
    """Index of the last pair-moduli space in the chain of degree d."""
    return (d - 1) // 2


def range_sum(lo: int, hi: int) -> LaurentInt:
    """The telescoped sum (L^lo - L^(hi+1))/(1 - L).

    Equals L^lo + ... + L^hi for hi >= lo and zero for hi = lo-1.  For
    hi < lo-1 it is -(L^(hi+1) + ... + L^(lo-1)): flip terms past the
    midpoint of the chain subtract cells, and the telescoped value is what
    keeps the chain consistent with the closed form.
    """
    if hi >= lo:
        return LaurentInt({e: 1 for e in range(lo, hi + 1)})
    if hi == lo - 1:
        return LaurentInt()
    return LaurentInt({e: -1 for e in range(hi + 1, lo)})


def _check_genus(genus: int, minimum: int = 2) -> None:
    if not isinstance(genus, int) or genus < minimum:
        raise ValueError(f"genus must be an integer >= {minimum}, got {genus!r}")


def pw_classes(genus: int, d: int, i: int) -> tuple[MotiveClass, MotiveClass]:
    """Classes of the two flip centers at wall i of the degree-d chain.

    The plus side is a P^(d-2i+g-2)-bundle and the minus side a
    P^(i-1)-bundle, both over the i-th symmetric product of the curve.
    """
    _check_genus(genus)
    if i < 0:
        raise ValueError("wall index must be non-negative")
    base = sym_power_curve(genus, i)
    plus = base * range_sum(0, d - 2 * i + genus - 2)
    minus = base * range_sum(0, i - 1)
    return plus, minus


def pair_moduli(genus: int, d: int, i: int) -> MotiveClass:
    """Class of the i-th moduli space of pairs in the degree-d chain."""
    _check_genus(genus)
    if not 0 <= i <= omega_index(d):
        raise ValueError(
            f"pair index {i} outside 0..{omega_index(d)} for degree {d}")
    total = MotiveClass.zero(genus)
    for j in range(i + 1):
        total = total + sym_power_curve(genus, j) * range_sum(j, d + genus - 2 - 2 * j)
    return total


def n0_odd_chain(genus: int, degree: int | None = None) -> MotiveClass:
    """Odd-determinant moduli class via the flip chain.

    Uses degree 4g-3 by default; any odd degree >= 4g-3 gives the same class
    because the last pair space fibers over the bundle moduli space in
    projective spaces of dimension d-2g+1.
    """
    _check_genus(genus)
    if degree is None:
        degree = 4 * genus - 3
    if degree % 2 == 0 or degree < 4 * genus - 3:
        raise ValueError(
            f"degree must be odd and >= {4 * genus - 3}, got {degree}")
    chain = pair_moduli(genus, degree, omega_index(degree))
    return chain.exact_div(range_sum(0, degree - 2 * genus + 1))


def n0_odd_closed(genus: int) -> MotiveClass:
    """Odd-determinant moduli class from the closed binomial expression:
    ((1 + L)^(h¹) - L^g (1 + 1)^(h¹)) / ((1-L)(1-L²))."""
    _check_genus(genus)
    num = (lambda_binomial(0, 1, genus)
           - lambda_binomial(0, 0, genus) * LaurentInt.monomial(genus))
    den = (1 - LaurentInt.monomial(1)) * (1 - LaurentInt.monomial(2))
    return num.exact_div(den)


def n0_odd(genus: int) -> MotiveClass:
    """Odd-determinant moduli class, with the two computation paths compared."""
    chain = n0_odd_chain(genus)
    closed = n0_odd_closed(genus)
    if chain != closed:
        raise PipelineIntegrityError(
            f"flip-chain and closed classes disagree at genus {genus}: "
            f"{chain.render()} vs {closed.render()}")
    return chain


def kummer(genus: int) -> MotiveClass:
    """Class of the Kummer variety of the curve: the even exterior algebra,
    of rank 2^(2g-1)."""
    _check_genus(genus, minimum=1)
    return MotiveClass(genus, {a: 1 for a in range(0, 2 * genus + 1, 2)})


def ss_preimage(genus: int) -> MotiveClass:
    """Class of the preimage of the singular locus in the last pair space of
    the even chain: a P^(2g-2)-bundle over the (2g-1)-st symmetric product."""
    _check_genus(genus)
    return sym_power_curve(genus, 2 * genus - 1) * range_sum(0, 2 * genus - 2)


def m_omega_s(genus: int) -> MotiveClass:
    """Pure class of the stable-locus preimage in the last even pair space,
    by Gysin subtraction of the codimension-(g-1) semistable boundary."""
    _check_genus(genus)
    boundary = ss_preimage(genus) * LaurentInt.monomial(genus - 1)
    return pair_moduli(genus, 4 * genus - 2, 2 * genus - 2) - boundary


def n0_even_stable(genus: int, order: int) -> tuple[MotiveClass, dict[int, bool]]:
    """Stable-locus class of the even-determinant moduli space: series
    division of the pure pair class by the P^(2g-1) fibration factor.

    The flags report, per λ-component, whether the division terminated.
    """
    _check_genus(genus)
    return m_omega_s(genus).series_div(range_sum(0, 2 * genus - 1), order)


@dataclass(frozen=True)
class Stage:
    """One named entry of a pipeline report."""
    name: str
    kind: str  # "class" | "flags" | "diff" | "weight_match"
    value: object

    def to_json_dict(self) -> dict:
        out: dict = {"name": self.name, "kind": self.kind}
        if self.kind == "class":
            out["class"] = self.value.to_json_dict()
        elif self.kind == "flags":
            out["exact_by_lambda"] = {
                str(a): bool(v) for a, v in sorted(self.value.items())}
        elif self.kind == "diff":
            cut, diffs = self.value
            out["cut"] = cut
            out["diff_by_weight"] = {
                str(m): diffs[m].to_json_dict() for m in sorted(diffs)}
        elif self.kind == "weight_match":
            out["match_by_weight"] = {
                str(m): bool(v) for m, v in sorted(self.value.items())}
            out["status"] = "pass" if all(self.value.values()) else "fail"
        else:
            raise ValueError(f"unknown stage kind {self.kind!r}")
        return out


@dataclass(frozen=True)
class PipelineReport:
    genus: int
    degree: int
    order: int
    stages: tuple[Stage, ...]

    def stage(self, name: str) -> Stage:
        for st in self.stages:
            if st.name == name:
                return st
        raise KeyError(f"no stage named {name!r}")

    def to_json_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "genus": self.genus,
            "degree": self.degree,
            "order": self.order,
            "stages": [st.to_json_dict() for st in self.stages],
        }


def _weight_match(lhs: MotiveClass, rhs: MotiveClass) -> dict[int, bool]:
    weights = sorted(set(lhs.weights()) | set(rhs.weights()))
    return {m: lhs.weight_part(m) == rhs.weight_part(m) for m in weights}


def n0_even(genus: int, order: int | None = None) -> PipelineReport:
    """Run the even-determinant pipeline and assemble the full report.

    Stages: the last pair space of the degree-(4g-2) chain, the semistable
    boundary, the Gysin-pure stable pair class, the series division by the
    fibration factor with per-component exactness, the twisted Kummer term,
    the assembled class, the truncation comparison against the odd case below
    weight 2g-2, and the two closed-form comparators (diagnostic only: they
    are checked per weight, never used as the computation path).
    """
    _check_genus(genus)
    if order is None:
        order = 8 * genus
    d = 4 * genus - 2
    lef = LaurentInt.monomial(1)

    mo = pair_moduli(genus, d, 2 * genus - 2)
    ss = ss_preimage(genus)
    mos = mo - ss * LaurentInt.monomial(genus - 1)
    stable, flags = mos.series_div(range_sum(0, 2 * genus - 1), order)
    kum_twisted = kummer(genus) * LaurentInt.monomial(2 * genus - 3)
    total = stable + kum_twisted

    cut = 2 * genus - 2
    delta = total.truncate_below(cut) - n0_odd(genus).truncate_below(cut)
    diffs = {m: delta.weight_part(m) for m in delta.weights()}

    b01 = lambda_binomial(0, 1, genus)
    b00 = lambda_binomial(0, 0, genus)
    den = (1 - lef) ** 2 * (1 - lef ** 2)
    # displayed closed form for the last even pair space, cross-multiplied
    mo_rhs = (b01 * (1 - lef ** (2 * genus))
              - b00 * (LaurentInt.monomial(genus + 1)
                       * (1 + lef ** genus)
                       * (1 + LaurentInt.monomial(genus - 2))))
    mo_match = _weight_match(mo * den, mo_rhs)
    # displayed closed form for the stable-locus quotient, cross-multiplied
    kernel = (lef * (1 + lef ** genus) * (1 + LaurentInt.monomial(genus - 2))
              + LaurentInt.monomial(-1) * (1 - lef ** genus)
              * (1 - lef ** (2 * genus - 1)) * (1 - lef ** 2))
    stable_rhs = (b01 * (1 - lef ** (2 * genus))
                  - b00 * (LaurentInt.monomial(genus) * kernel))
    stable_match = _weight_match(mos * den, stable_rhs)

    stages = (
        Stage("m_omega", "class", mo),
        Stage("ss_preimage", "class", ss),
        Stage("m_omega_s", "class", mos),
        Stage("n0_even_stable", "class", stable),
        Stage("stable_division_exact", "flags", flags),
        Stage("kummer_twisted", "class", kum_twisted),
        Stage("n0_even", "class", total),
        Stage("truncation_vs_odd", "diff", (cut, diffs)),
        Stage("m_omega_closed_form", "weight_match", mo_match),
        Stage("n0_stable_closed_form", "weight_match", stable_match),
    )
    return PipelineReport(genus=genus, degree=d, order=order, stages=stages)
