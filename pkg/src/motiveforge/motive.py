"""Classes in the Grothendieck ring spanned by exterior powers of a curve's
weight-one part, with Laurent-polynomial coefficients in the Lefschetz class L.

A class is a genus-tagged sparse map {a: LaurentInt} representing
``sum_a [Λ^a h¹C] · p_a(L)``.  Indices are reduced to the canonical range
0..g with the Jacobian duality rewrite ``λ_a = λ_{2g-a} · L^{a-g}`` for a > g,
so equality of classes is equality of the stored maps.  The term λ_a·L^b is
homogeneous of weight a + 2b and has rank C(2g, a).

Only the module structure over Z[L, L^-1] is provided.  Products λ_a·λ_b are
deliberately absent (they would need plethysm data none of the pipelines use);
multiplying two classes is a typed error unless one of them is pure Tate.
"""

from __future__ import annotations

from math import comb
from typing import NamedTuple

from .laurent import ExactDivisionError, LaurentInt

JSON_SCHEMA = "motive-class/v1"


class GenusMismatchError(ValueError):
    """Classes over curves of different genus cannot be combined."""


class UnsupportedProductError(TypeError):
    """Product would need λ·λ multiplication, which this module excludes."""


class WeightPart(NamedTuple):
    weight: int
    part: "MotiveClass"


class MotiveClass:
    __slots__ = ("_g", "_lam")

    def __init__(self, genus: int, components=None):
        """Build a class from a map λ-index -> coefficient, canonicalizing.

        Indices may run over 0..2g; anything above g is folded down with the
        duality rewrite.  Coefficients may be ints, dicts or LaurentInt.
        """
        if not isinstance(genus, int) or genus < 1:
            raise ValueError(f"genus must be a positive integer, got {genus!r}")
        self._g = genus
        acc: dict[int, LaurentInt] = {}
        for a, p in (components or {}).items():
            if not isinstance(a, int) or a < 0 or a > 2 * genus:
                raise ValueError(
                    f"λ-index {a!r} outside 0..{2 * genus} for genus {genus}")
            p = LaurentInt(p)
            if not p:
                continue
            if a > genus:
                p = p * LaurentInt.monomial(a - genus)
                a = 2 * genus - a
            acc[a] = acc.get(a, LaurentInt()) + p
        self._lam = {a: p for a, p in acc.items() if p}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, genus: int) -> "MotiveClass":
        return cls(genus)

    @classmethod
    def one(cls, genus: int) -> "MotiveClass":
        return cls(genus, {0: 1})

    @classmethod
    def tate(cls, genus: int, exp: int, coeff: int = 1) -> "MotiveClass":
        """The class coeff·L^exp."""
        return cls(genus, {0: LaurentInt.monomial(exp, coeff)})

    @classmethod
    def lam(cls, genus: int, a: int, scalar=1) -> "MotiveClass":
        """The class λ_a times a Tate polynomial."""
        return cls(genus, {a: LaurentInt(scalar)})

    # -- inspection -----------------------------------------------------------

    @property
    def genus(self) -> int:
        return self._g

    def components(self) -> dict[int, LaurentInt]:
        """Copy of the canonical λ-index -> coefficient map."""
        return dict(self._lam)

    def component(self, a: int) -> LaurentInt:
        return self._lam.get(a, LaurentInt())

    def lambda_indices(self) -> list[int]:
        return sorted(self._lam)

    def is_pure_tate(self) -> bool:
        return set(self._lam) <= {0}

    def tate_scalar(self) -> LaurentInt:
        """The λ₀ coefficient of a pure Tate class."""
        if not self.is_pure_tate():
            raise UnsupportedProductError(
                "class is not pure Tate: " + self.render())
        return self.component(0)

    def rank(self) -> int:
        return sum(comb(2 * self._g, a) * p.evaluate(1)
                   for a, p in self._lam.items())

    def __bool__(self) -> bool:
        return bool(self._lam)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MotiveClass):
            return NotImplemented
        return self._g == other._g and self._lam == other._lam

    __hash__ = None

    def __repr__(self) -> str:
        return f"MotiveClass(g={self._g}, '{self.render()}')"

    # -- module structure -------------------------------------------------------

    def _require_same_genus(self, other: "MotiveClass") -> None:
        if self._g != other._g:
            raise GenusMismatchError(
                f"genus mismatch: {self._g} vs {other._g}")

    def __add__(self, other: "MotiveClass") -> "MotiveClass":
        if not isinstance(other, MotiveClass):
            return NotImplemented
        self._require_same_genus(other)
        out = dict(self._lam)
        for a, p in other._lam.items():
            out[a] = out.get(a, LaurentInt()) + p
        return MotiveClass(self._g, out)

    def __neg__(self) -> "MotiveClass":
        return MotiveClass(self._g, {a: -p for a, p in self._lam.items()})

    def __sub__(self, other: "MotiveClass") -> "MotiveClass":
        if not isinstance(other, MotiveClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "MotiveClass":
        if isinstance(other, MotiveClass):
            self._require_same_genus(other)
            if other.is_pure_tate():
                other = other.component(0)
            elif self.is_pure_tate():
                other, self = self.component(0), other
            else:
                raise UnsupportedProductError(
                    "product of two classes with exterior parts needs λ·λ "
                    "multiplication, which is not defined here")
        if isinstance(other, int):
            other = LaurentInt(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return MotiveClass(
            self._g, {a: p * other for a, p in self._lam.items()})

    __rmul__ = __mul__

    # -- twists, duality, weights -------------------------------------------------

    def twist(self, n: int) -> "MotiveClass":
        """Tate twist by (n): multiply by L^(-n), shifting weights by -2n."""
        return self * LaurentInt.monomial(-n)

    def dual(self) -> "MotiveClass":
        """Dualise: λ_a·L^b goes to λ_a·L^(-a-b)."""
        return MotiveClass(self._g, {
            a: p.scale_exponents(-1) * LaurentInt.monomial(-a)
            for a, p in self._lam.items()})

    def weight_part(self, m: int) -> "MotiveClass":
        """The terms λ_a·L^b with a + 2b = m."""
        out = {}
        for a, p in self._lam.items():
            picked = {e: c for e, c in p.items() if a + 2 * e == m}
            if picked:
                out[a] = LaurentInt(picked)
        return MotiveClass(self._g, out)

    def weights(self) -> list[int]:
        """Sorted weights with a nonzero homogeneous part."""
        seen = set()
        for a, p in self._lam.items():
            for e, _ in p.items():
                seen.add(a + 2 * e)
        return sorted(seen)

    def weight_decomposition(self) -> list[WeightPart]:
        return [WeightPart(m, self.weight_part(m)) for m in self.weights()]

    def max_weight(self) -> int | None:
        ws = self.weights()
        return ws[-1] if ws else None

    def min_weight(self) -> int | None:
        ws = self.weights()
        return ws[0] if ws else None

    def truncate_below(self, m: int) -> "MotiveClass":
        """Keep the weight parts strictly below m."""
        out = {}
        for a, p in self._lam.items():
            picked = {e: c for e, c in p.items() if a + 2 * e < m}
            if picked:
                out[a] = LaurentInt(picked)
        return MotiveClass(self._g, out)

    # -- division ------------------------------------------------------------------

    def exact_div(self, p) -> "MotiveClass":
        """Divide every λ-component exactly by a Tate polynomial."""
        out = {}
        for a, comp in sorted(self._lam.items()):
            try:
                out[a] = comp.exact_div(p)
            except ExactDivisionError as exc:
                raise ExactDivisionError(
                    f"non-exact division in λ{a} component: {exc}",
                    remainder=exc.remainder, lam=a) from None
        return MotiveClass(self._g, out)

    def series_div(self, p, order: int) -> tuple["MotiveClass", dict[int, bool]]:
        """Divide componentwise as a series in L up to the given exponent.

        Returns the truncated quotient and, per λ-index, whether that
        component's division terminated (then it agrees with exact_div).
        """
        out = {}
        flags: dict[int, bool] = {}
        for a, comp in sorted(self._lam.items()):
            q, exact = comp.series_div(p, order)
            flags[a] = exact
            if q:
                out[a] = q
        return MotiveClass(self._g, out), flags

    # -- presentation and interchange -------------------------------------------------

    def render(self) -> str:
        if not self._lam:
            return "0"
        chunks: list[tuple[bool, str]] = []
        for a in sorted(self._lam):
            p = self._lam[a]
            if a == 0:
                for e, c in p.items():
                    chunks.append((c < 0, _monomial_text(abs(c), e)))
            else:
                terms = p.items()
                if len(terms) == 1 and abs(terms[0][1]) == 1:
                    e, c = terms[0]
                    body = f"λ{a}" if e == 0 else f"λ{a}·{_symbol_text(e)}"
                    chunks.append((c < 0, body))
                else:
                    chunks.append((False, f"λ{a}·({p.render()})"))
        parts = []
        for negative, body in chunks:
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "schema": JSON_SCHEMA,
            "genus": self._g,
            "lambda": {str(a): self._lam[a].to_coeff_json()
                       for a in sorted(self._lam)},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MotiveClass":
        if not isinstance(data, dict) or data.get("schema") != JSON_SCHEMA:
            raise ValueError(f"expected a {JSON_SCHEMA} record")
        genus = data.get("genus")
        raw = data.get("lambda", {})
        try:
            components = {int(a): LaurentInt.from_coeff_json(p)
                          for a, p in raw.items()}
        except (TypeError, ValueError, AttributeError) as exc:
            raise ValueError(f"malformed lambda map: {raw!r}") from exc
        return cls(genus, components)


def _symbol_text(e: int) -> str:
    return "L" if e == 1 else f"L^{e}"


def _monomial_text(mag: int, e: int) -> str:
    if e == 0:
        return str(mag)
    sym = _symbol_text(e)
    return sym if mag == 1 else f"{mag}·{sym}"


def canonicalize(raw, genus: int) -> MotiveClass:
    """Fold a λ-index map over 0..2g into the canonical 0..g range."""
    return MotiveClass(genus, raw)


def lambda_binomial(exp_a: int, exp_b: int, genus: int) -> MotiveClass:
    """The Newton binomial (A+B)^(h¹C) with A = L^exp_a, B = L^exp_b.

    Expands to ``sum_a λ_a · A^(2g-a) · B^a`` and canonicalizes.  Swapping the
    arguments is NOT symmetric; instead the two orders are related by
    ``(A+B)^M = L^-g · (B·L + A)^M``.
    """
    if not isinstance(genus, int) or genus < 1:
        raise ValueError(f"genus must be a positive integer, got {genus!r}")
    raw = {a: LaurentInt.monomial(exp_a * (2 * genus - a) + exp_b * a)
           for a in range(2 * genus + 1)}
    return MotiveClass(genus, raw)
