"""Exact integer Laurent polynomials in a single symbol.

A polynomial is a sparse map {exponent: coefficient}.  Exponents may be
negative, coefficients are Python ints (so nothing ever overflows), and zero
coefficients are never stored.  Values are treated as immutable: every
operation returns a fresh LaurentInt and instances are safe to share.

Division comes in two flavours.  ``exact_div`` performs long division from the
lowest exponent and fails loudly, carrying the remainder, when the quotient is
not an integer Laurent polynomial.  ``series_div`` expands ``self/other`` as a
power series in the symbol up to a requested exponent, which only needs the
divisor's bottom coefficient to be a unit.
"""

from __future__ import annotations

from fractions import Fraction


class ExactDivisionError(ArithmeticError):
    """A quotient that was required to be exact left a remainder."""

    def __init__(self, message: str, remainder=None, lam: int | None = None):
        super().__init__(message)
        self.remainder = remainder
        self.lam = lam


class DivisorUnitError(ValueError):
    """Series division needs a divisor whose lowest coefficient is +1 or -1."""


class LaurentInt:
    __slots__ = ("_c",)

    def __init__(self, value: "int | dict[int, int] | LaurentInt" = 0):
        if isinstance(value, LaurentInt):
            self._c = value._c  # never mutated, safe to share
        elif isinstance(value, int):
            self._c = {0: value} if value else {}
        elif isinstance(value, dict):
            for e, c in value.items():
                if not isinstance(e, int) or not isinstance(c, int):
                    raise TypeError("exponents and coefficients must be ints")
            self._c = {e: c for e, c in value.items() if c}
        else:
            raise TypeError(f"cannot build a LaurentInt from {type(value).__name__}")

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentInt":
        return cls({exp: coeff})

    # -- inspection ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._c)

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self) -> list[tuple[int, int]]:
        """Terms as (exponent, coefficient), lowest exponent first."""
        return sorted(self._c.items())

    @property
    def min_exp(self) -> int | None:
        return min(self._c) if self._c else None

    @property
    def max_exp(self) -> int | None:
        return max(self._c) if self._c else None

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentInt(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._c == other._c

    __hash__ = None  # sparse-map values; not usable as dict keys

    def __repr__(self) -> str:
        return f"LaurentInt('{self.render()}')"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "LaurentInt":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentInt(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentInt":
        return LaurentInt({e: -c for e, c in self._c.items()})

    def __sub__(self, other) -> "LaurentInt":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentInt":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentInt":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentInt(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentInt":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = LaurentInt(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_exponents(self, k: int) -> "LaurentInt":
        """Substitute the symbol by its k-th power (k nonzero)."""
        if k == 0:
            raise ValueError("exponent scale must be nonzero")
        return LaurentInt({e * k: c for e, c in self._c.items()})

    def evaluate(self, value: int):
        """Evaluate at an integer; exact, returns an int when it is one."""
        total = Fraction(0)
        for e, c in self._c.items():
            total += c * Fraction(value) ** e
        return int(total) if total.denominator == 1 else total

    # -- division -----------------------------------------------------------

    def exact_div(self, other) -> "LaurentInt":
        """Long division from the lowest exponent; the remainder must vanish."""
        other = _coerce(other)
        if other is NotImplemented:
            raise TypeError("divisor must be a LaurentInt or int")
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentInt()
        bound = self.max_exp - other.max_exp  # top exponent of any exact quotient
        lo = other.min_exp
        unit = other._c[lo]
        rem = dict(self._c)
        quo: dict[int, int] = {}
        while rem:
            e = min(rem)
            c = rem[e]
            if c % unit:
                raise ExactDivisionError(
                    f"non-exact division: coefficient {c} at exponent {e} not "
                    f"divisible by {unit}", remainder=LaurentInt(rem))
            qe = e - lo
            if qe > bound:
                raise ExactDivisionError(
                    "non-exact division: remainder "
                    f"{LaurentInt(rem).render()}", remainder=LaurentInt(rem))
            t = c // unit
            quo[qe] = t
            for de, dc in other._c.items():
                ee = qe + de
                s = rem.get(ee, 0) - t * dc
                if s:
                    rem[ee] = s
                else:
                    rem.pop(ee, None)
        return LaurentInt(quo)

    def series_div(self, other, order: int) -> tuple["LaurentInt", bool]:
        """Expand self/other as a series up to the given exponent.

        Returns (quotient, exact): exact is True when the remainder vanished
        within the requested order, in which case the quotient equals
        ``exact_div``; otherwise the division did not terminate at this order.
        """
        other = _coerce(other)
        if other is NotImplemented:
            raise TypeError("divisor must be a LaurentInt or int")
        if order < 0:
            raise ValueError("order must be non-negative")
        if not other:
            raise DivisorUnitError("series division by zero")
        lo = other.min_exp
        unit = other._c[lo]
        if unit not in (1, -1):
            raise DivisorUnitError(
                f"series division needs a unit bottom coefficient, got {unit}")
        if not self:
            return LaurentInt(), True
        rem = dict(self._c)
        quo: dict[int, int] = {}
        while rem:
            e = min(rem)
            qe = e - lo
            if qe > order:
                return LaurentInt(quo), False
            t = rem[e] * unit  # unit is +-1, so this is exact division by it
            quo[qe] = t
            for de, dc in other._c.items():
                ee = qe + de
                s = rem.get(ee, 0) - t * dc
                if s:
                    rem[ee] = s
                else:
                    rem.pop(ee, None)
        return LaurentInt(quo), True

    # -- presentation and interchange ----------------------------------------

    def render(self, symbol: str = "L") -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                sym = symbol if e == 1 else f"{symbol}^{e}"
                body = sym if mag == 1 else f"{mag}·{sym}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_coeff_json(self) -> dict[str, int]:
        """Coefficient map with decimal string keys, lowest exponent first."""
        return {str(e): c for e, c in self.items()}

    @classmethod
    def from_coeff_json(cls, data: dict) -> "LaurentInt":
        try:
            coeffs = {int(e): int(c) for e, c in data.items()}
        except (TypeError, ValueError, AttributeError) as exc:
            raise ValueError(f"malformed coefficient map: {data!r}") from exc
        return cls(coeffs)


def _coerce(value) -> "LaurentInt":
    if isinstance(value, LaurentInt):
        return value
    if isinstance(value, int):
        return LaurentInt(value)
    return NotImplemented


#: the Lefschetz symbol itself, for building polynomials by arithmetic
L = LaurentInt.monomial(1)


def lpow(exp: int, coeff: int = 1) -> LaurentInt:
    """Shorthand for a single monomial coeff·L^exp."""
    return LaurentInt.monomial(exp, coeff)
