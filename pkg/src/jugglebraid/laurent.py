"""Integer Laurent polynomials in one variable (the Kauffman variable ``A``)."""

from __future__ import annotations

import re
from typing import Mapping


class LaurentPoly:
    """Immutable ``{exponent: coefficient}`` map with no zero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def degree_span(self):
        if not self._terms:
            return None
        keys = list(self._terms)
        return keys[0], keys[-1]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPoly({e * k: c ** (-k)})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``A**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> "LaurentPoly":
        """Substitute ``A -> 1/A``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def divmod(self, divisor: "LaurentPoly"):
        """Exact long division from the top; returns ``(quotient, remainder)``."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        dlow, dhigh = divisor.degree_span()
        lead = divisor._terms[dhigh]
        quot = {}
        while rem and max(rem) - min(rem) >= dhigh - dlow:
            top = max(rem)
            c = rem[top]
            if c % lead:
                break
            q_e, q_c = top - dhigh, c // lead
            quot[q_e] = q_c
            for e, dc in divisor._terms.items():
                k = e + q_e
                rem[k] = rem.get(k, 0) - q_c * dc
                if rem[k] == 0:
                    del rem[k]
        return LaurentPoly(quot), LaurentPoly(rem)

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    def evaluate(self, x):
        return sum(c * x**e for e, c in self._terms.items())

    def to_t_string(self) -> str:
        """Render in ``q = A^-2`` so that ``t = q^2``; exponents are integers."""
        parts = {}
        for e, c in self._terms.items():
            if e % 2:
                return "(odd A-power; no q form)"
            parts[-e // 2] = c
        return _render(dict(sorted(parts.items(), reverse=True)), "q")

    def serialize(self) -> str:
        """Sorted ``coef*A^exp`` terms joined by ``+``; ``0`` when empty."""
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*A^{e}" for e, c in self._terms.items())

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return cls()
        terms = {}
        for part in text.split("+"):
            m = re.fullmatch(r"\s*(-?\d+)\*A\^(-?\d+)\s*", part)
            if not m:
                raise ValueError(f"bad polynomial term {part!r}")
            c, e = int(m.group(1)), int(m.group(2))
            terms[e] = terms.get(e, 0) + c
        return cls(terms)

    def __str__(self):
        return _render(dict(sorted(self._terms.items(), reverse=True)), "A")

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"


def _render(terms, var):
    if not terms:
        return "0"
    out = []
    for e, c in terms.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        out.append((sign, body))
    first_sign, first_body = out[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


A = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
DELTA = LaurentPoly({2: -1, -2: -1})
