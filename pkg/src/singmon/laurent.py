"""Laurent polynomials over the integers and desingularization parameters.

``LaurentPoly`` is an element of Z[v, v^-1]. ``XPoly`` is a Laurent polynomial
in a second variable ``x`` whose coefficients are ``LaurentPoly`` values; it is
the value type of a desingularization parameter assigned to an odd component.
"""
from __future__ import annotations

import re
from fractions import Fraction
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


def _clean(terms: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = {}
    for e, c in terms:
        acc[e] = acc.get(e, 0) + c
    return tuple(sorted((e, c) for e, c in acc.items() if c != 0))


@dataclass(frozen=True)
class LaurentPoly:
    """Sparse integer Laurent polynomial; ``terms`` is sorted (exponent, coeff)."""

    terms: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def from_dict(d: Mapping[int, int]) -> "LaurentPoly":
        return LaurentPoly(_clean(d.items()))

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly(_clean([(0, c)]))

    @staticmethod
    def monomial(e: int, c: int = 1) -> "LaurentPoly":
        return LaurentPoly(_clean([(e, c)]))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def coeff(self, e: int) -> int:
        return dict(self.terms).get(e, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms)

    def _coerce(self, other: object) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "LaurentPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return LaurentPoly(_clean(self.terms + o.terms))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: object) -> "LaurentPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: object) -> "LaurentPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return LaurentPoly(
            _clean((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in o.terms)
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError("only unit monomials have negative powers")
            e, c = self.terms[0]
            return LaurentPoly.monomial(e * k, c**k if k % 2 == 0 else c)
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def bar(self) -> "LaurentPoly":
        """The ring involution v -> v^-1."""
        return LaurentPoly(_clean((-e, c) for e, c in self.terms))

    def in_positive_part(self) -> bool:
        """True iff every exponent is at least 1, i.e. the value lies in vZ[v]."""
        return all(e >= 1 for e, _ in self.terms)

    def evaluate(self, value: int) -> Fraction:
        return sum(Fraction(value) ** e * c for e, c in self.terms)

    def format(self, var: str = "v") -> str:
        return format_terms(self.terms, var)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"


def format_terms(terms: Iterable[tuple[int, int]], var: str) -> str:
    parts: list[tuple[str, str]] = []
    for e, c in terms:
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


V = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()

_FACTOR = re.compile(r"^(?:(\d+)|([a-z])(?:\^\(?(-?\d+)\)?)?)$")


def _parse_terms(text: str) -> list[tuple[int, dict[str, int]]]:
    """Split ``text`` into (coefficient, {variable: exponent}) monomials."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    # Protect negative exponents so the term splitter does not see them.
    s = re.sub(r"\^\(?-(\d+)\)?", r"^~\1", s)
    s = re.sub(r"(?<=[\d a-z])(?=[a-z])", "*", s)  # implicit products: 3x, vx
    if s[0] not in "+-":
        s = "+" + s
    out: list[tuple[int, dict[str, int]]] = []
    pos = 0
    for m in re.finditer(r"([+-])([^+-]+)", s):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = sign
        exps: dict[str, int] = {}
        for factor in m.group(2).replace("~", "-").split("*"):
            fm = _FACTOR.match(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if fm.group(1) is not None:
                coeff *= int(fm.group(1))
            else:
                var = fm.group(2)
                exps[var] = exps.get(var, 0) + int(fm.group(3) or 1)
        out.append((coeff, exps))
    if pos != len(s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return out


def parse_laurent(text: str, var: str = "v") -> LaurentPoly:
    """Parse text such as ``"v^-1 + 2*v^2 - 3"``; ``x`` is accepted as a synonym."""
    terms: list[tuple[int, int]] = []
    for coeff, exps in _parse_terms(text):
        extra = set(exps) - {var, "x", "v"}
        if extra or len(exps) > 1:
            raise ValueError(f"unexpected variables {sorted(exps)} in {text!r}")
        terms.append((sum(exps.values()), coeff))
    return LaurentPoly(_clean(terms))


@dataclass(frozen=True)
class XPoly:
    """Laurent polynomial in ``x`` with coefficients in Z[v, v^-1].

    ``terms`` is sorted by x-exponent; zero coefficients are dropped.
    """

    terms: tuple[tuple[int, LaurentPoly], ...] = ()

    @staticmethod
    def from_dict(d: Mapping[int, LaurentPoly]) -> "XPoly":
        return XPoly(tuple(sorted((e, c) for e, c in d.items() if c)))

    @staticmethod
    def from_ints(d: Mapping[int, int]) -> "XPoly":
        return XPoly.from_dict({e: LaurentPoly.const(c) for e, c in d.items()})

    def is_integral(self) -> bool:
        """True iff every coefficient is a constant integer (no ``v``)."""
        return all(all(e == 0 for e, _ in c.terms) for _, c in self.terms)

    def int_terms(self) -> dict[int, int]:
        if not self.is_integral():
            raise ValueError(f"{self} has coefficients involving v")
        return {e: c.coeff(0) for e, c in self.terms}

    def __str__(self) -> str:
        """Fully expanded text that ``parse_xpoly`` reads back."""
        out = ""
        for e, c in self.terms:
            for ve, a in c.terms:
                factors = [f for f in (_mono("v", ve), _mono("x", e)) if f]
                if abs(a) != 1 or not factors:
                    factors.insert(0, str(abs(a)))
                body = "*".join(factors)
                if not out:
                    out = ("-" if a < 0 else "") + body
                else:
                    out += (" - " if a < 0 else " + ") + body
        return out or "0"


def _mono(var: str, e: int) -> str:
    return "" if e == 0 else (var if e == 1 else f"{var}^{e}")


def parse_xpoly(text: str) -> XPoly:
    """Parse a two-variable Laurent polynomial such as ``"v + x"`` or ``"x - x^-1"``."""
    acc: dict[int, LaurentPoly] = {}
    for coeff, exps in _parse_terms(text):
        if set(exps) - {"x", "v"}:
            raise ValueError(f"unexpected variables {sorted(exps)} in {text!r}")
        ex = exps.get("x", 0)
        acc[ex] = acc.get(ex, ZERO) + LaurentPoly.monomial(exps.get("v", 0), coeff)
    return XPoly.from_dict(acc)


@dataclass(frozen=True)
class PhiAssignment:
    """Assignment of an ``XPoly`` to each odd component (by component index)."""

    values: tuple[XPoly, ...]

    def __getitem__(self, k: int) -> XPoly:
        return self.values[k]

    @staticmethod
    def uniform(p: XPoly | str, n_components: int) -> "PhiAssignment":
        if isinstance(p, str):
            p = parse_xpoly(p)
        return PhiAssignment((p,) * n_components)


@dataclass(frozen=True)
class PhiSet:
    """Assignment of a finite set of integers to each odd component."""

    values: tuple[frozenset[int], ...]

    def __getitem__(self, k: int) -> frozenset[int]:
        return self.values[k]

    @staticmethod
    def uniform(s: Iterable[int], n_components: int) -> "PhiSet":
        return PhiSet((frozenset(s),) * n_components)


def parse_phi_set(text: str) -> frozenset[int]:
    """Parse ``"{0,1}"`` or ``"0,1"`` into a set of integers."""
    body = text.strip().strip("{}").strip()
    if not body:
        return frozenset()
    return frozenset(int(tok) for tok in body.split(","))
