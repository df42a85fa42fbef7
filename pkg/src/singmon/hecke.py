"""Hecke algebra of a finite Coxeter group over Z[v, v^-1].

Normalization: ``(H_s + v)(H_s - v^-1) = 0``, so ``H_w H_s = H_ws`` when
``ws > w`` and ``H_w H_s = H_ws + (v^-1 - v) H_w`` otherwise. With this choice
``H_s + v`` is bar-invariant and is the Kazhdan-Lusztig element of ``s``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .coxeter import CoxeterGroup, Element, odd_components, reduced_word
from .laurent import ONE, V, ZERO, LaurentPoly, PhiAssignment, XPoly, parse_laurent
from .words import GeneratorAssignment, Word, evaluate

Q = V.bar() - V  # v^-1 - v


@dataclass(frozen=True)
class HeckeElt:
    """Finite sum of ``coeff * H_w``; ``terms`` maps elements to nonzero coefficients."""

    group: CoxeterGroup
    terms: tuple[tuple[Element, LaurentPoly], ...]

    @staticmethod
    def make(group: CoxeterGroup, d: Mapping[Element, LaurentPoly]) -> "HeckeElt":
        return HeckeElt(group, tuple(sorted(((w, c) for w, c in d.items() if c),
                                            key=lambda t: _order_key(t[0]))))

    def as_dict(self) -> dict[Element, LaurentPoly]:
        return dict(self.terms)

    def coeff(self, w: Element) -> LaurentPoly:
        return self.as_dict().get(w, ZERO)

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        d = self.as_dict()
        for w, c in other.terms:
            d[w] = d.get(w, ZERO) + c
        return HeckeElt.make(self.group, d)

    def __neg__(self) -> "HeckeElt":
        return HeckeElt(self.group, tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def scale(self, c: LaurentPoly) -> "HeckeElt":
        return HeckeElt.make(self.group, {w: c * x for w, x in self.terms})

    def times_gen(self, s: int) -> "HeckeElt":
        """Right multiplication by ``H_s``."""
        d: dict[Element, LaurentPoly] = {}
        for w, c in self.terms:
            ws = w.times_gen(s)
            d[ws] = d.get(ws, ZERO) + c
            if w.is_right_descent(s):
                d[w] = d.get(w, ZERO) + Q * c
        return HeckeElt.make(self.group, d)

    def __mul__(self, other: "HeckeElt") -> "HeckeElt":
        out = HeckeElt(self.group, ())
        for y, c in other.terms:
            part = self
            for s in reduced_word(y):
                part = part.times_gen(s)
            out = out + part.scale(c)
        return out

    def to_json(self) -> str:
        return json.dumps({
            "basis": "standard",
            "terms": [{"w": w.to_text(), "coeff": c.format()} for w, c in self.terms],
        }, sort_keys=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*H[{w.to_text()}]" for w, c in self.terms)


def _order_key(w: Element) -> tuple[int, list[int]]:
    rw = reduced_word(w)
    return (len(rw), rw)


class HeckeAlgebra:
    def __init__(self, group: CoxeterGroup) -> None:
        self.group = group
        self._kl: dict[Element, HeckeElt] = {}

    def zero(self) -> HeckeElt:
        return HeckeElt(self.group, ())

    def standard(self, w: Element, c: LaurentPoly = ONE) -> HeckeElt:
        return HeckeElt.make(self.group, {w: c})

    def one(self) -> HeckeElt:
        return self.standard(self.group.identity())

    def gen(self, s: int) -> HeckeElt:
        return self.standard(self.group.generator(s))

    def gen_inv(self, s: int) -> HeckeElt:
        """``H_s^-1 = H_s + (v - v^-1) H_e``."""
        return self.gen(s) - self.one().scale(Q)

    def from_json(self, text: str) -> HeckeElt:
        data = json.loads(text)
        return HeckeElt.make(self.group, {
            self.group.parse_element(t["w"]): parse_laurent(t["coeff"]) for t in data["terms"]
        })

    def bar(self, h: HeckeElt) -> HeckeElt:
        """Ring involution with ``v -> v^-1`` and ``H_s -> H_s^-1``.

        ``bar(H_w)`` is the product of ``H_s^-1`` over a reduced word of ``w``
        taken in the same order.
        """
        out = self.zero()
        for w, c in h.terms:
            img = self.one()
            for s in reduced_word(w):
                img = img * self.gen_inv(s)
            out = out + img.scale(c.bar())
        return out

    def kl(self, w: Element) -> HeckeElt:
        """Kazhdan-Lusztig basis element: bar-invariant, ``H_w`` plus vZ[v] terms."""
        if w in self._kl:
            return self._kl[w]
        rw = reduced_word(w)
        if not rw:
            res = self.one()
        else:
            s = rw[-1]
            prev = w.times_gen(s)
            res = self.kl(prev) * (self.gen(s) + self.one().scale(V))
            while True:
                bad = [(x, c) for x, c in res.terms if x != w and not c.in_positive_part()]
                if not bad:
                    break
                x, c = max(bad, key=lambda t: _order_key(t[0]))
                res = res - self.kl(x).scale(_bar_invariant_part(c))
        self._kl[w] = res
        return res

    def kl_polynomials(self, w: Element) -> dict[Element, LaurentPoly]:
        return self.kl(w).as_dict()


def _bar_invariant_part(c: LaurentPoly) -> LaurentPoly:
    """Bar-invariant polynomial agreeing with ``c`` modulo vZ[v]."""
    d: dict[int, int] = {}
    for e, a in c.terms:
        if e == 0:
            d[0] = a
        elif e < 0:
            d[e] = a
            d[-e] = a
    return LaurentPoly.from_dict(d)


def xpoly_of_gen(H: HeckeAlgebra, s: int, p: XPoly) -> HeckeElt:
    """Substitute ``x -> H_s`` (and ``x^-1 -> H_s^-1``) into ``p``."""
    out = H.zero()
    for e, c in p.terms:
        base = H.gen(s) if e >= 0 else H.gen_inv(s)
        term = H.one()
        for _ in range(abs(e)):
            term = term * base
        out = out + term.scale(c)
    return out


def upsilon_assignment(H: HeckeAlgebra, phi: PhiAssignment) -> GeneratorAssignment[HeckeElt]:
    M = H.group.matrix()
    comps = odd_components(M)
    labels = H.group.labels
    sig = {s: H.gen(s) for s in labels}
    inv = {s: H.gen_inv(s) for s in labels}
    taus = {s: xpoly_of_gen(H, s, phi[comps.component_of(s)]) for s in labels}
    return GeneratorAssignment(sig, inv, taus, HeckeElt.__mul__, H.one())


def upsilon_eval(word: Word, H: HeckeAlgebra, phi: PhiAssignment) -> HeckeElt:
    return evaluate(word, upsilon_assignment(H, phi))


def all_kl(H: HeckeAlgebra, elements: Iterable[Element] | None = None) -> dict[Element, HeckeElt]:
    return {w: H.kl(w) for w in (elements if elements is not None else H.group.elements())}
