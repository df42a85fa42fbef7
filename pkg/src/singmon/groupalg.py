"""Desingularization into the integral group algebra Z(W) and the Boolean semiring B(W).

In Z(W) a singular generator maps to ``sum_i c_i s^(i mod 2)`` where
``sum_i c_i x^i`` is the parameter of its odd component; in B(W) it maps to the
set ``{s^(i mod 2) : i in S}`` for the parameter set ``S``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping

from .coxeter import CoxeterGroup, Element, odd_components, reduced_word
from .laurent import PhiAssignment, PhiSet
from .words import GeneratorAssignment, Word, evaluate, format_word


def _key(w: Element) -> tuple[int, list[int]]:
    rw = reduced_word(w)
    return (len(rw), rw)


@dataclass(frozen=True)
class IntGroupAlgElt:
    """Element of Z(W) with nonzero integer coefficients sorted by element."""

    terms: tuple[tuple[Element, int], ...]

    @staticmethod
    def make(d: Mapping[Element, int]) -> "IntGroupAlgElt":
        return IntGroupAlgElt(tuple(sorted(((w, c) for w, c in d.items() if c),
                                           key=lambda t: _key(t[0]))))

    def __add__(self, other: "IntGroupAlgElt") -> "IntGroupAlgElt":
        d: dict[Element, int] = dict(self.terms)
        for w, c in other.terms:
            d[w] = d.get(w, 0) + c
        return IntGroupAlgElt.make(d)

    def __mul__(self, other: "IntGroupAlgElt") -> "IntGroupAlgElt":
        d: dict[Element, int] = defaultdict(int)
        for a, c in self.terms:
            for b, e in other.terms:
                d[a * b] += c * e  # type: ignore[operator]
        return IntGroupAlgElt.make(d)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{w.to_text()}]" for w, c in self.terms)


@dataclass(frozen=True)
class BoolGroupAlgElt:
    """Element of the Boolean semiring B(W): a finite set of group elements."""

    elements: frozenset

    def __add__(self, other: "BoolGroupAlgElt") -> "BoolGroupAlgElt":
        return BoolGroupAlgElt(self.elements | other.elements)

    def __mul__(self, other: "BoolGroupAlgElt") -> "BoolGroupAlgElt":
        return BoolGroupAlgElt(frozenset(a * b for a in self.elements for b in other.elements))

    def sorted(self) -> list[Element]:
        return sorted(self.elements, key=_key)

    def __str__(self) -> str:
        return "{" + ", ".join(w.to_text() for w in self.sorted()) + "}"


def delta_bar_assignment(G: CoxeterGroup, phi: PhiAssignment) -> GeneratorAssignment[IntGroupAlgElt]:
    comps = odd_components(G.matrix())
    e = G.identity()
    sig = {s: IntGroupAlgElt.make({G.generator(s): 1}) for s in G.labels}
    taus = {}
    for s in G.labels:
        d: dict[Element, int] = defaultdict(int)
        for i, c in phi[comps.component_of(s)].int_terms().items():
            d[G.generator(s) if i % 2 else e] += c
        taus[s] = IntGroupAlgElt.make(d)
    return GeneratorAssignment(sig, sig, taus, IntGroupAlgElt.__mul__, IntGroupAlgElt.make({e: 1}))


def delta_bar_eval(word: Word, G: CoxeterGroup, phi: PhiAssignment) -> IntGroupAlgElt:
    return evaluate(word, delta_bar_assignment(G, phi))


def bool_delta_assignment(G: CoxeterGroup, phi: PhiSet) -> GeneratorAssignment[BoolGroupAlgElt]:
    comps = odd_components(G.matrix())
    e = G.identity()
    sig = {s: BoolGroupAlgElt(frozenset({G.generator(s)})) for s in G.labels}
    taus = {
        s: BoolGroupAlgElt(frozenset(G.generator(s) if i % 2 else e
                                     for i in phi[comps.component_of(s)]))
        for s in G.labels
    }
    return GeneratorAssignment(sig, sig, taus, BoolGroupAlgElt.__mul__,
                               BoolGroupAlgElt(frozenset({e})))


def bool_delta_eval(word: Word, G: CoxeterGroup, phi: PhiSet) -> BoolGroupAlgElt:
    return evaluate(word, bool_delta_assignment(G, phi))


def collision_scan(words: Iterable[Word], image: Callable[[Word], Hashable]) -> list[list[str]]:
    """Group words by their image and return the groups with more than one word.

    A non-empty result exhibits distinct words with equal images; whether the
    words are equal in the monoid is not decided here.
    """
    buckets: dict[Hashable, list[str]] = defaultdict(list)
    for w in words:
        text = format_word(w)
        if text not in buckets[image(w)]:
            buckets[image(w)].append(text)
    return [ws for ws in buckets.values() if len(ws) > 1]
