"""Words in the singular Artin monoid, defining relations and evaluation.

A word is a tuple of ``Letter`` values. Text form uses the tokens ``s<i>``
(braid generator), ``S<i>`` (its inverse) and ``t<i>`` (singular generator),
separated by optional whitespace, for example ``"t1 s2 S1"``. The empty word
is written ``"e"``.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Generic, Iterable, Mapping, Sequence, TypeVar

from .coxeter import INF, CoxeterMatrix

SIGMA, SIGMA_INV, TAU = "s", "S", "t"
T = TypeVar("T")


@dataclass(frozen=True, order=True)
class Letter:
    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in (SIGMA, SIGMA_INV, TAU):
            raise ValueError(f"bad letter kind {self.kind!r}")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


Word = tuple[Letter, ...]


def sig(i: int) -> Letter:
    return Letter(SIGMA, i)


def sig_inv(i: int) -> Letter:
    return Letter(SIGMA_INV, i)


def tau(i: int) -> Letter:
    return Letter(TAU, i)


_TOKEN = re.compile(r"\s*([sSt])(\d+)\s*")


def parse_word(text: str) -> Word:
    t = text.strip()
    if t in ("", "e"):
        return ()
    out, pos = [], 0
    while pos < len(t):
        m = _TOKEN.match(t, pos)
        if not m:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        out.append(Letter(m.group(1), int(m.group(2))))
        pos = m.end()
    return tuple(out)


def format_word(w: Word) -> str:
    return " ".join(map(str, w)) if w else "e"


def w(text: str) -> Word:
    """Short alias of ``parse_word`` for tests and scripts."""
    return parse_word(text)


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    tag: str

    def __iter__(self):
        return iter((self.lhs, self.rhs))

    def __str__(self) -> str:
        return f"{self.tag}: {format_word(self.lhs)} = {format_word(self.rhs)}"


@dataclass(frozen=True)
class RelationSet:
    name: str
    relations: tuple[Relation, ...]

    def pairs(self) -> list[tuple[Word, Word]]:
        return [(r.lhs, r.rhs) for r in self.relations]

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __add__(self, other: "RelationSet") -> "RelationSet":
        return RelationSet(f"{self.name}+{other.name}", self.relations + other.relations)


def _alternating(first: int, second: int, count: int, kind: str = SIGMA) -> list[Letter]:
    return [Letter(kind, first if k % 2 == 0 else second) for k in range(count)]


def singular_relations(M: CoxeterMatrix) -> RelationSet:
    """Defining relations of the singular Artin monoid of ``M``.

    Pairs with m = inf contribute no relation.
    """
    rels: list[Relation] = []
    for s, t in M.pairs():
        m = M.m(s, t)
        if m == INF:
            continue
        m = int(m)
        rels.append(Relation(tuple(_alternating(s, t, m)), tuple(_alternating(t, s, m)),
                             f"braid({s},{t})"))
    for s in M.labels:
        for t in M.labels:
            if s == t or M.m(s, t) == INF:
                continue
            m = int(M.m(s, t))
            lhs = (tau(s), *_alternating(t, s, m - 1))
            if m % 2 == 1:
                rhs = (*_alternating(t, s, m - 1), tau(t))
                rels.append(Relation(lhs, rhs, f"mixed-odd({s},{t})"))
            else:
                rhs = (*_alternating(t, s, m - 1), tau(s))
                rels.append(Relation(lhs, rhs, f"mixed-even({s},{t})"))
    for s, t in M.pairs():
        if M.m(s, t) == 2:
            rels.append(Relation((tau(s), tau(t)), (tau(t), tau(s)), f"tau-commute({s},{t})"))
    for s in M.labels:
        rels.append(Relation((tau(s), sig(s)), (sig(s), tau(s)), f"tau-sigma({s})"))
    return RelationSet("singular", tuple(rels))


FAMILIES = ("FSTAR", "ROOK", "SIS", "FBSTAR", "BRAUER", "BRAUER_B")


def _consecutive(labels: Sequence[int]) -> list[tuple[int, int]]:
    return [(a, b) for a, b in zip(labels, labels[1:]) if b == a + 1]


def extra_relations(family: str, M: CoxeterMatrix) -> RelationSet:
    """Relations of one extra family, instantiated on the labels of ``M``.

    Only the family's own relations are returned; ``presentation`` assembles
    the full defining sets.
    """
    L = list(M.labels)
    pos = [i for i in L if i >= 1]
    rels: list[Relation] = []

    def add(lhs: str, rhs: str, tag: str) -> None:
        rels.append(Relation(parse_word(lhs), parse_word(rhs), tag))

    if family == "FSTAR":
        for i in L:
            add(f"s{i} s{i}", "e", f"involution({i})")
            add(f"t{i} t{i}", f"t{i}", f"idempotent({i})")
            add(f"t{i} s{i}", f"t{i}", f"absorb({i})")
        for i, j in _consecutive(L):
            add(f"t{i} t{j}", f"t{j} t{i}", f"commute({i},{j})")
    elif family == "ROOK":
        for i in pos:
            if i + 2 in pos:
                add(f"t{i} t{i+2}", f"t{i} t{i+1} t{i+2}", f"rook({i})")
    elif family == "SIS":
        if 0 in L and 1 in L:
            add("t0 s1 t0", "t1", "sis")
    elif family == "FBSTAR":
        if 0 in L and 1 in L:
            add("s1 t0 s1 t0", "t0 s1 t0 s1", "fb1")
            add("s0 t1 s0 t1", "t1 s0 t1 s0", "fb2")
            add("t0 t1", "s0 t1 s0 t1", "fb3")
    elif family == "BRAUER":
        for i in pos:
            add(f"s{i} s{i}", "e", f"br0({i})")
            add(f"t{i} t{i}", f"t{i}", f"br1({i})")
            add(f"t{i} s{i}", f"t{i}", f"br3l({i})")
            add(f"s{i} t{i}", f"t{i}", f"br3r({i})")
            for j in (i - 1, i + 1):
                if j in pos:
                    add(f"t{i} t{j} t{i}", f"t{i}", f"br2({i},{j})")
                    add(f"t{i} t{j} s{i}", f"t{i} s{j}", f"br4({i},{j})")
                    add(f"s{i} t{j} t{i}", f"s{j} t{i}", f"br5({i},{j})")
    elif family == "BRAUER_B":
        if 0 in L:
            add("s0 s0", "e", "Bbr-inv0")
            add("t0 t0", "t0", "Bbr0")
            add("t0 s0", "t0", "Bbr6l")
            add("s0 t0", "t0", "Bbr6r")
        if 0 in L and 1 in L:
            add("t1 t0 t1", "t1", "Bbr1")
            add("t1 s0 t1", "t1", "Bbr15")
            add("t0 t1 t0", "t0 s1 t0", "Bbr2")
            add("s1 t0 s1 t0", "t0 s1 t0 s1", "Bbr3a")
            add("t0 s1 t0 s1", "t0 s1 t0", "Bbr3b")
            add("t1 t0", "t1 s1 t0 s1", "Bbr4")
            add("t0 t1", "s1 t0 s1 t1", "Bbr5")
    else:
        raise ValueError(f"unknown relation family {family!r}")
    return RelationSet(family, tuple(rels))


PRESENTATIONS: dict[str, tuple[str, ...]] = {
    "FSTAR": ("FSTAR",),
    "ROOK": ("FSTAR", "ROOK"),
    "SIS": ("FSTAR", "ROOK", "SIS"),
    "FBSTAR": ("FSTAR", "FBSTAR"),
    "BRAUER": ("BRAUER",),
    "BRAUER_B": ("BRAUER", "BRAUER_B"),
}


def presentation(target: str, M: CoxeterMatrix) -> RelationSet:
    """Singular relations plus every extra family used by ``target``."""
    rs = singular_relations(M)
    for fam in PRESENTATIONS[target]:
        rs = rs + extra_relations(fam, M)
    return RelationSet(target, rs.relations)


class GeneratorAssignment(Generic[T]):
    """Images of the letters in a monoid with multiplication ``mul``.

    The constructor checks that each sigma image times its inverse image is the
    identity on both sides.
    """

    def __init__(
        self,
        sigma: Mapping[int, T],
        sigma_inv: Mapping[int, T],
        tau: Mapping[int, T],
        mul: Callable[[T, T], T],
        identity: T,
        eq: Callable[[T, T], bool] | None = None,
    ) -> None:
        self.sigma = dict(sigma)
        self.sigma_inv = dict(sigma_inv)
        self.tau = dict(tau)
        self.mul = mul
        self.identity = identity
        self.eq = eq or (lambda a, b: a == b)
        for i, g in self.sigma.items():
            gi = self.sigma_inv[i]
            if not (self.eq(mul(g, gi), identity) and self.eq(mul(gi, g), identity)):
                raise ValueError(f"sigma_inv({i}) is not inverse to sigma({i})")

    def image(self, letter: Letter) -> T:
        table = {SIGMA: self.sigma, SIGMA_INV: self.sigma_inv, TAU: self.tau}[letter.kind]
        try:
            return table[letter.index]
        except KeyError:
            raise ValueError(f"letter {letter} not in assignment") from None

    def __call__(self, word: Word) -> T:
        return evaluate(word, self)

    def letters(self) -> list[Letter]:
        return ([sig(i) for i in sorted(self.sigma)] + [sig_inv(i) for i in sorted(self.sigma_inv)]
                + [tau(i) for i in sorted(self.tau)])


def evaluate(word: Word, assignment: GeneratorAssignment[T]) -> T:
    """Left-to-right product of the letter images."""
    out = assignment.identity
    for letter in word:
        out = assignment.mul(out, assignment.image(letter))
    return out


def alphabet(M: CoxeterMatrix, inverses: bool = True) -> list[Letter]:
    out = [sig(i) for i in M.labels]
    if inverses:
        out += [sig_inv(i) for i in M.labels]
    return out + [tau(i) for i in M.labels]


def random_words(letters: Sequence[Letter], max_len: int, count: int, seed: int) -> list[Word]:
    """``count`` words with length uniform in 0..max_len and uniform letters."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.randint(0, max_len)
        out.append(tuple(rng.choice(letters) for _ in range(k)))
    return out


def involution_assignment(
    gens: Mapping[int, T], taus: Mapping[int, T], mul: Callable[[T, T], T], identity: T,
    eq: Callable[[T, T], bool] | None = None,
) -> GeneratorAssignment[T]:
    """Assignment where every sigma image is its own inverse."""
    return GeneratorAssignment(gens, gens, taus, mul, identity, eq)


def all_words(letters: Iterable[Letter], max_len: int) -> list[Word]:
    ls = list(letters)
    out: list[Word] = [()]
    frontier: list[Word] = [()]
    for _ in range(max_len):
        frontier = [u + (x,) for u in frontier for x in ls]
        out += frontier
    return out
