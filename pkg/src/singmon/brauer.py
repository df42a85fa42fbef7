"""Brauer-type diagram monoids.

A diagram on ``r`` points per row is a tuple ``match`` of length ``2r``: indices
``0..r-1`` form the top row, ``r..2r-1`` the bottom row (primed points), and
``match[p]`` is the partner of ``p`` (``match[p] == p`` marks a singleton in
the partial versions). Colored diagrams carry a color in Z/2 per point, equal on
both ends of a block.

Products put the left factor on top: its bottom row is glued to the top row of
the right factor. Closed loops and open middle components are discarded and
counted in a ``ScalarExponents`` record.

Type B diagrams use ``2n`` points per row in the order -n..-1, 1..n and must be
invariant under negating every point.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .binrel import index_point, point_index
from .coxeter import Perm, SignedPerm
from .words import GeneratorAssignment, Word, parse_word


@dataclass(frozen=True)
class ScalarExponents:
    """Counts of removed middle components.

    ``by_color[c]`` counts closed loops whose total color is ``c``; ``open``
    counts middle paths ending in singletons.
    """

    by_color: tuple[int, int] = (0, 0)
    open: int = 0

    @property
    def closed(self) -> int:
        return sum(self.by_color)

    def __add__(self, other: "ScalarExponents") -> "ScalarExponents":
        return ScalarExponents(
            (self.by_color[0] + other.by_color[0], self.by_color[1] + other.by_color[1]),
            self.open + other.open,
        )


NO_LOOPS = ScalarExponents()


def _compose(
    am: Sequence[int], ac: Sequence[int], bm: Sequence[int], bc: Sequence[int], r: int
) -> tuple[tuple[int, ...], tuple[int, ...], ScalarExponents]:
    out = [-1] * (2 * r)
    col = [0] * (2 * r)
    seen = [False] * r

    def walk(in_a: bool, p: int) -> tuple[Optional[int], int]:
        color = 0
        while True:
            if in_a:
                q, color = am[p], color + ac[p]
                if q == p:
                    return None, color
                if q < r:
                    return q, color
                seen[q - r] = True
                in_a, p = False, q - r
            else:
                q, color = bm[p], color + bc[p]
                if q == p:
                    return None, color
                if q >= r:
                    return q, color
                seen[q] = True
                in_a, p = True, r + q

    for x in range(2 * r):
        if out[x] != -1:
            continue
        end, c = walk(True, x) if x < r else walk(False, x)
        if end is None:
            out[x], col[x] = x, 0
        else:
            out[x], out[end] = end, x
            col[x] = col[end] = c % 2

    loops = [0, 0]
    n_open = 0
    for m in range(r):
        if seen[m]:
            continue
        seen[m] = True
        color, cur, closed = 0, m, False
        while True:
            pa = r + cur
            q = am[pa]
            color += ac[pa]
            if q == pa:
                break
            nxt = q - r
            seen[nxt] = True
            q2 = bm[nxt]
            color += bc[nxt]
            if q2 == nxt:
                break
            seen[q2] = True
            if q2 == m:
                closed = True
                break
            cur = q2
        if closed:
            loops[color % 2] += 1
            continue
        # walk the other way from m to mark the rest of the open path
        cur = m
        while True:
            q = bm[cur]
            if q == cur:
                break
            seen[q] = True
            q2 = am[r + q]
            if q2 == r + q:
                break
            cur = q2 - r
            seen[cur] = True
        n_open += 1
    return tuple(out), tuple(col), ScalarExponents((loops[0], loops[1]), n_open)


def _check_involution(match: Sequence[int], fixed_ok: bool) -> None:
    for p, q in enumerate(match):
        if not 0 <= q < len(match) or match[q] != p:
            raise ValueError("match is not an involution")
        if q == p and not fixed_ok:
            raise ValueError("singleton in a Brauer diagram")


def _point_label(p: int, r: int, signed: bool) -> str:
    k = p if p < r else p - r
    name = str(index_point(r // 2, k)) if signed else str(k + 1)
    return name if p < r else name + "'"


def _blocks(match: Sequence[int]) -> list[tuple[int, ...]]:
    return [(p,) if q == p else (p, q) for p, q in enumerate(match) if q >= p]


@dataclass(frozen=True)
class BrauerDiagram:
    n: int
    match: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.match) != 2 * self.n:
            raise ValueError("wrong number of points")
        _check_involution(self.match, fixed_ok=False)

    def compose(self, other: "BrauerDiagram") -> tuple["BrauerDiagram", ScalarExponents]:
        z = (0,) * (2 * self.n)
        m, _, ex = _compose(self.match, z, other.match, z, self.n)
        return BrauerDiagram(self.n, m), ex

    def __mul__(self, other: "BrauerDiagram") -> "BrauerDiagram":
        return self.compose(other)[0]

    def blocks(self) -> list[tuple[int, ...]]:
        return _blocks(self.match)

    def labelled_blocks(self) -> list[list[str]]:
        return [[_point_label(p, self.n, False) for p in b] for b in self.blocks()]

    def through_count(self) -> int:
        return sum(1 for p in range(self.n) if self.match[p] >= self.n)


def brauer_identity(n: int) -> BrauerDiagram:
    return BrauerDiagram(n, tuple(list(range(n, 2 * n)) + list(range(n))))


def brauer_from_blocks(n: int, blocks: Sequence[Sequence[str | int]]) -> BrauerDiagram:
    """Build from blocks written with labels like ``1`` (top) and ``"2'"`` (bottom)."""
    def idx(label: str | int) -> int:
        s = str(label)
        return n + int(s[:-1]) - 1 if s.endswith("'") else int(s) - 1

    match = [-1] * (2 * n)
    for a, b in blocks:
        match[idx(a)], match[idx(b)] = idx(b), idx(a)
    return BrauerDiagram(n, tuple(match))


def perm_diagram(w: Perm) -> BrauerDiagram:
    """Top point ``w(i)`` joined to bottom point ``i'``."""
    n = w.n
    match = [0] * (2 * n)
    for i in range(1, n + 1):
        top, bot = w(i) - 1, n + i - 1
        match[top], match[bot] = bot, top
    return BrauerDiagram(n, tuple(match))


def cup_cap(n: int, i: int) -> BrauerDiagram:
    """Cup on top points i, i+1 and cap on bottom points i', (i+1)'; others vertical."""
    match = list(brauer_identity(n).match)
    a, b = i - 1, i
    match[a], match[b] = b, a
    match[n + a], match[n + b] = n + b, n + a
    return BrauerDiagram(n, tuple(match))


@lru_cache(maxsize=None)
def chi_assignment(n: int) -> GeneratorAssignment[BrauerDiagram]:
    gens = {}
    for i in range(1, n):
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        gens[i] = perm_diagram(Perm(tuple(im)))
    taus = {i: cup_cap(n, i) for i in range(1, n)}
    return GeneratorAssignment(gens, gens, taus, BrauerDiagram.__mul__, brauer_identity(n))


def chi_eval(word: Word, n: int) -> tuple[BrauerDiagram, ScalarExponents]:
    """Image of ``word`` together with the accumulated loop count."""
    asg = chi_assignment(n)
    d, ex = brauer_identity(n), NO_LOOPS
    for letter in word:
        d, e = d.compose(asg.image(letter))
        ex = ex + e
    return d, ex


def perfect_matchings(points: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    a = points[0]
    for k in range(1, len(points)):
        rest = list(points[1:k]) + list(points[k + 1:])
        for m in perfect_matchings(rest):
            yield [(a, points[k]), *m]


def involutions(points: Sequence[int]) -> Iterator[list[tuple[int, ...]]]:
    """All partitions of ``points`` into blocks of size one or two."""
    if not points:
        yield []
        return
    a, rest = points[0], list(points[1:])
    for m in involutions(rest):
        yield [(a,), *m]
    for k in range(len(rest)):
        for m in involutions(rest[:k] + rest[k + 1:]):
            yield [(a, rest[k]), *m]


def _match_from_blocks(size: int, blocks: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    match = list(range(size))
    for b in blocks:
        if len(b) == 2:
            match[b[0]], match[b[1]] = b[1], b[0]
    return tuple(match)


def all_brauer(n: int) -> list[BrauerDiagram]:
    return [BrauerDiagram(n, _match_from_blocks(2 * n, m))
            for m in perfect_matchings(list(range(2 * n)))]


def brauer_size(n: int) -> int:
    """Number of Brauer diagrams on n strands, (2n - 1)!!."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


# ------------------------------------------------------------------ partial / colored


@dataclass(frozen=True)
class ColoredPartialBrauer:
    """Partial Brauer diagram with a Z/2 color on each block of size two.

    Singletons carry color 0. With all colors 0 this is an ordinary partial
    Brauer diagram.
    """

    n: int
    match: tuple[int, ...]
    colors: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.colors:
            object.__setattr__(self, "colors", (0,) * (2 * self.n))
        if len(self.match) != 2 * self.n or len(self.colors) != 2 * self.n:
            raise ValueError("wrong number of points")
        _check_involution(self.match, fixed_ok=True)
        for p, q in enumerate(self.match):
            if self.colors[p] not in (0, 1) or self.colors[p] != self.colors[q]:
                raise ValueError("colors must be 0/1 and equal along blocks")
            if p == q and self.colors[p]:
                raise ValueError("singletons carry no color")

    def compose(self, other: "ColoredPartialBrauer") -> tuple["ColoredPartialBrauer", ScalarExponents]:
        m, c, ex = _compose(self.match, self.colors, other.match, other.colors, self.n)
        return ColoredPartialBrauer(self.n, m, c), ex

    def __mul__(self, other: "ColoredPartialBrauer") -> "ColoredPartialBrauer":
        return self.compose(other)[0]

    def blocks(self) -> list[tuple[int, ...]]:
        return _blocks(self.match)

    def labelled_blocks(self) -> list[tuple[list[str], int]]:
        return [([_point_label(p, self.n, False) for p in b], self.colors[b[0]])
                for b in self.blocks()]


def colored_identity(n: int) -> ColoredPartialBrauer:
    return ColoredPartialBrauer(n, brauer_identity(n).match)


def colored_from_blocks(n: int, blocks: Sequence[tuple[Sequence[str | int], int]]) -> ColoredPartialBrauer:
    """Blocks as (labels, color); unlisted points become singletons."""
    def idx(label: str | int) -> int:
        s = str(label)
        return n + int(s[:-1]) - 1 if s.endswith("'") else int(s) - 1

    match = list(range(2 * n))
    colors = [0] * (2 * n)
    for labels, c in blocks:
        if len(labels) == 2:
            a, b = idx(labels[0]), idx(labels[1])
            match[a], match[b] = b, a
            colors[a] = colors[b] = c
    return ColoredPartialBrauer(n, tuple(match), tuple(colors))


def all_colored_partial_brauer(n: int) -> list[ColoredPartialBrauer]:
    out = []
    for blocks in involutions(list(range(2 * n))):
        pairs = [b for b in blocks if len(b) == 2]
        match = _match_from_blocks(2 * n, blocks)
        for cs in itertools.product((0, 1), repeat=len(pairs)):
            colors = [0] * (2 * n)
            for (a, b), c in zip(pairs, cs):
                colors[a] = colors[b] = c
            out.append(ColoredPartialBrauer(n, match, tuple(colors)))
    return out


# ------------------------------------------------------------------ type B


@dataclass(frozen=True)
class BrauerBDiagram:
    """Negation-invariant Brauer diagram on the points +-1..+-n in each row."""

    n: int
    match: tuple[int, ...]

    def __post_init__(self) -> None:
        r = 2 * self.n
        if len(self.match) != 2 * r:
            raise ValueError("wrong number of points")
        _check_involution(self.match, fixed_ok=False)
        for p, q in enumerate(self.match):
            if self.match[_bar(p, r)] != _bar(q, r):
                raise ValueError("diagram is not invariant under negation")

    @property
    def r(self) -> int:
        return 2 * self.n

    def compose(self, other: "BrauerBDiagram") -> tuple["BrauerBDiagram", ScalarExponents]:
        z = (0,) * (2 * self.r)
        m, _, ex = _compose(self.match, z, other.match, z, self.r)
        return BrauerBDiagram(self.n, m), ex

    def __mul__(self, other: "BrauerBDiagram") -> "BrauerBDiagram":
        return self.compose(other)[0]

    def top(self, p: int) -> int:
        return point_index(self.n, p)

    def bottom(self, p: int) -> int:
        return self.r + point_index(self.n, p)

    def partner(self, p: int, bottom: bool = False) -> tuple[int, bool]:
        """Signed partner of a signed point; returns (point, is_bottom)."""
        q = self.match[self.bottom(p) if bottom else self.top(p)]
        if q < self.r:
            return index_point(self.n, q), False
        return index_point(self.n, q - self.r), True

    def labelled_blocks(self) -> list[list[str]]:
        return [[_point_label(p, self.r, True) for p in b] for b in _blocks(self.match)]

    def left_defect(self) -> frozenset[int]:
        return frozenset(p for p in range(1, self.n + 1) if not self.partner(p)[1])

    def right_defect(self) -> frozenset[int]:
        return frozenset(p for p in range(1, self.n + 1) if self.partner(p, True)[1])


def _bar(p: int, r: int) -> int:
    row, k = divmod(p, r)
    return row * r + (r - 1 - k)


def brauer_b_from_pairs(n: int, pairs: Sequence[tuple[str | int, str | int]],
                        complete: bool = True) -> BrauerBDiagram:
    """Build from signed labelled pairs such as ``(-1, 1)`` or ``(4, "-4'")``.

    With ``complete`` the negated copy of every pair is added.
    """
    r = 2 * n

    def idx(label: str | int) -> int:
        s = str(label)
        if s.endswith("'"):
            return r + point_index(n, int(s[:-1]))
        return point_index(n, int(s))

    match = [-1] * (2 * r)
    for a, b in pairs:
        x, y = idx(a), idx(b)
        match[x], match[y] = y, x
        if complete:
            match[_bar(x, r)], match[_bar(y, r)] = _bar(y, r), _bar(x, r)
    return BrauerBDiagram(n, tuple(match))


def brauer_b_identity(n: int) -> BrauerBDiagram:
    r = 2 * n
    return BrauerBDiagram(n, tuple(list(range(r, 2 * r)) + list(range(r))))


def signed_perm_diagram(w: SignedPerm) -> BrauerBDiagram:
    n = w.n
    pairs = [(w(p), f"{p}'") for p in range(1, n + 1)]
    return brauer_b_from_pairs(n, pairs)


def b_cup_cap(n: int, i: int) -> BrauerBDiagram:
    """Generator with label i: for i = 0 joins 1 with -1 in both rows."""
    if i == 0:
        pairs: list[tuple[str | int, str | int]] = [(-1, 1), ("-1'", "1'")]
        pairs += [(p, f"{p}'") for p in range(2, n + 1)]
        return brauer_b_from_pairs(n, pairs)
    pairs = [(i, i + 1), (f"{i}'", f"{i + 1}'")]
    pairs += [(p, f"{p}'") for p in range(1, n + 1) if p not in (i, i + 1)]
    return brauer_b_from_pairs(n, pairs)


def b_reflection(n: int, i: int) -> SignedPerm:
    im = list(range(1, n + 1))
    if i == 0:
        im[0] = -1
    else:
        im[i - 1], im[i] = im[i], im[i - 1]
    return SignedPerm(tuple(im))


@lru_cache(maxsize=None)
def chi_b_assignment(n: int) -> GeneratorAssignment[BrauerBDiagram]:
    gens = {i: signed_perm_diagram(b_reflection(n, i)) for i in range(n)}
    taus = {i: b_cup_cap(n, i) for i in range(n)}
    return GeneratorAssignment(gens, gens, taus, BrauerBDiagram.__mul__, brauer_b_identity(n))


def chi_b_eval(word: Word, n: int) -> tuple[BrauerBDiagram, ScalarExponents]:
    asg = chi_b_assignment(n)
    d, ex = brauer_b_identity(n), NO_LOOPS
    for letter in word:
        d, e = d.compose(asg.image(letter))
        ex = ex + e
    return d, ex


def all_brauer_b(n: int) -> list[BrauerBDiagram]:
    """Brute force: every perfect matching of 4n points kept if negation-invariant."""
    r = 2 * n
    out = []
    for m in perfect_matchings(list(range(2 * r))):
        match = _match_from_blocks(2 * r, m)
        if all(match[_bar(p, r)] == _bar(q, r) for p, q in enumerate(match)):
            out.append(BrauerBDiagram(n, match))
    return out


def normal_form(d: BrauerBDiagram) -> tuple[BrauerBDiagram, SignedPerm, BrauerBDiagram]:
    """Factor ``d`` as ``e_left * sigma * e_right`` (equality as diagrams).

    ``e_left`` keeps the top arcs of ``d`` and mirrors them on the bottom row;
    ``e_right`` does the same for the bottom arcs. ``sigma`` follows the through
    strands and maps the sorted right defect onto the sorted left defect with
    positive signs.
    """
    n = d.n
    left, right = sorted(d.left_defect()), sorted(d.right_defect())

    def idem(bottom: bool, defect: Sequence[int]) -> BrauerBDiagram:
        pairs: list[tuple[str | int, str | int]] = []
        for p in defect:
            q, _ = d.partner(p, bottom)
            pairs += [(p, q), (f"{p}'", f"{q}'")]
        pairs += [(p, f"{p}'") for p in range(1, n + 1) if p not in defect]
        return brauer_b_from_pairs(n, pairs)

    images = [0] * n
    for y in range(1, n + 1):
        if y in right:
            continue
        x, on_bottom = d.partner(y, True)
        assert not on_bottom
        images[y - 1] = x
    for y, x in zip(right, left):
        images[y - 1] = x
    return idem(False, left), SignedPerm(tuple(images)), idem(True, right)


# ------------------------------------------------------------------ APB isomorphism


def to_apb(d: BrauerBDiagram) -> ColoredPartialBrauer:
    """Colored partial Brauer diagram read off from the positive points of ``d``."""
    n = d.n
    match = list(range(2 * n))
    colors = [0] * (2 * n)

    def link(a: int, b: int, c: int) -> None:
        match[a], match[b] = b, a
        colors[a] = colors[b] = c

    for i in range(1, n + 1):
        q, bottom = d.partner(i)
        if bottom:
            link(i - 1, n + abs(q) - 1, 0 if q > 0 else 1)
        elif q != -i:
            link(i - 1, abs(q) - 1, 0 if q > 0 else 1)
        q, bottom = d.partner(i, True)
        if bottom and q != -i:
            link(n + i - 1, n + abs(q) - 1, 0 if q > 0 else 1)
    return ColoredPartialBrauer(n, tuple(match), tuple(colors))


def from_apb(a: ColoredPartialBrauer) -> BrauerBDiagram:
    n = a.n

    def label(p: int, sign: int) -> str | int:
        return sign * (p + 1) if p < n else f"{sign * (p - n + 1)}'"

    pairs: list[tuple[str | int, str | int]] = []
    for p, q in enumerate(a.match):
        if q == p:
            pairs.append((label(p, 1), label(p, -1)))
        elif p < q:
            pairs.append((label(p, 1), label(q, -1 if a.colors[p] else 1)))
    return brauer_b_from_pairs(n, pairs)


def redundancy_chain(i: int) -> list[Word]:
    """Chain of words showing that the three-cup relation follows from the others."""
    j = i + 1
    texts = [
        f"t{i} t{j} t{i}",
        f"t{i} t{j} s{i} s{i} t{i}",
        f"t{i} t{j} s{i} t{i}",
        f"t{i} s{j} t{i}",
        f"s{j} s{j} t{i} s{j} s{i} s{i} t{i}",
        f"s{j} s{i} s{i} s{j} t{i} s{j} s{i} t{i}",
        f"s{j} s{i} t{j} t{i}",
        f"s{j} s{j} t{i}",
        f"t{i}",
    ]
    return [parse_word(t) for t in texts]
