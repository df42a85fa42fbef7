"""Coxeter matrices, odd components and the finite groups of types A, B, I2.

Conventions: type A with parameter ``n`` is the symmetric group S_n with simple
reflections labelled 1..n-1; type B with parameter ``n`` is the signed
permutation group on +-{1..n} with labels 0..n-1 (label 0 flips the sign of 1);
type I2(m) is the dihedral group of order 2m with labels 1 and 2.

Products compose right to left: ``(a * b)(i) == a(b(i))``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

INF = math.inf
Entry = Union[int, float]


@dataclass(frozen=True)
class CoxeterMatrix:
    labels: tuple[int, ...]
    entries: tuple[tuple[Entry, ...], ...]

    def __post_init__(self) -> None:
        k = len(self.labels)
        if len(set(self.labels)) != k:
            raise ValueError("duplicate labels")
        if len(self.entries) != k or any(len(r) != k for r in self.entries):
            raise ValueError("matrix shape does not match labels")
        for i in range(k):
            if self.entries[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(k):
                a = self.entries[i][j]
                if a != self.entries[j][i]:
                    raise ValueError("matrix must be symmetric")
                if i != j and not (a == INF or (isinstance(a, int) and a >= 2)):
                    raise ValueError(f"off-diagonal entry {a!r} must be >= 2 or inf")

    def index(self, s: int) -> int:
        return self.labels.index(s)

    def m(self, s: int, t: int) -> Entry:
        return self.entries[self.index(s)][self.index(t)]

    def pairs(self) -> list[tuple[int, int]]:
        """Unordered pairs s < t (in label order)."""
        ls = self.labels
        return [(ls[i], ls[j]) for i in range(len(ls)) for j in range(i + 1, len(ls))]

    def graph_edges(self) -> list[tuple[int, int]]:
        return [(s, t) for s, t in self.pairs() if self.m(s, t) > 2]

    def odd_edges(self) -> list[tuple[int, int]]:
        return [(s, t) for s, t in self.pairs() if _is_odd(self.m(s, t))]

    def to_text(self) -> str:
        return "\n".join(
            " ".join("inf" if a == INF else str(a) for a in row) for row in self.entries
        )


def _is_odd(a: Entry) -> bool:
    return a != INF and int(a) % 2 == 1 and a > 1


@dataclass(frozen=True)
class OddComponents:
    """Connected components of the odd Coxeter graph, ordered by smallest label."""

    components: tuple[tuple[int, ...], ...]

    def component_of(self, s: int) -> int:
        for k, comp in enumerate(self.components):
            if s in comp:
                return k
        raise KeyError(s)

    def __len__(self) -> int:
        return len(self.components)


def odd_components(M: CoxeterMatrix) -> OddComponents:
    parent = {s: s for s in M.labels}

    def find(s: int) -> int:
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    for s, t in M.odd_edges():
        parent[find(s)] = find(t)
    groups: dict[int, list[int]] = {}
    for s in M.labels:
        groups.setdefault(find(s), []).append(s)
    comps = sorted((tuple(sorted(g, key=M.labels.index)) for g in groups.values()),
                   key=lambda c: M.labels.index(c[0]))
    return OddComponents(tuple(comps))


def standard_matrix(family: str, n: int) -> CoxeterMatrix:
    """Coxeter matrix of type A (S_n), B (rank n) or I2 (with n playing m)."""
    family = family.upper()
    if family == "A":
        if n < 2:
            raise ValueError("type A needs n >= 2")
        labels = tuple(range(1, n))
    elif family == "B":
        if n < 2:
            raise ValueError("type B needs n >= 2")
        labels = tuple(range(n))
    elif family == "I2":
        if n != INF and n < 2:
            raise ValueError("I2(m) needs m >= 2")
        return CoxeterMatrix((1, 2), ((1, n), (n, 1)))
    else:
        raise ValueError(f"unknown family {family!r}")
    k = len(labels)
    rows = []
    for i in range(k):
        row: list[Entry] = []
        for j in range(k):
            if i == j:
                row.append(1)
            elif abs(i - j) == 1:
                row.append(4 if family == "B" and {i, j} == {0, 1} else 3)
            else:
                row.append(2)
        rows.append(tuple(row))
    return CoxeterMatrix(labels, tuple(rows))


def parse_coxeter(text: str) -> CoxeterMatrix:
    """Parse ``"type=A n=4"``, ``"type=I2 m=5"`` or an integer matrix (``inf`` allowed)."""
    s = text.strip()
    if s.startswith("type="):
        kv = dict(tok.split("=", 1) for tok in s.split())
        fam = kv["type"]
        size = kv.get("n", kv.get("m"))
        if size is None:
            raise ValueError("missing n= or m=")
        return standard_matrix(fam, INF if size == "inf" else int(size))
    rows = [r for r in (line.strip() for line in s.replace(";", "\n").splitlines()) if r]
    entries = tuple(
        tuple(INF if tok == "inf" else int(tok) for tok in r.replace(",", " ").split())
        for r in rows
    )
    return CoxeterMatrix(tuple(range(1, len(entries) + 1)), entries)


# ---------------------------------------------------------------- elements


@dataclass(frozen=True, order=True)
class Perm:
    """Permutation of {1..n} in one-line notation."""

    images: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, w in enumerate(self.images, 1):
            inv[w - 1] = i
        return Perm(tuple(inv))

    def is_right_descent(self, s: int) -> bool:
        return self.images[s - 1] > self.images[s]

    def times_gen(self, s: int) -> "Perm":
        im = list(self.images)
        im[s - 1], im[s] = im[s], im[s - 1]
        return Perm(tuple(im))

    def labels(self) -> range:
        return range(1, self.n)

    def to_text(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


@dataclass(frozen=True, order=True)
class SignedPerm:
    """Signed permutation: ``images[i-1] = w(i)``; ``w(-i) = -w(i)``."""

    images: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        return SignedPerm(tuple(self(j) for j in other.images))

    def inverse(self) -> "SignedPerm":
        inv = [0] * self.n
        for i, w in enumerate(self.images, 1):
            inv[abs(w) - 1] = i if w > 0 else -i
        return SignedPerm(tuple(inv))

    def is_right_descent(self, s: int) -> bool:
        if s == 0:
            return self.images[0] < 0
        return self.images[s - 1] > self.images[s]

    def times_gen(self, s: int) -> "SignedPerm":
        im = list(self.images)
        if s == 0:
            im[0] = -im[0]
        else:
            im[s - 1], im[s] = im[s], im[s - 1]
        return SignedPerm(tuple(im))

    def labels(self) -> range:
        return range(self.n)

    def to_text(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


@dataclass(frozen=True, order=True)
class Dihedral:
    """Element of I2(m) stored as an alternating reduced word.

    ``length`` is in 0..m and ``lead`` (1 or 2) is the first letter of the
    word; the identity has lead 0 and the longest element is stored with lead 1.
    """

    m: int
    length: int
    lead: int

    def word(self) -> list[int]:
        out, cur = [], self.lead
        for _ in range(self.length):
            out.append(cur)
            cur = 3 - cur
        return out

    def times_gen(self, s: int) -> "Dihedral":
        L, m = self.length, self.m
        if L == 0:
            return _dihedral(m, 1, s)
        if L == m:
            # pick the reduced expression ending in s and drop that letter
            for lead in (1, 2):
                if Dihedral(m, m, lead).word()[-1] == s:
                    return _dihedral(m, m - 1, lead)
        last = self.word()[-1]
        if last == s:
            return _dihedral(m, L - 1, self.lead)
        return _dihedral(m, L + 1, self.lead)

    def __mul__(self, other: "Dihedral") -> "Dihedral":
        out = self
        for s in other.word():
            out = out.times_gen(s)
        return out

    def inverse(self) -> "Dihedral":
        w = self.word()
        return _dihedral(self.m, self.length, w[-1] if w else 0)

    def is_right_descent(self, s: int) -> bool:
        return self.times_gen(s).length < self.length

    def labels(self) -> tuple[int, int]:
        return (1, 2)

    def to_text(self) -> str:
        return "".join(f"s{s}" for s in self.word()) or "e"


def _dihedral(m: int, length: int, lead: int) -> Dihedral:
    if length == 0:
        return Dihedral(m, 0, 0)
    if length == m:
        return Dihedral(m, m, 1)
    return Dihedral(m, length, lead)


Element = Union[Perm, SignedPerm, Dihedral]


def length(w: Element) -> int:
    if isinstance(w, Dihedral):
        return w.length
    return len(reduced_word(w))


def is_right_descent(w: Element, s: int) -> bool:
    return w.is_right_descent(s)


def reduced_word(w: Element) -> list[int]:
    """Reduced word obtained by repeatedly stripping the smallest right descent."""
    if isinstance(w, Dihedral):
        return w.word()
    stripped: list[int] = []
    cur = w
    while True:
        desc = next((s for s in cur.labels() if cur.is_right_descent(s)), None)
        if desc is None:
            break
        stripped.append(desc)
        cur = cur.times_gen(desc)
    return stripped[::-1]


@dataclass(frozen=True)
class CoxeterGroup:
    """One of the finite groups A (S_n), B (rank n) or I2 (``n`` holds m)."""

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "B", "I2"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < (1 if self.family != "I2" else 2):
            raise ValueError("group parameter too small")

    @property
    def labels(self) -> tuple[int, ...]:
        if self.family == "A":
            return tuple(range(1, self.n))
        if self.family == "B":
            return tuple(range(self.n))
        return (1, 2)

    def matrix(self) -> CoxeterMatrix:
        return standard_matrix(self.family, self.n)

    def identity(self) -> Element:
        if self.family == "A":
            return Perm(tuple(range(1, self.n + 1)))
        if self.family == "B":
            return SignedPerm(tuple(range(1, self.n + 1)))
        return Dihedral(self.n, 0, 0)

    def generator(self, s: int) -> Element:
        if s not in self.labels:
            raise ValueError(f"no generator {s} in {self.family}{self.n}")
        return self.identity().times_gen(s)

    def from_word(self, word: Iterable[int]) -> Element:
        w = self.identity()
        for s in word:
            if s not in self.labels:
                raise ValueError(f"no generator {s} in {self.family}{self.n}")
            w = w.times_gen(s)
        return w

    def elements(self) -> list[Element]:
        """All elements ordered by (length, reduced word)."""
        seen = {self.identity(): 0}
        queue = deque([self.identity()])
        while queue:
            w = queue.popleft()
            for s in self.labels:
                u = w.times_gen(s)
                if u not in seen:
                    seen[u] = seen[w] + 1
                    queue.append(u)
        return sorted(seen, key=lambda w: (seen[w], reduced_word(w)))

    def order(self) -> int:
        if self.family == "A":
            return math.factorial(self.n)
        if self.family == "B":
            return math.factorial(self.n) * 2**self.n
        return 2 * self.n

    def longest(self) -> Element:
        return max(self.elements(), key=length)

    def parse_element(self, text: str) -> Element:
        """Parse one-line notation ``[2,1,3]`` or a word such as ``s1s2`` / ``1 2``."""
        t = text.strip()
        if t.startswith("["):
            vals = tuple(int(x) for x in t.strip("[]").split(",") if x.strip())
            w = Perm(vals) if self.family == "A" else SignedPerm(vals)
            if self.family == "I2" or len(vals) != self.n:
                raise ValueError(f"bad one-line element {text!r}")
            if sorted(abs(x) for x in vals) != list(range(1, self.n + 1)):
                raise ValueError(f"not a permutation: {text!r}")
            if self.family == "A" and min(vals) < 1:
                raise ValueError(f"not a permutation: {text!r}")
            return w
        if t in ("e", ""):
            return self.identity()
        toks = t.replace("s", " ").replace(",", " ").split()
        return self.from_word(int(x) for x in toks)


def group_of(w: Element) -> CoxeterGroup:
    if isinstance(w, Perm):
        return CoxeterGroup("A", w.n)
    if isinstance(w, SignedPerm):
        return CoxeterGroup("B", w.n)
    return CoxeterGroup("I2", w.m)


def bfs_lengths(gens: Sequence[Element], identity: Element) -> dict[Element, int]:
    """Word lengths by breadth-first search over right multiplication."""
    dist = {identity: 0}
    queue = deque([identity])
    while queue:
        w = queue.popleft()
        for g in gens:
            u = w * g  # type: ignore[operator]
            if u not in dist:
                dist[u] = dist[w] + 1
                queue.append(u)
    return dist
