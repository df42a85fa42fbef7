"""Binary relations as boolean matrices with bitset rows.

Row ``i`` of a ``BoolMat`` is an int whose bit ``j`` is entry ``(i, j)``.
Matrices multiply over the boolean semiring; a permutation ``w`` is stored
with entry ``(w(j), j)`` set so that matrix products follow composition.

Type B relations live on 2n points listed as -n..-1, 1..n; ``point_index``
gives the matrix index of a signed point.
"""
from __future__ import annotations

from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coxeter import Perm, SignedPerm
from .words import GeneratorAssignment, Word, evaluate


@dataclass(frozen=True)
class BoolMat:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n or any(r >> self.n for r in self.rows):
            raise ValueError("row bits out of range")

    @staticmethod
    def zero(n: int) -> "BoolMat":
        return BoolMat(n, (0,) * n)

    @staticmethod
    def identity(n: int) -> "BoolMat":
        return BoolMat(n, tuple(1 << i for i in range(n)))

    @staticmethod
    def from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> "BoolMat":
        rows = [0] * n
        for i, j in pairs:
            rows[i] |= 1 << j
        return BoolMat(n, tuple(rows))

    @staticmethod
    def from_lists(m: Sequence[Sequence[int]]) -> "BoolMat":
        n = len(m)
        return BoolMat(n, tuple(sum(1 << j for j, x in enumerate(r) if x) for r in m))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def __getitem__(self, ij: tuple[int, int]) -> bool:
        i, j = ij
        return bool((self.rows[i] >> j) & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(self.n) if self[i, j]]

    def __mul__(self, other: "BoolMat") -> "BoolMat":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        out = []
        for r in self.rows:
            acc, j = 0, 0
            while r:
                if r & 1:
                    acc |= other.rows[j]
                r >>= 1
                j += 1
            out.append(acc)
        return BoolMat(self.n, tuple(out))

    def __or__(self, other: "BoolMat") -> "BoolMat":
        return BoolMat(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def transpose(self) -> "BoolMat":
        return BoolMat.from_pairs(self.n, ((j, i) for i, j in self.pairs()))

    def cols(self) -> tuple[int, ...]:
        return self.transpose().rows

    def is_essential(self) -> bool:
        """No zero row and no zero column."""
        full = (1 << self.n) - 1
        col_union = 0
        for r in self.rows:
            if r == 0:
                return False
            col_union |= r
        return col_union == full

    def __str__(self) -> str:
        return "\n".join("".join(str(x) for x in r) for r in self.to_lists())


def perm_matrix(w: Perm) -> BoolMat:
    return BoolMat.from_pairs(w.n, ((w(j) - 1, j - 1) for j in range(1, w.n + 1)))


def complete_components(a: BoolMat) -> BoolMat:
    """Close ``a`` so each bipartite component becomes a full rectangle.

    Rows and columns are the two vertex classes; ``(i, j)`` is set in the
    result iff row ``i`` and column ``j`` lie in the same component.
    """
    n = a.n
    parent = list(range(2 * n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in a.pairs():
        parent[find(i)] = find(n + j)
    cols_of: dict[int, int] = {}
    for j in range(n):
        r = find(n + j)
        cols_of[r] = cols_of.get(r, 0) | (1 << j)
    return BoolMat(n, tuple(cols_of.get(find(i), 0) if a.rows[i] else 0 for i in range(n)))


# ------------------------------------------------------------------ type A


def bold_generator(n: int, i: int) -> BoolMat:
    """Identity plus the symmetric pair (i, i+1), points 1-based."""
    return BoolMat.identity(n) | BoolMat.from_pairs(n, [(i - 1, i), (i, i - 1)])


def transposition(n: int, i: int) -> BoolMat:
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return perm_matrix(Perm(tuple(images)))


@lru_cache(maxsize=None)
def eta_assignment(n: int) -> GeneratorAssignment[BoolMat]:
    gens = {i: transposition(n, i) for i in range(1, n)}
    taus = {i: bold_generator(n, i) for i in range(1, n)}
    return GeneratorAssignment(gens, gens, taus, BoolMat.__mul__, BoolMat.identity(n))


def eta_eval(word: Word, n: int) -> BoolMat:
    return evaluate(word, eta_assignment(n))


# ------------------------------------------------------------------ type B


def point_index(n: int, p: int) -> int:
    """Matrix index of signed point ``p`` in the order -n..-1, 1..n."""
    if p == 0 or abs(p) > n:
        raise ValueError(f"point {p} out of range")
    return n + p if p < 0 else n + p - 1


def index_point(n: int, k: int) -> int:
    return k - n if k < n else k - n + 1


def signed_points(n: int) -> list[int]:
    return [index_point(n, k) for k in range(2 * n)]


def is_rotation_invariant(a: BoolMat) -> bool:
    m = a.n
    return all(a[m - 1 - i, m - 1 - j] for i, j in a.pairs())


def signed_perm_matrix(w: SignedPerm) -> BoolMat:
    n = w.n
    return BoolMat.from_pairs(
        2 * n, ((point_index(n, w(p)), point_index(n, p)) for p in signed_points(n))
    )


def signed_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> BoolMat:
    """Matrix with entries at the given signed point pairs (row, column)."""
    return BoolMat.from_pairs(2 * n, ((point_index(n, a), point_index(n, b)) for a, b in pairs))


def b_generator(n: int, i: int) -> BoolMat:
    """Signed permutation matrix of the simple reflection with label ``i``."""
    images = list(range(1, n + 1))
    if i == 0:
        images[0] = -1
    else:
        images[i - 1], images[i] = images[i], images[i - 1]
    return signed_perm_matrix(SignedPerm(tuple(images)))


def b_bold_generator(n: int, i: int) -> BoolMat:
    ident = BoolMat.identity(2 * n)
    if i == 0:
        return ident | signed_pairs(n, [(1, -1), (-1, 1)])
    return ident | signed_pairs(
        n, [(i, i + 1), (i + 1, i), (-i, -(i + 1)), (-(i + 1), -i)]
    )


@lru_cache(maxsize=None)
def eta_b_assignment(n: int) -> GeneratorAssignment[BoolMat]:
    gens = {i: b_generator(n, i) for i in range(n)}
    taus = {i: b_bold_generator(n, i) for i in range(n)}
    return GeneratorAssignment(gens, gens, taus, BoolMat.__mul__, BoolMat.identity(2 * n))


def eta_b_eval(word: Word, n: int) -> BoolMat:
    return evaluate(word, eta_b_assignment(n))
