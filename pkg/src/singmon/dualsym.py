"""Block bijections (the dual symmetric inverse monoid) and their type B analogue.

A block bijection is stored as a completed essential boolean matrix: rows are
image points, columns are domain points, and each component is a full
rectangle ``image_block x domain_block``. Products are completed boolean
products. Type B block bijections live on the signed points -n..-1, 1..n.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .binrel import (
    BoolMat,
    b_generator,
    complete_components,
    index_point,
    perm_matrix,
    point_index,
    signed_points,
    signed_perm_matrix,
    transposition,
)
from .coxeter import CoxeterGroup, Perm, SignedPerm
from .words import GeneratorAssignment, Word, evaluate


@dataclass(frozen=True)
class BlockBijection:
    mat: BoolMat

    def __post_init__(self) -> None:
        if not self.mat.is_essential() or complete_components(self.mat) != self.mat:
            raise ValueError("matrix is not a completed essential relation")

    @property
    def size(self) -> int:
        return self.mat.n

    def __mul__(self, other: "BlockBijection") -> "BlockBijection":
        return BlockBijection(complete_components(self.mat * other.mat))

    def blocks(self) -> list[tuple[frozenset[int], frozenset[int]]]:
        """(domain block, image block) pairs of 0-based indices, sorted by domain."""
        seen: dict[int, frozenset[int]] = {}
        for j, col in enumerate(self.mat.cols()):
            seen.setdefault(col, frozenset(k for k in range(self.size) if (col >> k) & 1))
        out = []
        for col, image in seen.items():
            dom = frozenset(j for j, c in enumerate(self.mat.cols()) if c == col)
            out.append((dom, image))
        return sorted(out, key=lambda p: min(p[0]))

    def domain_partition(self) -> list[frozenset[int]]:
        return [d for d, _ in self.blocks()]

    def image_partition(self) -> list[frozenset[int]]:
        return sorted((im for _, im in self.blocks()), key=min)

    def is_uniform(self) -> bool:
        return all(len(d) == len(im) for d, im in self.blocks())

    def is_idempotent(self) -> bool:
        return self * self == self

    def rank(self) -> int:
        return len(self.blocks())

    def describe(self, signed: bool = False) -> list[tuple[list[int], list[int]]]:
        """Blocks as (domain points, image points) lists of 1-based or signed points."""
        half = self.size // 2

        def pt(k: int) -> int:
            return index_point(half, k) if signed else k + 1

        return [(sorted(map(pt, d)), sorted(map(pt, im))) for d, im in self.blocks()]


def identity_bb(size: int) -> BlockBijection:
    return BlockBijection(BoolMat.identity(size))


def pi_project(a: BoolMat) -> BlockBijection:
    """Completion of an essential relation; raises on non-essential input."""
    if not a.is_essential():
        raise ValueError("relation is not essential")
    return BlockBijection(complete_components(a))


def from_block_pairs(size: int, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> BlockBijection:
    """Build from (domain, image) blocks of 0-based indices."""
    entries = [(i, j) for dom, im in pairs for j in dom for i in im]
    return BlockBijection(BoolMat.from_pairs(size, entries))


def idempotent_from_partition(n: int, blocks: Iterable[Iterable[int]]) -> BlockBijection:
    """Identity-like idempotent of a partition of {1..n} (1-based points)."""
    idx = [[p - 1 for p in b] for b in blocks]
    return from_block_pairs(n, ((b, b) for b in idx))


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """All set partitions of ``items`` (restricted growth order)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first], *part]
        for k in range(len(part)):
            yield part[:k] + [[first, *part[k]]] + part[k + 1:]


def factorize(a: BlockBijection) -> tuple[Perm, BlockBijection]:
    """Write a uniform block bijection as ``sigma * xi``.

    ``xi`` is the idempotent of the domain partition and ``sigma`` maps each
    domain block onto its image block in increasing order.
    """
    if not a.is_uniform():
        raise ValueError("block bijection is not uniform")
    images = [0] * a.size
    for dom, im in a.blocks():
        for j, i in zip(sorted(dom), sorted(im)):
            images[j] = i + 1
    sigma = Perm(tuple(images))
    xi = from_block_pairs(a.size, ((d, d) for d in a.domain_partition()))
    return sigma, xi


def perm_bb(w: Perm) -> BlockBijection:
    return BlockBijection(perm_matrix(w))


def all_uniform_block_bijections(n: int) -> set[BlockBijection]:
    """Direct construction of F*_n: block-size-preserving bijections of partition pairs."""
    parts = list(set_partitions(list(range(n))))
    out: set[BlockBijection] = set()
    for dom in parts:
        for im in parts:
            if sorted(map(len, dom)) != sorted(map(len, im)):
                continue
            for perm in itertools.permutations(im):
                if all(len(a) == len(b) for a, b in zip(dom, perm)):
                    out.add(from_block_pairs(n, zip(dom, perm)))
    return out


def all_block_bijections(n: int) -> set[BlockBijection]:
    """Direct construction of I*_n: any bijection between blocks of two partitions."""
    parts = list(set_partitions(list(range(n))))
    out: set[BlockBijection] = set()
    for dom in parts:
        for im in parts:
            if len(dom) != len(im):
                continue
            for perm in itertools.permutations(im):
                out.add(from_block_pairs(n, zip(dom, perm)))
    return out


# ------------------------------------------------------------------ lambda


def xi(n: int, i: int) -> BlockBijection:
    """Idempotent merging points i and i+1."""
    blocks = [[i, i + 1]] + [[p] for p in range(1, n + 1) if p not in (i, i + 1)]
    return idempotent_from_partition(n, blocks)


@lru_cache(maxsize=None)
def lambda_assignment(n: int) -> GeneratorAssignment[BlockBijection]:
    gens = {i: BlockBijection(transposition(n, i)) for i in range(1, n)}
    taus = {i: xi(n, i) for i in range(1, n)}
    return GeneratorAssignment(gens, gens, taus, BlockBijection.__mul__, identity_bb(n))


def lambda_eval(word: Word, n: int) -> BlockBijection:
    return evaluate(word, lambda_assignment(n))


# ------------------------------------------------------------------ type B


@dataclass(frozen=True)
class SymPartitionTuple:
    """Triple (rho, Y, f) describing a negation-invariant partition of +-{1..n}.

    ``rho`` is a partition of {1..n}; ``Y`` is a union of rho-classes; ``f``
    assigns a sign to each point of ``Y`` up to a global flip per class,
    normalized so that the smallest point of each class gets ``+1``.
    """

    rho: tuple[tuple[int, ...], ...]
    Y: frozenset[int]
    f: tuple[tuple[int, int], ...]

    @staticmethod
    def make(rho: Iterable[Iterable[int]], Y: Iterable[int], f: dict[int, int] | None = None
             ) -> "SymPartitionTuple":
        classes = sorted((tuple(sorted(c)) for c in rho), key=lambda c: c[0])
        Yset = frozenset(Y)
        f = dict(f or {})
        signs = []
        for c in classes:
            inside = [p in Yset for p in c]
            if any(inside) and not all(inside):
                raise ValueError("Y must be a union of classes")
            if all(inside):
                flip = f.get(c[0], 1)
                signs += [(p, f.get(p, 1) * flip) for p in c]
        return SymPartitionTuple(tuple(classes), Yset, tuple(sorted(signs)))

    def signed_classes(self) -> list[frozenset[int]]:
        sign = dict(self.f)
        out = []
        for c in self.rho:
            if c[0] in self.Y:
                x = frozenset(sign[p] * p for p in c)
                out += [x, frozenset(-p for p in x)]
            else:
                out.append(frozenset(c) | frozenset(-p for p in c))
        return out


def signed_idempotent(n: int, classes: Iterable[Iterable[int]]) -> BlockBijection:
    """Idempotent of a partition of the signed points (given as signed ints)."""
    idx = [[point_index(n, p) for p in c] for c in classes]
    return from_block_pairs(2 * n, ((c, c) for c in idx))


def tuple_to_idempotent(t: SymPartitionTuple, n: int) -> BlockBijection:
    return signed_idempotent(n, t.signed_classes())


def idempotent_to_tuple(b: BlockBijection) -> SymPartitionTuple:
    n = b.size // 2
    classes = [frozenset(index_point(n, k) for k in d) for d in b.domain_partition()]
    rho, Y, f = [], set(), {}
    for x in classes:
        absx = sorted({abs(p) for p in x})
        if any(-p in x for p in x):
            rho.append(absx)
        elif absx[0] in x:
            rho.append(absx)
            Y |= set(absx)
            f.update({abs(p): (1 if p > 0 else -1) for p in x})
    return SymPartitionTuple.make(rho, Y, f)


def invariant_partitions(n: int) -> list[SymPartitionTuple]:
    """Every triple (rho, Y, f) for +-{1..n}."""
    out = []
    for rho in set_partitions(list(range(1, n + 1))):
        for mask in itertools.product((False, True), repeat=len(rho)):
            Y = [p for c, m in zip(rho, mask) if m for p in c]
            free = [p for c, m in zip(rho, mask) if m for p in sorted(c)[1:]]
            for signs in itertools.product((1, -1), repeat=len(free)):
                out.append(SymPartitionTuple.make(rho, Y, dict(zip(free, signs))))
    return out


def xi_b(n: int, i: int) -> BlockBijection:
    if i == 0:
        return tuple_to_idempotent(SymPartitionTuple.make([[p] for p in range(1, n + 1)],
                                                          range(2, n + 1)), n)
    rho = [[i, i + 1]] + [[p] for p in range(1, n + 1) if p not in (i, i + 1)]
    return tuple_to_idempotent(SymPartitionTuple.make(rho, range(1, n + 1)), n)


def signed_perm_bb(w: SignedPerm) -> BlockBijection:
    return BlockBijection(signed_perm_matrix(w))


@lru_cache(maxsize=None)
def lambda_b_assignment(n: int) -> GeneratorAssignment[BlockBijection]:
    gens = {i: BlockBijection(b_generator(n, i)) for i in range(n)}
    taus = {i: xi_b(n, i) for i in range(n)}
    return GeneratorAssignment(gens, gens, taus, BlockBijection.__mul__, identity_bb(2 * n))


def lambda_b_eval(word: Word, n: int) -> BlockBijection:
    return evaluate(word, lambda_b_assignment(n))


def all_fb_star(n: int) -> set[BlockBijection]:
    """Direct construction of FB*_n as products (signed permutation) * (invariant idempotent)."""
    idems = [tuple_to_idempotent(t, n) for t in invariant_partitions(n)]
    perms = [signed_perm_bb(w) for w in CoxeterGroup("B", n).elements()]  # type: ignore[arg-type]
    return {p * e for p in perms for e in idems}


def is_negation_invariant(b: BlockBijection) -> bool:
    n = b.size // 2
    flip = {point_index(n, p): point_index(n, -p) for p in signed_points(n)}
    return all(b.mat[flip[i], flip[j]] for i, j in b.mat.pairs())

