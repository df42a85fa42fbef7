"""Partial permutations (the rook monoid) and their signed analogue.

``PartialPerm.targets[x-1]`` is the image of ``x`` or ``None``. Products apply
the right factor first. A ``SignedPartialPerm`` records images of the positive
points only; ``a(-x) = -a(x)``.
"""
from __future__ import annotations

import itertools
import math
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Optional

from .coxeter import CoxeterGroup, Perm, SignedPerm
from .dualsym import BlockBijection
from .binrel import index_point
from .words import TAU, GeneratorAssignment, Word, evaluate


@dataclass(frozen=True, order=True)
class PartialPerm:
    targets: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        img = [t for t in self.targets if t is not None]
        if len(set(img)) != len(img) or any(not 1 <= t <= len(self.targets) for t in img):
            raise ValueError(f"not a partial permutation: {self.targets}")

    @property
    def n(self) -> int:
        return len(self.targets)

    def __call__(self, x: int) -> Optional[int]:
        return self.targets[x - 1]

    def __mul__(self, other: "PartialPerm") -> "PartialPerm":
        out = []
        for t in other.targets:
            out.append(None if t is None else self.targets[t - 1])
        return PartialPerm(tuple(out))

    def rank(self) -> int:
        return sum(t is not None for t in self.targets)

    def domain(self) -> frozenset[int]:
        return frozenset(x for x, t in enumerate(self.targets, 1) if t is not None)

    def in_tilde(self) -> bool:
        """Membership in the submonoid of elements whose rank is not n - 1."""
        return self.rank() != self.n - 1

    def sort_key(self) -> tuple[int, ...]:
        return tuple(0 if t is None else t for t in self.targets)


def identity_pp(n: int) -> PartialPerm:
    return PartialPerm(tuple(range(1, n + 1)))


def epsilon(n: int, X: Iterable[int]) -> PartialPerm:
    """Identity restricted to the complement of ``X``."""
    Xs = set(X)
    return PartialPerm(tuple(None if x in Xs else x for x in range(1, n + 1)))


def perm_pp(w: Perm) -> PartialPerm:
    return PartialPerm(tuple(w.images))


@lru_cache(maxsize=None)
def phi_assignment(n: int) -> GeneratorAssignment[PartialPerm]:
    G = CoxeterGroup("A", n)
    gens = {i: perm_pp(G.generator(i)) for i in G.labels}  # type: ignore[arg-type]
    taus = {i: epsilon(n, (i, i + 1)) for i in G.labels}
    return GeneratorAssignment(gens, gens, taus, PartialPerm.__mul__, identity_pp(n))


def phi_eval(word: Word, n: int) -> PartialPerm:
    return evaluate(word, phi_assignment(n))


def phi_a_eval(word: Word, n: int, a: int = 1) -> tuple[PartialPerm, int]:
    """Scalar variant: every singular letter also contributes a factor ``a``."""
    return phi_eval(word, n), a ** sum(1 for x in word if x.kind == TAU)


def all_partial_perms(n: int) -> list[PartialPerm]:
    out = []
    for k in range(n + 1):
        for dom in itertools.combinations(range(1, n + 1), k):
            for img in itertools.permutations(range(1, n + 1), k):
                t: list[Optional[int]] = [None] * n
                for x, y in zip(dom, img):
                    t[x - 1] = y
                out.append(PartialPerm(tuple(t)))
    return out


def rook_count(n: int) -> int:
    return sum(math.comb(n, k) ** 2 * math.factorial(k) for k in range(n + 1))


def rook_tilde_count(n: int) -> int:
    return rook_count(n) - n * n * math.factorial(n - 1)


# ------------------------------------------------------------------ signed


@dataclass(frozen=True, order=True)
class SignedPartialPerm:
    targets: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        img = [abs(t) for t in self.targets if t is not None]
        if len(set(img)) != len(img) or any(not 1 <= t <= len(self.targets) for t in img):
            raise ValueError(f"not a signed partial permutation: {self.targets}")

    @property
    def n(self) -> int:
        return len(self.targets)

    def __call__(self, x: int) -> Optional[int]:
        t = self.targets[abs(x) - 1]
        if t is None:
            return None
        return t if x > 0 else -t

    def __mul__(self, other: "SignedPartialPerm") -> "SignedPartialPerm":
        return SignedPartialPerm(tuple(None if t is None else self(t) for t in other.targets))

    def rank(self) -> int:
        return sum(t is not None for t in self.targets)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(0 if t is None else t for t in self.targets)


def identity_spp(n: int) -> SignedPartialPerm:
    return SignedPartialPerm(tuple(range(1, n + 1)))


def signed_epsilon(n: int, X: Iterable[int]) -> SignedPartialPerm:
    Xs = set(X)
    return SignedPartialPerm(tuple(None if x in Xs else x for x in range(1, n + 1)))


def signed_perm_spp(w: SignedPerm) -> SignedPartialPerm:
    return SignedPartialPerm(tuple(w.images))


@lru_cache(maxsize=None)
def phi_b_assignment(n: int) -> GeneratorAssignment[SignedPartialPerm]:
    G = CoxeterGroup("B", n)
    gens = {i: signed_perm_spp(G.generator(i)) for i in G.labels}  # type: ignore[arg-type]
    taus = {0: signed_epsilon(n, (1,))}
    taus.update({i: signed_epsilon(n, (i, i + 1)) for i in range(1, n)})
    return GeneratorAssignment(gens, gens, taus, SignedPartialPerm.__mul__, identity_spp(n))


def phi_b_eval(word: Word, n: int) -> SignedPartialPerm:
    return evaluate(word, phi_b_assignment(n))


def all_signed_partial_perms(n: int) -> list[SignedPartialPerm]:
    out = []
    for k in range(n + 1):
        for dom in itertools.combinations(range(1, n + 1), k):
            for img in itertools.permutations(range(1, n + 1), k):
                for signs in itertools.product((1, -1), repeat=k):
                    t: list[Optional[int]] = [None] * n
                    for x, y, e in zip(dom, img, signs):
                        t[x - 1] = e * y
                    out.append(SignedPartialPerm(tuple(t)))
    return out


def signed_rook_count(n: int) -> int:
    return sum(math.comb(n, k) ** 2 * math.factorial(k) * 2**k for k in range(n + 1))


# ------------------------------------------------------------------ restrictions


def upsilon_restrict(a: BlockBijection) -> PartialPerm:
    """Keep the singleton blocks of a uniform block bijection."""
    if not a.is_uniform():
        raise ValueError("block bijection is not uniform")
    t: list[Optional[int]] = [None] * a.size
    for dom, im in a.blocks():
        if len(dom) == 1:
            t[min(dom)] = min(im) + 1
    return PartialPerm(tuple(t))


def upsilon_b_restrict(a: BlockBijection) -> SignedPartialPerm:
    """Keep the pure singletons of a uniform type B block bijection.

    A positive point ``i`` is kept when ``{i}`` is a block; it maps to the
    signed point forming its image block.
    """
    if not a.is_uniform():
        raise ValueError("block bijection is not uniform")
    n = a.size // 2
    t: list[Optional[int]] = [None] * n
    for dom, im in a.blocks():
        if len(dom) == 1:
            p = index_point(n, min(dom))
            if p > 0:
                t[p - 1] = index_point(n, min(im))
    return SignedPartialPerm(tuple(t))
