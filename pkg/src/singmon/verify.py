"""Relation checking, monoid closure and independent counting oracles."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Generic, Hashable, Iterable, Sequence, TypeVar

from .words import GeneratorAssignment, RelationSet, Word, evaluate, format_word

T = TypeVar("T", bound=Hashable)
U = TypeVar("U")

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class RelationReport:
    name: str
    total: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_relations(rels: RelationSet, assignment: GeneratorAssignment[U]) -> RelationReport:
    """Evaluate both sides of every relation and list the ones that differ."""
    failures = tuple(
        str(r) for r in rels
        if not assignment.eq(evaluate(r.lhs, assignment), evaluate(r.rhs, assignment))
    )
    return RelationReport(rels.name, len(rels), failures)


@dataclass
class ClosureResult(Generic[T]):
    elements: list[T]
    cap_hit: bool = False

    @property
    def size(self) -> int:
        return len(self.elements)


def enumerate_closure(
    generators: Sequence[T],
    mul: Callable[[T, T], T],
    identity: T,
    cap: int = DEFAULT_CAP,
    key: Callable[[T], object] = repr,
) -> ClosureResult[T]:
    """Breadth-first closure of ``generators`` under left multiplication.

    Stops with ``cap_hit`` once more than ``cap`` elements are found. The
    returned elements are sorted by ``key``.
    """
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = mul(g, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    return ClosureResult(sorted(seen, key=key), True)  # type: ignore[arg-type]
                queue.append(y)
    return ClosureResult(sorted(seen, key=key), False)  # type: ignore[arg-type]


def closure_of(assignment: GeneratorAssignment[T], cap: int = DEFAULT_CAP,
               key: Callable[[T], object] = repr) -> ClosureResult[T]:
    gens = list(assignment.sigma.values()) + list(assignment.tau.values())
    return enumerate_closure(gens, assignment.mul, assignment.identity, cap, key)


@dataclass(frozen=True)
class CommuteReport:
    total: int
    mismatches: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_commutes(
    route_a: Callable[[Word], object], route_b: Callable[[Word], object], words: Iterable[Word]
) -> CommuteReport:
    total, bad = 0, []
    for w in words:
        total += 1
        if route_a(w) != route_b(w):
            bad.append(format_word(w))
    return CommuteReport(total, tuple(bad))


# ------------------------------------------------------------------ counting oracles


def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return sum((-1) ** (k - j) * math.comb(k, j) * j**n for j in range(k + 1)) // math.factorial(k)


def _partitions(n: int, max_part: int | None = None) -> list[list[int]]:
    max_part = n if max_part is None else max_part
    if n == 0:
        return [[]]
    out = []
    for k in range(min(n, max_part), 0, -1):
        out += [[k, *rest] for rest in _partitions(n - k, k)]
    return out


def _uniform_count(n: int) -> int:
    total = 0
    for lam in _partitions(n):
        mult = {k: lam.count(k) for k in set(lam)}
        n_set = math.factorial(n)
        for k, m in mult.items():
            n_set //= math.factorial(k) ** m * math.factorial(m)
        total += n_set**2 * math.prod(math.factorial(m) for m in mult.values())
    return total


def count_oracle(target: str, n: int) -> int:
    """Closed-form sizes of the monoids used as closure checks."""
    if target == "IS":
        return sum(math.comb(n, k) ** 2 * math.factorial(k) for k in range(n + 1))
    if target == "IS_TILDE":
        return count_oracle("IS", n) - n * n * math.factorial(n - 1)
    if target == "SIS":
        return sum(math.comb(n, k) ** 2 * math.factorial(k) * 2**k for k in range(n + 1))
    if target == "BR":
        return math.prod(range(1, 2 * n, 2))
    if target == "ISTAR":
        return sum(stirling2(n, k) ** 2 * math.factorial(k) for k in range(n + 1))
    if target == "FSTAR":
        return _uniform_count(n)
    if target == "PBR":
        # partial Brauer diagrams: involutions on 2n points
        m = 2 * n
        return sum(math.comb(m, 2 * k) * math.prod(range(1, 2 * k, 2)) for k in range(n + 1))
    if target == "APB":
        m = 2 * n
        return sum(math.comb(m, 2 * k) * math.prod(range(1, 2 * k, 2)) * 2**k
                   for k in range(n + 1))
    raise ValueError(f"no counting oracle for {target!r}")
