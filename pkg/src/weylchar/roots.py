"""Positive root generation with simultaneous root and coroot coordinates.

Roots are integer coefficient vectors over the simple roots; the coroot of
each root is carried through the closure in parallel (coefficients over the
simple coroots, reflected with the transposed Cartan rule), so no inner
product normalization is ever chosen and all arithmetic stays integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanDatum

__all__ = [
    "RootVector",
    "NonFiniteType",
    "positive_roots",
    "root_table",
    "pairing",
    "simple_root",
]

# E8 has 240 positive roots; allow some slack per diagram component before
# declaring the closure non-terminating.
_COMPONENT_BOUND = 264


class NonFiniteType(RuntimeError):
    """Root closure exceeded the finite-type bound."""


@dataclass(frozen=True)
class RootVector:
    """A root alongside its coroot, both in simple-root/coroot coordinates."""

    root: tuple[int, ...]
    coroot: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.root)

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.root) and any(c > 0 for c in self.root)

    def negated(self) -> "RootVector":
        return RootVector(
            root=tuple(-c for c in self.root),
            coroot=tuple(-c for c in self.coroot),
        )


def simple_root(datum: CartanDatum, i: int) -> RootVector:
    """The i-th simple root (1-based)."""
    e = tuple(1 if k == i - 1 else 0 for k in range(datum.rank))
    return RootVector(root=e, coroot=e)


def _component_count(datum: CartanDatum) -> int:
    seen: set[int] = set()
    count = 0
    for start in range(1, datum.rank + 1):
        if start in seen:
            continue
        count += 1
        stack = [start]
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            stack.extend(j for j in datum.neighbors(i) if j not in seen)
    return count


@lru_cache(maxsize=None)
def positive_roots(datum: CartanDatum) -> tuple[RootVector, ...]:
    """All positive roots, ordered by height then lexicographically.

    Generation is closure under the simple reflections: on root coordinates
    s_i subtracts (sum_j c_j A[j][i]) from coordinate i, on coroot
    coordinates it subtracts (sum_j A[i][j] d_j).  Termination within the
    configured bound is what certifies the datum as finite type.
    """
    a = datum.cartan
    n = datum.rank
    bound = _COMPONENT_BOUND * _component_count(datum)

    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    frontier: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for i in range(1, n + 1):
        rv = simple_root(datum, i)
        found[rv.root] = rv.coroot
        frontier.append((rv.root, rv.coroot))

    while frontier:
        fresh = []
        for c, d in frontier:
            for i in range(n):
                pair_root = sum(c[j] * a[j][i] for j in range(n))
                pair_coroot = sum(a[i][j] * d[j] for j in range(n))
                c2 = list(c)
                c2[i] -= pair_root
                d2 = list(d)
                d2[i] -= pair_coroot
                if any(x < 0 for x in c2):
                    continue  # only alpha_i itself reflects out of the positive cone
                key = tuple(c2)
                if key in found:
                    continue
                value = tuple(d2)
                found[key] = value
                fresh.append((key, value))
                if len(found) > bound:
                    raise NonFiniteType(
                        f"closure for {datum.label!r} exceeded {bound} positive roots"
                    )
        frontier = fresh

    ordered = sorted(found.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    return tuple(RootVector(root=c, coroot=d) for c, d in ordered)


@lru_cache(maxsize=None)
def root_table(datum: CartanDatum) -> dict[tuple[int, ...], RootVector]:
    """Lookup from positive root coordinates to the full RootVector."""
    return {rv.root: rv for rv in positive_roots(datum)}


def pairing(datum: CartanDatum, alpha: RootVector, beta: RootVector) -> int:
    """Integer pairing of alpha against the coroot of beta.

    Computed as root(alpha)^T . A . coroot(beta); for simple roots this
    reads off the Cartan entry directly.
    """
    n = datum.rank
    if len(alpha.root) != n or len(beta.coroot) != n:
        raise ValueError("root vectors do not match the rank of the datum")
    a = datum.cartan
    total = 0
    for i, ci in enumerate(alpha.root):
        if ci == 0:
            continue
        row = a[i]
        total += ci * sum(row[j] * beta.coroot[j] for j in range(n))
    return total
