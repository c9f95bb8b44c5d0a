"""Packing partitions into disjoint non-adjacent diagram chains.

A part of size k occupies a simply-laced path of k - 1 nodes (none for
parts of size 1); distinct chains may not touch or be adjacent in the
diagram.  The chain with nodes (c_1, .., c_{k-1}) is identified with the
adjacent transpositions of S_k via c_j -> (j, j+1), which is what makes
the per-element weight of an arbitrary group element computable from the
symmetric-group statistic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanDatum
from .typea import compose, identity_perm, m_statistic, validate_partition
from .weyl import WeylElement, WeylGroup, weyl_group

__all__ = [
    "MuPacking",
    "Unpackable",
    "pack_partition",
    "all_packings",
    "v_mu",
    "weight_mu",
    "chain_permutations",
    "packing_discrepancy_report",
]


class Unpackable(ValueError):
    """No placement of the partition into non-adjacent chains exists."""


@dataclass(frozen=True)
class MuPacking:
    """A partition laid out on the diagram, one (possibly empty) chain per part."""

    datum: CartanDatum
    mu: tuple[int, ...]
    chains: tuple[tuple[int, ...], ...]

    def nodes(self) -> tuple[int, ...]:
        return tuple(c for chain in self.chains for c in chain)

    def nonempty_chains(self) -> tuple[tuple[int, ...], ...]:
        return tuple(chain for chain in self.chains if chain)

    def validate(self) -> None:
        parts = validate_partition(self.mu)
        if len(self.chains) != len(parts):
            raise ValueError("one chain per part required (empty for parts of 1)")
        used: set[int] = set()
        for part, chain in zip(parts, self.chains):
            if len(chain) != part - 1:
                raise ValueError(f"part {part} needs {part - 1} nodes, got {chain}")
            for c in chain:
                if not 1 <= c <= self.datum.rank:
                    raise ValueError(f"node {c} outside 1..{self.datum.rank}")
                if c in used:
                    raise ValueError(f"node {c} used twice")
                used.add(c)
            for a, b in zip(chain, chain[1:]):
                if self.datum.bond_order(a, b) != 3:
                    raise ValueError(f"bond ({a},{b}) inside a chain is not simple")
        flat = self.nodes()
        for a, b in itertools.combinations(flat, 2):
            if self.datum.adjacent(a, b):
                consecutive = any(
                    (a, b) in zip(chain, chain[1:]) or (b, a) in zip(chain, chain[1:])
                    for chain in self.chains
                )
                if not consecutive:
                    raise ValueError(f"nodes {a} and {b} are adjacent across chains")


@lru_cache(maxsize=None)
def _simple_paths(datum: CartanDatum, length: int) -> tuple[tuple[int, ...], ...]:
    """All simply-laced paths with `length` nodes, lowest endpoint first."""
    if length == 0:
        return ((),)
    if length == 1:
        return tuple((i,) for i in range(1, datum.rank + 1))
    found: set[tuple[int, ...]] = set()

    def extend(path: list[int]) -> None:
        if len(path) == length:
            canonical = tuple(path) if path[0] < path[-1] else tuple(reversed(path))
            found.add(canonical)
            return
        tail = path[-1]
        for j in range(1, datum.rank + 1):
            if j in path or datum.bond_order(tail, j) != 3:
                continue
            path.append(j)
            extend(path)
            path.pop()

    for start in range(1, datum.rank + 1):
        extend([start])
    return tuple(sorted(found))


def _compatible(datum: CartanDatum, chain: tuple[int, ...], used: set[int]) -> bool:
    for c in chain:
        if c in used:
            return False
        if any(datum.adjacent(c, u) for u in used):
            return False
    return True


def _packings(datum: CartanDatum, parts: tuple[int, ...], first_only: bool):
    results: list[MuPacking] = []
    chains: list[tuple[int, ...]] = []
    used: set[int] = set()

    def place(index: int) -> bool:
        if index == len(parts):
            results.append(
                MuPacking(datum=datum, mu=parts, chains=tuple(chains))
            )
            return first_only
        part = parts[index]
        candidates = _simple_paths(datum, part - 1)
        # equal parts are interchangeable: force increasing chain order
        # (parts of size 1 all carry the unique empty chain)
        if part > 1 and index > 0 and parts[index - 1] == part:
            previous = chains[index - 1]
            candidates = tuple(c for c in candidates if c > previous)
        for chain in candidates:
            if part > 1 and not _compatible(datum, chain, used):
                continue
            chains.append(chain)
            used.update(chain)
            done = place(index + 1)
            used.difference_update(chain)
            chains.pop()
            if done:
                return True
        return False

    place(0)
    return results


def all_packings(datum: CartanDatum, mu) -> tuple[MuPacking, ...]:
    """Every packing of mu, deterministically ordered (exhaustive search)."""
    parts = validate_partition(mu)
    return tuple(_packings(datum, parts, first_only=False))


def pack_partition(datum: CartanDatum, mu) -> MuPacking:
    """Canonical packing: the lexicographically first valid placement when
    parts are taken in decreasing size.  Raises Unpackable when none exists.
    """
    parts = validate_partition(mu)
    found = _packings(datum, parts, first_only=True)
    if not found:
        raise Unpackable(
            f"no parabolic of type A in {datum.label!r} carries cycle type {parts}"
        )
    return found[0]


def v_mu(packing: MuPacking, group: WeylGroup | None = None) -> WeylElement:
    """Product over chains of the chain's Coxeter word: a mu_i-cycle per part."""
    group = group or weyl_group(packing.datum)
    word = packing.nodes()
    v = group.from_word(word)
    assert v.length == len(word), "chain word of v_mu is not reduced"
    return v


def chain_permutations(
    group: WeylGroup, pi: WeylElement, packing: MuPacking
) -> list[tuple[int, ...]]:
    """Factor an element of the chain parabolic into one permutation per part.

    The reduced word of pi is split by chain (letters of different chains
    commute, so the in-word order within each chain is preserved) and each
    letter c_j becomes the adjacent transposition (j, j+1) of S_{mu_i}.
    """
    word = group.reduced_word(pi)
    node_chain = {c: idx for idx, chain in enumerate(packing.chains) for c in chain}
    assert all(letter in node_chain for letter in word), "element not in the parabolic"
    position = {
        c: j for chain in packing.chains for j, c in enumerate(chain)
    }
    perms = []
    for idx, chain in enumerate(packing.chains):
        size = len(chain) + 1
        perm = identity_perm(size)
        for letter in word:
            if node_chain[letter] != idx:
                continue
            j = position[letter]
            swap = list(identity_perm(size))
            swap[j], swap[j + 1] = swap[j + 1], swap[j]
            perm = compose(perm, tuple(swap))
        perms.append(perm)
    return perms


def weight_mu(
    w: WeylElement, packing: MuPacking, group: WeylGroup | None = None
) -> int:
    """Weight of w: decompose w = r * pi over the chain parabolic and take
    the product of the V-shape statistics of the per-chain factors."""
    group = group or weyl_group(packing.datum)
    if len(w.matrix) != group.rank:
        raise ValueError("element does not belong to the group of the packing")
    _, pi = group.coset_decompose(w, packing.nodes())
    weight = 1
    for perm in chain_permutations(group, pi, packing):
        weight *= m_statistic(perm)
        if weight == 0:
            return 0
    return weight


def packing_discrepancy_report(datum: CartanDatum, mu, budget: int | None = None):
    """Per-element comparison of the weight across every packing of mu.

    The per-level sums always agree; individual elements may not.  Rows are
    emitted for each element whose weights differ between packings.
    """
    from .weyl import DEFAULT_BUDGET

    group = weyl_group(datum)
    packings = all_packings(datum, mu)
    rows = []
    for level in group.levels(budget or DEFAULT_BUDGET):
        for w in level.elements:
            weights = [weight_mu(w, p, group) for p in packings]
            if len(set(weights)) > 1:
                rows.append(
                    {
                        "word": list(group.reduced_word(w)),
                        "length": w.length,
                        "weights": weights,
                    }
                )
    return {
        "type": datum.label,
        "mu": list(validate_partition(mu)),
        "packings": [[list(c) for c in p.chains] for p in packings],
        "elements_with_differing_weights": rows,
    }
