"""Cartan and Coxeter data for the finite crystallographic types.

Node numbering follows the chain conventions recorded in CONVENTIONS.md:
A_n is the path 1-2-...-n; B_n and C_n put the order-4 bond between nodes
n-1 and n (B_n has ``A[n-1][n] = -2``, C_n is the transpose); D_n attaches
nodes n-1 and n to the path node n-2; the E, F and G tables are fixed in
code.  Type labels such as ``B3`` or ``A2xA1`` are case-insensitive, and
product labels produce block-diagonal matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "CartanDatum",
    "ChainDecomposition",
    "LabelError",
    "NotTypeA",
    "cartan_from_label",
    "order_from_table",
    "shipped_degrees",
    "type_a_chains",
]


class LabelError(ValueError):
    """Malformed or unsupported type label."""


class NotTypeA(ValueError):
    """A node subset does not induce a disjoint union of simply-laced paths."""


_TOKEN = re.compile(r"([A-G])([0-9]+)\Z")

# admissible rank range per type letter (upper bound None = unbounded)
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# bond order m(i,j) keyed by A[i][j]*A[j][i]
_BOND_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class CartanDatum:
    """Validated Cartan matrix plus Coxeter bond orders for a finite type.

    ``cartan[i][j]`` is the integer pairing of the i-th simple root against
    the j-th simple coroot (0-based storage; nodes are 1-based in the API).
    """

    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    coxeter: tuple[tuple[int, ...], ...]

    def bond_order(self, i: int, j: int) -> int:
        """Coxeter bond order m(i, j) for 1-based nodes i != j."""
        return self.coxeter[i - 1][j - 1]

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.coxeter[i - 1][j - 1] >= 3

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.rank + 1) if self.adjacent(i, j))

    def validate(self) -> None:
        a = self.cartan
        n = self.rank
        if len(a) != n or any(len(row) != n for row in a):
            raise ValueError("cartan matrix shape does not match rank")
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError(f"diagonal entry A[{i + 1}][{i + 1}] != 2")
            for j in range(n):
                if i == j:
                    continue
                if a[i][j] > 0:
                    raise ValueError("positive off-diagonal Cartan entry")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise ValueError("zero pattern of Cartan matrix not symmetric")
                prod = a[i][j] * a[j][i]
                if prod not in _BOND_ORDER:
                    raise ValueError(f"bond product {prod} is not finite type")
                if self.coxeter[i][j] != _BOND_ORDER[prod]:
                    raise ValueError("coxeter matrix inconsistent with cartan matrix")


@dataclass(frozen=True)
class ChainDecomposition:
    """Disjoint, pairwise non-adjacent simply-laced paths of a node subset.

    Each chain is oriented starting from its lowest-numbered endpoint.
    """

    chains: tuple[tuple[int, ...], ...]

    def nodes(self) -> tuple[int, ...]:
        return tuple(c for chain in self.chains for c in chain)


def _single_type_cartan(letter: str, rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        # 1-based node pair
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if letter == "A":
        for i in range(1, rank):
            bond(i, i + 1)
    elif letter in ("B", "C"):
        for i in range(1, rank - 1):
            bond(i, i + 1)
        if letter == "B":
            bond(rank - 1, rank, -2, -1)
        else:
            bond(rank - 1, rank, -1, -2)
    elif letter == "D":
        for i in range(1, rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1)
        bond(rank - 2, rank)
    elif letter == "E":
        for i, j in ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)):
            bond(i, j)
        if rank >= 7:
            bond(6, 7)
        if rank == 8:
            bond(7, 8)
    elif letter == "F":
        bond(1, 2)
        bond(2, 3, -2, -1)
        bond(3, 4)
    elif letter == "G":
        bond(1, 2, -1, -3)
    return a


def _parse_label(label: str) -> list[tuple[str, int]]:
    if not label or not label.strip():
        raise LabelError("empty type label")
    blocks = []
    for token in label.strip().upper().split("X"):
        m = _TOKEN.match(token)
        if m is None:
            raise LabelError(f"malformed type token {token!r} in {label!r}")
        letter, rank = m.group(1), int(m.group(2))
        lo, hi = _RANK_RANGE[letter]
        if rank < lo or (hi is not None and rank > hi):
            raise LabelError(f"rank {rank} out of range for type {letter}")
        blocks.append((letter, rank))
    return blocks


@lru_cache(maxsize=None)
def cartan_from_label(label: str) -> CartanDatum:
    """Build the standard Cartan datum for a (product) type label.

    >>> cartan_from_label("A2").cartan
    ((2, -1), (-1, 2))
    >>> cartan_from_label("a1xA1").cartan
    ((2, 0), (0, 2))
    >>> cartan_from_label("G2").cartan
    ((2, -1), (-3, 2))
    """
    blocks = _parse_label(label)
    rank = sum(r for _, r in blocks)
    a = [[0] * rank for _ in range(rank)]
    offset = 0
    for letter, r in blocks:
        block = _single_type_cartan(letter, r)
        for i in range(r):
            for j in range(r):
                a[offset + i][offset + j] = block[i][j]
        offset += r
    coxeter = [
        [
            0 if i == j else _BOND_ORDER[a[i][j] * a[j][i]]
            for j in range(rank)
        ]
        for i in range(rank)
    ]
    canonical = "x".join(f"{letter}{r}" for letter, r in blocks)
    datum = CartanDatum(
        label=canonical,
        rank=rank,
        cartan=tuple(tuple(row) for row in a),
        coxeter=tuple(tuple(row) for row in coxeter),
    )
    datum.validate()
    return datum


_EXCEPTIONAL_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "G2": (2, 6),
}


def shipped_degrees(datum: CartanDatum) -> tuple[int, ...]:
    """Tabulated invariant degrees per type block (sorted multiset).

    Used as a cross-check against the degrees derived from enumeration, and
    for cheap group-order estimates in budget policies.
    """
    out: list[int] = []
    for letter, r in _parse_label(datum.label):
        if letter == "A":
            out.extend(range(2, r + 2))
        elif letter in ("B", "C"):
            out.extend(range(2, 2 * r + 1, 2))
        elif letter == "D":
            out.extend(range(2, 2 * r - 1, 2))
            out.append(r)
        else:
            out.extend(_EXCEPTIONAL_DEGREES[f"{letter}{r}"])
    return tuple(sorted(out))


def order_from_table(datum: CartanDatum) -> int:
    """Group order as the product of the tabulated degrees."""
    order = 1
    for d in shipped_degrees(datum):
        order *= d
    return order


def type_a_chains(datum: CartanDatum, nodes) -> ChainDecomposition:
    """Decompose a node subset into oriented simply-laced paths.

    Raises NotTypeA if the induced subdiagram has a bond of order >= 4 or a
    node with three or more neighbours inside the subset.  The diagram of a
    finite type is a forest, so the components are then necessarily paths.
    """
    subset = sorted(set(nodes))
    for i in subset:
        if not 1 <= i <= datum.rank:
            raise ValueError(f"node {i} outside 1..{datum.rank}")
    adj: dict[int, list[int]] = {i: [] for i in subset}
    for pos, i in enumerate(subset):
        for j in subset[pos + 1:]:
            order = datum.bond_order(i, j)
            if order >= 4:
                raise NotTypeA(f"bond ({i},{j}) has order {order}")
            if order == 3:
                adj[i].append(j)
                adj[j].append(i)
    for i in subset:
        if len(adj[i]) > 2:
            raise NotTypeA(f"node {i} has {len(adj[i])} neighbours in the subset")

    chains = []
    seen: set[int] = set()
    for start in subset:
        if start in seen or len(adj[start]) == 2:
            continue
        # walk the path from an endpoint (or isolated node)
        chain = [start]
        seen.add(start)
        current = start
        while True:
            nxt = [j for j in adj[current] if j not in seen]
            if not nxt:
                break
            current = nxt[0]
            chain.append(current)
            seen.add(current)
        if chain[0] > chain[-1]:
            chain.reverse()
        chains.append(tuple(chain))
    chains.sort(key=lambda c: c[0])
    return ChainDecomposition(chains=tuple(chains))
