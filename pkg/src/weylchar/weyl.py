"""Weyl group elements as integer matrices on the root lattice.

An element is stored row-major; column j holds the simple-root coordinates
of the image of the j-th simple root.  Length is the number of positive
roots sent negative and is cached on the element.  Enumeration proceeds
level by level (breadth-first over right multiplication by simple
reflections, keeping only length-increasing steps) with the row-major
matrix tuple as the deduplication key.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanDatum, order_from_table
from .roots import RootVector, positive_roots, root_table

__all__ = [
    "WeylElement",
    "Level",
    "WeylGroup",
    "BudgetExceeded",
    "weyl_group",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    """Group enumeration would exceed the configured element budget."""


Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    length: int

    @property
    def key(self) -> tuple[int, ...]:
        """Row-major integer sequence, the canonical deduplication key."""
        return tuple(x for row in self.matrix for x in row)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"WeylElement(length={self.length}, matrix={self.matrix})"


@dataclass(frozen=True)
class Level:
    k: int
    elements: tuple[WeylElement, ...]


class WeylGroup:
    """Group arithmetic, enumeration and coset decomposition for one datum."""

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.rank = datum.rank
        self.roots = positive_roots(datum)
        self.num_positive_roots = len(self.roots)
        self._table = root_table(datum)
        self._root_coords = [rv.root for rv in self.roots]
        self._levels: tuple[Level, ...] | None = None
        n = self.rank
        self.identity = WeylElement(
            matrix=tuple(
                tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
            ),
            length=0,
        )

    # -- basic arithmetic ---------------------------------------------------

    def simple_reflection(self, i: int) -> WeylElement:
        """The reflection in the i-th simple root (1-based)."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple reflection index {i} outside 1..{self.rank}")
        a = self.datum.cartan
        n = self.rank
        k = i - 1
        rows = tuple(
            tuple(
                (1 if r == j else 0) - (a[j][k] if r == k else 0)
                for j in range(n)
            )
            for r in range(n)
        )
        return WeylElement(matrix=rows, length=1)

    def _mat_mul(self, m1: Matrix, m2: Matrix) -> Matrix:
        n = self.rank
        return tuple(
            tuple(sum(m1[r][k] * m2[k][j] for k in range(n)) for j in range(n))
            for r in range(n)
        )

    def _mat_apply(self, m: Matrix, coords) -> tuple[int, ...]:
        n = self.rank
        return tuple(sum(m[r][k] * coords[k] for k in range(n)) for r in range(n))

    def length_of_matrix(self, m: Matrix) -> int:
        count = 0
        for coords in self._root_coords:
            image = self._mat_apply(m, coords)
            if any(x < 0 for x in image):
                count += 1
        return count

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        if len(u.matrix) != self.rank or len(v.matrix) != self.rank:
            raise ValueError("rank mismatch in multiplication")
        m = self._mat_mul(u.matrix, v.matrix)
        return WeylElement(matrix=m, length=self.length_of_matrix(m))

    def inverse(self, w: WeylElement) -> WeylElement:
        word = self.reduced_word(w)
        return self.from_word(reversed(word))

    def apply(self, w: WeylElement, alpha: RootVector) -> RootVector:
        """Image of a root, with coroot coordinates resolved from the table."""
        image = self._mat_apply(w.matrix, alpha.root)
        if all(x >= 0 for x in image):
            return self._table[image]
        negative = tuple(-x for x in image)
        if all(x >= 0 for x in negative):
            return self._table[negative].negated()
        raise ValueError("matrix does not permute the root set up to sign")

    # -- descents, words ----------------------------------------------------

    def right_descent(self, w: WeylElement, i: int) -> bool:
        """True iff multiplying by s_i on the right shortens w."""
        col = i - 1
        return any(row[col] < 0 for row in w.matrix)

    def mult_right_simple(self, w: WeylElement, i: int) -> WeylElement:
        """w * s_i with the length adjusted by the descent test (cheap)."""
        a = self.datum.cartan
        n = self.rank
        k = i - 1
        delta = -1 if self.right_descent(w, i) else 1
        rows = tuple(
            tuple(row[j] - a[j][k] * row[k] for j in range(n)) for row in w.matrix
        )
        return WeylElement(matrix=rows, length=w.length + delta)

    def from_word(self, word) -> WeylElement:
        w = self.identity
        for i in word:
            w = self.mult_right_simple(w, i)
        return w

    def reduced_word(self, w: WeylElement) -> tuple[int, ...]:
        """Reduced word by greedy stripping of the smallest right descent."""
        letters = []
        current = w
        while current.length > 0:
            for i in range(1, self.rank + 1):
                if self.right_descent(current, i):
                    current = self.mult_right_simple(current, i)
                    letters.append(i)
                    break
            else:  # pragma: no cover - impossible for valid elements
                raise RuntimeError("element of positive length with no descent")
        return tuple(reversed(letters))

    # -- reflections ----------------------------------------------------------

    def reflection_of_root(self, alpha: RootVector) -> WeylElement:
        """The reflection t_alpha sending beta to beta - <beta, coroot(alpha)> alpha."""
        if alpha.root not in self._table:
            raise ValueError("reflection requires a positive root of this system")
        a = self.datum.cartan
        n = self.rank
        c, d = alpha.root, alpha.coroot
        # <alpha_j, coroot(alpha)> for each simple root alpha_j
        pair = [sum(a[j][k] * d[k] for k in range(n)) for j in range(n)]
        rows = tuple(
            tuple((1 if r == j else 0) - pair[j] * c[r] for j in range(n))
            for r in range(n)
        )
        return WeylElement(matrix=rows, length=self.length_of_matrix(rows))

    # -- enumeration ----------------------------------------------------------

    def levels(self, budget: int = DEFAULT_BUDGET) -> tuple[Level, ...]:
        """All elements grouped by length, k = 0 .. number of positive roots."""
        if self._levels is not None:
            if sum(len(level.elements) for level in self._levels) > budget:
                raise BudgetExceeded(
                    f"group {self.datum.label!r} has more than {budget} elements"
                )
            return self._levels
        # refuse upfront from the tabulated order; the enumeration itself
        # re-checks the budget as it grows, independently of the table
        expected = order_from_table(self.datum)
        if expected > budget:
            raise BudgetExceeded(
                f"group {self.datum.label!r} has {expected} elements, "
                f"over the budget of {budget}"
            )
        total = 1
        current = {self.identity.matrix: self.identity}
        levels = [Level(0, (self.identity,))]
        k = 0
        while True:
            nxt: dict[Matrix, WeylElement] = {}
            for w in current.values():
                for i in range(1, self.rank + 1):
                    if self.right_descent(w, i):
                        continue
                    image = self.mult_right_simple(w, i)
                    nxt.setdefault(image.matrix, image)
            if not nxt:
                break
            total += len(nxt)
            if total > budget:
                raise BudgetExceeded(
                    f"enumeration of {self.datum.label!r} exceeded budget {budget}"
                )
            k += 1
            ordered = tuple(
                nxt[m] for m in sorted(nxt.keys())
            )
            levels.append(Level(k, ordered))
            current = nxt
        self._levels = tuple(levels)
        return self._levels

    def level_sizes(self, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
        return tuple(len(level.elements) for level in self.levels(budget))

    def order(self, budget: int = DEFAULT_BUDGET) -> int:
        return sum(self.level_sizes(budget))

    def elements(self, budget: int = DEFAULT_BUDGET):
        for level in self.levels(budget):
            yield from level.elements

    def longest_element(self, budget: int = DEFAULT_BUDGET) -> WeylElement:
        top = self.levels(budget)[-1]
        assert len(top.elements) == 1
        return top.elements[0]

    # -- parabolic decomposition ----------------------------------------------

    def coset_decompose(self, w: WeylElement, nodes) -> tuple[WeylElement, WeylElement]:
        """Split w = r * pi with pi in the parabolic on `nodes` and r minimal.

        Strips right descents lying in `nodes` one at a time, prepending the
        stripped letter to pi; lengths are additive by construction.
        """
        subset = sorted(set(nodes))
        for j in subset:
            if not 1 <= j <= self.rank:
                raise ValueError(f"node {j} outside 1..{self.rank}")
        strips: list[int] = []
        current = w
        stripped = True
        while stripped:
            stripped = False
            for j in subset:
                if self.right_descent(current, j):
                    current = self.mult_right_simple(current, j)
                    strips.append(j)
                    stripped = True
                    break
        pi = self.from_word(reversed(strips))
        return current, pi

    def install_levels(self, levels: tuple[Level, ...]) -> None:
        """Adopt a previously enumerated (e.g. cached) level decomposition."""
        if not levels or levels[0].elements != (self.identity,):
            raise ValueError("invalid level data")
        if len(levels) != self.num_positive_roots + 1:
            raise ValueError("level count does not match the root system")
        self._levels = levels


@lru_cache(maxsize=None)
def weyl_group(datum: CartanDatum) -> WeylGroup:
    """Shared per-datum group instance (levels are cached on it)."""
    return WeylGroup(datum)
