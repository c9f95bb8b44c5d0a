"""Graded characters of the coinvariant algebra, two independent ways.

The combinatorial route sums per-element weights over the length levels of
the group.  The oracle route expands the graded trace series

    sum_k chi^k(w) q^k  =  prod_i (1 - q^{d_i}) / det(1 - q M_w)

on the reflection representation, in exact integer arithmetic.  The degrees
d_i are recovered by factoring the enumerated Poincare polynomial into
q-integers (the shipped per-type table is a cross-check, not the source).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cartan import CartanDatum, shipped_degrees
from .graded import GradedCharacter
from .parabolic import MuPacking, all_packings, v_mu, weight_mu
from .typea import validate_partition
from .weyl import DEFAULT_BUDGET, WeylElement, weyl_group

__all__ = [
    "FactorizationFailed",
    "GradedCharacter",
    "poincare_polynomial",
    "degrees",
    "molien_character",
    "theorem4_character",
    "packable_partitions",
    "Theorem4Report",
    "verify_theorem4",
]


class FactorizationFailed(RuntimeError):
    """Poincare polynomial did not factor into q-integers as expected
    (signals an enumeration bug, not bad user input)."""


# -- univariate integer polynomials, little-endian coefficient lists --------


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return out


def _poly_sub(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] -= b
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _qint(d: int) -> list[int]:
    return [1] * d


def _divide_exact(p: list[int], divisor: list[int]) -> list[int] | None:
    """Exact descending long division; None when the division has remainder.
    The divisor must have leading coefficient 1."""
    assert divisor[-1] == 1
    rem = list(p)
    deg_div = len(divisor) - 1
    if len(rem) - 1 < deg_div:
        return None
    quot = [0] * (len(rem) - deg_div)
    for k in range(len(quot) - 1, -1, -1):
        coeff = rem[k + deg_div]
        if coeff == 0:
            continue
        quot[k] = coeff
        for i, d in enumerate(divisor):
            rem[k + i] -= coeff * d
    if any(rem):
        return None
    return quot


def poincare_polynomial(datum: CartanDatum, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Level sizes of the group, i.e. the coefficients of the Poincare polynomial."""
    return weyl_group(datum).level_sizes(budget)


def _factor_qintegers(poly: tuple[int, ...]) -> tuple[int, ...] | None:
    """Multiset of d with poly = prod [d]_q, by trial division with backtracking."""
    if list(poly) == [1]:
        return ()
    deg = len(poly) - 1
    for d in range(2, deg + 2):
        quotient = _divide_exact(list(poly), _qint(d))
        if quotient is None:
            continue
        rest = _factor_qintegers(tuple(quotient))
        if rest is not None:
            return (d,) + rest
    return None


@lru_cache(maxsize=None)
def _degrees_cached(datum: CartanDatum, budget: int) -> tuple[int, ...]:
    poly = poincare_polynomial(datum, budget)
    factored = _factor_qintegers(poly)
    if factored is None:
        raise FactorizationFailed(
            f"Poincare polynomial of {datum.label!r} is not a product of q-integers"
        )
    result = tuple(sorted(factored))
    shipped = shipped_degrees(datum)
    if result != shipped:
        raise FactorizationFailed(
            f"degrees {result} from enumeration disagree with table {shipped}"
        )
    return result


def degrees(datum: CartanDatum, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Invariant degrees, derived from the enumerated Poincare polynomial."""
    return _degrees_cached(datum, budget)


# -- the graded trace oracle -------------------------------------------------


def _det_one_minus_q(matrix) -> list[int]:
    """det(I - q M) as an integer polynomial, by memoized Laplace expansion."""
    n = len(matrix)
    entries = [
        [
            [(1 if i == j else 0), -matrix[i][j]]
            for j in range(n)
        ]
        for i in range(n)
    ]
    memo: dict[tuple[int, ...], list[int]] = {}

    def minor(cols: tuple[int, ...]) -> list[int]:
        if not cols:
            return [1]
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = n - len(cols)
        acc = [0]
        sign = 1
        for pos, j in enumerate(cols):
            rest = cols[:pos] + cols[pos + 1:]
            term = _poly_mul(entries[row][j], minor(rest))
            if sign < 0:
                term = [-c for c in term]
            acc = _poly_add(acc, term)
            sign = -sign
        memo[cols] = acc
        return acc

    det = minor(tuple(range(n)))
    det += [0] * (n + 1 - len(det))
    return det


def molien_character(
    datum: CartanDatum, w: WeylElement, budget: int = DEFAULT_BUDGET
) -> GradedCharacter:
    """Graded trace of w, by exact series division of the trace identity.

    The quotient terminates at degree N (number of positive roots) with
    integer coefficients; anything else is an internal error.
    """
    group = weyl_group(datum)
    n_top = group.num_positive_roots
    numerator = [1]
    for d in degrees(datum, budget):
        factor = [0] * (d + 1)
        factor[0] = 1
        factor[d] = -1
        numerator = _poly_mul(numerator, factor)
    denominator = _det_one_minus_q(w.matrix)
    assert denominator[0] == 1

    quotient = [0] * (n_top + 1)
    for k in range(n_top + 1):
        value = numerator[k] if k < len(numerator) else 0
        for j in range(1, min(k, len(denominator) - 1) + 1):
            value -= denominator[j] * quotient[k - j]
        quotient[k] = value
    # termination check: quotient * denominator must reproduce the numerator
    if any(_poly_sub(_poly_mul(quotient, denominator), numerator)):
        raise AssertionError("graded trace series did not terminate exactly")

    character = GradedCharacter(values=tuple(quotient))
    character.validate(group.order(budget))
    return character


# -- the combinatorial side ---------------------------------------------------


def theorem4_character(
    datum: CartanDatum,
    packing: MuPacking,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> GradedCharacter:
    """Level-by-level sum of the packing's weight over the whole group.

    Levels are independent; with threads > 1 they are summed concurrently
    and collected in level order, so the output is identical to the
    single-threaded reference path.
    """
    group = weyl_group(datum)
    levels = group.levels(budget)

    def level_sum(level) -> int:
        return sum(weight_mu(w, packing, group) for w in level.elements)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = tuple(pool.map(level_sum, levels))
    else:
        values = tuple(level_sum(level) for level in levels)
    character = GradedCharacter(values=values)
    character.validate(group.order(budget))
    return character


@lru_cache(maxsize=None)
def packable_partitions(datum: CartanDatum) -> tuple[tuple[int, ...], ...]:
    """Canonical list of packable cycle types: the trivial type (1,) plus
    every partition with all parts >= 2 admitting at least one packing.
    Appending parts of size 1 never changes the character, so only the
    reduced forms are enumerated."""
    from .parabolic import _simple_paths

    max_part = 1
    while _simple_paths(datum, max_part):
        max_part += 1
    found: list[tuple[int, ...]] = []

    def build(prefix: list[int], largest: int, budget: int) -> None:
        if prefix:
            candidate = tuple(prefix)
            if all_packings(datum, candidate):
                found.append(candidate)
        for part in range(min(largest, budget + 1), 1, -1):
            prefix.append(part)
            build(prefix, part, budget - (part - 1))
            prefix.pop()

    build([], max_part, datum.rank)
    ordered = sorted(set(found), key=lambda parts: (sum(parts), parts))
    return ((1,),) + tuple(ordered)


@dataclass
class Theorem4Report:
    type_label: str
    rows: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row["match"] for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "type": self.type_label,
            "passed": self.passed,
            "cases": self.rows,
        }


def verify_theorem4(
    datum: CartanDatum, mus=None, budget: int = DEFAULT_BUDGET
) -> Theorem4Report:
    """Compare the combinatorial character with the graded trace oracle,
    coefficient by coefficient, over every packing of the given cycle types
    (default: all packable ones)."""
    group = weyl_group(datum)
    if mus is None:
        mu_list = packable_partitions(datum)
    else:
        mu_list = [validate_partition(mu) for mu in mus]
    report = Theorem4Report(type_label=datum.label)
    for mu in mu_list:
        packings = all_packings(datum, mu)
        if not packings:
            report.rows.append(
                {
                    "mu": list(mu),
                    "packing": None,
                    "match": False,
                    "error": "unpackable",
                }
            )
            continue
        for packing in packings:
            combinatorial = theorem4_character(datum, packing, budget)
            oracle = molien_character(datum, v_mu(packing, group), budget)
            report.rows.append(
                {
                    "mu": list(mu),
                    "packing": [list(c) for c in packing.chains],
                    "theorem4": list(combinatorial),
                    "molien": list(oracle),
                    "match": combinatorial.values == oracle.values,
                }
            )
    return report
