"""Standalone symmetric-group machinery: inversions, the signed V-shape
statistic, Young-block decompositions and the graded character they sum to.

Permutations are tuples in one-line notation with values 1..n.  The fixed
composition convention is (sigma . tau)(i) = sigma(tau(i)); "w = r . pi"
decompositions use this order, and additivity of the inversion number under
the decomposition is the coherence test for the choice.
"""

from __future__ import annotations

import itertools

from .graded import GradedCharacter

__all__ = [
    "Permutation",
    "identity_perm",
    "compose",
    "inverse_perm",
    "inversions",
    "all_permutations",
    "m_statistic",
    "validate_partition",
    "young_decompose",
    "weight_mu_perm",
    "chi_typea",
    "DEFAULT_N_BOUND",
]

Permutation = tuple[int, ...]

DEFAULT_N_BOUND = 8


def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(s: Permutation, t: Permutation) -> Permutation:
    """(s . t)(i) = s(t(i))."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse_perm(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def inversions(p: Permutation) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def all_permutations(n: int):
    return itertools.permutations(range(1, n + 1))


def m_statistic(p: Permutation) -> int:
    """Signed indicator of V-shaped one-line notation.

    Returns (-1)**m when the entries strictly decrease through position
    m + 1 and strictly increase afterwards, and 0 when no such m exists.
    The valid m is unique: position of the minimum entry, minus one.

    >>> m_statistic((1, 2, 3))
    1
    >>> m_statistic((3, 2, 1))
    1
    >>> m_statistic((3, 1, 2))
    -1
    >>> m_statistic((2, 3, 1))
    0
    """
    pos = p.index(min(p))
    for i in range(pos):
        if p[i] <= p[i + 1]:
            return 0
    for i in range(pos, len(p) - 1):
        if p[i] >= p[i + 1]:
            return 0
    return -1 if pos % 2 else 1


def validate_partition(mu, n: int | None = None) -> tuple[int, ...]:
    """Check weakly decreasing positive parts; optionally that they sum to n."""
    parts = tuple(int(x) for x in mu)
    if not parts or any(x <= 0 for x in parts):
        raise ValueError(f"partition parts must be positive, got {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
    if n is not None and sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    return parts


def _blocks(mu: tuple[int, ...]) -> list[range]:
    starts = [0]
    for part in mu:
        starts.append(starts[-1] + part)
    return [range(starts[i], starts[i + 1]) for i in range(len(mu))]


def young_decompose(p: Permutation, mu) -> tuple[Permutation, list[Permutation]]:
    """Split p = r . (p_1 x ... x p_t) over consecutive blocks of sizes mu.

    r is the minimal-length coset representative (increasing on every
    block); each factor p_i is re-indexed to a permutation of 1..mu_i.

    >>> young_decompose((3, 1, 2), (2, 1))
    ((1, 3, 2), [(2, 1), (1,)])
    >>> young_decompose((2, 1, 3), (2, 1))
    ((1, 2, 3), [(2, 1), (1,)])
    """
    n = len(p)
    parts = validate_partition(mu, n)
    blocks = _blocks(parts)
    r = [0] * n
    for block in blocks:
        for pos, value in zip(block, sorted(p[i] for i in block)):
            r[pos] = value
    r_t = tuple(r)
    sigma = compose(inverse_perm(r_t), p)
    factors = []
    for block in blocks:
        offset = block.start
        factor = tuple(sigma[i] - offset for i in block)
        if sorted(factor) != list(range(1, len(factor) + 1)):
            raise AssertionError("block part of the decomposition left its block")
        factors.append(factor)
    return r_t, factors


def weight_mu_perm(p: Permutation, mu) -> int:
    """Product of the V-shape statistic over the Young-block factors of p.

    >>> weight_mu_perm((3, 1, 2), (2, 1))
    -1
    >>> weight_mu_perm((2, 3, 1), (3,))
    0
    """
    _, factors = young_decompose(p, mu)
    weight = 1
    for factor in factors:
        weight *= m_statistic(factor)
        if weight == 0:
            return 0
    return weight


def chi_typea(
    n: int, mu, bound: int = DEFAULT_N_BOUND, threads: int = 1
) -> GradedCharacter:
    """Graded character at cycle type mu by brute force over all of S_n,
    grouping the weights by inversion number.

    The sum is embarrassingly parallel; threads > 1 splits S_n into
    contiguous chunks whose partial histograms are added in chunk order,
    reproducing the single-threaded reference output exactly.
    """
    if n > bound:
        raise ValueError(f"n = {n} exceeds the configured bound {bound}")
    parts = validate_partition(mu, n)
    top = n * (n - 1) // 2

    def histogram(perms) -> list[int]:
        values = [0] * (top + 1)
        for p in perms:
            w = weight_mu_perm(p, parts)
            if w:
                values[inversions(p)] += w
        return values

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        perms = list(all_permutations(n))
        size = (len(perms) + threads - 1) // threads
        chunks = [perms[k: k + size] for k in range(0, len(perms), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(histogram, chunks))
        values = [sum(col) for col in zip(*partials)]
    else:
        values = histogram(all_permutations(n))
    return GradedCharacter(values=tuple(values))
