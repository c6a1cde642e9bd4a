"""Partitions, tableaux, multisets and the classical symmetric-group data.

Partitions are plain tuples of positive integers in weakly decreasing order.
Tableaux are tuples of rows.  Indexing past the last part of a partition
reads as zero, so ``part(la, m)`` is ``lambda_{m+1}`` for every ``m``.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .qscalar import ONE, QScalar, qfact_z

__all__ = [
    "Partition",
    "Tableau",
    "partitions",
    "as_partition",
    "conjugate",
    "part",
    "size",
    "in_hmn",
    "hook_partitions",
    "hook_lengths",
    "num_syt",
    "standard_tableaux",
    "row_tableau",
    "column_tableau",
    "tableau_shape",
    "entry_position",
    "content_of",
    "swap_entries",
    "remove_largest",
    "is_standard",
    "is_super_semistandard",
    "super_tableaux",
    "parity",
    "multisets",
    "multiset_from_composition",
    "composition_of",
    "weak_compositions",
    "multiset_splits",
    "alpha_factors",
    "kostka",
    "kostka_matrix",
    "inverse_kostka",
    "lr_coefficient",
    "sn_character",
    "cycle_type",
    "theta_map",
    "format_partition",
    "parse_partition",
    "format_tableau",
    "parse_tableau",
]

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


# ----------------------------------------------------------------------
# partitions

def as_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts if p)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not weakly decreasing")
    return parts


@lru_cache(maxsize=None)
def partitions(r: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``r`` in reverse lexicographic order."""
    if max_part is None:
        max_part = r
    if r == 0:
        return ((),)
    out = []
    for first in range(min(r, max_part), 0, -1):
        for rest in partitions(r - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(la: Sequence[int]) -> Partition:
    la = [p for p in la if p]
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > j) for j in range(la[0]))


def part(la: Sequence[int], i: int) -> int:
    """``lambda_{i+1}`` with zero padding (0-based index)."""
    return la[i] if 0 <= i < len(la) else 0


def size(la: Sequence[int]) -> int:
    return sum(la)


def in_hmn(la: Sequence[int], m: int, n: int) -> bool:
    """Whether ``la`` lies in the (m, n)-hook: ``lambda_{m+1} <= n``."""
    return part(la, m) <= n


def hook_partitions(r: int, m: int, n: int) -> list[Partition]:
    return [la for la in partitions(r) if in_hmn(la, m, n)]


def hook_lengths(la: Sequence[int]) -> dict[tuple[int, int], int]:
    conj = conjugate(la)
    return {(i, j): (la[i] - j - 1) + (conj[j] - i - 1) + 1
            for i in range(len(la)) for j in range(la[i])}


def num_syt(la: Sequence[int]) -> int:
    """Number of standard tableaux by the hook-length formula."""
    prod = 1
    for h in hook_lengths(la).values():
        prod *= h
    return factorial(sum(la)) // prod


# ----------------------------------------------------------------------
# standard tableaux

@lru_cache(maxsize=None)
def standard_tableaux(la: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of shape ``la``, built by adding ``r`` last."""
    la = as_partition(la)
    r = sum(la)
    if r == 0:
        return ((),)
    out = []
    for i in range(len(la)):
        if part(la, i) > part(la, i + 1):
            smaller = list(la)
            smaller[i] -= 1
            for t in standard_tableaux(as_partition(smaller)):
                rows = [list(row) for row in t]
                while len(rows) <= i:
                    rows.append([])
                rows[i].append(r)
                out.append(tuple(tuple(row) for row in rows))
    out.sort(key=_reading_key)
    return tuple(out)


def _reading_key(t: Tableau) -> tuple[int, ...]:
    return tuple(x for row in t for x in row)


def row_tableau(la: Sequence[int]) -> Tableau:
    """Fill the rows of ``la`` left to right, top to bottom."""
    out, k = [], 1
    for p in la:
        out.append(tuple(range(k, k + p)))
        k += p
    return tuple(out)


def column_tableau(la: Sequence[int]) -> Tableau:
    """Fill the columns of ``la`` top to bottom, left to right."""
    conj = conjugate(la)
    rows = [[0] * p for p in la]
    k = 1
    for j, h in enumerate(conj):
        for i in range(h):
            rows[i][j] = k
            k += 1
    return tuple(tuple(row) for row in rows)


def tableau_shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t if row)


def entry_position(t: Tableau, k: int) -> tuple[int, int]:
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            if x == k:
                return i, j
    raise KeyError(k)


def content_of(t: Tableau, k: int) -> int:
    """Content ``column - row`` of the box holding ``k``."""
    i, j = entry_position(t, k)
    return j - i


def is_standard(t: Tableau) -> bool:
    r = sum(len(row) for row in t)
    if sorted(x for row in t for x in row) != list(range(1, r + 1)):
        return False
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            if j + 1 < len(row) and row[j + 1] <= x:
                return False
            if i + 1 < len(t) and j < len(t[i + 1]) and t[i + 1][j] <= x:
                return False
    return True


def swap_entries(t: Tableau, a: int) -> Tableau | None:
    """Swap ``a`` and ``a+1``; ``None`` when the result is not standard."""
    def f(x: int) -> int:
        return a + 1 if x == a else a if x == a + 1 else x
    s = tuple(tuple(f(x) for x in row) for row in t)
    return s if is_standard(s) else None


def remove_largest(t: Tableau) -> Tableau:
    r = sum(len(row) for row in t)
    rows = [tuple(x for x in row if x != r) for row in t]
    return tuple(row for row in rows if row)


# ----------------------------------------------------------------------
# supertableaux

def parity(i: int, m: int) -> int:
    """Parity of the basis index ``i`` (1-based): 0 for ``i <= m``."""
    return 0 if i <= m else 1


def is_super_semistandard(t: Sequence[Sequence[int]], m: int) -> bool:
    """Rows and columns weakly increase; entries ``<= m`` strictly down
    columns; entries ``> m`` strictly along rows."""
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            if j + 1 < len(row):
                y = row[j + 1]
                if y < x or (y == x and x > m):
                    return False
            if i + 1 < len(t) and j < len(t[i + 1]):
                y = t[i + 1][j]
                if y < x or (y == x and x <= m):
                    return False
    return True


@lru_cache(maxsize=None)
def super_tableaux(la: Partition, m: int, n: int) -> tuple[Tableau, ...]:
    """All semistandard supertableaux of shape ``la`` over ``[m+n]``."""
    la = as_partition(la)
    cells = [(i, j) for i in range(len(la)) for j in range(la[i])]
    out = []
    grid: dict[tuple[int, int], int] = {}

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(tuple(tuple(grid[(i, j)] for j in range(la[i])) for i in range(len(la))))
            return
        i, j = cells[k]
        for x in range(1, m + n + 1):
            if j > 0:
                left = grid[(i, j - 1)]
                if x < left or (x == left and x > m):
                    continue
            if i > 0:
                up = grid[(i - 1, j)]
                if x < up or (x == up and x <= m):
                    continue
            grid[(i, j)] = x
            fill(k + 1)
        grid.pop((i, j), None)

    fill(0)
    return tuple(out)


# ----------------------------------------------------------------------
# multisets and compositions

def multisets(N: int, r: int) -> list[tuple[int, ...]]:
    """Non-decreasing ``r``-tuples over ``[N]``."""
    return list(itertools.combinations_with_replacement(range(1, N + 1), r))


def weak_compositions(N: int, r: int) -> list[tuple[int, ...]]:
    """Weak ``N``-compositions of ``r``, lexicographically decreasing."""
    if N == 0:
        return [()] if r == 0 else []
    if N == 1:
        return [(r,)]
    out = []
    for a in range(r, -1, -1):
        for rest in weak_compositions(N - 1, r - a):
            out.append((a,) + rest)
    return out


def multiset_from_composition(mu: Sequence[int]) -> tuple[int, ...]:
    """``(1^mu_1, 2^mu_2, ...)`` as a sorted tuple."""
    return tuple(i + 1 for i, a in enumerate(mu) for _ in range(a))


def composition_of(I: Sequence[int], N: int) -> tuple[int, ...]:
    c = Counter(I)
    return tuple(c.get(i, 0) for i in range(1, N + 1))


def multiset_splits(I: Sequence[int], sizes: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Sequences ``(I_1, ..., I_l)`` of sorted multisets with ``|I_j| = sizes[j]``
    whose multiset union is ``I``."""
    if sum(sizes) != len(I):
        raise ValueError("sizes must add up to |I|")
    counts = Counter(I)

    def rec(counts: Counter, k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == len(sizes):
            yield ()
            return
        keys = sorted(c for c in counts if counts[c])
        for sub in _sub_multisets(keys, counts, sizes[k]):
            rest = counts.copy()
            rest.subtract(Counter(sub))
            for tail in rec(rest, k + 1):
                yield (sub,) + tail

    return list(rec(counts, 0))


def _sub_multisets(keys: list[int], counts: Counter, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    if not keys:
        return
    head, rest = keys[0], keys[1:]
    for take in range(min(counts[head], k), -1, -1):
        for tail in _sub_multisets(rest, counts, k - take):
            yield (head,) * take + tail


def alpha_factors(I: Sequence[int], m: int, n: int) -> tuple[int, QScalar]:
    """``(alpha(I), alpha_{q^2}(I))`` for a multiset over ``[m+n]``.

    ``alpha(I)`` is the product of multiplicity factorials; the q-version
    replaces ``a!`` by ``(a)_{p}!`` with ``p = q^2`` for even indices and
    ``p = q^-2`` for odd ones.
    """
    counts = Counter(I)
    plain, quantum = 1, ONE
    for i, a in counts.items():
        if not 1 <= i <= m + n:
            raise ValueError(f"index {i} outside [1, {m + n}]")
        plain *= factorial(a)
        quantum = quantum * qfact_z(a, 2 * (1 - 2 * parity(i, m)))
    return plain, quantum


# ----------------------------------------------------------------------
# Kostka numbers and their inverse

def kostka(la: Sequence[int], mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``la`` and content ``mu``."""
    la = as_partition(la)
    mu = tuple(mu)
    if sum(la) != sum(mu):
        raise ValueError("size mismatch")
    count = 0
    for t in super_tableaux(la, len(mu), 0):
        if composition_of([x for row in t for x in row], len(mu)) == mu:
            count += 1
    return count


def kostka_matrix(r: int) -> tuple[list[Partition], list[list[int]]]:
    parts = list(partitions(r))
    return parts, [[kostka(la, mu) for mu in parts] for la in parts]


@lru_cache(maxsize=None)
def _jacobi_trudi_h_expansion(la: Partition) -> dict[Partition, int]:
    """Coefficients of ``h_mu`` in ``s_la = det(h_{la_i - i + j})``."""
    ell = len(la)
    out: Counter = Counter()
    for perm in itertools.permutations(range(ell)):
        idx = [la[i] - i + perm[i] for i in range(ell)]
        if any(k < 0 for k in idx):
            continue
        sign = _perm_sign(perm)
        out[as_partition(sorted((k for k in idx if k), reverse=True))] += sign
    return {mu: c for mu, c in out.items() if c}


def inverse_kostka(la: Sequence[int], mu: Sequence[int]) -> int:
    """Coefficient of ``h_mu`` in the Schur function ``s_la``.

    This is the ``(mu, la)`` entry of the inverse Kostka matrix, read as the
    Schur-to-complete-homogeneous transition.
    """
    la, mu = as_partition(la), as_partition(mu)
    if sum(la) != sum(mu):
        raise ValueError("size mismatch")
    return _jacobi_trudi_h_expansion(la).get(mu, 0)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ----------------------------------------------------------------------
# Littlewood-Richardson coefficients

def lr_coefficient(mu: Sequence[int], nu: Sequence[int], la: Sequence[int]) -> int:
    """``c^la_{mu nu}``: the number of LR tableaux of shape ``la/mu`` and
    content ``nu`` (semistandard, reverse reading word is a lattice word)."""
    mu, nu, la = as_partition(mu), as_partition(nu), as_partition(la)
    if sum(mu) + sum(nu) != sum(la):
        raise ValueError("size mismatch: |mu| + |nu| must equal |la|")
    if len(mu) > len(la) or any(part(mu, i) > la[i] for i in range(len(la))):
        return 0
    # cells of la/mu in reverse reading order (rows top-down, right to left)
    cells = [(i, j) for i in range(len(la)) for j in range(la[i] - 1, part(mu, i) - 1, -1)]
    grid: dict[tuple[int, int], int] = {}
    used = [0] * (len(nu) + 1)
    count = 0

    def fill(k: int) -> None:
        nonlocal count
        if k == len(cells):
            count += 1
            return
        i, j = cells[k]
        for x in range(1, len(nu) + 1):
            if used[x] >= nu[x - 1]:
                continue
            if x > 1 and used[x] + 1 > used[x - 1]:
                continue
            right = grid.get((i, j + 1))
            if right is not None and right < x:
                continue
            up = grid.get((i - 1, j))
            if up is not None and up >= x:
                continue
            grid[(i, j)] = x
            used[x] += 1
            fill(k + 1)
            used[x] -= 1
            del grid[(i, j)]

    fill(0)
    return count


# ----------------------------------------------------------------------
# symmetric group characters

def cycle_type(perm: Sequence[int]) -> Partition:
    """Cycle type of a permutation in one-line notation (values 1..r)."""
    r = len(perm)
    seen = [False] * r
    lengths = []
    for i in range(r):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def _mn(beta: frozenset, rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        if b - k >= 0 and (b - k) not in beta:
            between = sum(1 for c in beta if b - k < c < b)
            total += (-1) ** between * _mn(beta - {b} | {b - k}, rest)
    return total


def sn_character(la: Sequence[int], rho: Sequence[int]) -> int:
    """Murnaghan-Nakayama value of ``chi^la`` on cycle type ``rho``.

    Rim hooks are removed on the beta-set (abacus) of ``la``: a hook of
    length ``k`` moves one bead down by ``k`` and contributes ``(-1)^height``.
    """
    la, rho = as_partition(la), as_partition(rho)
    if sum(la) != sum(rho):
        raise ValueError("size mismatch")
    ell = len(la)
    beta = frozenset(la[i] + ell - 1 - i for i in range(ell))
    return _mn(beta, rho)


# ----------------------------------------------------------------------
# theta map

def theta_map(t: Tableau, mu: Sequence[int], m: int) -> tuple[Tableau, bool]:
    """Relabel node ``k`` of ``t`` by the ``k``-th entry of the sorted
    multiset of ``mu``; also report whether the result is a supertableau."""
    I = multiset_from_composition(mu)
    r = sum(len(row) for row in t)
    if len(I) != r:
        raise ValueError("|mu| must equal the number of boxes")
    out = tuple(tuple(I[x - 1] for x in row) for row in t)
    return out, is_super_semistandard(out, m)


# ----------------------------------------------------------------------
# text forms

def format_partition(la: Sequence[int]) -> str:
    return ",".join(str(p) for p in la)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(x) for x in text.split(","))


def format_tableau(t: Tableau) -> str:
    return json.dumps([list(row) for row in t], separators=(",", ":"))


def parse_tableau(text: str) -> Tableau:
    return tuple(tuple(int(x) for x in row) for row in json.loads(text))
