"""Dyck paths encoded by column heights, and the local surgery producing
modular triples of paths.

A path on n steps up and n steps right is stored as the tuple
(m_1, ..., m_n) where m_i is the height of the path above column i.
Validity: the heights are non-decreasing and i <= m_i <= n.  The path
doubles as a graph on vertices 1..n (edges below the path) and as a poset
board (cells above the path).
"""

from __future__ import annotations

from typing import NamedTuple


def from_heights(heights) -> tuple[int, ...]:
    """Validate a height sequence and return it as a tuple.

    Error messages point at the offending column (1-based).
    """
    hs = tuple(heights)
    n = len(hs)
    for i, m in enumerate(hs, start=1):
        if not isinstance(m, int):
            raise ValueError(f"height at column {i} is not an integer: {m!r}")
        if m < i:
            raise ValueError(f"height {m} at column {i} is below the diagonal")
        if m > n:
            raise ValueError(f"height {m} at column {i} exceeds n={n}")
        if i > 1 and m < hs[i - 2]:
            raise ValueError(f"heights decrease at column {i}")
    return hs


def parse_heights(text: str) -> tuple[int, ...]:
    """Parse '2,2,4,4,5' into a validated height tuple; '-' or '' is n=0."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        hs = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse heights from {text!r}") from None
    return from_heights(hs)


def format_heights(gamma: tuple[int, ...]) -> str:
    if not gamma:
        return "-"
    return ",".join(str(m) for m in gamma)


def enumerate_dyck(n: int) -> list[tuple[int, ...]]:
    """All valid height tuples of size n in ascending lexicographic order."""
    if n < 0:
        raise ValueError("enumerate_dyck requires n >= 0")
    out = []

    def rec(i, prefix):
        if i > n:
            out.append(tuple(prefix))
            return
        lo = max(i, prefix[-1] if prefix else 0)
        for m in range(lo, n + 1):
            prefix.append(m)
            rec(i + 1, prefix)
            prefix.pop()

    rec(1, [])
    return out


def area(gamma: tuple[int, ...]) -> int:
    """Number of full cells between the path and the diagonal."""
    return sum(m - c for c, m in enumerate(gamma, start=1))


def area_sequence(gamma: tuple[int, ...]) -> tuple[int, ...]:
    """a_i = number of columns c < i whose height reaches row i."""
    n = len(gamma)
    return tuple(sum(1 for c in range(1, i) if gamma[c - 1] >= i)
                 for i in range(1, n + 1))


def edges(gamma: tuple[int, ...]) -> set[tuple[int, int]]:
    """Graph edges: pairs i < j with j at or below the height of column i."""
    return {(i, j)
            for i, m in enumerate(gamma, start=1)
            for j in range(i + 1, m + 1)}


def poset_cells(gamma: tuple[int, ...]) -> set[tuple[int, int]]:
    """Board cells (column i, row j): pairs i < j strictly above the path."""
    n = len(gamma)
    return {(i, j)
            for i, m in enumerate(gamma, start=1)
            for j in range(m + 1, n + 1)}


def concat(g1: tuple[int, ...], g2: tuple[int, ...]) -> tuple[int, ...]:
    """Place g2 after g1; no edges or cells connect the two blocks' graphs,
    every cross pair becomes a board cell."""
    n1 = len(g1)
    return g1 + tuple(m + n1 for m in g2)


def complete_path(k: int) -> tuple[int, ...]:
    """The height tuple (k,...,k) whose graph is the complete graph on k
    vertices and whose board is empty."""
    if k < 0:
        raise ValueError("complete_path requires k >= 0")
    return (k,) * k


class ModularTriple(NamedTuple):
    """Paths (lower, middle, upper) differing by a one-column surgery.

    kind 1 moves column `column` of middle down/up by one step; kind 2
    swaps the heights of the consecutive columns (column, column + 1).
    Always area(lower) + 1 == area(middle) == area(upper) - 1.
    """
    lower: tuple[int, ...]
    middle: tuple[int, ...]
    upper: tuple[int, ...]
    kind: int
    column: int


def _try_kind1(g1: tuple[int, ...], i: int) -> ModularTriple | None:
    n = len(g1)
    h = g1[i - 1]
    prev = g1[i - 2] if i >= 2 else 0
    nxt = g1[i] if i < n else n + 1
    if not (prev < h < nxt):
        return None
    if h + 1 > n:
        return None
    if g1[h - 1] != g1[h]:
        return None
    g0 = list(g1)
    g0[i - 1] -= 1
    g2 = list(g1)
    g2[i - 1] += 1
    try:
        lower = from_heights(g0)
        upper = from_heights(g2)
    except ValueError:
        return None
    return ModularTriple(lower, g1, upper, 1, i)


def _try_kind2(g1: tuple[int, ...], i: int) -> ModularTriple | None:
    a, b = g1[i - 1], g1[i]
    if a + 1 != b:
        return None
    if i in g1:
        return None
    g0 = list(g1)
    g0[i] = a
    g2 = list(g1)
    g2[i - 1] = b
    try:
        lower = from_heights(g0)
        upper = from_heights(g2)
    except ValueError:
        return None
    return ModularTriple(lower, g1, upper, 2, i)


def modular_triples(n: int) -> list[ModularTriple]:
    """All modular triples among paths of size n, ordered by middle path
    (ascending lex), then kind, then column."""
    out = []
    for g1 in enumerate_dyck(n):
        for i in range(1, n + 1):
            t = _try_kind1(g1, i)
            if t is not None:
                out.append(t)
        for i in range(1, n):
            t = _try_kind2(g1, i)
            if t is not None:
                out.append(t)
    return out
