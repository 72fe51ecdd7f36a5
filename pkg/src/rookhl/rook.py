"""Linked rook placements on the board above a path, their chain structure,
and the free-cell statistic.

A placement is a set of board cells, no two in the same column and no two
in the same row.  Reading a rook in cell (i, j) as "j follows i" partitions
the vertices 1..n into increasing chains; the placement's type is the
partition given by the chain lengths.  The q-weight of a placement is the
number of free cells, and summing q^fc over placements of a fixed type
gives the polynomial at the center of every identity in this package.
"""

from __future__ import annotations

from typing import NamedTuple

from rookhl.dyck import area, poset_cells
from rookhl.partitions import multiplicities, nstat
from rookhl.qseries import QLaurent, ONE, q_factorial, q_power


def placements(gamma: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
    """All linked rook placements on the board of gamma.

    Each placement is a tuple of (column, row) cells in column order.
    Enumeration backtracks over columns ascending, trying the empty column
    first and then rows ascending, so the order is deterministic.
    """
    n = len(gamma)
    rows_of = [list(range(gamma[i - 1] + 1, n + 1)) for i in range(1, n + 1)]
    out = []
    used = set()
    acc = []

    def rec(i):
        if i > n:
            out.append(tuple(acc))
            return
        rec(i + 1)
        for j in rows_of[i - 1]:
            if j not in used:
                used.add(j)
                acc.append((i, j))
                rec(i + 1)
                acc.pop()
                used.remove(j)

    rec(1)
    return out


def chains(n: int, placement) -> list[tuple[int, ...]]:
    """The increasing chains cut out by a placement on vertices 1..n,
    listed by their smallest element."""
    succ = dict(placement)
    has_pred = set(succ.values())
    out = []
    for start in range(1, n + 1):
        if start in has_pred:
            continue
        ch = [start]
        while ch[-1] in succ:
            ch.append(succ[ch[-1]])
        out.append(tuple(ch))
    return out


def placement_type(n: int, placement) -> tuple[int, ...]:
    """Chain lengths, sorted descending: a partition of n."""
    return tuple(sorted((len(ch) for ch in chains(n, placement)),
                        reverse=True))


def extended_placement(n: int, placement) -> list[list[tuple[int, int]]]:
    """The literal extended cell sequence of each chain.

    A chain d_1 < ... < d_l contributes alternating diagonal cells and
    rooks: (d_1,d_1), (d_1,d_2), (d_2,d_2), ..., (d_l,d_l), (d_l, n+1),
    the final rook being a phantom above the board.  The rank of the k-th
    cell (1-based) is k // 2.
    """
    out = []
    for ch in chains(n, placement):
        seq = []
        for t, d in enumerate(ch):
            seq.append((d, d))
            nxt = ch[t + 1] if t + 1 < len(ch) else n + 1
            seq.append((d, nxt))
        out.append(seq)
    return out


class RankTables(NamedTuple):
    """Per-column and per-row rank data read off a placement's chains.

    col_rank[i]  rank of the extended rook in column i
    col_top[i]   row of that rook: the chain successor of i, or n+1
    row_rank[j]  rank of the leftmost extended cell in row j
    row_left[j]  column of that cell: the chain predecessor of j, or j
    """
    col_rank: dict[int, int]
    col_top: dict[int, int]
    row_rank: dict[int, int]
    row_left: dict[int, int]


def rank_tables(n: int, placement) -> RankTables:
    succ = dict(placement)
    pred = {j: i for i, j in placement}
    pos = {}
    for ch in chains(n, placement):
        for t, d in enumerate(ch, start=1):
            pos[d] = t
    col_rank = {i: pos[i] for i in range(1, n + 1)}
    col_top = {i: succ.get(i, n + 1) for i in range(1, n + 1)}
    row_rank = {j: pos[j] - 1 for j in range(1, n + 1)}
    row_left = {j: pred.get(j, j) for j in range(1, n + 1)}
    return RankTables(col_rank, col_top, row_rank, row_left)


def _free_cells(gamma, placement, gate=True):
    n = len(gamma)
    tables = rank_tables(n, placement)
    free = set()
    for (i, j) in poset_cells(gamma):
        if gate and tables.col_top[i] <= j:
            continue
        a = tables.col_rank[i]
        b = tables.row_rank[j]
        left = tables.row_left[j]
        if (i < left and b <= a) or (left < i and b < a):
            free.add((i, j))
    return free


def free_cells(gamma, placement) -> set[tuple[int, int]]:
    """Board cells strictly below the extended rook of their column whose
    row rank fits under their column rank (weakly from the left, strictly
    from the right)."""
    return _free_cells(gamma, placement)


def fc(gamma, placement) -> int:
    return len(free_cells(gamma, placement))


def r_poly(gamma: tuple[int, ...], mu: tuple[int, ...]) -> QLaurent:
    """Sum of q^fc over placements of type mu on the board of gamma."""
    n = len(gamma)
    if sum(mu) != n:
        raise ValueError(f"type {mu} does not partition {n}")
    total = QLaurent()
    for p in placements(gamma):
        if placement_type(n, p) == mu:
            total = total + q_power(len(free_cells(gamma, p)))
    return total


def type_polynomials(gamma: tuple[int, ...]) -> dict[tuple[int, ...], QLaurent]:
    """r_poly for every type in one enumeration pass.  Types with no
    placement are absent."""
    n = len(gamma)
    out: dict[tuple[int, ...], QLaurent] = {}
    for p in placements(gamma):
        mu = placement_type(n, p)
        w = q_power(len(free_cells(gamma, p)))
        out[mu] = out.get(mu, QLaurent()) + w
    return out


def hl_coefficient(gamma: tuple[int, ...], mu: tuple[int, ...],
                   r: QLaurent | None = None) -> QLaurent:
    """Coefficient of the Hall-Littlewood P indexed by mu in the expansion
    attached to gamma: q^(area - n(mu)) * r_poly * product of [mult]_q!.

    Intermediate factors are Laurent; the result is always an honest
    polynomial.  Pass r to reuse an already-computed r_poly.
    """
    if r is None:
        r = r_poly(gamma, mu)
    poly = q_power(area(gamma) - nstat(mu)) * r
    for m in multiplicities(mu).values():
        poly = poly * q_factorial(m)
    assert poly.is_polynomial(), (gamma, mu, str(poly))
    return poly


def hl_coefficients(gamma: tuple[int, ...]) -> dict[tuple[int, ...], QLaurent]:
    """hl_coefficient for every type present, from one enumeration pass."""
    return {mu: hl_coefficient(gamma, mu, r)
            for mu, r in type_polynomials(gamma).items()}
