import math
from itertools import combinations

import pytest

from rookhl.dyck import area, enumerate_dyck, poset_cells, complete_path
from rookhl.partitions import enumerate_partitions
from rookhl.qseries import QLaurent, ONE, q_factorial, q_power
from rookhl import rook
from rookhl.rook import (
    placements, chains, placement_type, extended_placement, rank_tables,
    free_cells, fc, r_poly, type_polynomials, hl_coefficient,
    hl_coefficients,
)


def subsets_oracle(gamma):
    """Every subset of the board with distinct columns and distinct rows."""
    cells = sorted(poset_cells(gamma))
    found = set()
    for k in range(len(cells) + 1):
        for combo in combinations(cells, k):
            cols = [i for i, _ in combo]
            rows = [j for _, j in combo]
            if len(set(cols)) == k and len(set(rows)) == k:
                found.add(combo)
    return found


def test_placements_match_subset_oracle():
    for n in range(6):
        for gamma in enumerate_dyck(n):
            got = placements(gamma)
            assert len(set(got)) == len(got)
            assert set(got) == subsets_oracle(gamma)


def test_placement_counts_on_extreme_boards():
    # Full staircase board: placements are set partitions into chains.
    bell = [1, 1, 2, 5, 15, 52, 203, 877]
    for n in range(8):
        staircase = tuple(range(1, n + 1))
        assert len(placements(staircase)) == bell[n]
        # Empty board: only the empty placement.
        assert placements(complete_path(n)) == [()]


def test_chains_and_type():
    p = ((1, 4), (2, 3), (3, 5))
    assert chains(5, p) == [(1, 4), (2, 3, 5)]
    assert placement_type(5, p) == (3, 2)
    assert chains(3, ()) == [(1,), (2,), (3,)]
    assert placement_type(3, ()) == (1, 1, 1)
    assert chains(0, ()) == []
    assert placement_type(0, ()) == ()
    assert placement_type(4, ((1, 2), (2, 3), (3, 4))) == (4,)


def test_placement_type_sizes():
    for n in range(6):
        for gamma in enumerate_dyck(n):
            for p in placements(gamma):
                mu = placement_type(n, p)
                assert sum(mu) == n
                assert len(p) == n - len(mu)


def test_extended_placement_literal():
    # chain (2, 3, 5) inside n = 5
    seqs = extended_placement(5, ((2, 3), (3, 5), (1, 4)))
    assert seqs == [
        [(1, 1), (1, 4), (4, 4), (4, 6)],
        [(2, 2), (2, 3), (3, 3), (3, 5), (5, 5), (5, 6)],
    ]


def test_rank_tables_agree_with_literal_construction():
    for n in range(6):
        for gamma in enumerate_dyck(n):
            for p in placements(gamma):
                tables = rank_tables(n, p)
                for seq in extended_placement(n, p):
                    for k, (i, j) in enumerate(seq, start=1):
                        rank = k // 2
                        if k % 2 == 0:
                            # the extended rook of column i
                            assert tables.col_rank[i] == rank
                            assert tables.col_top[i] == j
                    # leftmost cell of each row j <= n is the first
                    # appearance of j as a row in the chain sequence
                    for j in {j for _, j in seq if j <= n}:
                        k, (il, _) = min(
                            (k, cell) for k, cell in enumerate(seq, start=1)
                            if cell[1] == j)
                        assert tables.row_left[j] == il
                        assert tables.row_rank[j] == k // 2


FIG_PATH = (2, 2, 4, 4, 5)


def test_free_cells_worked_examples():
    cases = [
        (((1, 3), (2, 4), (3, 5)), set()),
        (((1, 4), (2, 3), (3, 5)), {(1, 3)}),
        (((1, 4), (2, 3), (4, 5)), {(1, 3), (3, 5)}),
        (((1, 3), (2, 4), (4, 5)), {(3, 5)}),
    ]
    for p, free in cases:
        assert placement_type(5, p) == (3, 2)
        assert free_cells(FIG_PATH, p) == free
    assert sorted(fc(FIG_PATH, p) for p, _ in cases) == [0, 1, 1, 2]


def test_free_cells_of_empty_placement():
    # With no rooks every board cell is free.
    for n in range(7):
        for gamma in enumerate_dyck(n):
            assert free_cells(gamma, ()) == poset_cells(gamma)
            assert fc(gamma, ()) == math.comb(n, 2) - area(gamma)


def test_free_cells_avoid_rooks_and_stay_on_board():
    for gamma in enumerate_dyck(5):
        cells = poset_cells(gamma)
        for p in placements(gamma):
            free = free_cells(gamma, p)
            assert free <= cells
            assert not (free & set(p))


def test_r_poly_examples():
    assert r_poly(FIG_PATH, (3, 2)) == QLaurent(0, (1, 2, 1))
    assert r_poly(FIG_PATH, (1, 1, 1, 1, 1)) == q_power(8)
    assert r_poly((), ()) == ONE
    assert r_poly((1,), (1,)) == ONE
    assert r_poly((1, 2), (2,)) == ONE          # single rook on (1, 2)
    assert r_poly((1, 2), (1, 1)) == q_power(1)  # empty placement, one cell
    with pytest.raises(ValueError):
        r_poly((1, 2), (1,))


def test_type_polynomials_consistent():
    for n in range(6):
        for gamma in enumerate_dyck(n):
            table = type_polynomials(gamma)
            # summing r(1) over types counts all placements
            assert sum(p.at_one() for p in table.values()) \
                == len(placements(gamma))
            for mu in enumerate_partitions(n):
                assert table.get(mu, QLaurent()) == r_poly(gamma, mu)


def test_hl_coefficient_examples():
    assert hl_coefficient((1, 2), (1, 1)) == QLaurent(0, (1, 1))
    assert hl_coefficient(FIG_PATH, (3, 2)) == QLaurent(0, (1, 2, 1))
    assert hl_coefficient((), ()) == ONE


def test_hl_coefficient_at_single_column_type():
    # Type (1,...,1) always yields the full q-factorial.
    for n in range(6):
        for gamma in enumerate_dyck(n):
            assert hl_coefficient(gamma, (1,) * n) == q_factorial(n)


def test_hl_coefficients_are_polynomials():
    for n in range(5):
        for gamma in enumerate_dyck(n):
            for mu, poly in hl_coefficients(gamma).items():
                assert poly.is_polynomial()
                assert all(c >= 0 for c in poly.coeffs)
                assert poly == hl_coefficient(gamma, mu)


def test_ungated_rule_differs_on_fig_path():
    # The strict reading of the free-cell rule needs the column gate; with
    # the gate off, cell (1, 4) of the first worked example leaks in.
    p = ((1, 3), (2, 4), (3, 5))
    assert rook._free_cells(FIG_PATH, p, gate=False) == {(1, 4)}
    assert rook._free_cells(FIG_PATH, p, gate=True) == set()
