"""Exact combinatorics engine for chromatic symmetric functions of Dyck
paths, linked rook placements, and Hall-Littlewood expansions.

Everything is computed over the integers: coefficients live in a Laurent
polynomial ring in one variable q, partitions and Dyck paths are plain
integer tuples, and every identity checked by :mod:`rookhl.verify` is an
exact equality of such polynomials.
"""

from rookhl.qseries import (
    QLaurent, ZERO, ONE, Q, from_int, q_power, exact_div,
    q_int, q_factorial, q_binomial, q_falling,
)
from rookhl.partitions import (
    is_partition, check_partition, enumerate_partitions, conjugate,
    nstat, multiplicities, length, dominance_leq, is_vertical_strip,
    parse_partition, format_partition,
)
from rookhl.dyck import (
    from_heights, parse_heights, format_heights, enumerate_dyck,
    area, area_sequence, edges, poset_cells, concat, complete_path,
    ModularTriple, modular_triples,
)
from rookhl.rook import (
    placements, chains, placement_type, extended_placement,
    RankTables, rank_tables, free_cells, fc,
    r_poly, type_polynomials, hl_coefficient, hl_coefficients,
)
from rookhl.symfunc import (
    ssyt, reading_word, charge_word, charge, kostka, kostka_foulkes,
    Transitions, transitions, SymFunc, elementary, omega,
    hl_h, hl_h_tilde, multiply, evaluate, hl_direct_oracle,
)
from rookhl.chromatic import (
    x_coefficient, llt_coefficient, chromatic_x, llt_poly,
    principal_direct,
)
from rookhl.verify import (
    CheckReport, IDENTITIES, check_main, check_modular,
    check_multiplicativity, check_llt, check_principal,
    sweep_tasks, sweep,
)

__all__ = [
    "QLaurent", "ZERO", "ONE", "Q", "from_int", "q_power", "exact_div",
    "q_int", "q_factorial", "q_binomial", "q_falling",
    "is_partition", "check_partition", "enumerate_partitions", "conjugate",
    "nstat", "multiplicities", "length", "dominance_leq",
    "is_vertical_strip", "parse_partition", "format_partition",
    "from_heights", "parse_heights", "format_heights", "enumerate_dyck",
    "area", "area_sequence", "edges", "poset_cells", "concat",
    "complete_path", "ModularTriple", "modular_triples",
    "placements", "chains", "placement_type", "extended_placement",
    "RankTables", "rank_tables", "free_cells", "fc",
    "r_poly", "type_polynomials", "hl_coefficient", "hl_coefficients",
    "ssyt", "reading_word", "charge_word", "charge", "kostka",
    "kostka_foulkes", "Transitions", "transitions", "SymFunc",
    "elementary", "omega", "hl_h", "hl_h_tilde", "multiply", "evaluate",
    "hl_direct_oracle",
    "x_coefficient", "llt_coefficient", "chromatic_x", "llt_poly",
    "principal_direct",
    "CheckReport", "IDENTITIES", "check_main", "check_modular",
    "check_multiplicativity", "check_llt", "check_principal",
    "sweep_tasks", "sweep",
]
