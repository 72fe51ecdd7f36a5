"""Coloring and word generating functions of a path's graph.

Vertices are the columns 1..n; the neighbors of a vertex below it form a
contiguous window whose length is the area contribution of that column,
and the window is always a clique.  That makes ascent and inversion counts
incremental and pruning cheap, so coefficients are enumerated content by
content with plain integer exponent accumulators.
"""

from __future__ import annotations

from rookhl.dyck import area, area_sequence
from rookhl.partitions import enumerate_partitions
from rookhl.qseries import QLaurent, ZERO
from rookhl.symfunc import SymFunc


def _content_counts(gamma, content, proper):
    """Exponent histogram over labelings with the exact given content.

    Counts ascents on graph edges; proper=True additionally forbids equal
    labels across an edge (the chromatic case), proper=False allows them
    (the word case, where only strict descents weigh in as inversions...
    counted here as ascents of the reversed comparison, see callers).
    """
    n = len(gamma)
    if any(c < 0 for c in content):
        raise ValueError("content entries must be nonnegative")
    if sum(content) != n:
        raise ValueError(f"content {content} does not sum to {n}")
    aseq = area_sequence(gamma)
    counts = [0] * (area(gamma) + 1)
    remaining = list(content)
    ncolors = len(content)
    kappa = [0] * (n + 1)

    def rec(v, weight):
        if v > n:
            counts[weight] += 1
            return
        window = kappa[v - aseq[v - 1]:v]
        for c in range(1, ncolors + 1):
            if remaining[c - 1] == 0:
                continue
            if proper and c in window:
                continue
            inc = sum(1 for u in window if u < c)
            remaining[c - 1] -= 1
            kappa[v] = c
            rec(v + 1, weight + inc)
            remaining[c - 1] += 1
        kappa[v] = 0

    rec(1, 0)
    return counts


def x_coefficient(gamma, content) -> QLaurent:
    """Coefficient of x^content in the ascent-weighted sum over proper
    colorings.  content may be any composition; by symmetry it matches the
    sorted partition."""
    return QLaurent(0, _content_counts(gamma, tuple(content), proper=True))


def llt_coefficient(gamma, content) -> QLaurent:
    """Coefficient of x^content in the inversion-weighted sum over all
    labelings.  An inversion is an edge whose smaller endpoint carries the
    strictly larger label."""
    # Counting ascents of the color-reversed word counts inversions: flip
    # each label c to ncolors + 1 - c and reverse the content.
    content = tuple(content)
    counts = _content_counts(gamma, tuple(reversed(content)), proper=False)
    return QLaurent(0, counts)


def chromatic_x(gamma) -> SymFunc:
    """The full coloring generating function in the monomial basis."""
    n = len(gamma)
    return SymFunc(n, "monomial",
                   {la: x_coefficient(gamma, la)
                    for la in enumerate_partitions(n)})


def llt_poly(gamma) -> SymFunc:
    """The full word generating function in the monomial basis."""
    n = len(gamma)
    return SymFunc(n, "monomial",
                   {la: llt_coefficient(gamma, la)
                    for la in enumerate_partitions(n)})


def principal_direct(gamma, colors: int) -> QLaurent:
    """Sum of q^(ascents + sum of (color - 1)) over proper colorings with
    colors drawn from 1..colors, enumerated one vertex at a time."""
    n = len(gamma)
    if colors < 0:
        raise ValueError("colors must be nonnegative")
    aseq = area_sequence(gamma)
    top = area(gamma) + n * max(colors - 1, 0)
    counts = [0] * (top + 1)
    kappa = [0] * (n + 1)

    def rec(v, weight):
        if v > n:
            counts[weight] += 1
            return
        window = kappa[v - aseq[v - 1]:v]
        for c in range(1, colors + 1):
            if c in window:
                continue
            inc = sum(1 for u in window if u < c)
            kappa[v] = c
            rec(v + 1, weight + inc + c - 1)
        kappa[v] = 0

    rec(1, 0)
    return QLaurent(0, counts)
