"""Integer partitions as plain tuples of weakly decreasing positive ints.

The empty partition is ().  Enumeration order everywhere in the package is
reverse lexicographic, i.e. plain descending tuple order, which lists (n)
first and (1,...,1) last and refines dominance order.
"""

from __future__ import annotations

from collections import Counter


def is_partition(la) -> bool:
    return (isinstance(la, tuple)
            and all(isinstance(p, int) and p > 0 for p in la)
            and all(la[i] >= la[i + 1] for i in range(len(la) - 1)))


def check_partition(la):
    if not is_partition(la):
        raise ValueError(f"not a partition: {la!r}")
    return la


def enumerate_partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n in reverse lexicographic (descending tuple) order."""
    if n < 0:
        raise ValueError("enumerate_partitions requires n >= 0")
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def conjugate(la: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the Young diagram."""
    if not la:
        return ()
    return tuple(sum(1 for p in la if p >= i) for i in range(1, la[0] + 1))


def nstat(la: tuple[int, ...]) -> int:
    """n(lambda) = sum_i (i-1) * lambda_i."""
    return sum(i * p for i, p in enumerate(la))


def multiplicities(la: tuple[int, ...]) -> Counter:
    """Counter mapping each part size to its multiplicity."""
    return Counter(la)


def length(la: tuple[int, ...]) -> int:
    return len(la)


def dominance_leq(mu: tuple[int, ...], la: tuple[int, ...]) -> bool:
    """True when mu is dominated by la (partial sums of la are >= those of mu).

    Only defined for partitions of the same number.
    """
    if sum(mu) != sum(la):
        raise ValueError(f"dominance compares partitions of equal size, "
                         f"got {mu} and {la}")
    total_mu = total_la = 0
    for i in range(max(len(mu), len(la))):
        total_mu += mu[i] if i < len(mu) else 0
        total_la += la[i] if i < len(la) else 0
        if total_mu > total_la:
            return False
    return True


def is_vertical_strip(nu: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    """True when nu/mu is a vertical strip: mu fits inside nu and each row
    grows by at most one box."""
    n = max(len(nu), len(mu))
    for i in range(n):
        a = nu[i] if i < len(nu) else 0
        b = mu[i] if i < len(mu) else 0
        if not (b <= a <= b + 1):
            return False
    return True


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse '3,2,1' into (3, 2, 1); '-' or '' is the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return check_partition(parts)


def format_partition(la: tuple[int, ...]) -> str:
    """Inverse of parse_partition."""
    if not la:
        return "-"
    return ",".join(str(p) for p in la)
