"""Exhaustive identity checking with counterexample reporting.

Every check compares two independently computed exact objects and returns
CheckReport records: status "verified", or "counterexample" with both sides
rendered as strings.  The sweep driver runs checks over all paths up to a
size bound, deterministically, optionally spreading tasks over processes
(ordering and output are identical either way).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from multiprocessing import Pool

from rookhl.chromatic import chromatic_x, llt_poly, principal_direct
from rookhl.dyck import (
    area, area_sequence, complete_path, concat, enumerate_dyck,
    format_heights, modular_triples,
)
from rookhl.partitions import (
    conjugate, enumerate_partitions, format_partition, is_vertical_strip,
    multiplicities, nstat,
)
from rookhl.qseries import (
    QLaurent, ZERO, ONE, Q, q_binomial, q_falling, q_int, q_power,
)
from rookhl.rook import hl_coefficients, type_polynomials
from rookhl.symfunc import SymFunc, hl_h, hl_h_tilde, multiply, omega, transitions


@dataclass(frozen=True)
class CheckReport:
    identity: str
    instance: str
    status: str
    lhs: str = ""
    rhs: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def to_json(self) -> dict:
        return asdict(self)


def _report(identity, instance, lhs, rhs) -> CheckReport:
    if lhs == rhs:
        return CheckReport(identity, instance, "verified")
    return CheckReport(identity, instance, "counterexample",
                       lhs=str(lhs), rhs=str(rhs))


def check_main(gamma) -> CheckReport:
    """Coloring route against rook route for one path: the full monomial
    expansion pushed into the P basis must equal the placement-derived
    coefficients."""
    n = len(gamma)
    lhs = chromatic_x(gamma).to_basis("hl_p")
    rhs = SymFunc(n, "hl_p", hl_coefficients(gamma))
    return _report("main", f"heights={format_heights(gamma)}", lhs, rhs)


def check_modular(n: int, level: str) -> list[CheckReport]:
    """Three-term recurrences across every modular triple of size n.

    level "r_poly": (1+q) r_mid = r_low + q r_up, for every type.
    level "chromatic": (1+q) X_mid = q X_low + X_up.
    """
    if level not in ("r_poly", "chromatic"):
        raise ValueError(f"unknown level {level!r}")
    reports = []
    cache = {}
    if level == "r_poly":
        def tp(g):
            if g not in cache:
                cache[g] = type_polynomials(g)
            return cache[g]

        parts = enumerate_partitions(n)
        for t in modular_triples(n):
            instance = (f"kind={t.kind};column={t.column};"
                        f"middle={format_heights(t.middle)}")
            bad = None
            for mu in parts:
                lhs = (ONE + Q) * tp(t.middle).get(mu, ZERO)
                rhs = tp(t.lower).get(mu, ZERO) \
                    + Q * tp(t.upper).get(mu, ZERO)
                if lhs != rhs:
                    bad = (mu, lhs, rhs)
                    break
            if bad is None:
                reports.append(CheckReport("modular.r_poly", instance,
                                           "verified"))
            else:
                mu, lhs, rhs = bad
                reports.append(CheckReport(
                    "modular.r_poly",
                    instance + f";type={format_partition(mu)}",
                    "counterexample", lhs=str(lhs), rhs=str(rhs)))
    else:
        def xf(g):
            if g not in cache:
                cache[g] = chromatic_x(g)
            return cache[g]

        for t in modular_triples(n):
            instance = (f"kind={t.kind};column={t.column};"
                        f"middle={format_heights(t.middle)}")
            lhs = xf(t.middle).scale(ONE + Q)
            rhs = xf(t.lower).scale(Q) + xf(t.upper)
            reports.append(_report("modular.chromatic", instance, lhs, rhs))
    return reports


def _strip_factor(nu, mu, k) -> QLaurent:
    """The q-weight a vertical strip nu/mu of size k carries: the power
    shift, the truncated q-factorial over new rows, and one Gaussian
    binomial per part size."""
    nuc, muc = conjugate(nu), conjugate(mu)

    def at(t, i):
        return t[i - 1] if 1 <= i <= len(t) else 0

    factor = q_power(nstat(nu) - nstat(mu) - k * (k - 1) // 2)
    new_rows = at(nuc, 1) - at(muc, 1)
    for t in range(new_rows + 1, k + 1):
        factor = factor * q_int(t)
    mults = multiplicities(mu)
    top = max((nu[0] if nu else 0), (mu[0] if mu else 0))
    for i in range(1, top + 1):
        factor = factor * q_binomial(mults[i], at(nuc, i + 1) - at(muc, i + 1))
    return factor


def check_multiplicativity(gamma, k: int,
                           function_level: bool = False) -> list[CheckReport]:
    """Appending a complete block of size k to a path.

    Coefficient level: each type polynomial of the extended path must be
    the vertical-strip-weighted sum of type polynomials of gamma (one
    report per type).  Function level: the full P-basis expansions must
    multiply (single report).
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = len(gamma)
    extended = concat(gamma, complete_path(k))
    base = f"heights={format_heights(gamma)};k={k}"
    if function_level:
        y1 = SymFunc(n, "hl_p", hl_coefficients(gamma))
        y2 = SymFunc(k, "hl_p", hl_coefficients(complete_path(k)))
        lhs = SymFunc(n + k, "hl_p", hl_coefficients(extended))
        rhs = multiply(y1, y2).to_basis("hl_p")
        return [_report("mult.function", base, lhs, rhs)]
    small = type_polynomials(gamma)
    big = type_polynomials(extended)
    reports = []
    for nu in enumerate_partitions(n + k):
        lhs = big.get(nu, ZERO)
        rhs = ZERO
        for mu in enumerate_partitions(n):
            r = small.get(mu, ZERO)
            if r and is_vertical_strip(nu, mu):
                rhs = rhs + r * _strip_factor(nu, mu, k)
        reports.append(_report(
            "mult", base + f";type={format_partition(nu)}", lhs, rhs))
    return reports


def check_llt(gamma) -> CheckReport:
    """Both closed forms of the word generating function from placement
    data: one through the transposed q-Whittaker transforms, one through
    their inverted-q normalizations."""
    n, a = len(gamma), area(gamma)
    lhs = llt_poly(gamma).to_basis("schur")
    rpolys = type_polynomials(gamma)
    form1 = SymFunc.zero(n, "schur")
    form2 = SymFunc.zero(n, "schur")
    for mu, r in rpolys.items():
        c1 = ((ONE - Q) ** (n - len(mu))) * q_power(a - nstat(mu)) * r
        form1 = form1 + omega(hl_h(mu)).scale(c1)
        c2 = ((ONE - q_power(-1)) ** (n - len(mu))) * r.invert_q()
        form2 = form2 + hl_h_tilde(mu).scale(c2)
    instance = f"heights={format_heights(gamma)}"
    if lhs != form1:
        return CheckReport("llt", instance + ";form=omega",
                           "counterexample", lhs=str(lhs), rhs=str(form1))
    if lhs != form2:
        return CheckReport("llt", instance + ";form=tilde",
                           "counterexample", lhs=str(lhs), rhs=str(form2))
    return CheckReport("llt", instance, "verified")


def check_principal(gamma, alpha_max: int) -> list[CheckReport]:
    """Three routes to the principal specialization, for each number of
    colors: direct coloring enumeration, the placement-type sum with
    falling q-factorials, and the hook-style product over columns."""
    a = area(gamma)
    aseq = area_sequence(gamma)
    rpolys = type_polynomials(gamma)
    reports = []
    for colors in range(alpha_max + 1):
        direct = principal_direct(gamma, colors)
        via_types = ZERO
        for mu, r in rpolys.items():
            via_types = via_types + r * q_falling(colors, len(mu))
        via_types = q_power(a) * via_types
        if any(colors - ai < 0 for ai in aseq):
            product = ZERO
        else:
            product = q_power(a)
            for ai in aseq:
                product = product * q_int(colors - ai)
        instance = f"heights={format_heights(gamma)};colors={colors}"
        if direct == via_types == product:
            reports.append(CheckReport("principal", instance, "verified"))
        else:
            reports.append(CheckReport(
                "principal", instance, "counterexample",
                lhs=f"direct={direct}",
                rhs=f"types={via_types};product={product}"))
    return reports


IDENTITIES = ("main", "modular", "mult", "llt", "principal")


def _task_reports(task) -> list[CheckReport]:
    kind = task[0]
    if kind == "main":
        return [check_main(task[1])]
    if kind == "modular":
        return check_modular(task[1], task[2])
    if kind == "mult":
        return check_multiplicativity(task[1], task[2],
                                      function_level=task[3])
    if kind == "llt":
        return [check_llt(task[1])]
    if kind == "principal":
        return check_principal(task[1], task[2])
    raise ValueError(f"unknown task {task!r}")


def sweep_tasks(n_max: int, identities) -> list[tuple]:
    """The deterministic task list a sweep will run.

    Size ranges per identity: main and llt visit every path with n <= n_max;
    modular runs the placement level for n <= n_max and the coloring level
    for n <= min(n_max, 5); mult uses blocks k in 1..3 with n + k <= n_max
    (function level additionally n <= 3, k <= 2); principal sweeps color
    counts 0..n+2.
    """
    ids = set(identities)
    unknown = ids - set(IDENTITIES)
    if unknown:
        raise ValueError(f"unknown identities: {sorted(unknown)}")
    tasks: list[tuple] = []
    if "main" in ids:
        for n in range(n_max + 1):
            tasks.extend(("main", g) for g in enumerate_dyck(n))
    if "modular" in ids:
        for n in range(n_max + 1):
            tasks.append(("modular", n, "r_poly"))
        for n in range(min(n_max, 5) + 1):
            tasks.append(("modular", n, "chromatic"))
    if "mult" in ids:
        for k in (1, 2, 3):
            for n in range(max(n_max - k, -1) + 1):
                tasks.extend(("mult", g, k, False)
                             for g in enumerate_dyck(n))
        for k in (1, 2):
            for n in range(min(3, n_max - k) + 1):
                tasks.extend(("mult", g, k, True)
                             for g in enumerate_dyck(n))
    if "llt" in ids:
        for n in range(n_max + 1):
            tasks.extend(("llt", g) for g in enumerate_dyck(n))
    if "principal" in ids:
        for n in range(n_max + 1):
            tasks.extend(("principal", g, n + 2)
                         for g in enumerate_dyck(n))
    return tasks


def sweep(n_max: int, identities, jobs: int = 1) -> list[CheckReport]:
    """Run every selected check for all sizes up to n_max and return the
    flattened reports in task order, independent of jobs."""
    tasks = sweep_tasks(n_max, identities)
    # Warm the transition cache so forked workers inherit it.
    for n in range(n_max + 1):
        transitions(n)
    if jobs <= 1:
        chunks = [_task_reports(t) for t in tasks]
    else:
        with Pool(jobs) as pool:
            chunks = pool.map(_task_reports, tasks, chunksize=1)
    return [r for chunk in chunks for r in chunk]
