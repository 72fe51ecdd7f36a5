"""Exact Laurent polynomials in q over arbitrary-precision integers.

QLaurent is the universal coefficient type of this package: every statistic
generating function, transition-matrix entry, and identity check is built
from it.  There is no floating point and no tolerance anywhere; division is
exact polynomial division that fails hard on a nonzero remainder.
"""

from __future__ import annotations

from fractions import Fraction


class QLaurent:
    """A Laurent polynomial in q with integer coefficients.

    Stored densely: ``coeffs[i]`` is the coefficient of ``q**(min_exp + i)``.
    Canonical form is maintained by the constructor: the first and last
    coefficients are nonzero, and the zero polynomial is always
    ``QLaurent(0, ())``.
    """

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int = 0, coeffs=()):
        coeffs = list(coeffs)
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_exp", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_exp", min_exp + lo)
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    def __setattr__(self, name, value):
        raise AttributeError("QLaurent is immutable")

    # -- basic queries ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def max_exp(self) -> int:
        """Largest exponent with nonzero coefficient (0 for the zero poly)."""
        if not self.coeffs:
            return 0
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, exp: int) -> int:
        """Coefficient of q**exp."""
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_polynomial(self) -> bool:
        """True when no negative power of q appears."""
        return not self.coeffs or self.min_exp >= 0

    # -- ring structure ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = from_int(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    def __neg__(self) -> "QLaurent":
        return QLaurent(self.min_exp, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "QLaurent":
        if isinstance(other, int):
            other = from_int(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_exp - lo + i] += c
        return QLaurent(lo, out)

    __radd__ = __add__

    def __sub__(self, other) -> "QLaurent":
        if isinstance(other, int):
            other = from_int(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QLaurent":
        return from_int(other) - self

    def __mul__(self, other) -> "QLaurent":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return QLaurent(self.min_exp, tuple(c * other for c in self.coeffs))
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QLaurent(self.min_exp + other.min_exp, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QLaurent":
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial "
                             "are not defined")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "QLaurent":
        """Multiply by q**k (k may be negative)."""
        if not self.coeffs:
            return ZERO
        return QLaurent(self.min_exp + k, self.coeffs)

    def invert_q(self) -> "QLaurent":
        """Substitute q -> 1/q.  An involution and a ring homomorphism."""
        if not self.coeffs:
            return ZERO
        return QLaurent(-self.max_exp, tuple(reversed(self.coeffs)))

    # -- evaluation ---------------------------------------------------------

    def at_one(self) -> int:
        """Evaluate at q = 1."""
        return sum(self.coeffs)

    def eval(self, q0: Fraction) -> Fraction:
        """Evaluate exactly at a rational point q0."""
        q0 = Fraction(q0)
        if self.min_exp < 0 and q0 == 0:
            raise ZeroDivisionError("negative q-power evaluated at q=0")
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                total += c * q0 ** (self.min_exp + i)
        return total

    # -- presentation --------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.min_exp + i
            if e == 0:
                body = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QLaurent({self.min_exp}, {self.coeffs})"

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "QLaurent":
        return cls(int(obj["min_exp"]), [int(c) for c in obj["coeffs"]])


ZERO = QLaurent()
ONE = QLaurent(0, (1,))
Q = QLaurent(1, (1,))


def from_int(n: int) -> QLaurent:
    """The constant polynomial n."""
    return QLaurent(0, (n,))


def q_power(k: int) -> QLaurent:
    """q**k as a Laurent polynomial (k may be negative)."""
    return QLaurent(k, (1,))


def exact_div(a: QLaurent, b: QLaurent) -> QLaurent:
    """Exact division a / b in the Laurent ring.

    Raises ValueError if b is zero or the division leaves a remainder
    (including non-integer quotient coefficients).  Exactness is a
    correctness tripwire: every quotient taken in this package is provably
    remainder-free, so a remainder means a bug upstream.
    """
    if not b.coeffs:
        raise ValueError("division by the zero polynomial")
    if not a.coeffs:
        return ZERO
    # Work with plain coefficient vectors; track the exponent shift.
    num = list(a.coeffs)
    den = list(b.coeffs)
    shift = a.min_exp - b.min_exp
    if len(num) < len(den):
        raise ValueError("inexact polynomial division (degree too small)")
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % lead != 0:
            raise ValueError("inexact polynomial division (leading term)")
        t = c // lead
        out[i] = t
        if t:
            for j, d in enumerate(den):
                num[i + j] -= t * d
    if any(num):
        raise ValueError("inexact polynomial division (nonzero remainder)")
    return QLaurent(shift, out)


def q_int(n: int) -> QLaurent:
    """[n]_q = 1 + q + ... + q^(n-1).  [0]_q = 0."""
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    return QLaurent(0, (1,) * n)


def q_factorial(n: int) -> QLaurent:
    """[n]_q! = [1]_q [2]_q ... [n]_q.  Empty product 1 for n = 0."""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    result = ONE
    for k in range(2, n + 1):
        result = result * q_int(k)
    return result


def q_binomial(n: int, k: int) -> QLaurent:
    """Gaussian binomial [n]_q! / ([k]_q! [n-k]_q!), by exact division."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"q_binomial undefined for n={n}, k={k}")
    return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k))


def q_falling(alpha: int, k: int) -> QLaurent:
    """Falling q-factorial [alpha]_q [alpha-1]_q ... [alpha-k+1]_q.

    Zero when k > alpha (a factor [0]_q occurs); 1 when k = 0.
    """
    if alpha < 0 or k < 0:
        raise ValueError("q_falling requires nonnegative arguments")
    if k > alpha:
        return ZERO
    result = ONE
    for t in range(alpha, alpha - k, -1):
        result = result * q_int(t)
    return result
