"""Exact arithmetic with dense integer polynomials and cyclotomic factors.

A polynomial a_0 + a_1*t + ... + a_n*t^n is stored as the coefficient
tuple (a_0, ..., a_n), lowest degree first, with a_n nonzero; the zero
polynomial is the empty tuple.  All arithmetic stays in ZZ and raises if
a division does not come out exact.

CyclotomicProduct keeps such a polynomial in the partially factored shape

    sign * prod_n Phi_n(t)^e_n * remainder

where Phi_n is the n-th cyclotomic polynomial and the monic remainder has
no root of unity among its roots.  factor_cyclotomic produces this shape
by trial division.  The candidate list is finite and complete because
phi(n) <= d forces n <= 3*d^2, so only conductors up to 3*deg^2 with
phi(n) <= deg can divide a degree-deg polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import ComputationError, PreconditionError

__all__ = [
    "IntPolynomial",
    "CyclotomicProduct",
    "cyclotomic",
    "factor_cyclotomic",
    "euler_phi",
    "divisors",
    "poly_gcd",
    "t_power_minus_one",
]


def euler_phi(n: int) -> int:
    """Euler totient of a positive integer."""
    if n < 1:
        raise PreconditionError("euler_phi is defined for positive integers")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n in increasing order."""
    if n < 1:
        raise PreconditionError("divisors is defined for positive integers")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


class IntPolynomial:
    """Immutable dense polynomial over ZZ.

    >>> p = IntPolynomial([-1, 0, 1])
    >>> str(p)
    't^2 - 1'
    >>> str(p // IntPolynomial([1, 1]))
    't - 1'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls(())

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        if degree < 0:
            raise PreconditionError("monomial degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        # degree of the zero polynomial is -1 by convention
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> IntPolynomial:
        return (-self) + other

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division in ZZ[t]; every coefficient step must divide exactly."""
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return IntPolynomial.zero(), self
        rem = list(self.coeffs)
        lead = other.leading
        db = other.degree
        quot = [0] * (len(rem) - db)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + db]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ValueError(
                    "non-exact coefficient division; divisor must have unit leading "
                    "coefficient or divide evenly"
                )
            quot[k] = q
            for i, bc in enumerate(other.coeffs):
                rem[k + i] -= q * bc
        return IntPolynomial(quot), IntPolynomial(rem)

    def __floordiv__(self, other) -> IntPolynomial:
        return divmod(self, other)[0]

    def __mod__(self, other) -> IntPolynomial:
        return divmod(self, other)[1]

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        """Quotient self/other, raising ComputationError unless it is exact."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ComputationError(f"expected exact division, remainder {r}")
        return q

    def divides(self, other: IntPolynomial) -> bool:
        if self.is_zero:
            return other.is_zero
        try:
            _, r = divmod(other, self)
        except ValueError:
            return False
        return r.is_zero

    def evaluate(self, x):
        """Value at x by Horner's rule; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def compose_power(self, k: int) -> IntPolynomial:
        """Substitute t -> t^k."""
        if k < 1:
            raise PreconditionError("substitution exponent must be positive")
        if self.is_zero:
            return self
        out = [0] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPolynomial(out)

    def reciprocal(self) -> IntPolynomial:
        """Coefficient reversal t^deg * p(1/t)."""
        return IntPolynomial(reversed(self.coeffs))

    def primitive_part(self) -> IntPolynomial:
        c = self.content
        if c in (0, 1):
            return self
        return IntPolynomial(a // c for a in self.coeffs)


def t_power_minus_one(n: int) -> IntPolynomial:
    """The polynomial t^n - 1."""
    if n < 1:
        raise PreconditionError("exponent must be positive")
    return IntPolynomial((-1,) + (0,) * (n - 1) + (1,))


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    # remainder of lead(b)^k * a under b, staying in ZZ[t]
    lead = b.leading
    db = b.degree
    r = a
    while not r.is_zero and r.degree >= db:
        shift = r.degree - db
        r = r * lead - b * IntPolynomial.monomial(shift, r.leading)
    return r


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor in ZZ[t] with positive leading coefficient."""
    if a.is_zero and b.is_zero:
        return IntPolynomial.zero()
    if a.is_zero:
        a, b = b, a
    if b.is_zero:
        g = a
        return -g if g.leading < 0 else g
    cont = math.gcd(a.content, b.content)
    a = a.primitive_part()
    b = b.primitive_part()
    while not b.is_zero:
        a, b = b, _pseudo_rem(a, b).primitive_part()
    if a.leading < 0:
        a = -a
    return a * cont


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial Phi_n.

    Computed by stripping Phi_d for every proper divisor d of n out of
    t^n - 1; each division is exact.

    >>> str(cyclotomic(12))
    't^4 - t^2 + 1'
    """
    if n < 1:
        raise PreconditionError("cyclotomic index must be positive")
    p = t_power_minus_one(n)
    for d in divisors(n)[:-1]:
        p = p.exact_div(cyclotomic(d))
    return p


# Totient sieve shared by factor_cyclotomic candidate enumeration; grown on
# demand so repeated factorizations do not resieve.
_phi_table: list[int] = [0, 1]


def _phi_upto(limit: int) -> list[int]:
    global _phi_table
    if len(_phi_table) <= limit:
        table = list(range(limit + 1))
        for p in range(2, limit + 1):
            if table[p] == p:
                for m in range(p, limit + 1, p):
                    table[m] -= table[m] // p
        _phi_table = table
    return _phi_table


def _cyclotomic_candidates(degree: int) -> list[int]:
    if degree < 1:
        return []
    bound = 3 * degree * degree
    table = _phi_upto(bound)
    return [n for n in range(1, bound + 1) if table[n] <= degree]


@dataclass(frozen=True, eq=True)
class CyclotomicProduct:
    """A polynomial in the shape sign * prod Phi_n^e_n * remainder.

    factors maps conductors to positive exponents; the remainder is monic
    with no cyclotomic factor.  Instances are treated as immutable.
    """

    sign: int = 1
    factors: dict[int, int] = field(default_factory=dict)
    remainder: IntPolynomial = field(default_factory=IntPolynomial.one)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PreconditionError("sign must be +1 or -1")
        cleaned = {}
        for n, e in self.factors.items():
            if n < 1 or e < 0:
                raise PreconditionError("factors must map conductors to exponents >= 0")
            if e:
                cleaned[n] = e
        object.__setattr__(self, "factors", cleaned)
        if self.remainder.is_zero or self.remainder.leading != 1:
            raise PreconditionError("remainder must be monic")

    @classmethod
    def one(cls) -> CyclotomicProduct:
        return cls(1, {}, IntPolynomial.one())

    @classmethod
    def from_factors(cls, factors: dict[int, int], sign: int = 1) -> CyclotomicProduct:
        return cls(sign, dict(factors), IntPolynomial.one())

    @property
    def degree(self) -> int:
        return sum(euler_phi(n) * e for n, e in self.factors.items()) + self.remainder.degree

    @property
    def is_fully_cyclotomic(self) -> bool:
        return self.remainder == IntPolynomial.one()

    def exponent(self, n: int) -> int:
        return self.factors.get(n, 0)

    def conductors(self) -> frozenset[int]:
        return frozenset(self.factors)

    def expand(self) -> IntPolynomial:
        p = IntPolynomial((self.sign,))
        for n in sorted(self.factors):
            p = p * cyclotomic(n) ** self.factors[n]
        return p * self.remainder

    def evaluate(self, x):
        acc = self.sign * self.remainder.evaluate(x)
        for n, e in self.factors.items():
            acc *= cyclotomic(n).evaluate(x) ** e
        return acc

    def __mul__(self, other) -> CyclotomicProduct:
        if not isinstance(other, CyclotomicProduct):
            return NotImplemented
        factors = dict(self.factors)
        for n, e in other.factors.items():
            factors[n] = factors.get(n, 0) + e
        return CyclotomicProduct(
            self.sign * other.sign, factors, self.remainder * other.remainder
        )

    def __pow__(self, exponent: int) -> CyclotomicProduct:
        if exponent < 0:
            raise ValueError("negative exponent")
        sign = self.sign if exponent % 2 else 1
        factors = {n: e * exponent for n, e in self.factors.items()}
        return CyclotomicProduct(sign, factors, self.remainder**exponent)

    def divides(self, other: CyclotomicProduct) -> bool:
        """Exact divisibility, up to sign."""
        if any(e > other.exponent(n) for n, e in self.factors.items()):
            return False
        return self.remainder.divides(other.remainder)

    def __str__(self) -> str:
        parts = []
        for n in sorted(self.factors):
            e = self.factors[n]
            parts.append(f"Phi_{n}" if e == 1 else f"Phi_{n}^{e}")
        if not self.is_fully_cyclotomic:
            parts.append(f"({self.remainder})")
        if not parts:
            parts.append("1")
        prefix = "-" if self.sign < 0 else ""
        return prefix + " * ".join(parts)


def factor_cyclotomic(p: IntPolynomial) -> CyclotomicProduct:
    """Split off every cyclotomic factor of p, with multiplicity.

    p must have leading coefficient +-1: the factored shape has no room
    for integer content.

    >>> str(factor_cyclotomic(IntPolynomial([-2, 0, 3, 0, -3, 0, 1])))
    'Phi_12 * (t^2 - 2)'
    """
    if p.is_zero:
        raise PreconditionError("cannot factor the zero polynomial")
    if abs(p.leading) != 1:
        raise PreconditionError(
            "leading coefficient must be +1 or -1 for a cyclotomic factorization"
        )
    sign = 1 if p.leading > 0 else -1
    work = p if sign > 0 else -p
    factors: dict[int, int] = {}
    for n in _cyclotomic_candidates(work.degree):
        if euler_phi(n) > work.degree:
            continue
        phi_n = cyclotomic(n)
        while True:
            q, r = divmod(work, phi_n)
            if not r.is_zero:
                break
            factors[n] = factors.get(n, 0) + 1
            work = q
            if work.degree < 1:
                break
        if work.degree < 1:
            break
    return CyclotomicProduct(sign, factors, work)
