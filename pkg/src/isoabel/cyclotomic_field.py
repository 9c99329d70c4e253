"""Arithmetic in cyclotomic fields Q(zeta_n) and exact matrix rank.

An element of Q(zeta_n) is a rational polynomial in zeta_n of degree
< phi(n), reduced modulo Phi_n; coefficients are Fractions and stored
lowest degree first with trailing zeros trimmed.  Mixed-conductor
arithmetic lifts both operands into Q(zeta_m) for m = lcm of the two
conductors, via zeta_n = zeta_m^(m/n).  The conductor of a result is the
conductor of the ambient field, not of the minimal subfield containing
the value, so conductor-n arithmetic is closed.

Matrix rank uses fraction-free (Bareiss) elimination with the pivot taken
as the first nonzero entry of the active submatrix in row-major order.
Every division performed by the elimination is exact by the Sylvester
determinant identity, which is what keeps the method honest: a failed
division would mean corrupted arithmetic, not roundoff.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .polynomials import cyclotomic, euler_phi

__all__ = ["CyclotomicNumber", "CycloMatrix"]


def _trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _rem_mod(cs: list[Fraction], modulus: tuple[int, ...]) -> list[Fraction]:
    # remainder of cs modulo a monic integer polynomial
    r = list(cs)
    dm = len(modulus) - 1
    while len(r) > dm:
        c = r.pop()
        if c:
            base = len(r) - dm
            for i in range(dm):
                r[base + i] -= c * modulus[i]
    return _trim(r)


def _divmod_frac(a: list[Fraction], b: list[Fraction]):
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while r and len(r) >= len(b):
        c = r[-1] / lead
        k = len(r) - len(b)
        q[k] = c
        for i in range(len(b) - 1):
            r[k + i] -= c * b[i]
        r.pop()
        _trim(r)
    return q, r


def _mul_frac(a, b) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _sub_frac(a, b) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


class CyclotomicNumber:
    """An element of Q(zeta_n), n the conductor.

    >>> z = CyclotomicNumber.zeta(4)
    >>> z * z == -1
    True
    >>> (z / (1 + z)) * (1 + z) == z
    True
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs=()):
        if conductor < 1:
            raise PreconditionError("conductor must be a positive integer")
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if len(cs) > euler_phi(conductor):
            cs = _rem_mod(cs, cyclotomic(conductor).coeffs)
        else:
            _trim(cs)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    @classmethod
    def rational(cls, value) -> CyclotomicNumber:
        return cls(1, (Fraction(value),))

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> CyclotomicNumber:
        if conductor < 1:
            raise PreconditionError("conductor must be a positive integer")
        k = power % conductor
        return cls(conductor, (0,) * k + (1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def lifted(self, conductor: int) -> CyclotomicNumber:
        """The same value viewed in Q(zeta_conductor); requires n | conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise PreconditionError(
                f"cannot lift conductor {self.conductor} into conductor {conductor}"
            )
        step = conductor // self.conductor
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return CyclotomicNumber(conductor, out)

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(other)
        elif not isinstance(other, CyclotomicNumber):
            return None
        m = math.lcm(self.conductor, other.conductor)
        return self.lifted(m), other.lifted(m)

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        la, lb = list(a.coeffs), list(b.coeffs)
        if len(la) < len(lb):
            la, lb = lb, la
        for i, c in enumerate(lb):
            la[i] += c
        return CyclotomicNumber(a.conductor, la)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.conductor, _mul_frac(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        modulus = [Fraction(c) for c in cyclotomic(self.conductor).coeffs]
        # invariant: s_i * self == r_i modulo Phi_n
        r0, r1 = modulus, list(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _sub_frac(s0, _mul_frac(q, s1))
        # r0 is a nonzero constant: Phi_n is irreducible over Q
        g = r0[0]
        return CyclotomicNumber(self.conductor, [c / g for c in s0])

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CyclotomicNumber.rational(other) / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber(self.conductor, (1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __repr__(self):
        return f"CyclotomicNumber({self.conductor}, {[str(c) for c in self.coeffs]!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                z = f"z{self.conductor}" if i == 1 else f"z{self.conductor}^{i}"
                parts.append(z if c == 1 else f"({c})*{z}")
        return " + ".join(parts)

    def to_complex(self) -> complex:
        """Floating-point image under zeta_n -> exp(2*pi*i/n)."""
        z = cmath.exp(2j * cmath.pi / self.conductor)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc


def _coerced_rows(rows):
    data = []
    conductor = 1
    for row in rows:
        out = []
        for entry in row:
            if not isinstance(entry, CyclotomicNumber):
                entry = CyclotomicNumber.rational(entry)
            conductor = math.lcm(conductor, entry.conductor)
            out.append(entry)
        data.append(out)
    lifted = tuple(tuple(e.lifted(conductor) for e in row) for row in data)
    return conductor, lifted


@dataclass(frozen=True)
class CycloMatrix:
    """Rectangular matrix over a single cyclotomic field."""

    conductor: int
    entries: tuple[tuple[CyclotomicNumber, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise PreconditionError("rows must all have the same length")
        for row in self.entries:
            for e in row:
                if e.conductor != self.conductor:
                    raise PreconditionError(
                        f"entry conductor {e.conductor} differs from matrix "
                        f"conductor {self.conductor}"
                    )

    @classmethod
    def from_rows(cls, rows) -> CycloMatrix:
        """Build a matrix, lifting mixed-conductor entries to the lcm conductor."""
        conductor, lifted = _coerced_rows(rows)
        return cls(conductor, lifted)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def rank(self) -> int:
        """Exact rank by fraction-free elimination.

        >>> z = CyclotomicNumber.zeta(4)
        >>> CycloMatrix.from_rows([[1, z], [z, -1]]).rank()
        1
        """
        m = [list(row) for row in self.entries]
        nr, nc = self.nrows, self.ncols
        if nr == 0 or nc == 0:
            return 0
        zero = CyclotomicNumber.rational(0)
        prev = CyclotomicNumber.rational(1)
        eliminated = [False] * nc
        row = 0
        while row < nr:
            pivot = None
            for r in range(row, nr):
                for c in range(nc):
                    if not eliminated[c] and not m[r][c].is_zero:
                        pivot = (r, c)
                        break
                if pivot:
                    break
            if pivot is None:
                break
            pr, pc = pivot
            m[row], m[pr] = m[pr], m[row]
            pivot_value = m[row][pc]
            for r in range(row + 1, nr):
                factor = m[r][pc]
                for c in range(nc):
                    if c == pc:
                        continue
                    m[r][c] = (pivot_value * m[r][c] - factor * m[row][c]) / prev
                m[r][pc] = zero
            eliminated[pc] = True
            prev = pivot_value
            row += 1
        return row
