"""Exact arithmetic in Z[q] and its fraction field.

Three layers: dense integer polynomials (Poly), polynomials with a signed
power-of-q shift (LaurentPoly), and reduced fractions of those (QExpr).
Everything is immutable and hashable, and every operation is exact; there
is no floating point anywhere in this module.
"""

from __future__ import annotations

import math
from fractions import Fraction


class NotDivisibleError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class BothZeroError(ValueError):
    """Raised when a gcd of two zero polynomials is requested."""


class PoleAtOneError(ZeroDivisionError):
    """Raised when a QExpr is evaluated at q = 1 but has a pole there."""


def _strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense polynomial in q with integer coefficients, ascending order.

    >>> p = Poly([1, 2, 1])
    >>> p.degree
    2
    >>> p(3)
    16
    >>> p * Poly([1, -1])
    Poly([1, 1, -1, -1])
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = []
        for x in coeffs:
            if not isinstance(x, int):
                raise TypeError(f"integer coefficient required, got {type(x).__name__}")
            c.append(x)
        self._c = _strip(c)

    @classmethod
    def const(cls, value: int) -> "Poly":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "Poly":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_decimal_strings(cls, strings) -> "Poly":
        return cls(int(s) for s in strings)

    def to_decimal_strings(self) -> list[str]:
        return [str(c) for c in self._c]

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self):
        """Degree, with float("-inf") for the zero polynomial."""
        return len(self._c) - 1 if self._c else float("-inf")

    @property
    def leading(self) -> int:
        return self._c[-1] if self._c else 0

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        # explicit iterator: __getitem__ alone would iterate forever
        # because out-of-range coefficients read as 0
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == (() if other == 0 else (other,))
        return NotImplemented

    def __hash__(self):
        if len(self._c) <= 1:
            return hash(self._c[0] if self._c else 0)
        return hash(self._c)

    def __neg__(self):
        return Poly(-c for c in self._c)

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Poly(other * c for c in self._c)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "Poly":
        """Multiply by q**k, k >= 0."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self._c:
            return self
        return Poly((0,) * k + self._c)

    def _div_core(self, other: "Poly"):
        # Long division in Z[q]; returns the quotient or None when either
        # a leading coefficient fails to divide or a remainder survives.
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return ZERO
        db = other.degree
        lb = other._c[-1]
        rem = list(self._c)
        dr = len(rem) - 1
        q = [0] * (dr - db + 1) if dr >= db else None
        if q is None:
            return None
        while dr >= db:
            lead = rem[dr]
            if lead:
                step, r = divmod(lead, lb)
                if r:
                    return None
                q[dr - db] = step
                off = dr - db
                for i, c in enumerate(other._c):
                    rem[off + i] -= step * c
            dr -= 1
        if any(rem):
            return None
        return Poly(q)

    def exact_div(self, other: "Poly") -> "Poly":
        """Exact quotient in Z[q].

        Raises NotDivisibleError when other does not divide self over Z[q],
        and ZeroDivisionError when other is zero.
        """
        q = self._div_core(other)
        if q is None:
            raise NotDivisibleError(f"{other!r} does not divide {self!r} in Z[q]")
        return q

    def try_exact_div(self, other: "Poly"):
        """Like exact_div but returns None instead of raising."""
        return self._div_core(other)

    def content(self) -> int:
        """gcd of the coefficients, nonnegative; 0 for the zero polynomial."""
        g = 0
        for c in self._c:
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def primitive(self) -> "Poly":
        """self divided by its content; the zero polynomial maps to itself."""
        g = self.content()
        if g <= 1:
            return self
        return Poly(c // g for c in self._c)

    def scaled_down(self, d: int) -> "Poly":
        """Divide every coefficient by d; d must divide the content."""
        if d == 1:
            return self
        out = []
        for c in self._c:
            step, r = divmod(c, d)
            if r:
                raise NotDivisibleError(f"{d} does not divide all coefficients")
            out.append(step)
        return Poly(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                var = "q" if i == 1 else f"q^{i}"
                sign = "-" if c < 0 else ""
                if parts:
                    parts.append(("- " if c < 0 else "+ ") + mag + var)
                else:
                    parts.append(sign + mag + var)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({list(self._c)!r})"


ZERO = Poly()
ONE = Poly((1,))
Q = Poly((0, 1))


def _pseudo_rem(a: Poly, b: Poly) -> Poly:
    # prem(a, b): repeatedly scale by lead(b) so each cancellation stays in Z[q].
    db = b.degree
    lb = b.leading
    r = a
    while r and r.degree >= db:
        r = lb * r - r.leading * b.shifted(r.degree - db)
    return r


def gcd_rational(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in Q[q], returned with positive leading coefficient.

    Integer content of the inputs is ignored: gcd_rational(2*p, 4*p) is the
    primitive part of p. Uses the primitive pseudo-remainder sequence.

    >>> gcd_rational(Poly([-1, 0, 1]), Poly([1, 2, 1]))
    Poly([1, 1])
    """
    if not a and not b:
        raise BothZeroError("gcd of two zero polynomials")
    a = a.primitive()
    b = b.primitive()
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive()
    if a.leading < 0:
        a = -a
    return a


class LaurentPoly:
    """A polynomial times a signed power of q.

    Stored as (base, shift) where base has a nonzero constant term, so the
    representation is unique. The zero element has base 0 and shift 0.
    """

    __slots__ = ("_base", "_shift")

    def __init__(self, base: Poly, shift: int = 0):
        if not isinstance(base, Poly):
            base = Poly((base,)) if isinstance(base, int) else base
        if not isinstance(base, Poly):
            raise TypeError("base must be a Poly or int")
        if not base:
            self._base = ZERO
            self._shift = 0
            return
        v = 0
        while base._c[v] == 0:
            v += 1
        if v:
            base = Poly(base._c[v:])
        self._base = base
        self._shift = shift + v

    @property
    def base(self) -> Poly:
        return self._base

    @property
    def shift(self) -> int:
        return self._shift

    @property
    def degree(self):
        return self._base.degree + self._shift if self._base else float("-inf")

    def __bool__(self):
        return bool(self._base)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._base == other._base and self._shift == other._shift
        if isinstance(other, (Poly, int)):
            return self == _as_laurent(other)
        return NotImplemented

    def __hash__(self):
        if self._shift == 0:
            return hash(self._base)
        return hash((self._base, self._shift))

    def __neg__(self):
        return LaurentPoly(-self._base, self._shift)

    def __add__(self, other):
        if isinstance(other, (Poly, int)):
            other = _as_laurent(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._base:
            return other
        if not other._base:
            return self
        s = min(self._shift, other._shift)
        return LaurentPoly(
            self._base.shifted(self._shift - s) + other._base.shifted(other._shift - s),
            s,
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (Poly, int)):
            other = _as_laurent(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Poly, int)):
            other = _as_laurent(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly(self._base * other._base, self._shift + other._shift)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        return LaurentPoly(self._base ** n, self._shift * n)

    def __call__(self, x):
        if not self._base:
            return Fraction(0)
        val = self._base(Fraction(x))
        return val * Fraction(x) ** self._shift

    def __str__(self):
        if self._shift == 0:
            return str(self._base)
        power = "q" if self._shift == 1 else f"q^{self._shift}"
        if self._base == ONE:
            return power
        return f"{power}*({self._base})"

    def __repr__(self):
        return f"LaurentPoly({self._base!r}, {self._shift})"


L_ZERO = LaurentPoly(ZERO)
L_ONE = LaurentPoly(ONE)


def _as_laurent(x):
    """Coerce x to (LaurentPoly, positive integer denominator)."""
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, Poly):
        return LaurentPoly(x)
    if isinstance(x, int):
        return LaurentPoly(Poly((x,)))
    raise TypeError(f"cannot interpret {type(x).__name__} as a Laurent polynomial")


def _split(x):
    # -> (LaurentPoly, int denominator)
    if isinstance(x, Fraction):
        return LaurentPoly(Poly((x.numerator,))), x.denominator
    return _as_laurent(x), 1


class QExpr:
    """Reduced fraction num/den with num a LaurentPoly and den a Poly.

    Canonical invariants: den is nonzero with nonzero constant term (powers
    of q are folded into the numerator shift) and positive leading
    coefficient; the primitive parts of num and den are coprime in Q[q];
    and the integer contents of num and den are coprime, so a rational
    constant like 3/8 is stored with content 3 upstairs and 8 downstairs.

    >>> x = QExpr(Poly([0, 0, 2]), Poly([0, 8]))
    >>> print(x)
    q/4
    >>> QExpr(Poly([-1, 0, 1]), Poly([1, 1])) == QExpr(Poly([-1, 1]))
    True
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num=0, den=1):
        lnum, dn = _split(num)
        lden, dd = _split(den)
        lnum = lnum * dd
        lden = lden * dn
        if not lden:
            raise ZeroDivisionError("zero denominator")
        if not lnum:
            self._num = L_ZERO
            self._den = ONE
            return
        shift = lnum.shift - lden.shift
        nb = lnum.base
        db = lden.base
        g = gcd_rational(nb, db)
        if g.degree > 0:
            nb = nb.exact_div(g)
            db = db.exact_div(g)
        t = math.gcd(nb.content(), db.content())
        if t > 1:
            nb = nb.scaled_down(t)
            db = db.scaled_down(t)
        if db.leading < 0:
            nb = -nb
            db = -db
        self._num = LaurentPoly(nb, shift)
        self._den = db

    @property
    def num(self) -> LaurentPoly:
        return self._num

    @property
    def den(self) -> Poly:
        return self._den

    @property
    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly, LaurentPoly)):
            other = QExpr(other)
        if not isinstance(other, QExpr):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._den == ONE and self._num.shift == 0 and self._num.base.degree <= 0:
            return hash(self._num.base)
        return hash((self._num, self._den))

    def __neg__(self):
        out = object.__new__(QExpr)
        out._num = -self._num
        out._den = self._den
        return out

    def _coerced(self, other):
        if isinstance(other, QExpr):
            return other
        if isinstance(other, (int, Fraction, Poly, LaurentPoly)):
            return QExpr(other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return QExpr(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return QExpr(self._num * o._den - o._num * self._den, self._den * o._den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return QExpr(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        if not o._num:
            raise ZeroDivisionError("division by zero QExpr")
        return QExpr(self._num * o._den, LaurentPoly(self._den) * o._num)

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("exponent must be an integer")
        if n < 0:
            return (QExpr(1) / self) ** (-n)
        out = object.__new__(QExpr)
        out._num = self._num ** n
        out._den = self._den ** n
        return out

    def __call__(self, x) -> Fraction:
        dv = self._den(Fraction(x))
        if dv == 0:
            raise ZeroDivisionError(f"pole at q = {x}")
        return self._num(x) / dv

    def eval_at_one(self) -> Fraction:
        """Value at q = 1, exact. Raises PoleAtOneError when den(1) = 0."""
        dv = self._den(1)
        if dv == 0:
            raise PoleAtOneError("denominator vanishes at q = 1")
        return self._num(1) / dv

    def __str__(self):
        n = str(self._num)
        if self._den == ONE:
            return n
        d = str(self._den)
        if len(self._den) > 1:
            d = f"({d})"
        if " " in n:
            n = f"({n})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"QExpr({self._num!r}, {self._den!r})"


QX_ZERO = QExpr(0)
QX_ONE = QExpr(1)
