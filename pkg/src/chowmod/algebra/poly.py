"""Dense univariate polynomials and rational functions over a `Field`."""
from __future__ import annotations

import re

from .fields import Field, FieldMismatch, PrimeField


def _strip(field: Field, coeffs) -> tuple:
    coeffs = list(coeffs)
    z = field.zero
    while coeffs and coeffs[-1] == z:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial, coefficients lowest degree first, no trailing zeros."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: Field, coeffs=()):
        self.field = field
        self.coeffs = _strip(field, (field.coerce(c) for c in coeffs))
        self._hash = None

    @classmethod
    def _raw(cls, field, coeffs):
        p = cls.__new__(cls)
        p.field = field
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def zero(cls, field):
        return cls._raw(field, ())

    @classmethod
    def one(cls, field):
        return cls._raw(field, (field.one,))

    @classmethod
    def x(cls, field):
        return cls._raw(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, n: int, c=None):
        c = field.one if c is None else field.coerce(c)
        return cls(field, [field.zero] * n + [c])

    # -- basic data --------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and self.field == other.field
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({self.field!r}, {self.format()})"

    def __str__(self):
        return self.format()

    def _check(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.field, other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        other = self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly._raw(F, _strip(F, out))

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly._raw(F, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(F, ())
        if isinstance(F, PrimeField):
            p = F.p
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return Poly._raw(F, _strip(F, [c % p for c in out]))
        out = [F.zero] * (len(a) + len(b) - 1)
        z = F.zero
        for i, x in enumerate(a):
            if x == z:
                continue
            for j, y in enumerate(b):
                if y != z:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly._raw(F, _strip(F, out))

    __rmul__ = __mul__

    def scale(self, c):
        F = self.field
        c = F.coerce(c)
        if c == F.zero:
            return Poly._raw(F, ())
        return Poly._raw(F, tuple(F.mul(c, x) for x in self.coeffs))

    def shift(self, n: int):
        """Multiply by ``x**n``."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, (self.field.zero,) * n + self.coeffs)

    def __pow__(self, n: int):
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) <= db:
            return Poly._raw(F, ()), self
        inv_lc = F.inv(other.lc)
        quot = [F.zero] * (len(rem) - db)
        b = other.coeffs
        if isinstance(F, PrimeField):
            p = F.p
            for k in range(len(rem) - 1, db - 1, -1):
                c = rem[k] % p
                if not c:
                    continue
                c = c * inv_lc % p
                quot[k - db] = c
                off = k - db
                for j in range(db + 1):
                    rem[off + j] -= c * b[j]
            return (
                Poly._raw(F, _strip(F, quot)),
                Poly._raw(F, _strip(F, [x % p for x in rem[:db]])),
            )
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == F.zero:
                continue
            c = F.mul(c, inv_lc)
            quot[k - db] = c
            for j in range(db + 1):
                if b[j] != F.zero:
                    rem[k - db + j] = F.sub(rem[k - db + j], F.mul(c, b[j]))
        return Poly._raw(F, _strip(F, quot)), Poly._raw(F, _strip(F, rem[:db]))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self):
        if self.is_zero() or self.lc == self.field.one:
            return self
        return self.scale(self.field.inv(self.lc))

    def gcd(self, other):
        a, b = self, self._check(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        """``(g, s, t)`` with ``s*self + t*other = g``, ``g`` not normalised."""
        F = self.field
        r0, r1 = self, self._check(other)
        s0, s1 = Poly.one(F), Poly.zero(F)
        t0, t1 = Poly.zero(F), Poly.one(F)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        return r0, s0, t0

    def pow_mod(self, n: int, mod: "Poly"):
        result = Poly.one(self.field)
        base = self % mod
        while n:
            if n & 1:
                result = result * base % mod
            base = base * base % mod
            n >>= 1
        return result

    # -- evaluation and calculus --------------------------------------------
    def __call__(self, x, field: Field | None = None):
        """Evaluate at ``x``; ``field`` is an overfield holding ``x`` (default: own)."""
        F = field or self.field
        if field is None:
            x = F.coerce(x)
            coeffs = self.coeffs
        else:
            coeffs = [F.embed(c, self.field) for c in self.coeffs]
        acc = F.zero
        for c in reversed(coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * other + Poly._raw(self.field, (c,))
        return acc

    def derivative(self):
        F = self.field
        return Poly._raw(F, _strip(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:]))

    def reverse(self, n: int | None = None):
        """``x**n * self(1/x)`` with ``n`` defaulting to the degree."""
        n = self.degree if n is None else n
        coeffs = list(self.coeffs) + [self.field.zero] * (n + 1 - len(self.coeffs))
        return Poly(self.field, reversed(coeffs[: n + 1]))

    def truncate(self, n: int):
        """Keep the terms of degree ``< n``."""
        return Poly._raw(self.field, _strip(self.field, self.coeffs[:n]))

    def valuation_at_zero(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != self.field.zero:
                return i
        raise ValueError("valuation of the zero polynomial")

    def map_coeffs(self, field: Field, fn):
        return Poly(field, [fn(c) for c in self.coeffs])

    # -- text ----------------------------------------------------------------
    def format(self, var: str = "u") -> str:
        F = self.field
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == F.zero:
                continue
            cs = F.format(c)
            neg = cs.startswith("-") and not any(ch in cs[1:] for ch in "+- ")
            if neg:
                cs = cs[1:]
            if any(ch in cs for ch in "+-/ ") and i > 0:
                cs = f"({cs})"
            mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mon:
                body = cs
            elif cs == "1":
                body = mon
            else:
                body = f"{cs}*{mon}"
            terms.append(("- " if neg else "+ ") + body)
        text = " ".join(terms)
        return "-" + text[2:] if text.startswith("- ") else text[2:]

    def to_list(self):
        return [self.field.format(c) for c in self.coeffs]


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


class _ExprParser:
    """Recursive-descent reader for ``+ - * / ^`` expressions in one variable.

    Integer literals map into the field, ``var`` is the indeterminate and, for
    extension fields, the name ``x`` denotes the class of the generator.
    Juxtaposition (``2t``, ``3(t+1)``) means multiplication.
    """

    def __init__(self, field: Field, text: str, var: str):
        self.field = field
        self.var = var
        self.tokens = []
        for num, name, op in _TOKEN.findall(text):
            if num:
                self.tokens.append(("num", int(num)))
            elif name:
                self.tokens.append(("name", name))
            elif op.strip():
                self.tokens.append(("op", op))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> "RatFunc":
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            _, op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.power()
                acc = acc * rhs if val == "*" else acc / rhs
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            neg = False
            if (kind, val) == ("op", "-"):
                neg = True
                kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be an integer literal")
            return base ** (-val if neg else val)
        return base

    def atom(self):
        F = self.field
        kind, val = self.take()
        if kind == "num":
            return RatFunc.const(F, F.from_int(val))
        if kind == "name":
            if val == self.var:
                return RatFunc.t(F)
            gen = getattr(F, "generator", None)
            if val == "x" and gen is not None:
                return RatFunc.const(F, gen)
            if val == getattr(F, "var", None):
                return RatFunc.const(F, gen)
            raise ValueError(f"unknown symbol {val!r} (variable is {self.var!r})")
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        raise ValueError(f"unexpected token {val!r}")


def _guess_var(text: str, default: str) -> str:
    names = set(re.findall(r"[A-Za-z_]\w*", text)) - {"x"}
    if len(names) == 1:
        return names.pop()
    return default


def parse_poly(field: Field, text: str, var: str | None = None) -> Poly:
    """Parse ``1,0,2`` (coefficients, lowest degree first) or ``2u^2+1`` style text."""
    text = text.strip()
    if "," in text:
        return Poly(field, [field.parse_element(c) for c in text.split(",")])
    var = var or _guess_var(text, "u")
    r = _ExprParser(field, text, var).parse()
    if r.den.degree > 0:
        raise ValueError(f"{text!r} is not a polynomial")
    return r.num.scale(field.inv(r.den.lc))
class RatFunc:
    """Reduced quotient ``num/den`` with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        F = num.field
        if den is None:
            den = Poly.one(F)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.one(F)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = den.lc
            if c != F.one:
                inv = F.inv(c)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, field, c):
        return cls(Poly.constant(field, c))

    @classmethod
    def t(cls, field):
        return cls(Poly.x(field))

    @property
    def field(self):
        return self.num.field

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            return None
        return self.num[0]

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        return RatFunc.const(self.field, other)

    def __add__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def compose(self, other: "RatFunc") -> "RatFunc":
        """``self(other(t))``."""
        other = self._lift(other)
        n = max(self.num.degree, self.den.degree, 0)

        def homog(p):
            # sum c_i num^i den^(n-i); the common den^n cancels in the quotient
            result = Poly.zero(self.field)
            for i, c in enumerate(p.coeffs):
                result = result + (other.num**i * other.den ** (n - i)).scale(c)
            return result

        return RatFunc(homog(self.num), homog(self.den))

    def map_field(self, field, fn):
        return RatFunc(self.num.map_coeffs(field, fn), self.den.map_coeffs(field, fn))

    def format(self, var: str = "t") -> str:
        if self.den.degree == 0:
            return self.num.format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"

    __str__ = format

    def __repr__(self):
        return f"RatFunc({self.format()})"


def parse_ratfunc(field: Field, text: str, var: str = "t") -> RatFunc:
    """Parse a rational expression such as ``(t+1)/(t-2)`` or ``1/(1-t)``."""
    return _ExprParser(field, text, var).parse()
def resultant(p: Poly, q: Poly):
    """Res(p, q) by the Euclidean remainder sequence."""
    if p.field != q.field:
        raise FieldMismatch(f"{p.field} vs {q.field}")
    F = p.field
    if p.is_zero() or q.is_zero():
        if p.is_zero() and q.is_zero():
            raise ValueError("resultant of two zero polynomials")
        return F.zero
    result = F.one
    a, b = p, q
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return F.mul(result, F.pow(b.lc, da))
        if da == 0:
            return F.mul(result, F.pow(a.lc, db))
        r = a % b
        if r.is_zero():
            return F.zero
        # Res(a, b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
        factor = F.pow(b.lc, da - r.degree)
        if (da * db) % 2:
            factor = F.neg(factor)
        result = F.mul(result, factor)
        a, b = b, r


def det_poly_matrix(rows: list[list[Poly]], field: Field) -> Poly:
    """Determinant of a square matrix over ``field[u]`` (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return Poly.one(field)
    M = [list(r) for r in rows]
    sign = 1
    prev = Poly.one(field)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(field)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exact_div(prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def companion_power_rows(g: Poly, modulus: Poly) -> list[list]:
    """Matrix (as rows) of multiplication by ``g`` on ``k[t]/modulus``.

    Column ``j`` holds the coordinates of ``g * t^j mod modulus``.
    """
    n = modulus.degree
    F = g.field
    cols = []
    cur = g % modulus
    t = Poly.x(F)
    for _ in range(n):
        cols.append([cur[i] for i in range(n)])
        cur = cur * t % modulus
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def charpoly_of_mult(g: Poly, modulus: Poly) -> Poly:
    """Characteristic polynomial (in ``u``) of multiplication by ``g`` mod ``modulus``.

    Equals ``Res_t(modulus(t), u - g(t))`` for monic ``modulus``.
    """
    F = g.field
    M = companion_power_rows(g, modulus)
    n = len(M)
    rows = [
        [
            (Poly.x(F) if i == j else Poly.zero(F)) - Poly.constant(F, M[i][j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return det_poly_matrix(rows, F)
