"""Exact coefficient fields.

Field elements are plain immutable Python values owned by a field
descriptor: ``Fraction`` for the rationals, ``int`` in ``[0, p)`` for prime
fields, tuples of base-field elements for simple extensions and
``(numerator, denominator)`` coefficient-tuple pairs for rational function
fields.  Every representation is canonical, so element equality is ``==``.
"""
from __future__ import annotations

import itertools
import random
import re
from fractions import Fraction
from functools import cached_property


class FieldMismatch(TypeError):
    pass


class Field:
    """Base class of field descriptors.  Descriptors compare structurally."""

    characteristic: int = 0
    order: int | None = None

    # -- arithmetic -----------------------------------------------------
    zero = None
    one = None

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, a):
        """Accept ints and elements of subfields; return an element of self."""
        if isinstance(a, int) and not isinstance(a, bool):
            return self.from_int(a)
        return a

    # -- structure ------------------------------------------------------
    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def elements(self):
        raise ValueError(f"{self} is infinite")

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def prime_field(self) -> "Field":
        raise NotImplementedError

    def coords_over(self, a, sub: "Field") -> list:
        """Coordinates of ``a`` in the standard basis over the subfield ``sub``."""
        if sub == self:
            return [a]
        raise FieldMismatch(f"{sub} is not a subfield of {self}")

    def dim_over(self, sub: "Field") -> int:
        if sub == self:
            return 1
        raise FieldMismatch(f"{sub} is not a subfield of {self}")

    def from_coords(self, coords, sub: "Field"):
        if sub == self:
            (a,) = coords
            return a
        raise FieldMismatch(f"{sub} is not a subfield of {self}")

    def embed(self, a, sub: "Field"):
        """Image of an element of the subfield ``sub``."""
        if sub == self:
            return a
        raise FieldMismatch(f"{sub} is not a subfield of {self}")

    def contains(self, sub: "Field") -> bool:
        return sub == self

    def format(self, a) -> str:
        return str(a)

    def parse_element(self, text: str):
        raise NotImplementedError


class Rationals(Field):
    characteristic = 0
    order = None
    zero = Fraction(0)
    one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by 0")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, a):
        if isinstance(a, (int, Fraction)) and not isinstance(a, bool):
            return Fraction(a)
        raise FieldMismatch(f"cannot coerce {a!r} into Q")

    def random_element(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    def prime_field(self):
        return self

    def parse_element(self, text):
        return Fraction(text.strip())


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = 0
        self.one = 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F{self.p}"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def pow(self, a, n):
        return pow(a, n, self.p) if n >= 0 else pow(self.inv(a), -n, self.p)

    def from_int(self, n):
        return n % self.p

    def coerce(self, a):
        if isinstance(a, int) and not isinstance(a, bool):
            return a % self.p
        if isinstance(a, Fraction):
            return self.div(a.numerator % self.p, a.denominator % self.p)
        raise FieldMismatch(f"cannot coerce {a!r} into {self}")

    def elements(self):
        return range(self.p)

    def random_element(self, rng):
        return rng.randrange(self.p)

    def prime_field(self):
        return self

    def parse_element(self, text):
        return self.coerce(Fraction(text.strip()))


class ExtensionField(Field):
    """``base[x]/(modulus)`` for a monic irreducible ``modulus`` over a finite base.

    Elements are length-``degree`` tuples of base elements (coefficients of
    ``1, x, ..., x^(e-1)``).  Towers are allowed.
    """

    def __init__(self, modulus, name: str | None = None, check: bool = True):
        from .poly import Poly

        base = modulus.field
        modulus = modulus.monic()
        if modulus.degree < 1:
            raise ValueError("extension modulus must have positive degree")
        if check and modulus.degree > 1:
            from .factor import is_irreducible

            if not is_irreducible(modulus):
                raise ValueError(f"reducible modulus {modulus}")
        self.base = base
        self.modulus = modulus
        self.degree = modulus.degree
        self.characteristic = base.characteristic
        self.order = base.order**self.degree if base.order else None
        self.name = name
        self.zero = tuple([base.zero] * self.degree)
        self.one = tuple([base.one] + [base.zero] * (self.degree - 1))
        self._Poly = Poly

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus.coeffs == self.modulus.coeffs
        )

    def __hash__(self):
        return hash(("ext", self.base, self.modulus.coeffs))

    def __repr__(self):
        if self.name:
            return self.name
        return f"{self.base!r}[x]/({self.modulus.format('x')})"

    @cached_property
    def generator(self):
        if self.degree == 1:
            return (self.base.neg(self.modulus.coeffs[0]),)
        return tuple([self.base.zero, self.base.one] + [self.base.zero] * (self.degree - 2))

    def _pad(self, coeffs):
        return tuple(coeffs) + (self.base.zero,) * (self.degree - len(coeffs))

    def from_poly(self, poly):
        return self._pad((poly % self.modulus).coeffs)

    def to_poly(self, a):
        return self._Poly(self.base, a)

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def mul(self, a, b):
        B = self.base
        e = self.degree
        prod = [B.zero] * (2 * e - 1)
        for i, x in enumerate(a):
            if x == B.zero:
                continue
            for j, y in enumerate(b):
                if y != B.zero:
                    prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        mod = self.modulus.coeffs
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if c != B.zero:
                for j in range(e):
                    prod[k - e + j] = B.sub(prod[k - e + j], B.mul(c, mod[j]))
        return tuple(prod[:e])

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of 0")
        g, s, _ = self.to_poly(a).xgcd(self.modulus)
        s = s.scale(self.base.inv(g.lc))
        return self.from_poly(s)

    def from_int(self, n):
        return self._pad((self.base.from_int(n),))

    def coerce(self, a):
        if isinstance(a, tuple) and len(a) == self.degree:
            return a
        return self.embed(self.base.coerce(a), self.base)

    def elements(self):
        for coeffs in itertools.product(list(self.base.elements()), repeat=self.degree):
            yield tuple(coeffs)

    def random_element(self, rng):
        return tuple(self.base.random_element(rng) for _ in range(self.degree))

    def prime_field(self):
        return self.base.prime_field()

    def contains(self, sub):
        return sub == self or self.base.contains(sub)

    def coords_over(self, a, sub):
        if sub == self:
            return [a]
        out = []
        for c in a:
            out.extend(self.base.coords_over(c, sub))
        return out

    def dim_over(self, sub):
        if sub == self:
            return 1
        return self.degree * self.base.dim_over(sub)

    def from_coords(self, coords, sub):
        if sub == self:
            (a,) = coords
            return a
        step = self.base.dim_over(sub)
        return tuple(
            self.base.from_coords(coords[i * step:(i + 1) * step], sub)
            for i in range(self.degree)
        )

    def embed(self, a, sub):
        if sub == self:
            return a
        return self._pad((self.base.embed(a, sub),))

    def frobenius_power(self, a, k: int = 1):
        return self.pow(a, self.characteristic**k)

    def format(self, a):
        return self.to_poly(a).format("x")

    def parse_element(self, text):
        from .poly import parse_poly

        return self.from_poly(parse_poly(self.base, text))


class RationalFunctionField(Field):
    """``base(var)``, one transcendental variable over a prime field, F_q or Q.

    Elements are ``(num, den)`` with ``num``, ``den`` coefficient tuples over
    the base, ``den`` monic and ``gcd(num, den) = 1``.
    """

    def __init__(self, base: Field, var: str = "v"):
        from .poly import Poly

        if isinstance(base, RationalFunctionField):
            raise ValueError("only one transcendental variable is supported")
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.order = None
        self._Poly = Poly
        self.zero = ((), (base.one,))
        self.one = ((base.one,), (base.one,))

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.base == self.base and other.var == self.var

    def __hash__(self):
        return hash(("ratfun", self.base, self.var))

    def __repr__(self):
        return f"{self.base!r}({self.var})"

    def _make(self, num, den):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return self.zero
        g = num.gcd(den)
        if g.degree > 0:
            num, _ = num.divmod(g)
            den, _ = den.divmod(g)
        c = den.lc
        if c != self.base.one:
            inv = self.base.inv(c)
            num, den = num.scale(inv), den.scale(inv)
        return (num.coeffs, den.coeffs)

    def parts(self, a):
        return self._Poly(self.base, a[0]), self._Poly(self.base, a[1])

    def element(self, num, den=None):
        if den is None:
            den = self._Poly.one(self.base)
        return self._make(num, den)

    @cached_property
    def generator(self):
        return self.element(self._Poly.x(self.base))

    def add(self, a, b):
        an, ad = self.parts(a)
        bn, bd = self.parts(b)
        if ad == bd:
            return self._make(an + bn, ad)
        return self._make(an * bd + bn * ad, ad * bd)

    def neg(self, a):
        return (tuple(self.base.neg(c) for c in a[0]), a[1])

    def mul(self, a, b):
        an, ad = self.parts(a)
        bn, bd = self.parts(b)
        return self._make(an * bn, ad * bd)

    def inv(self, a):
        an, ad = self.parts(a)
        if an.is_zero():
            raise ZeroDivisionError("inverse of 0")
        return self._make(ad, an)

    def from_int(self, n):
        return self.embed(self.base.from_int(n), self.base)

    def coerce(self, a):
        if isinstance(a, tuple) and len(a) == 2 and isinstance(a[0], tuple):
            return a
        return self.embed(self.base.coerce(a), self.base)

    def random_element(self, rng):
        P = self._Poly
        num = P(self.base, [self.base.random_element(rng) for _ in range(rng.randint(1, 3))])
        den = P(self.base, [self.base.random_element(rng) for _ in range(rng.randint(0, 2))] + [self.base.one])
        return self._make(num, den)

    def prime_field(self):
        return self.base.prime_field()

    def contains(self, sub):
        return sub == self or self.base.contains(sub)

    def embed(self, a, sub):
        if sub == self:
            return a
        c = self.base.embed(a, sub)
        if c == self.base.zero:
            return self.zero
        return ((c,), (self.base.one,))

    def constant_value(self, a):
        """The base-field value of ``a`` if it is constant, else ``None``."""
        if len(a[1]) == 1 and len(a[0]) <= 1:
            return a[0][0] if a[0] else self.base.zero
        return None

    def parse_element(self, text):
        from .poly import parse_ratfunc

        r = parse_ratfunc(self.base, text, var=self.var)
        return self._make(r.num, r.den)

    def format(self, a):
        num, den = self.parts(a)
        if den.degree == 0:
            return num.format(self.var)
        return f"({num.format(self.var)})/({den.format(self.var)})"


_prime_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_cache:
        _prime_cache[p] = PrimeField(p)
    return _prime_cache[p]


QQ = Rationals()

_DESC = re.compile(r"^F(\d+)=F(\d+)\[(\w)\]/\((.+)\)$")


def parse_field(text: str) -> Field:
    """Parse ``Q``, ``F5``, ``F9=F3[x]/(x^2+1)``, ``Q(v)``, ``F3(v)``, ``F4``.

    ``F4``, ``F8``, ``F9`` and other prime powers without an explicit modulus
    use the lexicographically first monic irreducible polynomial.
    """
    from .poly import parse_poly

    text = text.replace(" ", "")
    m = re.match(r"^([^=]+)\(([A-Za-z]\w*)\)$", text)
    if m:
        return RationalFunctionField(parse_field(m.group(1)), m.group(2))
    if text == "Q":
        return QQ
    m = _DESC.match(text)
    if m:
        q, p, var, mod = int(m.group(1)), int(m.group(2)), m.group(3), m.group(4)
        base = GF(p)
        modulus = parse_poly(base, mod, var=var)
        if p**modulus.degree != q:
            raise ValueError(f"modulus degree does not give F{q}")
        return ExtensionField(modulus, name=f"F{q}")
    m = re.match(r"^F(\d+)$", text)
    if m:
        q = int(m.group(1))
        for p in range(2, q + 1):
            if q % p == 0:
                break
        e, r = 0, q
        while r % p == 0:
            r //= p
            e += 1
        if r != 1:
            raise ValueError(f"{q} is not a prime power")
        if e == 1:
            return GF(p)
        return standard_extension(GF(p), e, name=f"F{q}")
    raise ValueError(f"unrecognised field descriptor {text!r}")


_std_ext: dict = {}


def standard_extension(base: Field, degree: int, name: str | None = None) -> ExtensionField:
    """Extension of a finite field by its lexicographically first irreducible."""
    from .factor import is_irreducible
    from .poly import Poly

    key = (base, degree)
    if key not in _std_ext:
        elems = list(base.elements())
        for tail in itertools.product(elems, repeat=degree):
            cand = Poly(base, list(reversed(tail)) + [base.one])
            if cand.coeffs[0] != base.zero and is_irreducible(cand):
                _std_ext[key] = ExtensionField(cand, name=name, check=False)
                break
    return _std_ext[key]


def field_extend(base: Field, modulus) -> ExtensionField:
    """``base[x]/(modulus)``; the modulus must be irreducible over a finite base."""
    if not base.is_finite:
        raise ValueError("extensions are supported over finite fields only")
    if modulus.field != base:
        raise FieldMismatch("modulus over a different field")
    return ExtensionField(modulus)


def norm(L: ExtensionField, a):
    """Norm from ``L`` down to its base: product of the Galois conjugates."""
    q = L.base.order
    result = L.one
    c = a
    for _ in range(L.degree):
        result = L.mul(result, c)
        c = L.pow(c, q)
    (value, *rest) = result
    assert all(r == L.base.zero for r in rest)
    return value


def trace(L: ExtensionField, a):
    q = L.base.order
    result = L.zero
    c = a
    for _ in range(L.degree):
        result = L.add(result, c)
        c = L.pow(c, q)
    (value, *rest) = result
    assert all(r == L.base.zero for r in rest)
    return value

