"""Exact scalar arithmetic: rationals, prime fields, cyclotomic fields.

Every other module stores scalars as *raw* values -- Fraction for Q, int for
F_p, and (den, coeff-tuple) pairs for cyclotomic fields -- and performs
arithmetic through the owning field descriptor.  Raw values are immutable,
hashable, and always kept normalized, so equality is plain ``==`` on the raw
representation.  No floating point appears anywhere.

Cyclotomic elements are dense coefficient vectors of degree < phi(m), fully
reduced modulo the m-th cyclotomic polynomial Phi_m.  Phi_m is computed by
exact division of x^m - 1 by the Phi_d for proper divisors d | m.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DivisionByZero, InputError, MixedFields

__all__ = [
    "Field", "RationalField", "PrimeField", "CyclotomicField",
    "QQ", "cyclotomic_field", "prime_field", "field_from_json",
    "cyclotomic_polynomial",
]


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials; den monic-leading is not assumed
    # but the division must leave no remainder.
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    dlead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % dlead != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // dlead
        out[k] = q
        for j, dj in enumerate(den):
            num[k + j] -= q * dj
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyclotomic_polynomial(m: int) -> list[int]:
    """Integer coefficient list (low degree first) of Phi_m."""
    if m < 1:
        raise InputError("cyclotomic index must be >= 1")
    num = [0] * (m + 1)
    num[0] = -1
    num[m] = 1
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divide_exact(num, cyclotomic_polynomial(d))
    return num


class Field:
    """Base descriptor.  Raw values are whatever the subclass chooses."""

    kind = "?"

    # subclasses define: zero, one, add, neg, mul, inv, is_zero, from_int,
    # from_fraction, format, parse, to_json, random

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        return a == b

    def from_str(self, s: str):
        if "/" in s:
            num, den = s.split("/")
            return self.from_fraction(Fraction(int(num), int(den)))
        return self.from_int(int(s))

    def sum(self, vals):
        acc = self.zero
        for v in vals:
            acc = self.add(acc, v)
        return acc

    def pow_int(self, a, n: int):
        if n < 0:
            return self.pow_int(self.inv(a), -n)
        acc = self.one
        for _ in range(n):
            acc = self.mul(acc, a)
        return acc

    def check_same(self, other: "Field"):
        if self != other:
            raise MixedFields(f"cannot mix scalars of {self} and {other}")


class RationalField(Field):
    kind = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("1/0 in Q")
        return 1 / a

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, n: int):
        return Fraction(n)

    def from_fraction(self, fr: Fraction):
        return Fraction(fr)

    def format(self, a) -> str:
        return str(a)

    def parse(self, obj):
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, str):
            return self.from_str(obj)
        raise InputError(f"bad rational scalar: {obj!r}")

    def to_json(self, a):
        return str(a)

    def random(self, rng):
        return Fraction(rng.randint(-6, 6), rng.randint(1, 5))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    kind = "Fp"

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise InputError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"1/0 in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def from_int(self, n: int):
        return n % self.p

    def from_fraction(self, fr: Fraction):
        return self.mul(fr.numerator % self.p, self.inv(fr.denominator % self.p))

    def format(self, a) -> str:
        return str(a % self.p)

    def parse(self, obj):
        if isinstance(obj, int):
            return obj % self.p
        if isinstance(obj, str):
            return self.from_str(obj)
        raise InputError(f"bad F_p scalar: {obj!r}")

    def to_json(self, a):
        return str(a % self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


class CyclotomicField(Field):
    """Q(zeta_m).  Raw values are (den, nums) with den > 0 an int and nums an
    int tuple of length phi(m), jointly coprime.  zeta_m is the class of x."""

    kind = "cyclotomic"

    def __init__(self, m: int):
        self.m = m
        self.phi = cyclotomic_polynomial(m)  # monic, integer
        self.deg = len(self.phi) - 1
        d = self.deg
        # x^k mod Phi_m for k in [d, 2d-2], used to reduce products.
        self._red: list[tuple[int, ...]] = []
        cur = [-c for c in self.phi[:d]]  # x^d
        self._red.append(tuple(cur))
        for _ in range(d - 2):
            cur = [0] + cur
            top = cur.pop()
            if top:
                cur = [c - top * p for c, p in zip(cur, self.phi[:d])]
            self._red.append(tuple(cur))
        self.zero = (1, (0,) * d)
        self.one = self._norm(1, [1] + [0] * (d - 1))

    def _norm(self, den: int, nums: list[int]):
        if den < 0:
            den, nums = -den, [-c for c in nums]
        g = den
        for c in nums:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            nums = [c // g for c in nums]
        if not any(nums):
            return (1, (0,) * self.deg)
        return (den, tuple(nums))

    def add(self, a, b):
        da, na = a
        db, nb = b
        if da == db:
            return self._norm(da, [x + y for x, y in zip(na, nb)])
        return self._norm(da * db, [x * db + y * da for x, y in zip(na, nb)])

    def neg(self, a):
        return (a[0], tuple(-c for c in a[1]))

    def mul(self, a, b):
        da, na = a
        db, nb = b
        d = self.deg
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = self._red[k - d]
                for j in range(d):
                    out[j] += c * row[j]
        return self._norm(da * db, out)

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero(f"1/0 in {self}")
        da, na = a
        # Extended Euclid over Q[x] for gcd(poly(a), Phi_m) = 1.
        fa = [Fraction(c, da) for c in na]
        fb = [Fraction(c) for c in self.phi]
        r0, r1 = fb, fa
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            q, rem = _frac_poly_divmod(r0, r1)
            s_new = _frac_poly_sub(s0, _frac_poly_mul(q, s1))
            r0, r1 = r1, rem
            s0, s1 = s1, s_new
        lead = r1[0]
        inv_coeffs = [c / lead for c in s1]
        inv_coeffs += [Fraction(0)] * (self.deg - len(inv_coeffs))
        den = 1
        for c in inv_coeffs[: self.deg]:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in inv_coeffs[: self.deg]]
        return self._norm(den, nums)

    def is_zero(self, a) -> bool:
        return not any(a[1])

    def from_int(self, n: int):
        return self._norm(1, [n] + [0] * (self.deg - 1))

    def from_fraction(self, fr: Fraction):
        return self._norm(fr.denominator, [fr.numerator] + [0] * (self.deg - 1))

    def zeta(self, power: int = 1):
        """zeta_m^power as a raw scalar."""
        power %= self.m
        acc = self.one
        x = self._norm(1, [0, 1] + [0] * (self.deg - 2)) if self.deg >= 2 \
            else self._norm(1, list(self._red[0]))  # deg 1: x = Phi-root
        for _ in range(power):
            acc = self.mul(acc, x)
        return acc

    def coeffs(self, a) -> list[Fraction]:
        den, nums = a
        return [Fraction(c, den) for c in nums]

    def format(self, a) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs(a)) + "]"

    def parse(self, obj):
        if isinstance(obj, list):
            if len(obj) != self.deg:
                raise InputError(
                    f"cyclotomic scalar needs {self.deg} coefficients, got {len(obj)}")
            frs = [Fraction(x) if isinstance(x, int) else Fraction(*_split(x))
                   for x in obj]
            den = 1
            for fr in frs:
                den = den * fr.denominator // gcd(den, fr.denominator)
            return self._norm(den, [int(fr * den) for fr in frs])
        if isinstance(obj, (int, str)):
            fr = Fraction(obj) if isinstance(obj, int) else Fraction(*_split(obj))
            return self.from_fraction(fr)
        raise InputError(f"bad cyclotomic scalar: {obj!r}")

    def to_json(self, a):
        return [str(c) for c in self.coeffs(a)]

    def random(self, rng):
        return self._norm(rng.randint(1, 4),
                          [rng.randint(-5, 5) for _ in range(self.deg)])

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.m == self.m

    def __hash__(self):
        return hash(("cyc", self.m))

    def __repr__(self):
        return f"Q(zeta_{self.m})"


def _split(s: str):
    if "/" in s:
        n, d = s.split("/")
        return int(n), int(d)
    return int(s), 1


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while b and b[-1] == 0:
        b = b[:-1]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / b[-1]
        q[k] = c
        for j in range(len(b)):
            a[k + j] -= c * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


QQ = RationalField()


def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def cyclotomic_field(m: int) -> CyclotomicField:
    """Descriptor for Q(zeta_m); deg Phi_m = phi(m).  m = 1 gives Q itself
    presented on the basis {1} (Phi_1 = x - 1)."""
    return CyclotomicField(m)


def field_from_json(obj) -> Field:
    try:
        kind = obj["field"]
    except (TypeError, KeyError):
        raise InputError("missing 'field' descriptor") from None
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return PrimeField(int(obj["p"]))
    if kind == "cyclotomic":
        return CyclotomicField(int(obj["m"]))
    raise InputError(f"unknown field kind {kind!r}")


def field_to_json(field: Field):
    if isinstance(field, RationalField):
        return {"field": "Q"}
    if isinstance(field, PrimeField):
        return {"field": "Fp", "p": field.p}
    if isinstance(field, CyclotomicField):
        return {"field": "cyclotomic", "m": field.m}
    raise InputError(f"unserializable field {field!r}")
