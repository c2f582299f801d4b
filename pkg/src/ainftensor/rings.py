"""Exact coefficient rings.

Only two rings are supported: the rationals (via Fraction) and prime
fields Z/p.  Every scalar that enters the library goes through one of
these; floats are never accepted.
"""

from fractions import Fraction


class Rationals(object):
    """Field of rational numbers, scalars stored as Fraction."""

    name = "q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == 0

    def fmt(self, a):
        return str(a)

    def parse(self, s):
        return Fraction(s)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(object):
    """Field Z/p for a prime p, scalars stored as ints in [0, p)."""

    def __init__(self, p):
        assert p >= 2
        for q in range(2, p):
            if q * q > p:
                break
            assert p % q != 0, "p must be prime"
        self.p = p
        self.name = "modp:%d" % p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return (x.numerator * pow(den, -1, self.p)) % self.p
        if isinstance(x, str):
            if "mod" in x:
                x = x.split("mod")[0]
            if "/" in x:
                return self.coerce(Fraction(x.strip()))
            return int(x.strip()) % self.p
        raise TypeError("cannot coerce %r into Z/%d" % (x, self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def fmt(self, a):
        return "%d mod %d" % (a % self.p, self.p)

    def parse(self, s):
        return self.coerce(s)

    def __repr__(self):
        return "Z/%d" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Zp", self.p))


def ring_from_name(name):
    """Build a ring from its CLI name, "q" or "modp:P"."""
    if name == "q":
        return Rationals()
    if name.startswith("modp:"):
        return PrimeField(int(name.split(":", 1)[1]))
    raise ValueError("unknown ring %r" % name)
