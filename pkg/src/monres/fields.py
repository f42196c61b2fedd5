"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from fractions import Fraction


class Field:
    """Field descriptor with exact arithmetic.

    ``p is None`` gives the rationals (values are Fraction); otherwise
    GF(p) with values stored as ints in [0, p).
    """

    def __init__(self, p=None):
        if p is not None:
            if p < 2:
                raise ValueError("prime field characteristic must be >= 2")
            # cheap primality check; p is small in practice
            k = 2
            while k * k <= p:
                if p % k == 0:
                    raise ValueError("GF(p) needs p prime, got %d" % p)
                k += 1
        self.p = p
        self.zero = Fraction(0) if p is None else 0
        self.one = Fraction(1) if p is None else 1

    @property
    def name(self):
        return "q" if self.p is None else "gf:%d" % self.p

    def of(self, x):
        if self.p is None:
            return Fraction(x)
        return x % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            return Fraction(1) / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        if self.p is None:
            return a / b
        return (a * pow(b, self.p - 2, self.p)) % self.p

    def coeff_str(self, a):
        return str(a)

    def coeff_from_str(self, s):
        if self.p is None:
            return Fraction(s)
        return int(s) % self.p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(%r)" % self.name


QQ = Field()


def field_from_name(name):
    """Parse a field descriptor: 'q' or 'gf:P'."""
    if name == "q":
        return QQ
    if name.startswith("gf:"):
        return Field(int(name[3:]))
    raise ValueError("unknown field %r (expected 'q' or 'gf:P')" % name)
