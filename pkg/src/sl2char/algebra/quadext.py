"""The quadratic extension K = F[u] / (u^2 + c*u + 1) of a rational function field."""
from ..errors import DegenerateModulusError, InputError, StructuralError
from .mpoly import XYZ, MPoly
from .ratfn import RatFn, as_ratfn
from .rational import as_rat, is_rat


class QuadExt:
    """``a + b*u`` with ``u^2 = -c*u - 1``.

    All elements taking part in one computation share the modulus ``c``.
    """

    __slots__ = ("a", "b", "c", "_hash")

    def __init__(self, a, b, c):
        self.a = a
        self.b = b
        self.c = c
        self._hash = None

    @classmethod
    def u(cls, c):
        c = as_ratfn(c)
        return cls(c.zero(), c.one(), c)

    @classmethod
    def embed(cls, value, c):
        c = as_ratfn(c)
        return cls(as_ratfn(value, c.vars), c.zero(), c)

    @property
    def vars(self):
        return self.c.vars

    def zero(self):
        z = self.c.zero()
        return QuadExt(z, z, self.c)

    def one(self):
        return QuadExt(self.c.one(), self.c.zero(), self.c)

    # -- predicates -----------------------------------------------------
    def is_zero(self):
        return not self.a.num.terms and not self.b.num.terms

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        """True when the u-component vanishes."""
        return not self.b.num.terms

    def is_integral(self):
        return self.a.den.is_const() and self.b.den.is_const()

    # -- coercion -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.c is not self.c and other.c != self.c:
                raise StructuralError("quadratic extensions with different moduli")
            return other
        if isinstance(other, (RatFn, MPoly)) or is_rat(other):
            if not is_rat(other) and other.vars != self.c.vars:
                raise StructuralError("variable sets differ")
            return QuadExt(as_ratfn(other, self.c.vars), self.c.zero(), self.c)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return QuadExt(self.a + q.a, self.b + q.b, self.c)

    __radd__ = __add__

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return QuadExt(self.a - q.a, self.b - q.b, self.c)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q - self

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.c)

    def __mul__(self, other):
        if is_rat(other):
            c = as_rat(other)
            return QuadExt(self.a * c, self.b * c, self.c)
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, q.a, q.b
        if not b2.num.terms:
            return QuadExt(a1 * a2, b1 * a2, self.c)
        if not b1.num.terms:
            return QuadExt(a1 * a2, a1 * b2, self.c)
        bb = b1 * b2
        return QuadExt(a1 * a2 - bb, a1 * b2 + a2 * b1 - self.c * bb, self.c)

    __rmul__ = __mul__

    def conjugate(self):
        """Image under the other root ``-c - u``."""
        return QuadExt(self.a - self.b * self.c, -self.b, self.c)

    def norm(self):
        a, b = self.a, self.b
        if not b.num.terms:
            return a * a
        return a * a - a * b * self.c + b * b

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.norm()
        if n.is_zero():
            raise DegenerateModulusError(
                f"zero norm: {self} is a zero divisor for modulus c = {self.c}")
        if not self.b.num.terms:
            return QuadExt(self.a.inverse(), self.b, self.c)
        ni = n.inverse()
        return QuadExt((self.a - self.b * self.c) * ni, -self.b * ni, self.c)

    def __truediv__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if q.is_rational():
            if q.a.is_zero():
                raise ZeroDivisionError("division by zero")
            return QuadExt(self.a / q.a, self.b / q.a, self.c)
        return self * q.inverse()

    def __rtruediv__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("integer exponent required")
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other):
        """Quotient when it is known to be integral over the polynomial ring."""
        q = self._coerce(other)
        if q.is_rational():
            return QuadExt(self.a.exact_div(q.a), self.b.exact_div(q.a), self.c)
        if self.is_integral() and q.is_integral() and self.c.is_poly():
            n = q.norm()
            if n.is_poly():
                p = self * q.conjugate()
                a = p.a.num.try_divexact(n.num) if p.a.is_poly() else None
                b = p.b.num.try_divexact(n.num) if p.b.is_poly() else None
                if a is not None and b is not None:
                    return QuadExt(RatFn.from_poly(a), RatFn.from_poly(b), self.c)
        return self / q

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.a == other.a and self.b == other.b and (
                other.c is self.c or other.c == self.c)
        if isinstance(other, (RatFn, MPoly)) or is_rat(other):
            return self.b.is_zero() and self.a == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.a) if self.b.is_zero() else hash((self.a, self.b))
        return self._hash

    # -- calculus -------------------------------------------------------
    def du(self, var):
        """Derivative of ``u`` itself: ``-u (2u + c) c' / (c^2 - 4)``."""
        dc = self.c.diff(var)
        if dc.is_zero():
            return self.zero()
        disc = self.c * self.c - 4
        if disc.is_zero():
            raise DegenerateModulusError("modulus has a double root")
        k = dc / disc
        # -u (2u + c) reduces to c*u + 2
        return QuadExt(k * 2, k * self.c, self.c)

    def diff(self, var):
        if var not in self.c.vars:
            raise StructuralError(f"unknown variable {var!r}")
        res = QuadExt(self.a.diff(var), self.b.diff(var), self.c)
        if not self.b.is_zero():
            du = self.du(var)
            if not du.is_zero():
                res = res + du * QuadExt(self.b, self.b.zero(), self.c)
        return res

    # -- specialization -------------------------------------------------
    def at(self, point):
        """Specialize the coefficients, keeping ``u`` symbolic over the new modulus."""
        c = RatFn.const(self.c.evaluate(point), self.c.vars)
        return QuadExt(RatFn.const(self.a.evaluate(point), self.c.vars),
                       RatFn.const(self.b.evaluate(point), self.c.vars), c)

    def evaluate(self, point, u_value=None):
        """Rational value for a numeric root ``u_value``, else the pair ``(a, b)``."""
        a = self.a.evaluate(point)
        b = self.b.evaluate(point)
        if u_value is None:
            return a, b
        u0 = as_rat(u_value)
        c0 = self.c.evaluate(point)
        if u0 * u0 + c0 * u0 + 1 != 0:
            raise InputError(f"{u0} is not a root of t^2 + {c0}*t + 1")
        return a + b * u0

    def __str__(self):
        return f"({self.a}) + ({self.b})*u"

    def __repr__(self):
        return f"QuadExt({str(self)!r})"


def quad_field(c=None):
    """Return ``(u, embed)`` for the extension with modulus ``c`` (default ``z``)."""
    if c is None:
        c = RatFn.from_poly(MPoly.gen(XYZ, "z"))
    c = as_ratfn(c)
    return QuadExt.u(c), (lambda v: QuadExt.embed(v, c))
