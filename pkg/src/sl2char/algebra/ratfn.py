"""Rational functions: fractions of ``MPoly`` in lowest terms."""
from ..errors import InputError, PoleError, StructuralError
from .mpoly import XYZ, MPoly, poly_gcd
from .rational import ONE, as_rat, is_rat


class RatFn:
    """``num / den`` with ``gcd(num, den) = 1`` and ``den`` monic in grlex."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if is_rat(num):
            raise StructuralError("use RatFn.const for rational constants")
        if den is None:
            den = MPoly.one(num.vars)
        elif is_rat(den):
            den = MPoly.const(num.vars, den)
        elif den.vars != num.vars:
            raise StructuralError("numerator and denominator rings differ")
        if not den.terms:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.terms:
            den = MPoly.one(num.vars)
        elif den.is_const():
            c = den.terms[0]
            if c != 1:
                num = num.scale(ONE / c)
                den = MPoly.one(num.vars)
        else:
            if not num.is_const():
                g = poly_gcd(num, den)
                if not g.is_const():
                    num = num.divexact(g)
                    den = den.divexact(g)
            lc = den.lc()
            if lc != 1:
                inv = ONE / lc
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c, vars=XYZ):
        return cls._raw(MPoly.const(vars, c), MPoly.one(vars))

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, MPoly.one(p.vars))

    @classmethod
    def gens(cls, vars=XYZ):
        return tuple(cls.from_poly(g) for g in MPoly.gens(vars))

    @property
    def vars(self):
        return self.num.vars

    def zero(self):
        return RatFn.const(0, self.vars)

    def one(self):
        return RatFn.const(1, self.vars)

    # -- predicates -----------------------------------------------------
    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_poly(self):
        return self.den.is_const()

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def const_value(self):
        return self.num.const_value()

    # -- coercion -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFn):
            if other.vars != self.vars:
                raise StructuralError(
                    f"variable sets differ: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise StructuralError(
                    f"variable sets differ: {self.vars} vs {other.vars}")
            return RatFn.from_poly(other)
        if is_rat(other):
            return RatFn.const(other, self.vars)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return _add(self, q)

    __radd__ = __add__

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return _add(self, -q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return _add(q, -self)

    def __neg__(self):
        return RatFn._raw(-self.num, self.den)

    def __mul__(self, other):
        if is_rat(other):
            c = as_rat(other)
            if not c:
                return self.zero()
            return RatFn._raw(self.num.scale(c), self.den)
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return _mul(self, q)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero rational function")
        lc = self.num.lc()
        inv = ONE / lc
        return RatFn._raw(self.den.scale(inv), self.num.scale(inv))

    def __truediv__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return _mul(self, q.inverse())

    def __rtruediv__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return _mul(q, self.inverse())

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("integer exponent required")
        if k < 0:
            return self.inverse() ** (-k)
        return RatFn._raw(self.num ** k, self.den ** k)

    def exact_div(self, other):
        """Division known to be exact in the polynomial ring (fast path)."""
        q = self._coerce(other)
        if self.den.is_const() and q.den.is_const():
            r = self.num.try_divexact(q.num)
            if r is not None:
                return RatFn._raw(r, self.den)
        return self / q

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFn):
            return self.num == other.num and self.den == other.den
        if isinstance(other, MPoly):
            return self.den.is_const() and self.num == other
        if is_rat(other):
            return self.den.is_const() and self.num == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if self.den.is_const():
                self._hash = hash(self.num)
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    # -- calculus and evaluation ---------------------------------------
    def diff(self, var):
        if var not in self.vars:
            raise StructuralError(f"unknown variable {var!r}")
        if self.den.is_const():
            return RatFn._raw(self.num.diff(var), self.den)
        n, d = self.num, self.den
        return RatFn(n.diff(var) * d - n * d.diff(var), d * d)

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if not d:
            raise PoleError(f"denominator {self.den} vanishes at {dict(point)}")
        return self.num.evaluate(point) / d

    def subs(self, point):
        num = self.num.subs(point)
        den = self.den.subs(point)
        if not den.terms:
            raise PoleError(f"denominator {self.den} vanishes at {dict(point)}")
        return RatFn(num, den)

    # -- printing -------------------------------------------------------
    def __str__(self):
        if self.den.is_const():
            return str(self.num)
        n = str(self.num)
        if len(self.num.terms) > 1:
            n = f"({n})"
        d = str(self.den)
        if len(self.den.terms) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFn({str(self)!r})"


def _add(p, q):
    if not q.num.terms:
        return p
    if not p.num.terms:
        return q
    pc, qc = p.den.is_const(), q.den.is_const()
    if pc and qc:
        return RatFn._raw(p.num + q.num, p.den)
    if pc:
        return RatFn._raw(p.num * q.den + q.num, q.den)
    if qc:
        return RatFn._raw(p.num + q.num * p.den, p.den)
    if p.den == q.den:
        return RatFn(p.num + q.num, p.den)
    g = poly_gcd(p.den, q.den)
    if g.is_const():
        return RatFn._raw(p.num * q.den + q.num * p.den, p.den * q.den)
    pd = p.den.divexact(g)
    qd = q.den.divexact(g)
    num = p.num * qd + q.num * pd
    if not num.terms:
        return p.zero()
    h = poly_gcd(num, g)
    if not h.is_const():
        num = num.divexact(h)
        g = g.divexact(h)
    den = pd * qd * g
    lc = den.lc()
    if lc != 1:
        num = num.scale(ONE / lc)
        den = den.scale(ONE / lc)
    return RatFn._raw(num, den)


def _mul(p, q):
    if not p.num.terms or not q.num.terms:
        return p.zero()
    pc, qc = p.den.is_const(), q.den.is_const()
    if pc and qc:
        return RatFn._raw(p.num * q.num, p.den)
    a, b, c, d = p.num, p.den, q.num, q.den
    if not qc and not a.is_const():
        g = poly_gcd(a, d)
        if not g.is_const():
            a, d = a.divexact(g), d.divexact(g)
    if not pc and not c.is_const():
        g = poly_gcd(c, b)
        if not g.is_const():
            c, b = c.divexact(g), b.divexact(g)
    num, den = a * c, b * d
    lc = den.lc()
    if lc != 1:
        num = num.scale(ONE / lc)
        den = den.scale(ONE / lc)
    return RatFn._raw(num, den)


def as_ratfn(value, vars=XYZ):
    if isinstance(value, RatFn):
        return value
    if isinstance(value, MPoly):
        return RatFn.from_poly(value)
    if is_rat(value) or isinstance(value, str):
        return RatFn.const(as_rat(value), vars)
    raise InputError(f"cannot interpret {value!r} as a rational function")
