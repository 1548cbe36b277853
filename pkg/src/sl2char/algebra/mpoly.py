"""Sparse multivariate polynomials over the rationals.

Monomials are packed into a single Python integer: the exponent of the
variable with index ``i`` sits in bit field ``i`` and the total degree sits
in the top field.  Packed integers then compare exactly like graded
lexicographic order with later variables heavier (``x < y < z``), and
monomial multiplication is integer addition.
"""
from math import gcd as _igcd

from ..errors import InputError, StructuralError
from .rational import ONE, ZERO, Rat, as_rat, is_rat, rat_str

BITS = 16
MASK = (1 << BITS) - 1
MAX_EXP = 1 << (BITS - 1)

XYZ = ("x", "y", "z")


class NotDivisible(ArithmeticError):
    pass


def ring_vars(names):
    """Canonical variable order: x, y, z first, then the rest alphabetically."""
    names = set(names)
    head = [v for v in XYZ if v in names]
    return tuple(head + sorted(names - set(XYZ)))


def _pack(exps):
    m = 0
    for i, e in enumerate(exps):
        if e < 0 or e >= MAX_EXP:
            raise OverflowError(f"exponent {e} out of range")
        m |= e << (BITS * i)
    return m | (sum(exps) << (BITS * len(exps)))


def _unpack(m, n):
    return tuple((m >> (BITS * i)) & MASK for i in range(n))


def _var_mono(n, i, e=1):
    return (e << (BITS * i)) + (e << (BITS * n))


class MPoly:
    """Polynomial in ``vars`` with ``Rat`` coefficients.

    Instances are immutable; ``terms`` maps packed monomials to nonzero
    coefficients and must not be mutated after construction.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        self.terms = {} if terms is None else terms
        self._hash = None

    # -- construction ---------------------------------------------------
    @classmethod
    def const(cls, vars, c):
        c = as_rat(c)
        return cls(vars, {0: c} if c else {})

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def one(cls, vars):
        return cls(vars, {0: ONE})

    @classmethod
    def gen(cls, vars, name):
        vars = tuple(vars)
        try:
            i = vars.index(name)
        except ValueError:
            raise StructuralError(f"unknown variable {name!r}") from None
        return cls(vars, {_var_mono(len(vars), i): ONE})

    @classmethod
    def gens(cls, vars=XYZ):
        return tuple(cls.gen(vars, v) for v in vars)

    @classmethod
    def from_dict(cls, vars, data):
        """Build from ``{exponent tuple: coefficient}``."""
        vars = tuple(vars)
        terms = {}
        for exps, c in data.items():
            if len(exps) != len(vars):
                raise StructuralError("exponent vector has wrong length")
            c = as_rat(c)
            if c:
                m = _pack(exps)
                s = terms.get(m, ZERO) + c
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return cls(vars, terms)

    def to_dict(self):
        n = len(self.vars)
        return {_unpack(m, n): c for m, c in self.terms.items()}

    # -- predicates -----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_const(self):
        t = self.terms
        return not t or (len(t) == 1 and 0 in t)

    def const_value(self):
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        return self.terms.get(0, ZERO)

    def is_monomial(self):
        return len(self.terms) == 1

    # -- coercion -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise StructuralError(
                    f"variable sets differ: {self.vars} vs {other.vars}")
            return other
        if is_rat(other):
            return MPoly.const(self.vars, other)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            if s is None:
                res[m] = c
            else:
                s = s + c
                if s:
                    res[m] = s
                else:
                    del res[m]
        return MPoly(self.vars, res)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            if s is None:
                res[m] = -c
            else:
                s = s - c
                if s:
                    res[m] = s
                else:
                    del res[m]
        return MPoly(self.vars, res)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c):
        c = as_rat(c)
        if not c:
            return MPoly(self.vars)
        if c == 1:
            return self
        return MPoly(self.vars, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if is_rat(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return MPoly(self.vars)
        if len(a) == 1 and 0 in a:
            return other.scale(a[0])
        if len(b) == 1 and 0 in b:
            return self.scale(b[0])
        if len(a) < len(b):
            a, b = b, a
        res = {}
        get = res.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                k = m1 + m2
                res[k] = get(k, ZERO) + c1 * c2
        return MPoly(self.vars, {m: c for m, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MPoly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if is_rat(other):
            other = as_rat(other)
            if not other:
                raise ZeroDivisionError("division by zero")
            return self.scale(ONE / other)
        return NotImplemented

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if is_rat(other):
            return self.is_const() and self.terms.get(0, ZERO) == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if self.is_const():
                self._hash = hash(self.terms.get(0, ZERO))
            else:
                self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- structure ------------------------------------------------------
    def _index(self, var):
        if isinstance(var, int):
            if not 0 <= var < len(self.vars):
                raise StructuralError(f"variable index {var} out of range")
            return var
        try:
            return self.vars.index(var)
        except ValueError:
            raise StructuralError(f"unknown variable {var!r}") from None

    def degree(self, var=None):
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            sh = BITS * len(self.vars)
            return max(m >> sh for m in self.terms)
        sh = BITS * self._index(var)
        return max((m >> sh) & MASK for m in self.terms)

    def support(self):
        """Indices of the variables that actually occur."""
        n = len(self.vars)
        found = set()
        for m in self.terms:
            for i in range(n):
                if (m >> (BITS * i)) & MASK:
                    found.add(i)
            if len(found) == n:
                break
        return found

    def lead(self):
        """(packed monomial, coefficient) of the grlex-largest term."""
        m = max(self.terms)
        return m, self.terms[m]

    def lc(self):
        return self.terms[max(self.terms)] if self.terms else ZERO

    def coeffs_in(self, i):
        """Split as a polynomial in variable ``i``: ``{exponent: coefficient}``."""
        n = len(self.vars)
        sh = BITS * i
        out = {}
        for m, c in self.terms.items():
            e = (m >> sh) & MASK
            out.setdefault(e, {})[m - _var_mono(n, i, e)] = c
        return {e: MPoly(self.vars, t) for e, t in out.items()}

    def lc_in(self, i):
        d = self.degree(i)
        n = len(self.vars)
        sh = BITS * i
        off = _var_mono(n, i, d)
        return MPoly(self.vars, {m - off: c for m, c in self.terms.items()
                                 if (m >> sh) & MASK == d})

    def monic(self):
        if not self.terms:
            return self
        lc = self.lc()
        return self if lc == 1 else self.scale(ONE / lc)

    def primitive_rational(self):
        """Scale to integer coefficients with content 1 and positive lead."""
        if not self.terms:
            return self
        g = 0
        den = 1
        for c in self.terms.values():
            g = _igcd(g, int(c.numerator))
            d = int(c.denominator)
            den = den * d // _igcd(den, d)
        f = Rat(den, g)
        if self.lc() < 0:
            f = -f
        return self.scale(f)

    def monomial_content(self):
        """Packed monomial dividing every term (the minimal exponents)."""
        n = len(self.vars)
        mins = None
        for m in self.terms:
            e = _unpack(m, n)
            mins = list(e) if mins is None else [min(a, b) for a, b in zip(mins, e)]
        return _pack(mins or [0] * n)

    def _shift_down(self, mono):
        return MPoly(self.vars, {m - mono: c for m, c in self.terms.items()})

    # -- calculus and evaluation ---------------------------------------
    def diff(self, var):
        i = self._index(var)
        n = len(self.vars)
        sh = BITS * i
        step = _var_mono(n, i)
        res = {}
        for m, c in self.terms.items():
            e = (m >> sh) & MASK
            if e:
                res[m - step] = c * e
        return MPoly(self.vars, res)

    def evaluate(self, point):
        """Evaluate at ``point`` (mapping variable name to rational)."""
        n = len(self.vars)
        try:
            vals = [as_rat(point[v]) for v in self.vars]
        except KeyError as exc:
            raise InputError(f"missing value for variable {exc.args[0]!r}") from None
        total = ZERO
        cache = [{0: ONE} for _ in range(n)]
        for m, c in self.terms.items():
            t = c
            for i in range(n):
                e = (m >> (BITS * i)) & MASK
                if e:
                    p = cache[i].get(e)
                    if p is None:
                        p = vals[i] ** e
                        cache[i][e] = p
                    t = t * p
            total += t
        return total

    def subs(self, point):
        """Substitute rationals for some of the variables; result keeps ``vars``."""
        n = len(self.vars)
        idx = {self._index(v): as_rat(val) for v, val in point.items()}
        res = {}
        for m, c in self.terms.items():
            k = m
            for i, val in idx.items():
                e = (m >> (BITS * i)) & MASK
                if e:
                    c = c * val ** e
                    k -= _var_mono(n, i, e)
            if c:
                s = res.get(k, ZERO) + c
                if s:
                    res[k] = s
                else:
                    res.pop(k, None)
        return MPoly(self.vars, res)

    # -- division -------------------------------------------------------
    def divides_mono(self, mb, m):
        n = len(self.vars)
        for i in range(n):
            sh = BITS * i
            if (mb >> sh) & MASK > (m >> sh) & MASK:
                return False
        return True

    def divexact(self, other):
        """Quotient ``self / other``; raises ``NotDivisible`` if inexact."""
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.terms:
            return self
        if other.is_const():
            return self.scale(ONE / other.terms[0])
        mb, cb = other.lead()
        inv_cb = ONE / cb
        if len(other.terms) == 1:
            if not all(self.divides_mono(mb, m) for m in self.terms):
                raise NotDivisible
            return MPoly(self.vars, {m - mb: c * inv_cb for m, c in self.terms.items()})
        rest = [(m, c) for m, c in other.terms.items() if m != mb]
        r = dict(self.terms)
        q = {}
        while r:
            m = max(r)
            if not self.divides_mono(mb, m):
                raise NotDivisible
            t = r.pop(m) * inv_cb
            dm = m - mb
            q[dm] = t
            for m2, c2 in rest:
                k = m2 + dm
                v = r.get(k, ZERO) - t * c2
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        return MPoly(self.vars, q)

    def try_divexact(self, other):
        try:
            return self.divexact(other)
        except NotDivisible:
            return None

    # -- printing -------------------------------------------------------
    def _mono_str(self, exps):
        parts = []
        for v, e in zip(self.vars, exps):
            if e == 1:
                parts.append(v)
            elif e:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def sorted_terms(self):
        """Terms in display order.

        Descending by the exponent multiset (sorted exponents compared
        lexicographically), ties broken lexicographically with the first
        variable heaviest, so ``x^2 + y^2 + z^2 - x*y*z - 2``.
        """
        n = len(self.vars)
        items = [(_unpack(m, n), c) for m, c in self.terms.items()]
        items.sort(key=lambda t: (tuple(sorted(t[0], reverse=True)), t[0]),
                   reverse=True)
        return items

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, (exps, c) in enumerate(self.sorted_terms()):
            mono = self._mono_str(exps)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = rat_str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{rat_str(a)}*{mono}"
            if k == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"MPoly({str(self)!r})"


# -- gcd ------------------------------------------------------------------

def _prem(a, b, i):
    """Pseudo-remainder of ``a`` by ``b`` as polynomials in variable ``i``."""
    n = len(a.vars)
    db = b.degree(i)
    lcb = b.lc_in(i)
    r = a
    d = a.degree(i) - db + 1
    while r.terms:
        dr = r.degree(i)
        if dr < db:
            break
        t = MPoly(r.vars, {m + _var_mono(n, i, dr - db): c
                           for m, c in r.lc_in(i).terms.items()})
        r = lcb * r - t * b
        d -= 1
    if d > 0:
        r = r * lcb ** d
    return r


def _content_in(p, i):
    g = None
    coeffs = sorted(p.coeffs_in(i).values(), key=lambda c: len(c.terms))
    for c in coeffs:
        g = c if g is None else _gcd(g, c)
        if g.is_const():
            return MPoly.one(p.vars)
    return g


def _univariate_gcd(a, b, i):
    a, b = a.monic(), b.monic()
    if a.degree(i) < b.degree(i):
        a, b = b, a
    while b.terms:
        r = _prem(a, b, i).monic()
        a, b = b, r
    return a


def _subresultant(a, b, i):
    """Gcd of two polynomials primitive in variable ``i`` (up to a unit)."""
    if a.degree(i) < b.degree(i):
        a, b = b, a
    one = MPoly.one(a.vars)
    g = h = one
    while True:
        delta = a.degree(i) - b.degree(i)
        r = _prem(a, b, i)
        if not r.terms:
            break
        if r.degree(i) == 0:
            return one
        a, b = b, r.divexact(g * h ** delta)
        g = a.lc_in(i)
        if delta:
            h = (g ** delta).divexact(h ** (delta - 1))
    b = b.primitive_rational()
    c = _content_in(b, i)
    return b if c.is_const() else b.divexact(c)


def _gcd(a, b):
    """Gcd up to a rational unit."""
    vars = a.vars
    if not a.terms:
        return b
    if not b.terms:
        return a
    if a.is_const() or b.is_const():
        return MPoly.one(vars)
    if a == b:
        return a
    ma, mb = a.monomial_content(), b.monomial_content()
    mono = 0
    if ma or mb:
        n = len(vars)
        ea, eb = _unpack(ma, n), _unpack(mb, n)
        mono = _pack([min(p, q) for p, q in zip(ea, eb)])
        if ma:
            a = a._shift_down(ma)
        if mb:
            b = b._shift_down(mb)
    g = _gcd_nomono(a, b)
    if mono:
        g = MPoly(vars, {m + mono: c for m, c in g.terms.items()})
    return g


def _gcd_nomono(a, b):
    vars = a.vars
    if a.is_const() or b.is_const():
        return MPoly.one(vars)
    sa, sb = a.support(), b.support()
    for i in sa - sb:
        a = _content_in(a, i)
        if a.is_const():
            return MPoly.one(vars)
    for i in sb - sa:
        b = _content_in(b, i)
        if b.is_const():
            return MPoly.one(vars)
    if sa != sb:
        return _gcd(a, b)
    # cheap divisibility checks first
    if a.degree() >= b.degree():
        if a.try_divexact(b) is not None:
            return b
    elif b.try_divexact(a) is not None:
        return a
    i = min(sa, key=lambda k: (max(a.degree(k), b.degree(k)), -k))
    if len(sa) == 1:
        return _univariate_gcd(a, b, i)
    ca, cb = _content_in(a, i), _content_in(b, i)
    pa = a if ca.is_const() else a.divexact(ca)
    pb = b if cb.is_const() else b.divexact(cb)
    gc = _gcd(ca, cb)
    gp = _subresultant(pa, pb, i)
    return gc * gp


def poly_gcd(a, b):
    """Monic greatest common divisor (``0`` only when both inputs are zero)."""
    b = a._coerce(b)
    if b is None:
        raise StructuralError("gcd needs two polynomials")
    if not a.terms and not b.terms:
        return MPoly(a.vars)
    return _gcd(a, b).monic()


def poly_lcm(a, b):
    if not a.terms or not b.terms:
        return MPoly(a.vars)
    return (a * b).divexact(poly_gcd(a, b)).monic()
