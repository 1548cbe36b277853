"""Dense matrices over the exact rings, with determinant and kernel routines."""
from ..errors import StructuralError
from .mpoly import MPoly
from .quadext import QuadExt
from .ratfn import RatFn
from .rational import ONE, ZERO, as_rat, is_rat


def zero_like(e):
    return ZERO if is_rat(e) else (e.zero() if not isinstance(e, MPoly) else MPoly(e.vars))


def one_like(e):
    return ONE if is_rat(e) else (e.one() if not isinstance(e, MPoly) else MPoly.one(e.vars))


def is_zero(e):
    return not e


def _ring_kind(e):
    if isinstance(e, QuadExt):
        return "quad"
    if isinstance(e, RatFn):
        return "ratfn"
    if isinstance(e, MPoly):
        return "mpoly"
    if is_rat(e):
        return "rat"
    raise StructuralError(f"unsupported matrix entry {e!r}")


def _exact_div(a, b):
    if isinstance(a, MPoly):
        return a.divexact(b)
    if is_rat(a):
        return as_rat(a) / b
    return a.exact_div(b)


class Matrix:
    """Rectangular matrix; ``rows`` is a tuple of tuples of ring elements."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise StructuralError("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n, like=ONE):
        o, z = one_like(like), zero_like(like)
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m, n, like=ONE):
        z = zero_like(like)
        return cls([[z] * n for _ in range(m)], n)

    @classmethod
    def from_columns(cls, cols, nrows=None):
        cols = [list(c) for c in cols]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix.from_columns(self.rows, self.ncols) if self.rows else Matrix([], 0)

    def map(self, f):
        return Matrix([[f(e) for e in r] for r in self.rows], self.ncols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise StructuralError("shape mismatch in matrix addition")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise StructuralError("shape mismatch in matrix subtraction")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __neg__(self):
        return self.map(lambda e: -e)

    def scale(self, c):
        return self.map(lambda e: e * c)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise StructuralError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            out = []
            for r in self.rows:
                row = []
                for col in cols:
                    acc = None
                    for a, b in zip(r, col):
                        if not a or not b:
                            continue
                        t = a * b
                        acc = t if acc is None else acc + t
                    row.append(acc if acc is not None else zero_like(r[0] if r else ONE))
                out.append(row)
            return Matrix(out, other.ncols)
        return self.scale(other)

    def apply(self, vec):
        """Matrix times a column vector given as a list."""
        if len(vec) != self.ncols:
            raise StructuralError("vector length does not match")
        out = []
        for r in self.rows:
            acc = None
            for a, b in zip(r, vec):
                if not a or not b:
                    continue
                t = a * b
                acc = t if acc is None else acc + t
            out.append(acc if acc is not None else zero_like(vec[0] if vec else ONE))
        return out

    def trace(self):
        if self.nrows != self.ncols:
            raise StructuralError("trace of a non-square matrix")
        acc = self.rows[0][0]
        for i in range(1, self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self):
        return all(not e for r in self.rows for e in r)

    def det(self):
        return det_exact(self)

    def inverse_2x2(self):
        """Inverse of a 2x2 matrix of determinant one: the adjugate."""
        (a, b), (c, d) = self.rows
        return Matrix([[d, -b], [-c, a]])

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows) + "]"

    def __repr__(self):
        return f"Matrix({self})"


def det_exact(m):
    """Exact determinant.

    Rationals use Gaussian elimination.  Other entries are made polynomial
    by scaling each row with the lcm of its denominators, then reduced with
    fraction-free Bareiss elimination, whose divisions are exact.
    """
    if m.nrows != m.ncols:
        raise StructuralError(f"determinant of a non-square {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return ONE
    sample = m.rows[0][0]
    kinds = {_ring_kind(e) for r in m.rows for e in r}
    if len(kinds) > 1:
        kinds.discard("rat")
        if len(kinds) > 1:
            raise StructuralError(f"mixed ring entries: {sorted(kinds)}")
    kind = kinds.pop()
    if kind != "rat":
        sample = next(e for r in m.rows for e in r if not is_rat(e))
        rows = [[e if not is_rat(e) else sample.__class__._coerce(sample, e) if kind != "mpoly"
                 else MPoly.const(sample.vars, e) for e in r] for r in m.rows]
    else:
        rows = [[as_rat(e) for e in r] for r in m.rows]
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    integral = kind == "mpoly" or (kind == "ratfn" and all(e.is_poly() for r in rows for e in r)) \
        or (kind == "quad" and all(e.is_integral() for r in rows for e in r))
    if kind == "rat":
        return _gauss_det(rows)
    if integral:
        return _bareiss_det(rows)
    if kind == "quad" and not sample.c.is_poly():
        return _gauss_det(rows)
    rows, scale = _clear_denominators(rows, kind)
    return _bareiss_det(rows) / scale


def _dens(e):
    if isinstance(e, QuadExt):
        return [e.a.den, e.b.den]
    return [e.den]


def _times_poly(e, q):
    """``e * q`` for a polynomial ``q`` divisible by the denominators of ``e``."""
    if isinstance(e, QuadExt):
        return QuadExt(_times_poly(e.a, q), _times_poly(e.b, q), e.c)
    if not e.num.terms:
        return e
    return RatFn._raw(e.num * q.divexact(e.den), MPoly.one(q.vars))


def _clear_denominators(rows, kind):
    """Scale each row by the lcm of its denominators; returns ``(rows, product)``."""
    from .mpoly import poly_lcm

    out = []
    total = None
    for r in rows:
        L = None
        for e in r:
            for d in _dens(e):
                if d.is_const():
                    continue
                L = d if L is None else (L if d == L else poly_lcm(L, d))
        if L is None:
            out.append(list(r))
            continue
        out.append([_times_poly(e, L) for e in r])
        total = L if total is None else total * L
    if total is None:
        return out, ONE
    scale = RatFn.from_poly(total)
    if kind == "quad":
        scale = QuadExt(scale, scale.zero(), rows[0][0].c)
    return out, scale


def _pivot_row(rows, k, n):
    best = None
    for i in range(k, n):
        e = rows[i][k]
        if e:
            size = _size(e)
            if best is None or size < best[0]:
                best = (size, i)
    return None if best is None else best[1]


def _size(e):
    if isinstance(e, QuadExt):
        return _size(e.a) + _size(e.b)
    if isinstance(e, RatFn):
        return len(e.num.terms) + len(e.den.terms)
    if isinstance(e, MPoly):
        return len(e.terms)
    return 1


def _bareiss_det(rows):
    n = len(rows)
    rows = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        p = _pivot_row(rows, k, n)
        if p is None:
            return zero_like(rows[0][0])
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            for j in range(k + 1, n):
                if rik:
                    v = rows[i][j] * pk - rik * rows[k][j]
                else:
                    v = rows[i][j] * pk
                if prev is not None and v:
                    v = _exact_div(v, prev)
                rows[i][j] = v
        prev = pk
    d = rows[n - 1][n - 1]
    return -d if sign < 0 else d


def _gauss_det(rows):
    n = len(rows)
    rows = [list(r) for r in rows]
    det = one_like(rows[0][0])
    for k in range(n):
        p = _pivot_row(rows, k, n)
        if p is None:
            return zero_like(rows[0][0])
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            det = -det
        pk = rows[k][k]
        det = det * pk
        inv = 1 / pk if not is_rat(pk) else ONE / pk
        for i in range(k + 1, n):
            rik = rows[i][k]
            if not rik:
                continue
            f = rik * inv
            for j in range(k + 1, n):
                if rows[k][j]:
                    rows[i][j] = rows[i][j] - f * rows[k][j]
    return det


def rref(m):
    """Reduced row echelon form over a field; returns ``(rows, pivot_columns)``."""
    rows = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        best = None
        for i in range(r, nr):
            e = rows[i][c]
            if e:
                s = _size(e)
                if best is None or s < best[0]:
                    best = (s, i)
        if best is None:
            continue
        p = best[1]
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        inv = ONE / pv if is_rat(pv) else 1 / pv
        rows[r] = [e * inv if e else e for e in rows[r]]
        for i in range(nr):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m):
    return len(rref(m)[1])


def kernel_basis(m, like=None):
    """Echelon basis of the right kernel of ``m`` (entries in a field)."""
    nc = m.ncols
    if like is None:
        like = next((e for r in m.rows for e in r), ONE)
    o, z = one_like(like), zero_like(like)
    if m.nrows == 0:
        return [[o if i == j else z for i in range(nc)] for j in range(nc)]
    rows, pivots = rref(m)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [z] * nc
        v[f] = o
        for r, p in enumerate(pivots):
            e = rows[r][f]
            if e:
                v[p] = -e
        basis.append(v)
    return basis


def solve(m, rhs):
    """One solution of ``m x = rhs`` over a field, or ``None`` if inconsistent."""
    aug = Matrix([list(r) + [b] for r, b in zip(m.rows, rhs)], m.ncols + 1)
    rows, pivots = rref(aug)
    if m.ncols in pivots:
        return None
    like = rhs[0] if rhs else ONE
    x = [zero_like(like)] * m.ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][m.ncols]
    return x


def inverse(m):
    """Inverse over a field by Gauss-Jordan."""
    n = m.nrows
    if n != m.ncols:
        raise StructuralError("inverse of a non-square matrix")
    like = next((e for r in m.rows for e in r), ONE)
    ident = Matrix.identity(n, like)
    aug = Matrix([list(r) + list(s) for r, s in zip(m.rows, ident.rows)], 2 * n)
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return Matrix([r[n:] for r in rows], n)
