"""Representations into SL2 and their reconstruction from characters.

Given character values and two seed matrices ``A``, ``B`` whose pair has
invertible discriminant, every ``rho(g)`` is the combination
``sum C_i rho(g_i)`` over the basis words ``(1, a, b, ab)`` with ``C`` the
solution of ``M C = T_g``, ``M_ij = tr(g_i g_j)`` and ``(T_g)_i = tr(g g_i)``.
"""
from dataclasses import dataclass

from .algebra import XYZ, Matrix, MPoly, QuadExt, RatFn, as_rat, det_exact, is_rat
from .algebra.matrix import one_like, zero_like
from .errors import DegenerateCharacterError, InconsistentSeedError, InvariantError, InputError
from .skein import trace_polynomial
from .words import Word, parse_word, word_mul


def mat_inv2(m):
    """Inverse of a determinant-one 2x2 matrix."""
    (a, b), (c, d) = m.rows
    return Matrix([[d, -b], [-c, a]])


def _is_one(v):
    return v == 1


class Rep:
    """A homomorphism from the free group on ``generators`` to SL2 of a ring."""

    def __init__(self, generators, images, check=True):
        self.generators = tuple(generators)
        self.images = {g: images[g] for g in self.generators}
        if check:
            for g, m in self.images.items():
                if m.shape != (2, 2):
                    raise InputError(f"image of {g} is not 2x2")
                if not _is_one(det_exact(m)):
                    raise InputError(f"image of {g} does not have determinant 1")
        self._inv = {g: mat_inv2(m) for g, m in self.images.items()}
        sample = self.images[self.generators[0]][0, 0]
        self.one = Matrix.identity(2, sample)

    def letter(self, g, s):
        name = self.generators[g]
        return self.images[name] if s > 0 else self._inv[name]

    def __call__(self, w):
        if isinstance(w, str):
            w = parse_word(w, self.generators)
        result = self.one
        for g, s in w.letters:
            result = result * self.letter(g, s)
        return result

    def trace(self, w):
        return self(w).trace()

    def with_images(self, images):
        return Rep(self.generators, images)


def tautological_rep(point=None):
    """The representation ``a -> [[x, -1], [1, 0]]``, ``b -> [[0, -1/u], [u, y]]``.

    Coefficients lie in ``Q(x, y, z)[u]`` with ``u^2 + z u + 1 = 0``; with a
    ``point`` the coordinates are specialized to rationals and ``u`` stays
    symbolic over the constant modulus.
    """
    if point is None:
        x, y, z = RatFn.gens(XYZ)
    else:
        x, y, z = (RatFn.const(as_rat(point[v]), XYZ) for v in XYZ)
    u = QuadExt.u(z)
    zero, one = u.zero(), u.one()
    A = Matrix([[one * x, -one], [one, zero]])
    B = Matrix([[zero, -u.inverse()], [u, one * y]])
    return Rep(("a", "b"), {"a": A, "b": B})


def tautological_character(point=None):
    """Character oracle ``w -> trace_polynomial(w)``, optionally evaluated at ``point``."""
    if point is None:
        return trace_polynomial
    pt = {v: as_rat(point[v]) for v in XYZ}
    return lambda w: trace_polynomial(w).evaluate(pt)


def _adjugate(m):
    n = m.nrows
    rows = m.rows
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = Matrix([[rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i])
            d = det_exact(minor)
            adj[j][i] = d if (i + j) % 2 == 0 else -d
    return Matrix(adj, n)


@dataclass(frozen=True)
class SaitoSystem:
    phi: object
    alpha: Word
    beta: Word
    A: Matrix
    B: Matrix
    basis_words: tuple
    basis_mats: tuple
    M: Matrix
    adj: Matrix
    det: object
    delta: object

    def coefficients(self, gamma):
        """``C_gamma = M^-1 T_gamma`` as a list of ring elements."""
        T = [self.phi(word_mul(gamma, g)) for g in self.basis_words]
        return [c / self.det for c in self.adj.apply(T)]


def build_saito_system(phi, alpha, beta, A, B):
    """Trace matrix and solve data for seeds ``A = rho(alpha)``, ``B = rho(beta)``."""
    alpha = parse_word(alpha) if isinstance(alpha, str) else alpha
    beta = parse_word(beta, alpha.generators) if isinstance(beta, str) else beta
    ab = word_mul(alpha, beta)
    AB = A * B
    for name, m, w in (("alpha", A, alpha), ("beta", B, beta), ("alpha*beta", AB, ab)):
        if m.trace() != phi(w):
            raise InconsistentSeedError(f"trace of the seed for {name} does not match the character")
    ta, tb, tab = phi(alpha), phi(beta), phi(ab)
    delta = ta * ta + tb * tb + tab * tab - ta * tb * tab - 4
    if not delta:
        raise DegenerateCharacterError("discriminant of the seed pair vanishes")
    one = parse_word("", alpha.generators)
    words = (one, alpha, beta, ab)
    M = Matrix([[phi(word_mul(g, h)) for h in words] for g in words])
    det = det_exact(M)
    if det != -(delta * delta):
        raise InvariantError("trace matrix determinant differs from -delta^2")
    return SaitoSystem(
        phi=phi, alpha=alpha, beta=beta, A=A, B=B, basis_words=words,
        basis_mats=(Matrix.identity(2, A[0, 0]), A, B, AB), M=M, adj=_adjugate(M),
        det=det, delta=delta)


def tautological_system(point=None):
    rep = tautological_rep(point)
    return build_saito_system(tautological_character(point), "a", "b",
                              rep.images["a"], rep.images["b"])


def _scale(c, e):
    """Ring scalar ``c`` (polynomial or rational) times matrix entry ``e``."""
    if isinstance(c, MPoly):
        c = RatFn.from_poly(c)
    return e * c


def reconstruct(sys, gamma):
    """``rho(gamma)`` recovered from character values alone."""
    if isinstance(gamma, str):
        gamma = parse_word(gamma, sys.alpha.generators)
    T = [sys.phi(word_mul(gamma, g)) for g in sys.basis_words]
    weights = sys.adj.apply(T)
    zero = zero_like(sys.A[0, 0])
    rows = [[zero, zero], [zero, zero]]
    for w, mat in zip(weights, sys.basis_mats):
        if not w:
            continue
        for i in range(2):
            for j in range(2):
                e = mat[i, j]
                if e:
                    rows[i][j] = rows[i][j] + _scale(w, e)
    d = sys.det
    if isinstance(d, MPoly):
        d = RatFn.from_poly(d)
    out = []
    for r in rows:
        row = []
        for e in r:
            if is_rat(e) or is_rat(d):
                row.append(e / d)
            else:
                row.append(e.exact_div(d))
        out.append(row)
    return Matrix(out)


__all__ = [
    "Rep", "SaitoSystem", "build_saito_system", "mat_inv2", "reconstruct",
    "tautological_character", "tautological_rep", "tautological_system",
]
