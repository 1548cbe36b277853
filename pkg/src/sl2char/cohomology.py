"""Twisted cochain complexes with coefficients in the adjoint module sl2.

Cochains on a cell are written in the basis ``(h, e, f/2)`` of sl2, on which
``eps(A, B, C) = tr(A [B, C])`` takes the value 1.  Cocycles are
right-twisted: ``psi(gd) = rho(d)^-1 psi(g) rho(d) + psi(d)``.
"""
from dataclasses import dataclass, field

from .algebra import ONE, Matrix, derive, inverse, kernel_basis, rank
from .algebra.matrix import rref, zero_like
from .errors import InputError, InvariantError
from .saito import mat_inv2
from .words import Word, fox_terms, parse_word

BASIS_LABELS = ("h", "e", "f/2")


# -- the adjoint module -----------------------------------------------------

def _like(m):
    return m[0, 0]


def project_traceless(X):
    """``X - tr(X)/2 * Id``."""
    half = X.trace() * ONE / 2
    (a, b), (c, d) = X.rows
    return Matrix([[a - half, b], [c, d - half]])


def coords(xi):
    """Coordinates of a traceless matrix in the basis ``(h, e, f/2)``."""
    (p, q), (r, _) = xi.rows
    return [p, q, r * 2]


def from_coords(v):
    a, b, c = v
    return Matrix([[a, b], [c * ONE / 2, -a]])


def bracket(X, Y):
    return X * Y - Y * X


def adjoint_action(g, xi):
    """Right action ``g^-1 xi g``."""
    return mat_inv2(g) * xi * g


def conj(g, xi):
    """Left action ``g xi g^-1``."""
    return g * xi * mat_inv2(g)


def killing_volume(zeta, eta, theta):
    """``tr(zeta [eta, theta])``."""
    return (zeta * bracket(eta, theta)).trace()


def sl2_basis(like=ONE):
    """The matrices ``h, e, f/2`` with entries in the ring of ``like``."""
    z = zero_like(like)
    o = z + 1
    return [Matrix([[o, z], [z, -o]]), Matrix([[z, o], [z, z]]),
            Matrix([[z, z], [o * ONE / 2, z]])]


def ad_matrix(g, right=True):
    """3x3 matrix of ``xi -> g^-1 xi g`` (or ``g xi g^-1``) in the basis ``(h, e, f/2)``."""
    gi = mat_inv2(g)
    cols = []
    for b in sl2_basis(_like(g)):
        img = gi * b * g if right else g * b * gi
        cols.append(coords(img))
    return Matrix.from_columns(cols, 3)


def _block_matrix(blocks, like):
    """Assemble a matrix from a grid of 3x3 blocks (``None`` means zero)."""
    z = zero_like(like)
    nr, nc = len(blocks), len(blocks[0]) if blocks else 0
    rows = [[z] * (3 * nc) for _ in range(3 * nr)]
    for I, brow in enumerate(blocks):
        for J, blk in enumerate(brow):
            if blk is None:
                continue
            for i in range(3):
                for j in range(3):
                    rows[3 * I + i][3 * J + j] = blk[i, j]
    return Matrix(rows, 3 * nc)


def _identity3(like):
    return Matrix.identity(3, like)


# -- based complexes --------------------------------------------------------

@dataclass(frozen=True)
class BasedComplex:
    """Cochain complex ``C^0 -> C^1 -> ...`` with ``differentials[i]: C^i -> C^(i+1)``."""

    dims: tuple
    differentials: tuple
    labels: tuple = field(default=())

    def __post_init__(self):
        for i, d in enumerate(self.differentials):
            if d.shape != (self.dims[i + 1], self.dims[i]):
                raise InvariantError(
                    f"d^{i} has shape {d.shape}, expected {(self.dims[i + 1], self.dims[i])}")
        for i in range(len(self.differentials) - 1):
            a, b = self.differentials[i], self.differentials[i + 1]
            if a.ncols and b.nrows and not (b * a).is_zero():
                raise InvariantError(f"d^{i + 1} d^{i} is not zero")

    def d(self, i):
        if 0 <= i < len(self.differentials):
            return self.differentials[i]
        return None

    def rank(self, i):
        d = self.d(i)
        if d is None or d.nrows == 0 or d.ncols == 0:
            return 0
        return rank(d)

    def cohomology_dims(self):
        return tuple(self.dims[i] - self.rank(i) - self.rank(i - 1) for i in range(len(self.dims)))

    def cocycles(self, i):
        d = self.d(i)
        like = self.sample()
        if d is None or d.nrows == 0:
            o, z = zero_like(like) + 1, zero_like(like)
            n = self.dims[i]
            return [[o if k == j else z for k in range(n)] for j in range(n)]
        return kernel_basis(d, like)

    def coboundaries(self, i):
        d = self.d(i - 1)
        if d is None or d.ncols == 0 or d.nrows == 0:
            return []
        rows, pivots = rref(d)
        return [d.column(j) for j in pivots]

    def cohomology_basis(self, i):
        """Cocycle representatives completing ``im d^(i-1)`` to ``ker d^i``."""
        chosen = []
        span = self.coboundaries(i)
        r = len(span)
        for v in self.cocycles(i):
            trial = span + chosen + [v]
            if rank(Matrix.from_columns(trial, self.dims[i])) > r + len(chosen):
                chosen.append(v)
        return chosen

    def sample(self):
        for d in self.differentials:
            for r in d.rows:
                for e in r:
                    return e
        return ONE

    def map(self, f):
        return BasedComplex(self.dims, tuple(d.map(f) for d in self.differentials), self.labels)


# -- cocycles ---------------------------------------------------------------

@dataclass(frozen=True)
class Cocycle:
    """Values of a right-twisted 1-cocycle on the generators."""

    values: dict

    def __getitem__(self, g):
        return self.values[g]


def cocycle_eval(psi, rho, w):
    """Extend ``psi`` from generators to the word ``w``."""
    if isinstance(w, str):
        w = parse_word(w, rho.generators)
    like = _like(rho.one)
    z = zero_like(like)
    acc = Matrix([[z, z], [z, z]])
    for g, s in w.letters:
        name = rho.generators[g]
        m = rho.images[name]
        if s > 0:
            acc = adjoint_action(m, acc) + psi.values[name]
        else:
            acc = conj(m, acc) - conj(m, psi.values[name])
    return acc


def coboundary_cocycle(xi, rho):
    return Cocycle({g: adjoint_action(m, xi) - xi for g, m in rho.images.items()})


def tangent_cocycles(rho, vars=("x", "y", "z")):
    """``psi_v(g) = rho(g)^-1 d_v rho(g)`` for each coordinate ``v``."""
    out = []
    for v in vars:
        vals = {}
        for g, m in rho.images.items():
            vals[g] = mat_inv2(m) * derive(m, v)
        out.append(Cocycle(vals))
    return out


def cocycle_vector(psi, generators):
    """Concatenated ``(h, e, f/2)`` coordinates of ``psi`` on the generators."""
    v = []
    for g in generators:
        v.extend(coords(psi.values[g]))
    return v


def vector_cocycle(vec, generators):
    return Cocycle({g: from_coords(vec[3 * k:3 * k + 3]) for k, g in enumerate(generators)})


# -- complexes of presentations ---------------------------------------------

class AdjointWords:
    """Left adjoint matrices ``Ad_rho(w)`` of words, from generator matrices."""

    def __init__(self, generators, ads):
        self.generators = tuple(generators)
        self.ads = {g: ads[g] for g in self.generators}
        self.inv = {g: inverse(m) for g, m in self.ads.items()}
        self.like = next(iter(self.ads.values()))[0, 0]
        self.one = Matrix.identity(3, self.like)

    @classmethod
    def of_rep(cls, rho):
        return cls(rho.generators, {g: ad_matrix(m, right=False) for g, m in rho.images.items()})

    def __call__(self, w):
        out = self.one
        for g, s in w.letters:
            name = self.generators[g]
            out = out * (self.ads[name] if s > 0 else self.inv[name])
        return out


def complex_from_adjoint(adw, relators):
    """Presentation complex from left adjoint matrices.

    ``C^1`` holds right-cocycle values ``psi(g)``; the block of ``d^1`` for a
    relator ``r`` and generator ``g`` is ``sum c * Ad_rho(v g)`` over the Fox
    terms ``c * v`` of ``dr/dg``.
    """
    gens = adw.generators
    like = adw.like
    ident = adw.one
    d0 = _block_matrix([[adw.inv[g] - ident] for g in gens], like)
    n, m = len(gens), len(relators)
    if m:
        blocks = []
        for r in relators:
            row = []
            for i, g in enumerate(gens):
                gw = Word(((i, 1),), gens)
                acc = None
                for c, v in fox_terms(r, i):
                    t = adw(v * gw)
                    t = t if c > 0 else -t
                    acc = t if acc is None else acc + t
                row.append(acc)
            blocks.append(row)
        d1 = _block_matrix(blocks, like)
    else:
        d1 = Matrix([], 3 * n)
    labels = (("C0",), tuple(gens), tuple(str(r) for r in relators))
    return BasedComplex((3, 3 * n, 3 * m), (d0, d1), labels)


def presentation_complex(p, rho):
    """Cochain complex of the presentation 2-complex twisted by ``Ad rho``."""
    if tuple(rho.generators) != tuple(p.generators):
        raise InputError("representation and presentation have different generators")
    for r in p.relators:
        if rho(r) != rho.one:
            raise InputError(f"relator {r} is not sent to the identity")
    return complex_from_adjoint(AdjointWords.of_rep(rho), p.relators)


def product_circle_complex(p, rho, sign=1):
    """Complex of a free 2-complex times a circle with ``rho(t) = sign * Id``.

    ``C^1`` is ordered (generator cells, circle cell) and ``C^2`` by generator;
    conjugation by the central ``rho(t)`` is trivial, so ``d^0`` vanishes on the
    circle cell and ``d^1`` only sees the circle coordinate.
    """
    if sign not in (1, -1):
        raise InputError("sign must be +1 or -1")
    if not p.is_free:
        raise InputError("product with a circle needs a free presentation")
    if tuple(rho.generators) != tuple(p.generators):
        raise InputError("representation and presentation have different generators")
    like = _like(rho.one)
    gens = p.generators
    n = len(gens)
    ads = [ad_matrix(rho.images[g]) - _identity3(like) for g in gens]
    d0 = _block_matrix([[a] for a in ads] + [[None]], like)
    d1 = _block_matrix([[None] * n + [a] for a in ads], like)
    labels = (("C0",), tuple(gens) + ("t",), tuple(f"{g}t" for g in gens))
    return BasedComplex((3, 3 * (n + 1), 3 * n), (d0, d1), labels)


# -- mapping tori -----------------------------------------------------------

def monodromy_adjoint(rho, phi_words):
    """``Ad_P`` (``xi -> P xi P^-1``) for ``P`` with ``P rho(g) P^-1 = rho(phi(g))``.

    Only the adjoint matrix is needed, so ``P`` is never formed: ``Ad_P`` maps
    the frame ``(A0, B0, [A0, B0])`` onto the corresponding frame of the images.
    """
    a, b = rho.generators[:2]
    images = {g: rho(phi_words[g]) for g in rho.generators}

    def frame(ma, mb):
        x, y = project_traceless(ma), project_traceless(mb)
        return Matrix.from_columns([coords(x), coords(y), coords(bracket(x, y))], 3)

    adP = frame(images[a], images[b]) * inverse(frame(rho.images[a], rho.images[b]))
    for g in rho.generators:
        lhs = adP * ad_matrix(rho.images[g], right=False)
        rhs = ad_matrix(images[g], right=False) * adP
        if lhs != rhs:
            raise InputError("monodromy is not realized by conjugation at this character")
    return adP


def _free_letter(gens):
    for ch in "tsrqponmlkjihgfedcba":
        if ch not in gens:
            return ch
    raise InputError("no letter left for the circle generator")


@dataclass(frozen=True)
class MappingTorus:
    complex: BasedComplex
    generators: tuple
    fiber_generators: tuple
    phi_words: dict
    adjoint: AdjointWords
    adP: Matrix


def mapping_torus_complex(fiber_generators, rho, phi_words):
    """Complex of ``<gens, t | t g t^-1 phi(g)^-1>`` for a character fixed by ``phi``."""
    gens = tuple(fiber_generators)
    t = _free_letter(gens)
    ext = gens + (t,)
    phi = {g: parse_word(str(phi_words[g]), gens) for g in gens}
    adP = monodromy_adjoint(rho, phi)
    ads = {g: ad_matrix(rho.images[g], right=False) for g in gens}
    ads[t] = adP
    adw = AdjointWords(ext, ads)
    relators = []
    for g in gens:
        rel = parse_word(f"{t}{g}{t.upper()}", ext) * parse_word(str(phi[g].inverse()), ext)
        if adw(rel) != adw.one:
            raise InvariantError(f"relator for {g} fails at the adjoint level")
        relators.append(rel)
    cx = complex_from_adjoint(adw, relators)
    return MappingTorus(cx, ext, gens, phi, adw, adP)


def boundary_relator_value(mt, gamma, c):
    """Value on the boundary 2-cell ``[t, gamma]`` of a 2-cochain ``c``.

    Requires ``phi(gamma) = gamma`` as words.  ``c`` lists ``(h, e, f/2)``
    coordinates per relator; the cell is ``sum phi(dgamma/dg) . r_g``.
    """
    gens = mt.fiber_generators
    gamma = parse_word(str(gamma), gens)
    img = _apply_phi(mt.phi_words, gamma)
    if img != gamma:
        raise InputError(f"boundary word {gamma} is not fixed by the monodromy")
    like = mt.adjoint.like
    acc = [zero_like(like)] * 3
    for i, g in enumerate(gens):
        cg = c[3 * i:3 * i + 3]
        for coef, v in fox_terms(gamma, i):
            pv = parse_word(str(_apply_phi(mt.phi_words, v)), mt.generators)
            w = mt.adjoint(pv).apply(cg)
            acc = [a + w[k] if coef > 0 else a - w[k] for k, a in enumerate(acc)]
    return from_coords(acc)


def _apply_phi(phi, w):
    out = Word((), w.generators)
    for g, s in w.letters:
        img = phi[w.generators[g]]
        out = out * (img if s > 0 else img.inverse())
    return out


def apply_phi(phi, w):
    """Image of the word ``w`` under the endomorphism given on generators."""
    return _apply_phi(phi, w)


__all__ = [
    "BASIS_LABELS", "AdjointWords", "BasedComplex", "Cocycle", "MappingTorus", "ad_matrix",
    "adjoint_action", "apply_phi", "boundary_relator_value", "bracket", "cocycle_eval",
    "cocycle_vector", "complex_from_adjoint", "conj", "coords", "from_coords",
    "killing_volume", "mapping_torus_complex", "monodromy_adjoint", "presentation_complex",
    "product_circle_complex", "project_traceless", "sl2_basis", "tangent_cocycles",
    "vector_cocycle",
]
