"""Reidemeister torsion of based cochain complexes and torsion volume forms.

For a complex with distinguished bases and chosen cohomology
representatives ``h_i``, pick ``b_i`` in ``C^i`` whose images span
``im d^i`` and set ``D_i = det[d b_(i-1) | h_i | b_i]``; the torsion is
``prod D_i^((-1)^(i+1))``.  With this exponent the handlebody torsion is the
determinant of the tangent cocycles against the coboundaries.
"""
import random
from dataclasses import dataclass, field

from .algebra import (ONE, XYZ, Matrix, MPoly, QuadExt, RatFn, det_exact, is_rat, kernel_basis,
                      rat_str, solve)
from .algebra.matrix import rref, zero_like
from .cohomology import (BasedComplex, cocycle_eval, cocycle_vector, coords, from_coords,
                         presentation_complex, product_circle_complex, project_traceless,
                         tangent_cocycles, vector_cocycle)
from .errors import (DegenerateBoundaryError, InputError, InvalidBasisError, InvariantError,
                     ParabolicBoundaryError, RankError)
from .saito import tautological_rep
from .skein import trace_polynomial
from .words import Presentation, parse_word

DX = ("dx", "dy", "dz")


# -- volume forms -----------------------------------------------------------

def _coeff_str(c):
    if is_rat(c):
        return rat_str(c)
    s = str(c)
    if isinstance(c, RatFn) and c.is_const():
        return rat_str(c.const_value())
    if isinstance(c, RatFn) and c.den.is_const() and len(c.num.terms) == 1:
        return s
    return f"({s})"


def _rational_part(c):
    """The base-field value of ``c``; raises when the ``u``-component is nonzero."""
    if isinstance(c, QuadExt):
        if not c.is_rational():
            raise InvariantError(f"torsion coefficient {c} has a nonzero u-component")
        c = c.a
    if isinstance(c, MPoly):
        c = RatFn.from_poly(c)
    if isinstance(c, RatFn) and c.is_const():
        return c.const_value()
    return c


@dataclass(frozen=True)
class VolumeForm:
    """``coefficient * w1 ^ ... ^ wk``, optionally divided by ``sqrt(prod radicands)``."""

    coefficient: object
    wedge: tuple = DX
    sign_ambiguous: bool = True
    radicands: tuple = ()

    def __post_init__(self):
        if len(set(self.wedge)) != len(self.wedge):
            raise InvariantError("wedge labels must be distinct")
        object.__setattr__(self, "coefficient", _rational_part(self.coefficient))

    def is_rational(self):
        return not isinstance(self.coefficient, QuadExt)

    def evaluate(self, point):
        c = self.coefficient
        return c if is_rat(c) else c.evaluate(point)

    def equals_up_to_sign(self, other):
        a = other.coefficient if isinstance(other, VolumeForm) else other
        return self.coefficient == a or self.coefficient == -a

    def __str__(self):
        body = f"{_coeff_str(self.coefficient)} {'^'.join(self.wedge)}"
        if self.radicands:
            rad = "*".join(f"({r})" for r in self.radicands)
            body += f" / sqrt({rad})"
        return body + (" (up to sign)" if self.sign_ambiguous else "")


# -- torsion of a based complex ----------------------------------------------

def _columns_matrix(cols, n):
    return Matrix.from_columns(cols, n)


def _lift_basis(d, n, like, rng=None):
    """Vectors of ``C^i`` whose images under ``d`` form a basis of the image."""
    z, o = zero_like(like), zero_like(like) + 1
    if d is None or d.nrows == 0 or d.ncols == 0:
        return []
    _, pivots = rref(d)
    lifts = [[o if k == j else z for k in range(n)] for j in pivots]
    if rng is None or not lifts:
        return lifts
    # random recombination plus random kernel vectors: the image is unchanged
    r = len(lifts)
    while True:
        P = Matrix([[rng.randint(-3, 3) for _ in range(r)] for _ in range(r)])
        if det_exact(P) != 0:
            break
    kernel = kernel_basis(d, like)
    out = []
    for j in range(r):
        v = [z] * n
        for i in range(r):
            c = P[i, j]
            if c:
                v = [a + b * c for a, b in zip(v, lifts[i])]
        for kv in kernel:
            c = rng.randint(-2, 2)
            if c:
                v = [a + b * c for a, b in zip(v, kv)]
        out.append(v)
    return out


def torsion_of_based_complex(c, h_bases, rng=None, permute=False):
    """Torsion of ``c`` with cohomology representatives ``h_bases[i]``.

    ``rng`` randomizes the lifts (and with ``permute`` the order of the
    supplied classes); the result changes by at most a sign.
    """
    like = c.sample()
    n = len(c.dims)
    h_bases = [list(h) for h in h_bases] + [[] for _ in range(n - len(h_bases))]
    dims_h = c.cohomology_dims()
    lifts = []
    for i in range(n):
        lifts.append(_lift_basis(c.d(i), c.dims[i], like, rng))
    tau = None
    for i in range(n):
        if len(h_bases[i]) != dims_h[i]:
            if not h_bases[i] and dims_h[i]:
                raise RankError(f"complex is not acyclic in degree {i}: h^{i} = {dims_h[i]}")
            raise InvalidBasisError(
                f"{len(h_bases[i])} classes supplied for h^{i} = {dims_h[i]}")
        d = c.d(i)
        for v in h_bases[i]:
            if d is not None and d.nrows and any(d.apply(v)):
                raise InvalidBasisError(f"supplied class in degree {i} is not a cocycle")
        reps = list(h_bases[i])
        if permute and rng is not None:
            rng.shuffle(reps)
        prev = c.d(i - 1)
        images = [prev.apply(v) for v in lifts[i - 1]] if i > 0 and prev is not None else []
        cols = images + reps + lifts[i]
        if len(cols) != c.dims[i]:
            raise RankError(f"degree {i}: {len(cols)} columns for dimension {c.dims[i]}")
        if not cols:
            continue
        D = det_exact(_columns_matrix(cols, c.dims[i]))
        if not D:
            raise InvalidBasisError(f"supplied classes in degree {i} are dependent")
        if i % 2 == 1:
            tau = D if tau is None else tau * D
        else:
            inv = ONE / D if is_rat(D) else 1 / D
            tau = inv if tau is None else tau * inv
    return ONE if tau is None else tau


# -- boundary generators -----------------------------------------------------

@dataclass(frozen=True)
class BoundaryGenerator:
    curve: object
    xi: Matrix
    norm_sq: object
    trace: object = None


def boundary_generator(rho, word):
    """``xi = rho(gamma)_0`` with ``tr(xi^2) = (tr(gamma)^2 - 4) / 2``."""
    w = parse_word(str(word), rho.generators)
    xi = project_traceless(rho(w))
    norm_sq = (xi * xi).trace()
    tp = trace_polynomial(w) if len(rho.generators) == 2 else None
    generic = isinstance(norm_sq, QuadExt) and not norm_sq.c.is_const()
    if generic and tp is not None and norm_sq != (tp * tp - 4) * (ONE / 2):
        raise InvariantError(f"tr(xi^2) for {w} disagrees with its trace polynomial")
    return BoundaryGenerator(w, xi, norm_sq, tp)


def normalize_generators(gens):
    """Formal scale factors ``s = 2 / sqrt(t^2 - 4)`` making ``tr((s xi)^2) = 2``.

    Returns ``(numerator, radicand)`` pairs; no square roots are formed.
    """
    out = []
    for g in gens:
        if not g.norm_sq:
            raise ParabolicBoundaryError(f"boundary curve {g.curve} has trace +-2")
        rad = g.norm_sq * 2
        rad = _rational_part(rad)
        if isinstance(rad, RatFn) and rad.is_poly():
            rad = rad.num
        out.append((2, rad))
    return out


# -- the two worked complexes -------------------------------------------------

def _free_f2():
    return Presentation.build(("a", "b"))


def handlebody_torsion(rho=None, rng=None, permute=False, tangents=None):
    """Torsion ``f`` of the genus-2 handlebody with the tangent cocycles as ``H^1`` basis.

    ``tangents`` overrides the cocycles ``rho^-1 d rho`` (needed when ``rho``
    is already specialized and can no longer be differentiated).
    """
    rho = rho or tautological_rep()
    p = _free_f2()
    c = presentation_complex(p, rho)
    tangents = tangents if tangents is not None else tangent_cocycles(rho)
    h1 = [cocycle_vector(psi, p.generators) for psi in tangents]
    return torsion_of_based_complex(c, [[], h1], rng=rng, permute=permute)


def boundary_evaluation(rho, boundary, gens=("a", "b"), scales=None):
    """Matrix of ``psi -> (tr(psi(gamma_i) s_i xi_i))_i`` on cocycles of the free group."""
    bgs = [boundary_generator(rho, w) for w in boundary]
    like = rho.one[0, 0]
    z = zero_like(like)
    o = z + 1
    n = 3 * len(gens)
    rows = [[None] * n for _ in bgs]
    for j in range(n):
        e = [o if k == j else z for k in range(n)]
        psi = vector_cocycle(e, gens)
        for i, bg in enumerate(bgs):
            rows[i][j] = (cocycle_eval(psi, rho, bg.curve) * bg.xi).trace()
    if scales is not None:
        rows = [[e * s for e in row] for row, s in zip(rows, scales)]
    return Matrix(rows, n), bgs


def acyclic_boundary_complex(rho, boundary, scales=None):
    """``sl2 -> sl2^2 -> K^3``: coboundary, then evaluation against the boundary generators."""
    p = _free_f2()
    hc = presentation_complex(p, rho)
    ev, bgs = boundary_evaluation(rho, boundary, p.generators, scales)
    return BasedComplex((3, 6, len(boundary)), (hc.d(0), ev)), bgs


def boundary_torsion(rho=None, boundary=("a", "b", "BA"), rng=None, scales=None):
    """Torsion ``g`` of the acyclic boundary complex; ``scales`` rescale the ``xi_i``."""
    rho = rho or tautological_rep()
    c, _ = acyclic_boundary_complex(rho, boundary, scales)
    dims = c.cohomology_dims()
    if any(dims):
        raise DegenerateBoundaryError(f"boundary evaluation map is singular (cohomology {dims})")
    return torsion_of_based_complex(c, [[], [], []], rng=rng)


def torsion_form(p=None, kind="handlebody", sign=1, boundary=("a", "b", "BA"),
                 normalized=False):
    """Torsion volume form on ``dx ^ dy ^ dz`` of the handlebody or its product with a circle."""
    if kind not in ("handlebody", "product_circle", "product-circle"):
        raise InputError(f"unknown torsion kind {kind!r}")
    p = p or _free_f2()
    if tuple(p.generators) != ("a", "b") or not p.is_free:
        raise InputError("torsion forms are computed for the free group on a, b")
    if sign not in (1, -1):
        raise InputError("sign must be +1 or -1")
    rho = tautological_rep()
    f = handlebody_torsion(rho)
    if kind == "handlebody":
        return VolumeForm(f)
    boundary = tuple(str(b) for b in boundary)
    if len(boundary) != 3:
        raise InputError("the product with a circle needs three boundary curves")
    # the full complex must have the expected shape before the splitting is used
    dims = product_circle_complex(p, rho, sign).cohomology_dims()
    if dims != (0, 3, 3):
        raise InvariantError(f"unexpected cohomology {dims} of the product complex")
    g = boundary_torsion(rho, boundary)
    coeff = f / g
    if not normalized:
        return VolumeForm(coeff)
    rho_b = [boundary_generator(rho, w) for w in boundary]
    scales = normalize_generators(rho_b)
    factor = ONE
    for num, _ in scales:
        factor *= num
    return VolumeForm(_rational_part(coeff) * factor, radicands=tuple(r for _, r in scales))


__all__ = [
    "BoundaryGenerator", "VolumeForm", "acyclic_boundary_complex", "boundary_evaluation",
    "boundary_generator", "boundary_torsion", "handlebody_torsion", "normalize_generators",
    "torsion_form", "torsion_of_based_complex",
]
