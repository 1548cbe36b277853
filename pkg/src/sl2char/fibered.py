"""Torsion of mapping tori of surfaces with free fundamental group ``<a, b>``.

Two independent routes:

* ``fibered_torsion`` evaluates ``1/2 / det((J - I)|_W)`` where ``J`` is the
  Jacobian of the induced map on ``(x, y, z)`` and ``W`` the common kernel of
  the boundary-trace differentials.
* ``mapping_torus_oracle`` builds the twisted complex of the mapping-torus
  presentation at a specialized fixed character and computes its torsion
  directly, with ``H^2`` classes dual to the boundary generators.
"""
from dataclasses import dataclass

from .algebra import (ONE, XYZ, Matrix, MPoly, QuadExt, RatFn, Rat, as_rat, det_exact, derive,
                      is_rat, kernel_basis, rank, solve)
from .algebra.matrix import zero_like
from .cohomology import (Cocycle, apply_phi, boundary_relator_value, cocycle_vector,
                         mapping_torus_complex, project_traceless, tangent_cocycles)
from .errors import (ConventionError, InputError, InvariantError, NonRegularPointError,
                     DegenerateModulusError)
from .saito import Rep, tautological_rep
from .skein import delta, trace_polynomial
from .torsion import VolumeForm, torsion_of_based_complex
from .words import parse_word

HALF = ONE / 2


@dataclass(frozen=True)
class FiberedSpec:
    phi_images: dict
    boundary: tuple
    induced_map: tuple
    jacobian: Matrix
    gradients: tuple

    @property
    def wedge(self):
        return tuple(f"dY_{w}" for w in self.boundary)

    def fixed_ideal(self):
        return tuple(f - v for f, v in zip(self.induced_map, MPoly.gens(XYZ)))

    def is_identity_on_characters(self):
        return all(not g for g in self.fixed_ideal())


def fibered_spec(phi, boundary):
    """Induced map, Jacobian and boundary gradients for a monodromy ``phi``."""
    gens = ("a", "b")
    if set(phi) != set(gens):
        raise InputError("monodromy must give images of both a and b")
    images = {g: parse_word(str(phi[g]), gens) for g in gens}
    # the images must generate: the induced map on abelianizations is invertible
    ea = [images[g].exponent_sum(0) for g in gens]
    eb = [images[g].exponent_sum(1) for g in gens]
    if abs(ea[0] * eb[1] - ea[1] * eb[0]) != 1:
        raise InputError("monodromy is not an automorphism of the free group")
    words = [parse_word(s, gens) for s in ("a", "b", "ab")]
    induced = tuple(trace_polynomial(apply_phi(images, w)) for w in words)
    J = Matrix([[f.diff(v) for v in XYZ] for f in induced])
    bwords = tuple(parse_word(str(b), gens) for b in boundary)
    if not bwords:
        raise InputError("at least one boundary curve is required")
    for w in bwords:
        if apply_phi(images, w) != w:
            raise InputError(f"boundary word {w} is not fixed by the monodromy")
    grads = tuple(tuple(trace_polynomial(w).diff(v) for v in XYZ) for w in bwords)
    return FiberedSpec(images, bwords, induced, J, grads)


@dataclass(frozen=True)
class FiberedSymbolic:
    """Symbolic data when the value depends on the point."""

    jacobian: Matrix
    gradients: tuple
    wedge: tuple


def _check_point(spec, point):
    pt = {v: as_rat(point[v]) for v in XYZ}
    for f, v in zip(spec.induced_map, XYZ):
        if f.evaluate(pt) != pt[v]:
            raise InputError(f"point is not fixed by the monodromy: phi*{v} = "
                             f"{f.evaluate(pt)} != {pt[v]}")
    return pt


def _restricted_det(JmI, W):
    """``det`` of ``JmI`` restricted to the span of the columns ``W``."""
    if not W:
        return ONE
    Wm = Matrix.from_columns(W, 3)
    coeffs = []
    for w in W:
        img = JmI.apply(w)
        c = solve(Wm, img)
        if c is None:
            raise ConventionError("J - I does not preserve the common kernel of the boundary gradients")
        coeffs.append(c)
    return det_exact(Matrix.from_columns(coeffs, len(W)))


def fibered_torsion(spec, point=None):
    """``1/2 * wedge dY_gamma / det((J - I)|_W)``.

    Without a point the form is returned when ``W = 0`` (the value no longer
    depends on the point); otherwise the symbolic data is returned.  With a
    point, the scalar coefficient is returned.
    """
    k = len(spec.boundary)
    if point is None:
        G = Matrix([list(g) for g in spec.gradients])
        Gr = G.map(RatFn.from_poly)
        if rank(Gr) < k:
            raise NonRegularPointError("boundary trace differentials are dependent")
        if spec.is_identity_on_characters() and k < 3:
            raise NonRegularPointError(
                "monodromy acts trivially on characters: J - I vanishes on W")
        if k == 3:
            return VolumeForm(RatFn.const(HALF) / det_exact(Gr), wedge=("dx", "dy", "dz"))
        return FiberedSymbolic(spec.jacobian, spec.gradients, spec.wedge)
    pt = _check_point(spec, point)
    G = Matrix([[g.evaluate(pt) for g in grads] for grads in spec.gradients])
    if rank(G) < k:
        raise NonRegularPointError("boundary trace differentials are dependent at the point")
    W = kernel_basis(G) if k < 3 else []
    J = spec.jacobian.map(lambda f: f.evaluate(pt))
    JmI = J - Matrix.identity(3)
    d = _restricted_det(JmI, W)
    if not d:
        raise NonRegularPointError("det((J - I)|_W) vanishes at the point")
    value = HALF / d
    if k == 3:
        # the wedge of the three differentials is det(G) dx^dy^dz
        return value
    return value


# -- independent oracle --------------------------------------------------------

def _rational_root(c):
    """A rational root of ``t^2 + c t + 1`` if one exists."""
    from math import isqrt

    disc = c * c - 4
    if disc < 0:
        return None
    n, d = disc.numerator, disc.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return (-c + Rat(rn, rd)) / 2


def specialize_entry(e, point, u_value=None):
    if isinstance(e, QuadExt):
        return e.evaluate(point, u_value) if u_value is not None else e.at(point)
    if is_rat(e):
        return e
    return e.evaluate(point)


def specialize_matrix(m, point, u_value=None):
    return m.map(lambda e: specialize_entry(e, point, u_value))


def specialized_rep(point, u_value="auto"):
    """Tautological representation at ``point``: rational when ``u`` is rational."""
    pt = {v: as_rat(point[v]) for v in XYZ}
    if u_value == "auto":
        u_value = _rational_root(pt["z"])
    rho = tautological_rep()
    images = {g: specialize_matrix(m, pt, u_value) for g, m in rho.images.items()}
    return Rep(rho.generators, images), rho, u_value


def specialized_tangents(point, u_value=None):
    """Generic tangent cocycles evaluated at ``point`` (same root ``u`` as ``specialized_rep``)."""
    pt = {v: as_rat(point[v]) for v in XYZ}
    return [Cocycle({g: specialize_matrix(m, pt, u_value) for g, m in psi.values.items()})
            for psi in tangent_cocycles(tautological_rep())]


def mapping_torus_oracle(spec, point, u_value="auto"):
    """Torsion coefficient of the mapping torus on ``wedge dY_gamma`` at a fixed point.

    ``H^1`` classes are tangent cocycles along the fixed locus (extended to
    the circle generator by solving the relator equations); ``H^2`` classes
    are dual to the boundary generators ``rho(gamma)_0`` under
    ``c -> tr(c([t, gamma]) xi)``.
    """
    pt = _check_point(spec, point)
    if not delta("a", "b").evaluate(pt):
        raise NonRegularPointError("character is reducible at the point")
    rho_pt, rho, u0 = specialized_rep(pt, u_value)
    phi = {g: str(w) for g, w in spec.phi_images.items()}
    mt = mapping_torus_complex(("a", "b"), rho_pt, phi)
    cx = mt.complex
    like = rho_pt.one[0, 0]
    z = zero_like(like)
    # tangent directions along the fixed locus
    J = spec.jacobian.map(lambda f: f.evaluate(pt))
    V = kernel_basis(J - Matrix.identity(3))
    k = len(spec.boundary)
    if len(V) != k:
        raise NonRegularPointError(f"fixed locus has dimension {len(V)} but {k} boundary curves")
    psis = [cocycle_vector(p, ("a", "b")) for p in specialized_tangents(pt, u0)]
    d1 = cx.d(1)
    h1 = []
    for v in V:
        base = [z] * 6
        for coeff, vec in zip(v, psis):
            if coeff:
                base = [a + b * coeff for a, b in zip(base, vec)]
        # solve d1 (base, s) = 0 for the circle coordinate s
        rhs = [-e for e in d1.apply(base + [z] * 3)]
        T = Matrix([list(r[6:9]) for r in d1.rows], 3)
        s = solve(T, rhs)
        if s is None:
            raise InvariantError("tangent cocycle does not extend over the mapping torus")
        h1.append(base + s)
    # H^2 classes dual to the boundary generators
    xis = [project_traceless(rho_pt(w)) for w in spec.boundary]
    n2 = cx.dims[2]
    ev_rows = []
    for w, xi in zip(spec.boundary, xis):
        row = []
        for j in range(n2):
            e = [z] * n2
            e[j] = z + 1
            row.append((boundary_relator_value(mt, w, e) * xi).trace())
        ev_rows.append(row)
    EV = Matrix(ev_rows, n2)
    if not (EV * d1).is_zero():
        raise InvariantError("boundary pairing does not vanish on coboundaries")
    h2 = []
    for i in range(k):
        target = [z + 1 if r == i else z for r in range(k)]
        c = solve(EV, target)
        if c is None:
            raise NonRegularPointError("boundary pairing is degenerate at the point")
        h2.append(c)
    tau = torsion_of_based_complex(cx, [[], h1, h2])
    G = Matrix([[g.evaluate(pt) for g in grads] for grads in spec.gradients])
    GV = G * Matrix.from_columns(V, 3)
    dv = det_exact(GV)
    if not dv:
        raise NonRegularPointError("tangent directions are killed by the boundary differentials")
    value = tau / dv
    if isinstance(value, QuadExt):
        if not value.is_rational():
            raise InvariantError("oracle torsion has a nonzero u-component")
        value = value.a.const_value()
    return as_rat(value)


__all__ = [
    "FiberedSpec", "FiberedSymbolic", "fibered_spec", "fibered_torsion", "mapping_torus_oracle",
    "specialize_matrix", "specialized_rep", "specialized_tangents",
]
