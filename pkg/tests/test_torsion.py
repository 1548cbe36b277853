import random

import pytest

from sl2char.algebra import ONE, XYZ, Matrix, MPoly, QuadExt, Rat, RatFn
from sl2char.cohomology import BasedComplex, cocycle_vector, presentation_complex, tangent_cocycles
from sl2char.errors import (InputError, InvalidBasisError, InvariantError, ParabolicBoundaryError,
                            RankError)
from sl2char.fibered import specialized_rep, specialized_tangents
from sl2char.saito import tautological_rep
from sl2char.torsion import (VolumeForm, boundary_generator, boundary_torsion, handlebody_torsion,
                             normalize_generators, torsion_form, torsion_of_based_complex)
from sl2char.words import Presentation

X, Y, Z = MPoly.gens(XYZ)
F2 = Presentation.build(("a", "b"))


@pytest.fixture(scope="module")
def rho():
    return tautological_rep()


@pytest.fixture(scope="module")
def f(rho):
    return handlebody_torsion(rho)


@pytest.fixture(scope="module")
def g(rho):
    return boundary_torsion(rho)


def _rat(v):
    return VolumeForm(v).coefficient


def _at(v, pt):
    v = _rat(v)
    return v if isinstance(v, Rat) else v.evaluate(pt)


def test_identity_complex():
    one = Matrix.identity(2)
    c = BasedComplex((2, 2), (one,))
    assert torsion_of_based_complex(c, [[], []]) == 1


def test_exponent_convention():
    # the degree 1 determinant multiplies
    c = BasedComplex((1, 1), (Matrix([[Rat(3)]]),))
    assert torsion_of_based_complex(c, [[], []]) == 3


def test_handlebody_value(f):
    assert _rat(f) in (4, -4)


def test_boundary_torsion_value(g):
    assert _rat(g) in (4, -4)


def test_handlebody_in_a_rescaled_basis(rho, f):
    # with coordinates of f instead of f/2 the handlebody value halves
    c = presentation_complex(F2, rho)
    like = c.sample()
    half = like.one() * ONE / 2
    one = like.one()

    def scale(n):
        return Matrix([[(half if i % 3 == 2 else one) if i == j else like.zero() for j in range(n)]
                       for i in range(n)], n)
    d0 = scale(6) * c.d(0) * Matrix([[(one * 2 if i == 2 else one) if i == j else like.zero()
                                      for j in range(3)] for i in range(3)], 3)
    scaled = BasedComplex((3, 6), (d0,))
    h1 = [scale(6).apply(cocycle_vector(p, ("a", "b"))) for p in tangent_cocycles(rho)]
    t = torsion_of_based_complex(scaled, [[], h1])
    assert _rat(t) in (2, -2)
    assert _rat(f) in (4, -4)


def test_sign_stability(rho, f, g):
    rng = random.Random(13)
    for _ in range(10):
        assert handlebody_torsion(rho, rng=rng, permute=True) in (f, -f)
        assert boundary_torsion(rho, rng=rng) in (g, -g)


def test_dependent_classes(rho):
    c = presentation_complex(F2, rho)
    psi = cocycle_vector(tangent_cocycles(rho)[0], ("a", "b"))
    with pytest.raises(InvalidBasisError):
        torsion_of_based_complex(c, [[], [psi, psi, psi]])


def test_not_a_cocycle():
    c = BasedComplex((1, 1), (Matrix([[ONE]]),))
    with pytest.raises(InvalidBasisError):
        torsion_of_based_complex(c, [[], [[ONE]]])


def test_missing_classes(rho):
    c = presentation_complex(F2, rho)
    with pytest.raises(RankError):
        torsion_of_based_complex(c, [[], []])


def test_specialization_commutes(rho, f, g):
    pt = {"x": Rat(3), "y": Rat(1, 2), "z": Rat(5, 2)}
    rho_pt, _, u0 = specialized_rep(pt)
    assert u0 is not None
    fp = handlebody_torsion(rho_pt, tangents=specialized_tangents(pt, u0))
    gp = boundary_torsion(rho_pt)
    assert _at(fp, pt) == _at(f, pt)
    assert _at(gp, pt) == _at(g, pt)


def test_boundary_generator_norm(rho):
    bg = boundary_generator(rho, "a")
    assert bg.xi.trace() == 0
    assert bg.norm_sq == (X * X - 4) * (ONE / 2)
    (_, rad), = normalize_generators([bg])
    assert rad == X * X - 4


def test_parabolic_boundary(rho):
    with pytest.raises(ParabolicBoundaryError):
        normalize_generators([boundary_generator(rho, "")])


def test_handlebody_form():
    form = torsion_form(kind="handlebody")
    assert str(form) == "4 dx^dy^dz (up to sign)"
    assert form.sign_ambiguous


def test_product_circle_form():
    form = torsion_form(kind="product_circle")
    assert str(form) == "1 dx^dy^dz (up to sign)"
    assert torsion_form(kind="product_circle", sign=-1).equals_up_to_sign(form)


def test_normalized_form():
    form = torsion_form(kind="product_circle", normalized=True)
    assert form.coefficient == 8
    assert form.radicands == (X * X - 4, Y * Y - 4, Z * Z - 4)


def test_normalization_direction(rho, f):
    # at a point where every t^2 - 4 is a rational square, rescaling
    # xi_i by 2 / sqrt(t_i^2 - 4) reproduces the normalized coefficient
    pt = {"x": Rat(5, 2), "y": Rat(10, 3), "z": Rat(13, 6)}
    roots = [Rat(3, 2), Rat(8, 3), Rat(5, 6)]
    rho_pt, _, u0 = specialized_rep(pt)
    fp = _rat(handlebody_torsion(rho_pt, tangents=specialized_tangents(pt, u0)))
    gs = _rat(boundary_torsion(rho_pt, scales=[2 / r for r in roots]))
    norm = torsion_form(kind="product_circle", normalized=True)
    assert fp / gs == norm.coefficient / (roots[0] * roots[1] * roots[2])


def test_u_component_rejected():
    u = QuadExt.u(RatFn.from_poly(Z))
    with pytest.raises(InvariantError):
        VolumeForm(u)


def test_bad_inputs():
    with pytest.raises(InputError):
        torsion_form(kind="solid")
    with pytest.raises(InputError):
        torsion_form(kind="product_circle", sign=2)
    with pytest.raises(InputError):
        torsion_form(kind="product_circle", boundary=("a", "b"))
    with pytest.raises(InputError):
        torsion_form(Presentation.build(("a", "b"), ("abAB",)))
