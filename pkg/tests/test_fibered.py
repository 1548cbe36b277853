import pytest

from sl2char.algebra import ONE, Matrix, Rat
from sl2char.errors import ConventionError, InputError, NonRegularPointError
from sl2char.fibered import (FiberedSpec, FiberedSymbolic, fibered_spec, fibered_torsion,
                             mapping_torus_oracle)
from sl2char.torsion import VolumeForm, torsion_form

MAGIC = ("a", "b", "BA")
PA = {"a": "ab", "b": "bab"}


def pa_point(x):
    # the fixed curve z = x, y = x / (x - 1) of the induced map
    return {"x": x, "y": x / (x - 1), "z": x}


@pytest.fixture(scope="module")
def pa():
    return fibered_spec(PA, ["abAB"])


def test_identity_on_three_holed_sphere():
    form = fibered_torsion(fibered_spec({"a": "a", "b": "b"}, MAGIC))
    assert isinstance(form, VolumeForm)
    assert form.coefficient == Rat(1, 2)
    assert str(form) == "1/2 dx^dy^dz (up to sign)"


def test_identity_on_punctured_torus_is_not_regular():
    spec = fibered_spec({"a": "a", "b": "b"}, ["abAB"])
    with pytest.raises(NonRegularPointError):
        fibered_torsion(spec)
    with pytest.raises(NonRegularPointError):
        fibered_torsion(spec, {"x": Rat(3), "y": Rat(1, 2), "z": Rat(5)})


def test_induced_map(pa):
    x, y, z = (str(f) for f in pa.induced_map)
    assert (x, y, z) == ("z", "y*z - x", "y*z^2 - x*z - y")
    assert pa.wedge == ("dY_abAB",)
    assert isinstance(fibered_torsion(pa), FiberedSymbolic)


def test_pseudo_anosov_values(pa):
    values = {Rat(-5, 2): Rat(7, 92), Rat(3): Rat(-1, 12), Rat(7, 3): Rat(-3, 31),
              Rat(-10, 3): Rat(39, 634)}
    for x, v in values.items():
        assert fibered_torsion(pa, pa_point(x)) == v


def test_against_the_mapping_torus_complex(pa):
    # the direct torsion of the mapping torus is twice the determinant formula
    for x in (Rat(-5, 2), Rat(3), Rat(7, 3), Rat(-10, 3)):
        pt = pa_point(x)
        assert mapping_torus_oracle(pa, pt) == 2 * fibered_torsion(pa, pt)


def test_identity_against_the_mapping_torus_complex():
    spec = fibered_spec({"a": "a", "b": "b"}, MAGIC)
    for pt in ({"x": Rat(3, 7), "y": Rat(-5, 3), "z": Rat(5, 2)},
               {"x": Rat(3), "y": Rat(1, 2), "z": Rat(5)}):
        assert mapping_torus_oracle(spec, pt) == 2 * fibered_torsion(spec, pt)
        assert mapping_torus_oracle(spec, pt) in (1, -1)


def test_product_circle_agreement():
    # value of the determinant formula against the split product complex
    fib = fibered_torsion(fibered_spec({"a": "a", "b": "b"}, MAGIC))
    prod = torsion_form(kind="product_circle")
    assert prod.coefficient == 1
    assert fib.coefficient * 2 == prod.coefficient


def test_point_off_the_fixed_locus(pa):
    with pytest.raises(InputError):
        fibered_torsion(pa, {"x": Rat(1), "y": Rat(2), "z": Rat(3)})


def test_boundary_must_be_fixed():
    with pytest.raises(InputError):
        fibered_spec(PA, ["a"])


def test_not_an_automorphism():
    with pytest.raises(InputError):
        fibered_spec({"a": "aa", "b": "b"}, ["abAB"])


def test_convention_violation(pa):
    # a transposed Jacobian no longer preserves the kernel of the gradients
    bad = FiberedSpec(pa.phi_images, pa.boundary, pa.induced_map, pa.jacobian.transpose(),
                      pa.gradients)
    with pytest.raises(ConventionError):
        fibered_torsion(bad, pa_point(Rat(-5, 2)))
