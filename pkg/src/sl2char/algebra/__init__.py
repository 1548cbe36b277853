"""Exact arithmetic: rationals, polynomials, rational functions, a quadratic
extension, and dense linear algebra over them."""
from ..errors import StructuralError
from .matrix import (Matrix, det_exact, inverse, kernel_basis, one_like, rank, rref,
                     solve, zero_like)
from .mpoly import XYZ, MPoly, NotDivisible, poly_gcd, poly_lcm, ring_vars
from .quadext import QuadExt, quad_field
from .ratfn import RatFn, as_ratfn
from .rational import ONE, ZERO, Rat, as_rat, is_rat, rat_str


def specialize(value, point, u_value=None):
    """Exact value of ``value`` at ``point``.

    A ``QuadExt`` needs a rational root ``u_value`` of ``t^2 + c*t + 1``;
    without one the pair ``(a(point), b(point))`` is returned.
    """
    if is_rat(value):
        return as_rat(value)
    if isinstance(value, QuadExt):
        return value.evaluate(point, u_value)
    if isinstance(value, (MPoly, RatFn)):
        return value.evaluate(point)
    raise StructuralError(f"cannot specialize {type(value).__name__}")


def derive(value, var):
    """Formal partial derivative; ``u`` is differentiated implicitly."""
    if is_rat(value):
        return ZERO
    if isinstance(value, (MPoly, RatFn, QuadExt)):
        return value.diff(var)
    if isinstance(value, Matrix):
        return value.map(lambda e: derive(e, var))
    raise StructuralError(f"cannot differentiate {type(value).__name__}")


__all__ = [
    "Matrix", "MPoly", "NotDivisible", "ONE", "QuadExt", "Rat", "RatFn", "XYZ", "ZERO",
    "as_rat", "as_ratfn", "derive", "det_exact", "inverse", "is_rat", "kernel_basis",
    "one_like", "poly_gcd", "poly_lcm", "quad_field", "rank", "rat_str", "ring_vars",
    "rref", "solve", "specialize", "zero_like",
]
