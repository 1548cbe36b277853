"""Exact SL2 character-variety invariants: trace polynomials, reconstruction of
representations from characters, twisted cohomology and Reidemeister torsion."""

__version__ = "0.1.0"
