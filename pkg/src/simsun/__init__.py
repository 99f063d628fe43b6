"""Exact enumeration and verification toolkit for simsun permutations.

Submodules:

- ``perms``       permutations, cycle forms, signed windows, statistics
- ``classes``     recognizers, insertion generators, labelings, distributions
- ``poly``        sparse exact polynomials in x, q, y
- ``triangles``   recurrence engines for every polynomial family
- ``series``      truncated EGFs with polynomial coefficients
- ``bijections``  the block correspondence and the descent-to-excedance map
- ``roots``       Sturm-sequence root certification and interlacing
- ``bulk``        vectorized brute-force oracles for large sweeps
- ``verify``      registry of machine-checkable identities
- ``cli``         command-line front end
"""

__version__ = "0.1.0"

__all__ = [
    "bijections",
    "bulk",
    "classes",
    "perms",
    "poly",
    "roots",
    "series",
    "triangles",
    "verify",
]
