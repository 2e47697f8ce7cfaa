"""Exact-arithmetic cocycle deformations of the 12-dimensional Fomin-Kirillov algebra.

Everything is computed over the rationals: sparse polynomials in the
deformation parameters, the two Yetter-Drinfeld realizations of FK3
(pointed over the groups C3 x C_{2l} and copointed over the dual of S3),
the cleft objects with their sections, the full Hopf 2-cocycle tables,
Hochschild 2-cocycles with their convolution exponentials, and the
purity classification of the cocycles.
"""

from .scalars import QQ, Poly
from .fk3 import Realization, POINTED, COPOINTED, fk3_algebra
