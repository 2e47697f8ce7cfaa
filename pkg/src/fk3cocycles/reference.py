"""The published cocycle tables, transcribed independently of the engine.

These are the closed-form tables that the computation must reproduce:
the pointed family sigma_{lambda,mu} (with p = (mu-lb)^2(mu+2lb) and
q = -mu(p+4lb^3), lb = lambda/3) and the copointed family sigma_c.  Each
entry is entered exactly as published, as polynomial arithmetic, so the
comparison against the computed tables is an independent cross-check and
the golden fixtures are generated from here.
"""

from .scalars import Poly
from .words import WORD_INDEX
from . import fk3 as core
from .cocycle import BiFunctional

W = WORD_INDEX


def reference_sigma_pointed():
    """sigma_{lambda,mu} on the basis, symbolic in (lambda, mu)."""
    vars = ("lambda", "mu")
    lam, mu = Poly.gens(vars)
    lb = lam / 3
    p = (mu - lb) * (mu + 2 * lb) * (mu - lb)
    q = -mu * (p + 4 * lb ** 3)
    x0, x1, x2 = (W[(i,)] for i in range(3))
    v20, v02, v10, v01 = (W[w] for w in ((2, 0), (0, 2), (1, 0), (0, 1)))
    v202, v010, v201 = (W[w] for w in ((2, 0, 2), (0, 1, 0), (2, 0, 1)))
    top = core.TOP
    vals = {(core.UNIT, core.UNIT): Poly.const(vars, 1)}
    for i in (x0, x1, x2):
        for j in (x0, x1, x2):
            vals[(i, j)] = mu if i == j else lb
    deg2 = {
        (v20, v20): 2 * lb * (lb - mu), (v20, v02): mu * mu - lb * lb,
        (v20, v10): 2 * lb * lb,        (v20, v01): lb * (mu - lb),
        (v02, v20): mu * mu - lb * lb,  (v02, v02): 2 * lb * (lb - mu),
        (v02, v10): lb * (mu - lb),     (v02, v01): -lb * lb - mu * mu,
        (v10, v20): 2 * lb * lb,        (v10, v02): -lb * (lb - mu),
        (v10, v10): 2 * lb * (lb - mu), (v10, v01): mu * mu - lb * lb,
        (v01, v20): lb * (mu - lb),     (v01, v02): -lb * lb - mu * mu,
        (v01, v10): mu * mu - lb * lb,  (v01, v01): 2 * lb * (lb - mu),
    }
    deg31 = {
        (v202, x0): lb * (lb - mu), (v202, x1): -lb * lb - mu * mu,
        (v202, x2): lb * (lb - mu),
        (v010, x0): lb * (lb - mu), (v010, x1): lb * (lb - mu),
        (v010, x2): -lb * lb - mu * mu,
        (v201, x0): lb * lb + mu * mu, (v201, x1): -lb * (lb - mu),
        (v201, x2): lb * (mu - lb),
    }
    deg13 = {
        (x0, v202): lb * (lb - mu), (x0, v010): lb * (lb - mu),
        (x0, v201): -2 * lb * lb,
        (x1, v202): 2 * lb * lb,    (x1, v010): lb * (lb - mu),
        (x1, v201): lb * (mu - lb),
        (x2, v202): lb * (lb - mu), (x2, v010): 2 * lb * lb,
        (x2, v201): lb * (mu - lb),
    }
    vals.update(deg2)
    vals.update(deg31)
    vals.update(deg13)
    for w in (v202, v010, v201):
        vals[(w, w)] = p
    vals[(top, top)] = q
    return BiFunctional("pointed", vals, vars)


def reference_sigma_copointed():
    """sigma_c on the basis, symbolic in (c0, c1, c2)."""
    vars = ("c0", "c1", "c2")
    c0, c1, c2 = Poly.gens(vars)
    x0, x1, x2 = (W[(i,)] for i in range(3))
    v20, v02, v10, v01 = (W[w] for w in ((2, 0), (0, 2), (1, 0), (0, 1)))
    v202, v010, v201 = (W[w] for w in ((2, 0, 2), (0, 1, 0), (2, 0, 1)))
    top = core.TOP
    mixed = c2 * (c1 - c0) - c0 * c1
    vals = {
        (core.UNIT, core.UNIT): Poly.const(vars, 1),
        (x0, x0): c0, (x1, x1): c1, (x2, x2): c2,
        (v20, v02): c2 * c0, (v02, v20): c2 * c0,
        (v01, v02): mixed,
        (v202, x1): c2 * (c1 - c0),
        (v010, x2): c1 * (c2 - c0),
        (x0, v201): mixed,
        (x1, v202): c0 * c1,
        (x2, v010): c2 * c0,
        (v02, v01): mixed,
        (v10, v01): c0 * c1,
        (v01, v10): c0 * c1,
        (v202, v202): c1 * c0 * c2,
        (v010, v010): c1 * c0 * c2,
        (v201, v201): c1 * c0 * c2,
        (top, top): -c1 * c0 * c0 * c2,
    }
    return BiFunctional("copointed", vals, vars)


def reference_exp_pointed():
    """The e^eta table for eta = eta0(xi0+xi2) + eta3 xi3, symbolic in
    (eta0, eta3)."""
    from .hochschild import X3, X3_PRIME
    vars = ("eta0", "eta3")
    e0, e3 = Poly.gens(vars)
    vals = {(core.UNIT, core.UNIT): Poly.const(vars, 1)}
    for i in range(3):
        for j in range(3):
            vals[(W[(i,)], W[(j,)])] = e0
    for a, b in X3:
        vals[(W[a], W[b])] = e3
    for a, b in X3_PRIME:
        vals[(W[a], W[b])] = -e3
    vals[(core.TOP, core.TOP)] = -e3 * e3
    return BiFunctional("pointed", vals, vars)


def reference_exp_copointed():
    """The e^eta table for eta = eta1 xi_1^1 + eta3 xi3, symbolic in
    (eta1, eta3)."""
    from .hochschild import X3, X3_PRIME
    vars = ("eta1", "eta3")
    e1, e3 = Poly.gens(vars)
    vals = {(core.UNIT, core.UNIT): Poly.const(vars, 1),
            (W[(1,)], W[(1,)]): e1}
    for a, b in X3:
        vals[(W[a], W[b])] = e3
    for a, b in X3_PRIME:
        vals[(W[a], W[b])] = -e3
    vals[(core.TOP, core.TOP)] = -e3 * e3
    return BiFunctional("copointed", vars=vars, values=vals)
