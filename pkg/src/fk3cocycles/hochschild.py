"""Hochschild 2-cocycles with trivial coefficients on FK3.

Trivial coefficients means the bimodule is the ground field through the
counit, so the 2-cocycle condition for a bilinear form eta reads

    eps(a) eta(b,c) - eta(ab,c) + eta(a,bc) - eta(a,b) eps(c) = 0.

The module provides the named generator cocycles, exact decision
procedures (cocycle / invariance / coboundary, and the dimension of the
invariant space), convolution exponentials, the two commutation
conditions that make an exponential a Hopf cocycle, and the purity
classifier for the sigma tables.
"""

from math import factorial

from .scalars import Poly, QQ
from .words import BASIS_WORDS, WORD_INDEX
from . import fk3 as core
from .groups import g3
from . import linalg
from .cocycle import BiFunctional, unit_bifunctional

W = WORD_INDEX

#: signed support of the degree-(2,2)/(1,3)/(3,1) generator: +1 on X3,
#: -1 on X3'
X3 = [((1,), (2, 0, 2)), ((2,), (0, 1, 0)), ((2, 0), (1, 0)),
      ((1, 0), (2, 0)), ((2, 0, 1), (0,))]
X3_PRIME = [((0,), (2, 0, 1)), ((0, 2), (0, 1)), ((0, 1), (0, 2)),
            ((0, 1, 0), (2,)), ((2, 0, 2), (1,))]


def generator(name, kind, vars=()):
    """The named basis cocycles: "xi0", "xi2", "xi3", or "xi{i}{j}" for
    the rank-one form supported at (x_i, x_j)."""
    vals = {}
    if name == "xi0":
        for i in range(3):
            vals[(W[(i,)], W[(i,)])] = 1
    elif name == "xi2":
        for i in range(3):
            for j in range(3):
                if i != j:
                    vals[(W[(i,)], W[(j,)])] = 1
    elif name == "xi3":
        for a, b in X3:
            vals[(W[a], W[b])] = 1
        for a, b in X3_PRIME:
            vals[(W[a], W[b])] = -1
    elif name.startswith("xi") and len(name) == 4:
        i, j = int(name[2]), int(name[3])
        vals[(W[(i,)], W[(j,)])] = 1
    else:
        raise ValueError(f"unknown generator {name!r}")
    return BiFunctional(kind, vals, vars)


def combine(kind, vars, *scaled):
    """Linear combination sum c * generator."""
    out = BiFunctional(kind, {}, vars)
    for c, name in scaled:
        out = out + generator(name, kind, vars).scale(c)
    return out


# ----------------------------------------------------------------------
# decision procedures

def is_cocycle(eta):
    """Exhaustive check of the trivial-coefficient 2-cocycle law."""
    B = core.fk3_algebra()
    n = core.N_BASIS
    for a in range(n):
        ea = 1 if a == core.UNIT else 0
        for b in range(n):
            v_ab = eta(a, b)
            for c in range(n):
                ec = 1 if c == core.UNIT else 0
                lhs = 0
                if ea:
                    lhs = lhs + eta(b, c)
                lhs = lhs - eta.on_elements(B.basis_product(a, b), {c: 1})
                lhs = lhs + eta.on_elements({a: 1}, B.basis_product(b, c))
                if ec:
                    lhs = lhs - v_ab
                if lhs:
                    return False
    return True


def is_invariant(eta, kind=None):
    kind = kind or eta.kind
    probe = BiFunctional(kind, eta.values, eta.vars)
    return probe.is_invariant()


def _cocycle_rows():
    """Integer constraint rows over the 144 pair values."""
    B = core.fk3_algebra()
    n = core.N_BASIS
    idx = lambda i, j: i * n + j
    rows = set()
    for a in range(n):
        for b in range(n):
            ab = B.basis_product(a, b)
            for c in range(n):
                row = [0] * (n * n)
                if a == core.UNIT:
                    row[idx(b, c)] += 1
                for w, cw in ab.items():
                    row[idx(w, c)] -= cw
                for w, cw in B.basis_product(b, c).items():
                    row[idx(a, w)] += cw
                if c == core.UNIT:
                    row[idx(a, b)] -= 1
                if any(row):
                    rows.add(tuple(row))
    return [list(r) for r in rows]


def _invariance_rows(kind):
    n = core.N_BASIS
    idx = lambda i, j: i * n + j
    rows = set()
    if kind == "pointed":
        for g in (g3(1, 1, 0), g3(1, 0, 1)):
            acts = [core.act_group(g, {i: 1}, 0) for i in range(n)]
            for a in range(n):
                for b in range(n):
                    row = [0] * (n * n)
                    for i, ci in acts[a].items():
                        for j, cj in acts[b].items():
                            row[idx(i, j)] += ci * cj
                    row[idx(a, b)] -= 1
                    if any(row):
                        rows.add(tuple(row))
    else:
        for a in range(n):
            for b in range(n):
                if not (core.S3_DEGREE[a] * core.S3_DEGREE[b]).is_identity():
                    row = [0] * (n * n)
                    row[idx(a, b)] = 1
                    rows.add(tuple(row))
    return [list(r) for r in rows]


def invariant_space(kind):
    """(dimension, basis) of the H-invariant Hochschild 2-cocycles, by
    exact nullspace computation over the 144-dimensional pair space."""
    rows = _cocycle_rows() + _invariance_rows(kind)
    basis = linalg.nullspace(rows, core.N_BASIS ** 2)
    n = core.N_BASIS
    out = []
    for v in basis:
        vals = {}
        for i in range(n):
            for j in range(n):
                if v[i * n + j]:
                    vals[(i, j)] = v[i * n + j]
        out.append(BiFunctional(kind, vals, ()))
    return len(basis), out


def in_span(eta, basis):
    """Is eta a rational combination of the given bilinear forms?"""
    n = core.N_BASIS
    keys = [(i, j) for i in range(n) for j in range(n)]
    rows = [[b(i, j) for b in basis] for (i, j) in keys]
    rhs = [eta(i, j) for (i, j) in keys]
    return linalg.solve(rows, rhs).kind != "inconsistent"


# ----------------------------------------------------------------------
# coboundaries

def coboundary_delta(f, kind, sign=+1, vars=()):
    """(delta f)(a,b) = eps(a) f(b) - f(ab) + f(a) eps(b), with the
    opposite global sign selectable.  f is a list of 12 values."""
    B = core.fk3_algebra()
    n = core.N_BASIS
    vals = {}
    for a in range(n):
        for b in range(n):
            v = 0
            if a == core.UNIT:
                v = v + f[b]
            for w, cw in B.basis_product(a, b).items():
                v = v - f[w] * cw
            if b == core.UNIT:
                v = v + f[a]
            if v:
                vals[(a, b)] = sign * v
    return BiFunctional(kind, vals, vars)


def is_coboundary(eta, sign=+1):
    """Exact linear solve for a witness f with delta f = eta; returns
    (verdict, witness-or-None, LinearSolution)."""
    B = core.fk3_algebra()
    n = core.N_BASIS
    rows = []
    rhs = []
    for a in range(n):
        for b in range(n):
            row = [0] * n
            if a == core.UNIT:
                row[b] += 1
            for w, cw in B.basis_product(a, b).items():
                row[w] -= cw
            if b == core.UNIT:
                row[a] += 1
            if sign < 0:
                row = [-x for x in row]
            rows.append(row)
            rhs.append(eta(a, b))
    sol = linalg.solve(rows, rhs)
    if sol.kind == "inconsistent":
        return False, None, sol
    return True, list(sol.particular), sol


def paper_witness_f2():
    """f supported on the degree-2 basis words with value -1."""
    f = [0] * core.N_BASIS
    for w in ((2, 0), (0, 2), (1, 0), (0, 1)):
        f[W[w]] = -1
    return f


def paper_witness_f3():
    """f supported on the degree-4 word with value -1."""
    f = [0] * core.N_BASIS
    f[core.TOP] = -1
    return f


# ----------------------------------------------------------------------
# exponentials

def exponential(eta):
    """e^eta = sum eta^{*k} / k!; the sum stops at k = 4 and eta^{*5} is
    asserted to vanish by the degree count."""
    out = unit_bifunctional(eta.kind, eta.vars) + eta
    power = eta
    for k in (2, 3, 4):
        power = power.convolve(eta)
        out = out + power.scale(QQ(1, factorial(k)))
    assert not power.convolve(eta), "eta^{*5} != 0"
    return out


# ----------------------------------------------------------------------
# the commutation conditions

def triple_coproduct(kind, a, b, c):
    """Coproduct of a (x) b (x) c in the braided tensor cube, as a dict
    ((u1,v1,w1),(u2,v2,w2)) -> int."""
    pc = core.pair_coproduct(kind)[(a, b)]
    cop = core.coproduct_table(kind)[c]
    braid = core.braid_table(kind)
    out = {}
    for ((x1, y1), (x2, y2)), cpair in pc.items():
        for (z1, z2), cz in cop.items():
            base = cpair * cz
            for (z1p, y2p), c1 in braid[(y2, z1)].items():
                for (z1pp, x2p), c2 in braid[(x2, z1p)].items():
                    core.add_into(out, ((x1, y1, z1pp), (x2p, y2p, z2)),
                                  base * c1 * c2)
    return out


def convolve_triple(kind, F, G, a, b, c):
    acc = 0
    for (t1, t2), coeff in triple_coproduct(kind, a, b, c).items():
        v1 = F(*t1)
        if not v1:
            continue
        v2 = G(*t2)
        if v2:
            acc = acc + (v1 * v2) * coeff
    return acc


def commutators(eta):
    """Both convolution commutators [eta(id (x) m), eps (x) eta] and
    [eta(m (x) id), eta (x) eps], evaluated on every basis triple.
    Returns a dict (which, a, b, c) -> nonzero value."""
    B = core.fk3_algebra()
    kind = eta.kind

    def F1(u, v, w):  # eta o (id (x) m)
        return eta.on_elements({u: 1}, B.basis_product(v, w))

    def G1(u, v, w):  # eps (x) eta
        return eta(v, w) if u == core.UNIT else 0

    def F2(u, v, w):  # eta o (m (x) id)
        return eta.on_elements(B.basis_product(u, v), {w: 1})

    def G2(u, v, w):  # eta (x) eps
        return eta(u, v) if w == core.UNIT else 0

    out = {}
    n = core.N_BASIS
    for a in range(n):
        for b in range(n):
            for c in range(n):
                v = convolve_triple(kind, F1, G1, a, b, c) \
                    - convolve_triple(kind, G1, F1, a, b, c)
                if v:
                    out[("first", a, b, c)] = v
                v = convolve_triple(kind, F2, G2, a, b, c) \
                    - convolve_triple(kind, G2, F2, a, b, c)
                if v:
                    out[("second", a, b, c)] = v
    return out


def check_commutations(eta):
    return not commutators(eta)


# ----------------------------------------------------------------------
# which exponentials are Hopf cocycles

def in_cbar(kind, coeffs):
    """Membership in the set where the exponential is a Hopf cocycle:
    pointed coeffs (eta0, eta2, eta3) need eta0 = eta2; copointed coeffs
    (eta0, eta1, eta2, eta3) need eta_i eta_j = 0 for i != j < 3."""
    if kind == "pointed":
        eta0, eta2, _ = coeffs
        return not (eta0 - eta2)
    eta = coeffs[:3]
    return all(not (eta[i] * eta[j]) for i in range(3) for j in range(i + 1, 3))


def exponential_is_hopf(eta, realization, sample_points=(), full=True):
    """Decide by actual verification on the bosonization: numeric-full
    at the sampled parameter dictionaries (plus the form itself if it is
    already numeric)."""
    from .smash import Bosonization, verify_hopf_cocycle
    bos = Bosonization(realization)
    probes = list(sample_points) if eta.vars else [None]
    for point in probes:
        ee = exponential(eta if point is None else
                         BiFunctional(eta.kind,
                                      {k: (v.eval(point) if isinstance(v, Poly) else v)
                                       for k, v in eta.values.items()}, ()))
        vals = bos.extend_cocycle(ee)
        rep = verify_hopf_cocycle(bos, vals) if full else \
            verify_hopf_cocycle(bos, vals, max_degree=6)
        if not rep.ok:
            return False, rep
    return True, None


# ----------------------------------------------------------------------
# purity classification

class PurityVerdict:
    """Exponential (with certified witnesses), Pure (with the violated
    constraint), or Trivial."""

    def __init__(self, tag, eta=None, alpha=None, obstruction=""):
        self.tag = tag
        self.eta = eta
        self.alpha = alpha
        self.obstruction = obstruction

    def __repr__(self):
        if self.tag == "Exponential":
            return f"PurityVerdict(Exponential, eta={self.eta.values})"
        if self.tag == "Pure":
            return f"PurityVerdict(Pure: {self.obstruction})"
        return "PurityVerdict(Trivial)"


def classify_purity(params, sigma=None):
    """Classify the cocycle of the cleft object with the given numeric
    parameters, following the forced values degree by degree.

    Every Exponential verdict is self-certifying: the returned eta
    satisfies e^eta = sigma exactly (the cohomology witness alpha is the
    counit, acting trivially).
    """
    from .cocycle import sigma_from_section
    if params.vars:
        raise ValueError("classification needs numeric parameters")
    if sigma is None:
        sigma = sigma_from_section(params)
    kind = params.kind
    if not (sigma - unit_bifunctional(kind)):
        return PurityVerdict("Trivial")
    if kind == "pointed":
        lam, mu = params.values
        lb = lam / 3
        # forced: eta0 = sigma(x_i,x_i) = mu and eta2 = sigma(x_i,x_j) = lb
        if mu != lb:
            return PurityVerdict(
                "Pure", obstruction=(
                    f"forced eta0 = mu = {mu} differs from forced "
                    f"eta2 = lambda/3 = {lb}"))
        eta = combine(kind, (), (mu, "xi0"), (lb, "xi2"),
                      (2 * lb * lb, "xi3"))
    else:
        cs = params.values
        nonzero = [i for i, c in enumerate(cs) if c]
        if len(nonzero) > 1:
            i, j = nonzero[0], nonzero[1]
            return PurityVerdict(
                "Pure", obstruction=(
                    f"forced eta_i = c_i need eta_i eta_j = 0, but "
                    f"c{i}*c{j} = {cs[i] * cs[j]} != 0"))
        i = nonzero[0]
        eta = generator(f"xi{i}{i}", kind).scale(cs[i])
    expo = exponential(eta)
    if expo != sigma:
        raise AssertionError(
            "certification failed: e^eta differs from sigma at "
            f"{(expo - sigma).values}")
    alpha = [0] * core.N_BASIS
    alpha[core.UNIT] = 1  # the counit: acts trivially on sigma
    return PurityVerdict("Exponential", eta=eta, alpha=alpha)
