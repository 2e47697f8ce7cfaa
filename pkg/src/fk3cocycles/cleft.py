"""The cleft objects over FK3 and their sections.

The pointed family E_{mu,lambda} is generated by y0, y1, y2 with
y_i^2 = mu and both cyclic sums equal to lambda; the copointed family
E_c has y_i^2 = c_i and vanishing cyclic sums.  Both inherit the
12-word basis, with structure constants symbolic in the parameters, so
one derivation serves every parameter value.

The section gamma: FK3 -> E is the comodule isomorphism normalized by
gamma(1) = 1; its convolution inverse is computed by the graded Neumann
series and is cross-checked against the closed-form values in the tests.
"""

from dataclasses import dataclass

from .scalars import Poly, QQ
from .words import BASIS_WORDS, WORD_INDEX, RewriteSystem
from .groups import act_on_generator, S3_ELEMENTS
from . import fk3 as core

POINTED_VARS = ("lambda", "mu")
COPOINTED_VARS = ("c0", "c1", "c2")


@dataclass(frozen=True)
class CleftParams:
    """Deformation parameters: kind "pointed" carries (lambda, mu), kind
    "copointed" carries (c0, c1, c2).  Values are Poly (symbolic) or
    exact rationals (numeric); the two styles never mix."""
    kind: str
    values: tuple

    @property
    def vars(self):
        if any(isinstance(v, Poly) for v in self.values):
            return self.values[0].vars
        return ()

    def zero_poly(self):
        if self.vars:
            return Poly.zero(self.vars)
        return QQ(0)


def pointed_params(lam=None, mu=None):
    """Symbolic by default; pass exact rationals for a numeric family."""
    if lam is None and mu is None:
        l, m = Poly.gens(POINTED_VARS)
        return CleftParams("pointed", (l, m))
    return CleftParams("pointed", (QQ(lam), QQ(mu)))


def copointed_params(c0=None, c1=None, c2=None):
    if c0 is None and c1 is None and c2 is None:
        return CleftParams("copointed", Poly.gens(COPOINTED_VARS))
    return CleftParams("copointed", (QQ(c0), QQ(c1), QQ(c2)))


class CleftAlgebra:
    """A cleft object on the shared 12-word basis (letters y)."""

    def __init__(self, params):
        self.params = params
        self.kind = params.kind
        if params.kind == "pointed":
            lam, mu = params.values
            rules = {
                (0, 0): {(): mu}, (1, 1): {(): mu}, (2, 2): {(): mu},
                (1, 2): {(): lam, (0, 1): -1, (2, 0): -1},
                (2, 1): {(): lam, (1, 0): -1, (0, 2): -1},
            }
        else:
            c0, c1, c2 = params.values
            rules = {
                (0, 0): {(): c0}, (1, 1): {(): c1}, (2, 2): {(): c2},
                (1, 2): {(0, 1): -1, (2, 0): -1},
                (2, 1): {(1, 0): -1, (0, 2): -1},
            }
        self.rs = RewriteSystem(rules)
        self._table = {}
        self._gamma = None
        self._gamma_inv = None
        self._eb_braid = {}

    # -- algebra structure ------------------------------------------------

    def word(self, word):
        return {WORD_INDEX[w]: c for w, c in self.rs.normal_form(word).items()}

    def basis_product(self, i, j):
        t = self._table.get((i, j))
        if t is None:
            t = self.word(BASIS_WORDS[i] + BASIS_WORDS[j])
            self._table[(i, j)] = t
        return t

    def mul(self, a, b):
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                c = ca * cb
                if not c:
                    continue
                for k, ck in self.basis_product(i, j).items():
                    core.add_into(out, k, ck * c)
        return out

    @property
    def one(self):
        return {core.UNIT: 1}

    def gen(self, i):
        return {core.GENERATORS[i]: 1}

    # -- H-module structure (mirrors the FK3 action letter-wise) ----------

    def act_group(self, g, a, k=0):
        if self.kind != "pointed":
            raise ValueError("group action lives on the pointed family")
        out = {}
        for idx, c in a.items():
            sign = 1
            letters = []
            for i in BASIS_WORDS[idx]:
                s, j = act_on_generator(g, i, k)
                sign *= s
                letters.append(j)
            for jdx, cj in self.word(tuple(letters)).items():
                core.add_into(out, jdx, cj * c * sign)
        return out

    def act_delta(self, omega, a):
        if self.kind != "copointed":
            raise ValueError("delta action lives on the copointed family")
        return {i: c for i, c in a.items() if core.S3_DEGREE[i] == omega}

    # -- section -----------------------------------------------------------

    def gamma(self):
        """The section gamma on the 12 basis words, as E-elements."""
        if self._gamma is not None:
            return self._gamma
        W = WORD_INDEX
        e = {}

        def elt(*pairs):
            d = {}
            for idx, c in pairs:
                core.add_into(d, idx, c)
            return d

        if self.kind == "pointed":
            lam, mu = self.params.values
            lb = lam / 3
            g = [None] * core.N_BASIS
            g[core.UNIT] = self.one
            for i in range(3):
                g[W[(i,)]] = self.gen(i)
            for w in ((2, 0), (0, 2), (1, 0), (0, 1)):
                g[W[w]] = elt((W[w], 1), (core.UNIT, -lb))
            g[W[(0, 1, 0)]] = elt((W[(0, 1, 0)], 1), (W[(1,)], lb),
                                  (W[(0,)], -2 * lb))
            g[W[(2, 0, 2)]] = elt((W[(2, 0, 2)], 1), (W[(0,)], lb),
                                  (W[(2,)], -2 * lb))
            g[W[(2, 0, 1)]] = elt((W[(2, 0, 1)], 1), (W[(0,)], mu),
                                  (W[(2,)], -lb), (W[(1,)], -lb))
            g[core.TOP] = elt((core.TOP, 1), (W[(2, 0)], -2 * lb),
                              (W[(1, 0)], -2 * lb), (W[(0, 1)], -lb),
                              (W[(0, 2)], -lb), (core.UNIT, 3 * lb * lb))
        else:
            c0, c1, c2 = self.params.values
            g = [None] * core.N_BASIS
            g[core.UNIT] = self.one
            for i in range(3):
                g[W[(i,)]] = self.gen(i)
            for w in ((2, 0), (0, 2), (1, 0), (0, 1)):
                g[W[w]] = elt((W[w], 1))
            g[W[(0, 1, 0)]] = elt((W[(0, 1, 0)], 1), (W[(2,)], c0))
            g[W[(2, 0, 2)]] = elt((W[(2, 0, 2)], 1), (W[(1,)], c2))
            g[W[(2, 0, 1)]] = elt((W[(2, 0, 1)], 1))
            g[core.TOP] = elt((core.TOP, 1))
        self._gamma = g
        return g

    def gamma_inv(self):
        """Convolution inverse of the section: the finite Neumann series
        sum_k (unit o counit - gamma)^{*k}, which stops at k = 4 because
        the difference vanishes in degree 0."""
        if self._gamma_inv is not None:
            return self._gamma_inv
        g = self.gamma()
        nu = [core.sub({core.UNIT: 1} if i == core.UNIT else {}, g[i])
              for i in range(core.N_BASIS)]
        total = [({core.UNIT: 1} if i == core.UNIT else {})
                 for i in range(core.N_BASIS)]
        power = total
        for _ in range(4):
            power = self._convolve(power, nu)
            total = [_addd(t, p) for t, p in zip(total, power)]
        assert not any(self._convolve(power, nu)[i]
                       for i in range(core.N_BASIS)), "Neumann series too long"
        self._gamma_inv = total
        return total

    def _convolve(self, f, h):
        """(f * h)(b) = sum f(b1) h(b2) in E, over the braided coproduct."""
        cop = core.coproduct_table(self.kind)
        out = []
        for idx in range(core.N_BASIS):
            acc = {}
            for (b1, b2), c in cop[idx].items():
                t = self.mul(f[b1], h[b2])
                for k, v in t.items():
                    core.add_into(acc, k, v * c)
            out.append(acc)
        return out

    def convolve_sections(self, f, h):
        return self._convolve(f, h)

    # -- comodule structure -------------------------------------------------

    def _eb_braiding(self, b_idx, e_idx):
        """Braiding of a B-leg past an E-leg: c(b (x) e) as a dict
        (e', b') -> coeff."""
        key = (b_idx, e_idx)
        t = self._eb_braid.get(key)
        if t is not None:
            return t
        out = {}
        if self.kind == "pointed":
            g = core.group_degree(BASIS_WORDS[b_idx], 1, 0)
            for e2, c in self.act_group(g, {e_idx: 1}, 0).items():
                core.add_into(out, (e2, b_idx), c)
        else:
            omega = core.S3_DEGREE[e_idx]
            sign = omega.sign() ** len(BASIS_WORDS[b_idx])
            for b2, c in core.conjugate_word(BASIS_WORDS[b_idx], omega).items():
                core.add_into(out, (e_idx, b2), c * sign)
        self._eb_braid[key] = out
        return out

    def eb_mul(self, t1, t2):
        """Product on E (x) FK3 with the realization's middle braiding."""
        B = core.fk3_algebra()
        out = {}
        for (e1, b1), c1 in t1.items():
            for (e2, b2), c2 in t2.items():
                c12 = c1 * c2
                for (e2p, b1p), cb in self._eb_braiding(b1, e2).items():
                    c3 = c12 * cb
                    for ei, ec in self.basis_product(e1, e2p).items():
                        for bi, bc in B.basis_product(b1p, b2).items():
                            core.add_into(out, (ei, bi), c3 * ec * bc)
        return out

    def rho(self, a):
        """The comodule-algebra map rho(y_i) = y_i (x) 1 + 1 (x) x_i,
        extended as an algebra map into E (x) FK3."""
        out = {}
        for idx, c in a.items():
            t = {(core.UNIT, core.UNIT): 1}
            for i in BASIS_WORDS[idx]:
                gi = core.GENERATORS[i]
                step = {(gi, core.UNIT): 1, (core.UNIT, gi): 1}
                t = self.eb_mul(t, step)
            for key, v in t.items():
                core.add_into(out, key, v * c)
        return out


def _addd(d1, d2):
    out = dict(d1)
    for k, c in d2.items():
        core.add_into(out, k, c)
    return out


def cleft_algebra(params):
    return CleftAlgebra(params)


# ----------------------------------------------------------------------
# section verification

class SectionReport:
    def __init__(self):
        self.checks = []

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.checks)

    def lines(self):
        return [f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{d}]" if d else "")
                for name, ok, d in self.checks]


def verify_section(params, gamma_override=None):
    """Colinearity, convolution invertibility and H-linearity of the
    section, symbolically in the parameters."""
    E = cleft_algebra(params)
    gamma = list(E.gamma()) if gamma_override is None else list(gamma_override)
    rep = SectionReport()

    # (i) colinearity rho o gamma = (gamma (x) id) o Delta on every word
    cop = core.coproduct_table(params.kind)
    for idx in range(core.N_BASIS):
        lhs = E.rho(gamma[idx])
        rhs = {}
        for (b1, b2), c in cop[idx].items():
            for e, ce in gamma[b1].items():
                core.add_into(rhs, (e, b2), ce * c)
        diff = core.sub(lhs, rhs)
        rep.add(f"colinearity at {core.WORD_NAMES[idx]}", not diff,
                "" if not diff else f"residual {_tensor_str(diff)}")

    # (ii) gamma * gamma^{-1} = gamma^{-1} * gamma = unit o counit
    if gamma_override is None:
        ginv = E.gamma_inv()
    else:
        ginv = E.gamma_inv()  # inverse of the true section; mutants fail (i)
    for name, left, right in (("gamma*gamma^-1", gamma, ginv),
                              ("gamma^-1*gamma", ginv, gamma)):
        conv = E.convolve_sections(left, right)
        for idx in range(core.N_BASIS):
            expect = {core.UNIT: 1} if idx == core.UNIT else {}
            diff = core.sub(conv[idx], expect)
            if diff:
                rep.add(f"{name} at {core.WORD_NAMES[idx]}", False,
                        f"residual {diff}")
                break
        else:
            rep.add(f"{name} = unit o counit", True)

    # (iii) H-linearity
    if params.kind == "pointed":
        from .groups import g3
        for g, gname in ((g3(1, 1, 0), "s"), (g3(1, 0, 1), "t")):
            ok = True
            for idx in range(core.N_BASIS):
                moved = core.act_group(g, {idx: 1}, 0)
                lhs = {}
                for j, c in moved.items():
                    for e, ce in gamma[j].items():
                        core.add_into(lhs, e, ce * c)
                rhs = E.act_group(g, gamma[idx], 0)
                if core.sub(lhs, rhs):
                    ok = False
                    break
            rep.add(f"H-linearity under {gname}", ok)
    else:
        ok = True
        for idx in range(core.N_BASIS):
            # gamma must preserve the S3-degree of each basis word
            if any(core.S3_DEGREE[e] != core.S3_DEGREE[idx]
                   for e in gamma[idx]):
                ok = False
                break
        rep.add("H-linearity (S3-degree homogeneity)", ok)
    return rep


def _tensor_str(d):
    return "{" + ", ".join(
        f"{core.WORD_NAMES[e]}(x){core.WORD_NAMES[b]}: {c}"
        for (e, b), c in d.items()) + "}"
