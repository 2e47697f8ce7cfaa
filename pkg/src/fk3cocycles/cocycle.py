"""Bilinear forms on FK3, braided convolution, and the two routes to sigma.

A BiFunctional stores the values of a bilinear form on the 12x12 basis
pairs.  Convolution contracts against the coalgebra structure of the
braided tensor square, i.e.

    (f * g)(a, b) = f(a1, a2_{(-1)}.b1) g(a2_{(0)}, b2),

which is tabulated once per realization kind in fk3.pair_coproduct.

sigma_from_section evaluates gamma(a1) gamma(b1') gamma^{-1}(a2' b2)
inside the cleft object and extracts the scalar; sigma_by_decomposition
independently rebuilds the whole table from the seed values sigma(x_i, b)
through the recursive decomposition formula.
"""

from .scalars import Poly, QQ
from .words import BASIS_WORDS, WORD_INDEX
from . import fk3 as core
from .cleft import cleft_algebra
from .groups import g3


class BiFunctional:
    """Bilinear form on the basis pairs of FK3; values are Poly or exact
    rationals, zeros are never stored."""

    def __init__(self, kind, values=None, vars=()):
        self.kind = kind
        self.vars = tuple(vars)
        self.values = {}
        if values:
            for k, v in values.items():
                if v:
                    self.values[k] = v

    def __call__(self, i, j):
        return self.values.get((i, j), 0)

    def on_elements(self, a, b):
        out = 0
        for i, ca in a.items():
            for j, cb in b.items():
                v = self.values.get((i, j))
                if v is not None:
                    out = out + v * (ca * cb)
        return out

    def __eq__(self, other):
        return isinstance(other, BiFunctional) and self.values == other.values

    def __bool__(self):
        return bool(self.values)

    def _check(self, other):
        if self.kind != other.kind:
            raise ValueError("realization kind mismatch in convolution")

    def convolve(self, other):
        self._check(other)
        pc = core.pair_coproduct(self.kind)
        out = {}
        for (a, b), tensor in pc.items():
            acc = 0
            for ((x1, y1), (x2, y2)), c in tensor.items():
                v1 = self.values.get((x1, y1))
                if v1 is None:
                    continue
                v2 = other.values.get((x2, y2))
                if v2 is None:
                    continue
                acc = acc + (v1 * v2) * c
            if acc:
                out[(a, b)] = acc
        return BiFunctional(self.kind, out, self.vars or other.vars)

    def conv_inverse(self):
        """Finite Neumann series; requires value 1 at (1,1)."""
        if self(core.UNIT, core.UNIT) != 1:
            raise ValueError("not invertible by the graded Neumann series")
        nu = BiFunctional(self.kind, dict(self.values), self.vars)
        del nu.values[(core.UNIT, core.UNIT)]
        out = unit_bifunctional(self.kind, self.vars)
        power = unit_bifunctional(self.kind, self.vars)
        sign = 1
        for _ in range(4):
            power = power.convolve(nu)
            sign = -sign
            out = out._add(power, sign)
        assert not power.convolve(nu), "Neumann series did not terminate"
        return out

    def _add(self, other, sign=1):
        vals = dict(self.values)
        for k, v in other.values.items():
            s = vals.get(k, 0) + (v if sign > 0 else -v)
            if s:
                vals[k] = s
            else:
                vals.pop(k, None)
        return BiFunctional(self.kind, vals, self.vars or other.vars)

    def __add__(self, other):
        self._check(other)
        return self._add(other, 1)

    def __sub__(self, other):
        self._check(other)
        return self._add(other, -1)

    def scale(self, c):
        return BiFunctional(self.kind,
                            {k: v * c for k, v in self.values.items()},
                            self.vars)

    def eval_at(self, point):
        """Substitute exact rationals for the parameters."""
        vals = {}
        for k, v in self.values.items():
            w = v.eval(point) if isinstance(v, Poly) else v
            if w:
                vals[k] = w
        return BiFunctional(self.kind, vals, ())

    def subs(self, mapping):
        vals = {}
        for k, v in self.values.items():
            w = v.subs(mapping) if isinstance(v, Poly) else v
            if w:
                vals[k] = w
        return BiFunctional(self.kind, vals, self.vars)

    def is_normalized(self):
        for b in range(core.N_BASIS):
            want = 1 if b == core.UNIT else 0
            if self(core.UNIT, b) != want or self(b, core.UNIT) != want:
                return False
        return True

    def is_invariant(self):
        """H-invariance in the realization's sense."""
        if self.kind == "pointed":
            for g in (g3(1, 1, 0), g3(1, 0, 1)):
                for a in range(core.N_BASIS):
                    ga = core.act_group(g, {a: 1}, 0)
                    for b in range(core.N_BASIS):
                        gb = core.act_group(g, {b: 1}, 0)
                        if self.on_elements(ga, gb) != self(a, b):
                            return False
            return True
        for (a, b) in self.values:
            if not (core.S3_DEGREE[a] * core.S3_DEGREE[b]).is_identity():
                return False
        return True

    def __repr__(self):
        return f"BiFunctional({self.kind}, {len(self.values)} entries)"


def unit_bifunctional(kind, vars=()):
    """The convolution unit counit (x) counit."""
    return BiFunctional(kind, {(core.UNIT, core.UNIT): 1}, vars)


def functional_conv_inverse(kind, f):
    """Convolution inverse of a functional on FK3 (list of 12 values
    with f[1] = 1), via the same graded Neumann series."""
    if f[core.UNIT] != 1:
        raise ValueError("functional must take value 1 at the unit")
    cop = core.coproduct_table(kind)

    def conv(u, v):
        out = [0] * core.N_BASIS
        for idx in range(core.N_BASIS):
            acc = 0
            for (b1, b2), c in cop[idx].items():
                if u[b1] and v[b2]:
                    acc = acc + (u[b1] * v[b2]) * c
            out[idx] = acc
        return out

    nu = list(f)
    nu[core.UNIT] = 0
    nu = [-x for x in nu]
    unit = [0] * core.N_BASIS
    unit[core.UNIT] = 1
    out = list(unit)
    power = list(unit)
    for _ in range(4):
        power = conv(power, nu)
        out = [a + b for a, b in zip(out, power)]
    assert not any(conv(power, nu)), "functional Neumann series too long"
    return out


# ----------------------------------------------------------------------
# sigma from the section

def sigma_from_section(params):
    """The Hopf 2-cocycle of the cleft object, from
    gamma(a1) gamma(b1) gamma^{-1}(a2 b2); symbolic in the parameters."""
    E = cleft_algebra(params)
    B = core.fk3_algebra()
    gamma = E.gamma()
    ginv = E.gamma_inv()
    pc = core.pair_coproduct(params.kind)
    out = {}
    for (a, b), tensor in pc.items():
        acc = {}
        for ((x1, y1), (x2, y2)), c in tensor.items():
            prod_b = B.basis_product(x2, y2)
            tail = {}
            for w, cw in prod_b.items():
                for e, ce in ginv[w].items():
                    core.add_into(tail, e, ce * cw)
            head = E.mul(gamma[x1], gamma[y1])
            for e, ce in E.mul(head, tail).items():
                core.add_into(acc, e, ce * c)
        scalar = acc.pop(core.UNIT, 0)
        if acc:
            raise AssertionError(
                f"sigma({core.WORD_NAMES[a]},{core.WORD_NAMES[b]}) "
                f"is not scalar: {acc}")
        if scalar:
            out[(a, b)] = scalar
    return BiFunctional(params.kind, out, params.vars)


# ----------------------------------------------------------------------
# sigma by the recursive decomposition formula

def seed_from(bi):
    """Extract the seed set {sigma(x_i, b)}, zeros included, from a
    full table."""
    return {(i, b): bi(i, b)
            for i in core.GENERATORS for b in range(core.N_BASIS)}


def sigma_by_decomposition(seed, kind, vars=()):
    """Rebuild the full table from the seed values on (x_i, b) pairs by
    the degree-lowering decomposition of a Hopf cocycle.

    The recursion peels the first letter x off a = x a' and contracts
    reduced coproducts against the braiding; every value it consumes has
    first argument of lower degree, so it bottoms out in the seed.
    """
    B = core.fk3_algebra()
    rcop = core.reduced_coproduct_table(kind)
    braid = core.braid_table(kind)
    memo = {}

    def sig(a, b):
        if a == core.UNIT:
            return 1 if b == core.UNIT else 0
        if b == core.UNIT:
            return 0  # a is positive degree here
        if core.DEGREES[a] == 1:
            try:
                return seed[(a, b)]
            except KeyError:
                raise ValueError(
                    f"unseeded value sigma({core.WORD_NAMES[a]}, "
                    f"{core.WORD_NAMES[b]})") from None
        got = memo.get((a, b))
        if got is not None:
            return got
        word = BASIS_WORDS[a]
        x = core.GENERATORS[word[0]]
        ap = WORD_INDEX[word[1:]]

        def sig_row(i, elem):
            acc = 0
            for w, cw in elem.items():
                v = sig(i, w)
                if v:
                    acc = acc + v * cw
            return acc

        total = sig_row(x, B.basis_product(ap, b))
        for (b1, b2), cb in rcop[b].items():
            if b1 == core.UNIT and b2 == core.UNIT:
                continue
            v = sig(ap, b1)
            if v:
                total = total + (v * sig(x, b2)) * cb
        for (a1, a2), ca in rcop[ap].items():
            if a1 == core.UNIT and a2 == core.UNIT:
                continue
            # sigma(a1, a2_{(-1)}.b) sigma(x, a2_{(0)})
            for (bb, aa), cx in braid[(a2, b)].items():
                v = sig(a1, bb)
                if v:
                    total = total + (v * sig(x, aa)) * (ca * cx)
            # - sigma(x, a1) sigma(a2, b)
            v = sig(x, a1)
            if v:
                total = total - (v * sig(a2, b)) * ca
            # mixed term with both reduced coproducts
            for (b1, b2), cb in rcop[b].items():
                if b1 == core.UNIT and b2 == core.UNIT:
                    continue
                for (bb, aa), cx in braid[(a2, b1)].items():
                    v = sig(a1, bb)
                    if v:
                        w = sig_row(x, B.basis_product(aa, b2))
                        if w:
                            total = total + (v * w) * (ca * cx * cb)
        memo[(a, b)] = total
        return total

    out = {}
    out[(core.UNIT, core.UNIT)] = 1
    for a in range(1, core.N_BASIS):
        for b in range(1, core.N_BASIS):
            v = sig(a, b)
            if v:
                out[(a, b)] = v
    return BiFunctional(kind, out, vars)
