"""The 12-dimensional Fomin-Kirillov algebra FK3 and its two realizations.

FK3 is the quadratic algebra on x0, x1, x2 with x_i^2 = 0 and the two
cyclic-sum relations; it carries the basis fixed in words.BASIS_WORDS,
with degree distribution (1,3,4,3,1).  Elements are sparse dicts mapping
basis indices to coefficients (integers, rationals, or Poly values).

The same braided bialgebra structure is realized in two ways: "pointed"
over the group algebra of C3 x| C_{2l} (principal realization, braiding
c(x_i (x) x_j) = -x_{2i-j} (x) x_i) and "copointed" over the function
algebra on S3 (dual braiding).  The braiding, the coproduct and the
braided tensor-square coalgebra used by every convolution are tabulated
here once per realization kind.
"""

from dataclasses import dataclass
from functools import lru_cache

from .words import BASIS_WORDS, WORD_INDEX, RewriteSystem
from .groups import (GroupElement, g3, rack, act_on_generator, Perm3,
                     TRANSPOSITIONS, transposition_index, S3_ELEMENTS)

N_BASIS = len(BASIS_WORDS)
DEGREES = tuple(len(w) for w in BASIS_WORDS)
WORD_NAMES = tuple("*".join(f"x{i}" for i in w) if w else "1"
                   for w in BASIS_WORDS)
NAME_INDEX = {n: i for i, n in enumerate(WORD_NAMES)}
UNIT = 0
TOP = WORD_INDEX[(2, 0, 1, 0)]
GENERATORS = tuple(WORD_INDEX[(i,)] for i in range(3))


def s3_degree(word):
    """Product of the transpositions of the letters, in word order."""
    p = Perm3((1, 2, 3))
    for i in word:
        p = p * TRANSPOSITIONS[i]
    return p


S3_DEGREE = tuple(s3_degree(w) for w in BASIS_WORDS)


def group_degree(word, ell=1, k=0):
    """Product over the letters of g_i = s^i t^{2k+1} in C3 x| C_{2l}."""
    g = g3(ell)
    for i in word:
        g = g * GroupElement(i, 2 * k + 1, ell)
    return g


@dataclass(frozen=True)
class Realization:
    """Choice of Yetter-Drinfeld realization: pointed (over the group
    algebra of C3 x| C_{2l}, principal realization with parameters l, k)
    or copointed (over the function algebra on S3)."""
    kind: str
    ell: int = 1
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("pointed", "copointed"):
            raise ValueError(f"unknown realization kind {self.kind!r}")
        if self.kind == "pointed" and not 0 <= self.k < self.ell:
            raise ValueError("need 0 <= k < ell")


POINTED = Realization("pointed", 1, 0)
COPOINTED = Realization("copointed")


# ----------------------------------------------------------------------
# sparse element helpers (dict basis-index -> coefficient)

def add_into(acc, key, c):
    s = acc.get(key, 0) + c
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def scaled(d, c):
    if not c:
        return {}
    return {k: v * c for k, v in d.items()}


def sub(d1, d2):
    out = dict(d1)
    for k, c in d2.items():
        add_into(out, k, -c)
    return out


class FK3Algebra:
    """Multiplication of FK3 on the fixed basis, derived once by
    rewriting and certified by the test suite."""

    def __init__(self):
        self.rs = RewriteSystem({
            (0, 0): {}, (1, 1): {}, (2, 2): {},
            (1, 2): {(0, 1): -1, (2, 0): -1},
            (2, 1): {(1, 0): -1, (0, 2): -1},
        })
        self._table = {}

    def word(self, word):
        """Normal form of an arbitrary word, as an element."""
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
                    add_into(out, k, ck * c)
        return out

    @property
    def one(self):
        return {UNIT: 1}

    def gen(self, i):
        return {GENERATORS[i]: 1}


@lru_cache(maxsize=None)
def fk3_algebra():
    return FK3Algebra()


def counit(a):
    """Coefficient of the basis word 1."""
    return a.get(UNIT, 0)


# ----------------------------------------------------------------------
# Yetter-Drinfeld actions

def act_group_word(g, word, k=0):
    """Action of a group element on a basis word, extended
    multiplicatively; returns an FK3 element."""
    sign = 1
    letters = []
    for i in word:
        s, j = act_on_generator(g, i, k)
        sign *= s
        letters.append(j)
    return scaled(fk3_algebra().word(tuple(letters)), sign)


def act_group(g, a, k=0):
    """Pointed YD action of g on an element."""
    out = {}
    for i, c in a.items():
        for j, cj in act_group_word(g, BASIS_WORDS[i], k).items():
            add_into(out, j, cj * c)
    return out


def act_delta(omega, a):
    """Copointed action of the idempotent delta_omega: projection onto
    the S3-degree omega."""
    return {i: c for i, c in a.items() if S3_DEGREE[i] == omega}


def conjugate_word(word, omega):
    """Letters i -> omega^{-1} tau_i omega, reduced in FK3."""
    oinv = omega.inv()
    letters = tuple(transposition_index(oinv * TRANSPOSITIONS[i] * omega)
                    for i in word)
    return fk3_algebra().word(letters)


# ----------------------------------------------------------------------
# braiding  c(u (x) v) = u_{(-1)}.v  (x)  u_{(0)}

@lru_cache(maxsize=None)
def braid_table(kind):
    """dict (i,j) -> dict (p,q) -> int giving c(e_i (x) e_j)."""
    table = {}
    for i, u in enumerate(BASIS_WORDS):
        for j in range(N_BASIS):
            out = {}
            if kind == "pointed":
                g = group_degree(u, 1, 0)
                left = act_group(g, {j: 1}, 0)
                for p, c in left.items():
                    add_into(out, (p, i), c)
            else:
                omega = S3_DEGREE[j]
                sign = omega.sign() ** len(u)
                conj = conjugate_word(u, omega)
                for q, c in conj.items():
                    add_into(out, (j, q), c * sign)
            table[(i, j)] = out
    return table


# ----------------------------------------------------------------------
# coproduct, computed from primitivity of the generators by extending
# multiplicatively into the braided tensor square

def pair_mul(kind, t1, t2):
    """Product in the braided tensor-square algebra B (x) B."""
    alg = fk3_algebra()
    braid = braid_table(kind)
    out = {}
    for (a, b), c1 in t1.items():
        for (c, d), c2 in t2.items():
            c12 = c1 * c2
            for (cc, bb), cb in braid[(b, c)].items():
                coeff = c12 * cb
                for p, cp in alg.basis_product(a, cc).items():
                    for q, cq in alg.basis_product(bb, d).items():
                        add_into(out, (p, q), coeff * cp * cq)
    return out


@lru_cache(maxsize=None)
def coproduct_table(kind):
    """list over basis indices of dict (j,k) -> int."""
    out = [None] * N_BASIS
    out[UNIT] = {(UNIT, UNIT): 1}
    for idx, word in enumerate(BASIS_WORDS):
        if idx == UNIT:
            continue
        t = {(UNIT, UNIT): 1}
        for i in word:
            gi = GENERATORS[i]
            dxi = {(gi, UNIT): 1, (UNIT, gi): 1}
            t = pair_mul(kind, t, dxi)
        out[idx] = t
    return out


def coproduct(kind, a):
    out = {}
    cop = coproduct_table(kind)
    for i, c in a.items():
        for jk, cj in cop[i].items():
            add_into(out, jk, cj * c)
    return out


def reduced_coproduct_table(kind):
    """Delta(b) - b(x)1 - 1(x)b for positive-degree words; by convention
    the reduced coproduct of 1 is 1(x)1."""
    out = []
    for idx, t in enumerate(coproduct_table(kind)):
        if idx == UNIT:
            out.append({(UNIT, UNIT): 1})
            continue
        r = dict(t)
        add_into(r, (idx, UNIT), -1)
        add_into(r, (UNIT, idx), -1)
        out.append(r)
    return out


def iterated_coproduct(kind, a, n):
    """n-fold coproduct (n >= 1): dict over n-tuples of basis indices."""
    if n == 1:
        return dict(a)
    cop = coproduct_table(kind)
    cur = {(i,): c for i, c in a.items()}
    for _ in range(n - 1):
        nxt = {}
        for key, c in cur.items():
            for jk, cj in cop[key[0]].items():
                add_into(nxt, jk + key[1:], cj * c)
        cur = nxt
    return cur


# ----------------------------------------------------------------------
# the braided tensor-square coalgebra: the coproduct of a (x) b is
#   (a1 (x) a2_{(-1)}.b1) (x) (a2_{(0)} (x) b2)
# which is what every convolution on bilinear forms contracts against

@lru_cache(maxsize=None)
def pair_coproduct(kind):
    """dict (a,b) -> dict ((x1,y1),(x2,y2)) -> int."""
    cop = coproduct_table(kind)
    braid = braid_table(kind)
    table = {}
    for a in range(N_BASIS):
        for b in range(N_BASIS):
            out = {}
            for (a1, a2), ca in cop[a].items():
                for (b1, b2), cb in cop[b].items():
                    c = ca * cb
                    for (b1p, a2p), cx in braid[(a2, b1)].items():
                        add_into(out, ((a1, b1p), (a2p, b2)), c * cx)
            table[(a, b)] = out
    return table
