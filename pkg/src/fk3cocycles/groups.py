"""The groups C3 x| C_{2l}, the symmetric group S3, and the affine rack on Z/3.

Group elements are value records s^a t^b with the law t s = s^2 t; the
group is never materialized as a table outside the tests.  The index set
X = {0,1,2} is identified with the conjugacy class {s^i t^{2k+1}} and,
for l = 1, with the transpositions of S3 via 0 <-> (12), 1 <-> (23),
2 <-> (13).
"""


def rack(i, j):
    """Affine rack on Z/3: i |> j = 2i - j."""
    return (2 * i - j) % 3


class GroupElement:
    """s^a t^b in C3 x| C_{2l}, exponents stored reduced."""

    __slots__ = ("a", "b", "ell")

    def __init__(self, a, b, ell):
        if ell < 1:
            raise ValueError("ell must be a positive integer")
        self.a = a % 3
        self.b = b % (2 * ell)
        self.ell = ell

    def _check(self, other):
        if self.ell != other.ell:
            raise ValueError("group context mismatch: different ell")

    def __mul__(self, other):
        # (s^a t^b)(s^c t^d) = s^{a + (-1)^b c} t^{b+d}
        self._check(other)
        c = other.a if self.b % 2 == 0 else -other.a
        return GroupElement(self.a + c, self.b + other.b, self.ell)

    def inv(self):
        c = -self.a if self.b % 2 == 0 else self.a
        return GroupElement(c, -self.b, self.ell)

    def is_identity(self):
        return self.a == 0 and self.b == 0

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.a == other.a
                and self.b == other.b and self.ell == other.ell)

    def __hash__(self):
        return hash((self.a, self.b, self.ell))

    def __str__(self):
        if self.is_identity():
            return "e"
        parts = []
        if self.a:
            parts.append("s" if self.a == 1 else f"s^{self.a}")
        if self.b:
            parts.append("t" if self.b == 1 else f"t^{self.b}")
        return "*".join(parts)

    def __repr__(self):
        return f"GroupElement({self})"


def g3(ell, a=0, b=0):
    return GroupElement(a, b, ell)


def group_elements(ell):
    """All 6l elements, s-exponent fastest."""
    return [GroupElement(a, b, ell) for b in range(2 * ell) for a in range(3)]


def parse_element(text, ell):
    """Parse "s^a*t^b" (factors optional, "e" for the identity)."""
    text = text.strip()
    if text in ("e", "1", ""):
        return g3(ell)
    a = b = 0
    for factor in text.split("*"):
        factor = factor.strip()
        name, _, p = factor.partition("^")
        n = int(p) if p else 1
        if name == "s":
            a += n
        elif name == "t":
            b += n
        else:
            raise ValueError(f"cannot parse group element factor {factor!r}")
    return GroupElement(a, b, ell)


def conj_index(g, i, k=0):
    """The index i' with g (s^i t^{2k+1}) g^{-1} = s^{i'} t^{2k+1}.

    Computed by genuine conjugation in the group, not by a closed-form
    index formula.
    """
    x = GroupElement(i, 2 * k + 1, g.ell)
    y = g * x * g.inv()
    if y.b != (2 * k + 1) % (2 * g.ell):
        raise AssertionError("conjugation left the class of t^{2k+1}")
    return y.a


def act_on_generator(g, i, k=0):
    """(sign, index) for the principal action of g on the generator x_i."""
    return (1 if g.b % 2 == 0 else -1), conj_index(g, i, k)


def displayed_index_formula(j, r, i, k):
    """The closed-form index recorded in the realization display:
    i' = j - r*i - k + 1 (mod 3).  Kept only so the diagnostics can
    compare it against honest conjugation."""
    return (j - r * i - k + 1) % 3


# ----------------------------------------------------------------------
# S3 as permutations of {1,2,3}

class Perm3:
    """Permutation of {1,2,3}; images stores (p(1), p(2), p(3))."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)
        assert sorted(self.images) == [1, 2, 3]

    def __call__(self, x):
        return self.images[x - 1]

    def __mul__(self, other):
        # (p*q)(x) = p(q(x))
        return Perm3(tuple(self(other(x)) for x in (1, 2, 3)))

    def inv(self):
        img = [0, 0, 0]
        for x in (1, 2, 3):
            img[self(x) - 1] = x
        return Perm3(img)

    def sign(self):
        s = 1
        for x in (1, 2):
            for y in range(x + 1, 4):
                if self(x) > self(y):
                    s = -s
        return s

    def is_identity(self):
        return self.images == (1, 2, 3)

    def __eq__(self, other):
        return isinstance(other, Perm3) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return cycle_name(self)

    __repr__ = __str__


PERM_E = Perm3((1, 2, 3))
PERM_12 = Perm3((2, 1, 3))
PERM_23 = Perm3((1, 3, 2))
PERM_13 = Perm3((3, 2, 1))
PERM_123 = Perm3((2, 3, 1))   # 1->2->3->1
PERM_132 = Perm3((3, 1, 2))   # 1->3->2->1

#: fixed basis order of S3 used everywhere for the dual group algebra
S3_ELEMENTS = [PERM_E, PERM_12, PERM_23, PERM_13, PERM_123, PERM_132]

_NAMES = {PERM_E: "e", PERM_12: "(12)", PERM_23: "(23)", PERM_13: "(13)",
          PERM_123: "(123)", PERM_132: "(132)"}


def cycle_name(p):
    return _NAMES[p]


def perm_from_name(name):
    for p, n in _NAMES.items():
        if n == name.strip():
            return p
    raise ValueError(f"unknown permutation {name!r}")


#: X = {0,1,2} as transpositions: 0 <-> (12), 1 <-> (23), 2 <-> (13)
TRANSPOSITIONS = [PERM_12, PERM_23, PERM_13]


def transposition_index(p):
    return TRANSPOSITIONS.index(p)


def to_perm3(g):
    """The isomorphism G_{3,1} -> S3 with s -> (132), t -> (12)."""
    if g.ell != 1:
        raise ValueError("to_perm3 is only defined at ell = 1")
    out = PERM_E
    for _ in range(g.a):
        out = out * PERM_132
    for _ in range(g.b):
        out = out * PERM_12
    return out
