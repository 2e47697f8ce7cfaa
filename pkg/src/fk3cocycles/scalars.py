"""Exact scalars: arbitrary-precision rationals and sparse multivariate polynomials.

Coefficients are always exact rationals (gmpy2.mpq when available, else
fractions.Fraction).  A Poly is a sparse map from exponent vectors over a
declared, fixed tuple of parameter names to nonzero rationals.  Parameter
contexts never mix: combining polynomials over different variable tuples
is a configuration error, not a coercion.
"""

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

Q0 = QQ(0)
Q1 = QQ(1)


def rational_from_string(s):
    """Parse an exact rational literal "p" or "p/q"."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return QQ(int(p), int(q))
    return QQ(int(s))


def rational_to_string(q):
    return str(q)


class Poly:
    """Sparse polynomial over exact rationals in named commuting parameters.

    terms maps exponent tuples (one entry per variable) to nonzero
    rationals.  Instances are immutable in practice; all operations
    return fresh objects.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        self.terms = {} if terms is None else terms

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, c):
        c = QQ(c) if not isinstance(c, type(Q0)) else c
        if not c:
            return cls(vars, {})
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars, name):
        vars = tuple(vars)
        if name not in vars:
            raise ValueError(f"unknown parameter {name!r} in context {vars}")
        e = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {e: Q1})

    @classmethod
    def gens(cls, vars):
        """All generators of the context, in order."""
        return tuple(cls.var(vars, v) for v in vars)

    # -- ring structure ------------------------------------------------

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError(
                f"parameter context mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.vars, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Q0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return Poly(self.vars, {})
            return Poly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Q0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Poly(self.vars, terms)

    __rmul__ = __mul__

    def __truediv__(self, c):
        # division by a nonzero rational only; never by a polynomial
        q = QQ(c) if isinstance(c, int) else c
        return Poly(self.vars, {e: v / q for e, v in self.terms.items()})

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        out = Poly.const(self.vars, 1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        # comparison against a bare rational constant
        return self == Poly.const(self.vars, other)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- queries -------------------------------------------------------

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def constant(self):
        """The coefficient of the empty monomial."""
        return self.terms.get((0,) * len(self.vars), Q0)

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def eval(self, point):
        """Evaluate at a dict name -> rational; result is a rational."""
        vals = [QQ(point[v]) for v in self.vars]
        out = Q0
        for e, c in self.terms.items():
            t = c
            for x, n in zip(vals, e):
                for _ in range(n):
                    t = t * x
            out = out + t
        return out

    def subs(self, mapping):
        """Substitute some variables by polynomials (or rationals) in the
        same context; unmapped variables are kept."""
        images = []
        for v in self.vars:
            img = mapping.get(v)
            if img is None:
                images.append(Poly.var(self.vars, v))
            elif isinstance(img, Poly):
                self._check(img)
                images.append(img)
            else:
                images.append(Poly.const(self.vars, img))
        out = Poly.zero(self.vars)
        for e, c in self.terms.items():
            t = Poly.const(self.vars, c)
            for img, n in zip(images, e):
                t = t * img ** n
            out = out + t
        return out

    # -- canonical string form ------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda e: (-sum(e), e))
        parts = []
        for e in keys:
            c = self.terms[e]
            factors = [f"{v}^{n}" if n > 1 else v
                       for v, n in zip(self.vars, e) if n]
            neg = c < 0
            mag = -c if neg else c
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self.vars}, {self})"


def poly_from_string(s, vars):
    """Parse the canonical form back into a Poly.

    Accepts sums of terms "c*v1^e1*v2", with "-"/"+" separators and plain
    rational literals; no parentheses.
    """
    vars = tuple(vars)
    s = s.strip()
    if not s or s == "0":
        return Poly.zero(vars)
    out = Poly.zero(vars)
    s = s.replace(" - ", " + -").replace("- ", "-")
    if s.startswith("-"):
        s = "-" + s[1:].lstrip()
    for chunk in s.split(" + "):
        chunk = chunk.strip()
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:]
        coeff = Q1
        expo = [0] * len(vars)
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                continue
            if factor[0].isdigit():
                coeff = coeff * rational_from_string(factor)
            else:
                name, _, p = factor.partition("^")
                if name not in vars:
                    raise ValueError(f"unknown parameter {name!r}")
                expo[vars.index(name)] += int(p) if p else 1
        if neg:
            coeff = -coeff
        out = out + Poly(vars, {tuple(expo): coeff})
    return out
