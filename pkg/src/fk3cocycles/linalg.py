"""Dense exact linear algebra over the rationals.

Matrices are lists of equal-length rows of rationals.  Everything is
textbook Gauss-Jordan with exact pivots; sizes stay in the hundreds, so
nothing fancier is warranted.
"""

from .scalars import QQ, Q0, Q1


def rref(rows, ncols):
    """Reduced row echelon form.  Returns (reduced rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Q1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of the right kernel, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q0] * ncols
        v[f] = Q1
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis


class LinearSolution:
    """Solution set of A x = b: kind is "unique", "affine" or "inconsistent".

    For consistent systems `particular` is one solution and `basis` spans
    the homogeneous solutions (empty for unique solutions).
    """

    def __init__(self, kind, particular=None, basis=(), rank=0):
        self.kind = kind
        self.particular = particular
        self.basis = list(basis)
        self.rank = rank

    def __repr__(self):
        return f"LinearSolution({self.kind}, rank={self.rank})"


def solve(rows, rhs):
    """Exact solution-set descriptor for a dense rational system."""
    if len(rows) != len(rhs):
        raise ValueError("row/rhs length mismatch")
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [QQ(b) if isinstance(b, int) else b]
           for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return LinearSolution("inconsistent", rank=len(pivots) - 1)
    x = [Q0] * ncols
    for r, p in zip(red, pivots):
        x[p] = r[ncols]
    hom = nullspace([r[:ncols] for r in red], ncols)
    kind = "unique" if not hom else "affine"
    return LinearSolution(kind, x, hom, rank=len(pivots))


def residual(rows, x, rhs):
    """A x - b, for re-substitution checks."""
    out = []
    for r, b in zip(rows, rhs):
        s = Q0
        for a, v in zip(r, x):
            if a and v:
                s = s + a * v
        out.append(s - b)
    return out
