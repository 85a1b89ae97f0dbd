"""Structure data for gl(p|m|n-p): brackets, supertrace form, Cartan
matrices, the two-variable current algebra, and recursively built
current elements from the low-degree generator family.

gl elements are sparse dicts (row, col) -> scalar; current elements are
sparse dicts (row, col, u-degree, v-degree) -> scalar.  The central term
of the current bracket is dropped: all verification happens in the image
algebra where it vanishes.
"""

from .scalars import is_zero


def _sgn(q):
    return -1 if q % 2 else 1


def bracket_gl(ps, X, Y):
    """[X, Y] via the matrix-unit rule with s^{(p)} signs."""
    out = {}
    for (i, j), cx in X.items():
        qx = (ps.parity(i) + ps.parity(j)) % 2
        for (k, l), cy in Y.items():
            c = cx * cy
            if j == k:
                _acc(out, (i, l), c)
            if i == l:
                qy = (ps.parity(k) + ps.parity(l)) % 2
                _acc(out, (k, j), -_sgn(qx * qy) * c)
    return out


def _acc(d, key, c):
    s = d.get(key)
    s = c if s is None else s + c
    if is_zero(s):
        d.pop(key, None)
    else:
        d[key] = s


def supertrace_form(ps, unit1, unit2):
    """(E_{i,j}, E_{k,l}) = delta_{i,l} delta_{j,k} (-1)^{s_i}."""
    (i, j), (k, l) = unit1, unit2
    if i == l and j == k:
        return _sgn(ps.parity(i))
    return 0


def supertrace(ps, X):
    total = 0
    for (i, j), c in X.items():
        if i == j:
            total = total + _sgn(ps.parity(i)) * c
    return total


def cartan_matrix(ps, affine=False):
    """Cartan matrix entries as a dict (i, j) -> int.

    Finite: indices 1..m+n-1.  Affine: indices 0..m+n-1 with the corner
    entries at (0, m+n-1) and (m+n-1, 0); the affine node parity is
    s_0 = 1 and the wrap entry uses s_{m+n}.
    """
    N = ps.dim
    lo = 0 if affine else 1
    idx = range(lo, N)
    a = {}
    for i in idx:
        for j in idx:
            if i == j:
                a[i, j] = _sgn(ps.parity(i)) + _sgn(ps.parity(i + 1))
            elif j == i + 1:
                a[i, j] = -_sgn(ps.parity(i + 1))
            elif j == i - 1:
                a[i, j] = -_sgn(ps.parity(i))
            elif affine and (i, j) in ((N - 1, 0), (0, N - 1)):
                a[i, j] = -_sgn(ps.parity(N))
            else:
                a[i, j] = 0
    return a


def chevalley_h(ps, i):
    """h_i = (-1)^{s_i} E_{i,i} - (-1)^{s_{i+1}} E_{i+1,i+1} (finite node)."""
    return {(i, i): _sgn(ps.parity(i)), (i + 1, i + 1): -_sgn(ps.parity(i + 1))}


def chevalley_xp(ps, i):
    return {(i, i + 1): 1}


def chevalley_xm(ps, i):
    return {(i + 1, i): _sgn(ps.parity(i))}


# -- current algebra sl(m|n) (x) C[u, v], central extension quotiented away --

class CurrentTruncationError(ValueError):
    pass


def current_unit(a, b, r=0, s=0):
    return {(a, b, r, s): 1}


def current_bracket(ps, X, Y, max_degree=None):
    """[X (x) p1, Y (x) p2] = [X, Y] (x) p1 p2, exact monomial arithmetic."""
    out = {}
    for (i, j, r1, s1), cx in X.items():
        qx = (ps.parity(i) + ps.parity(j)) % 2
        for (k, l, r2, s2), cy in Y.items():
            r, s = r1 + r2, s1 + s2
            if max_degree is not None and r + s > max_degree:
                raise CurrentTruncationError(
                    "bracket reaches u^%d v^%d beyond truncation %d" % (r, s, max_degree))
            c = cx * cy
            if j == k:
                _acc(out, (i, l, r, s), c)
            if i == l:
                qy = (ps.parity(k) + ps.parity(l)) % 2
                _acc(out, (k, j, r, s), -_sgn(qx * qy) * c)
    return out


def current_add(X, Y, coeff=1):
    out = dict(X)
    for k, c in Y.items():
        _acc(out, k, coeff * c)
    return out


def current_is_zero(X):
    return not X


DEFAULT_PIVOTS = None


def default_pivot(a, b):
    """Smallest letter distinct from a and b."""
    c = 1
    while c == a or c == b:
        c += 1
    return c


class SteinbergBuilder:
    """Builds the current-algebra realizations of the degree-(r,s) elements
    generated from degree <= 1 data, by the pivot recursion.

    All brackets are evaluated in sl(m|n) (x) C[u,v]; pivot independence is
    a checkable property, not an assumption.
    """

    def __init__(self, ps, max_degree=3, pivot=None):
        if ps.dim < 5:
            raise ValueError("the low-degree presentation needs m+n >= 5, got %d" % ps.dim)
        self.ps = ps
        self.max_degree = max_degree
        self.pivot = pivot or default_pivot
        self._cache = {}

    def element(self, a, b, r, s):
        """Realization of the generator symbol for E_{a,b} (x) u^r v^s."""
        if a == b:
            raise ValueError("off-diagonal generators only")
        if r < 0 or s < 0 or r + s > self.max_degree:
            raise CurrentTruncationError("degree u^%d v^%d beyond truncation %d" % (r, s, self.max_degree))
        key = (a, b, r, s)
        if key in self._cache:
            return self._cache[key]
        if r + s <= 1:
            out = current_unit(a, b, r, s)
        else:
            c = self.pivot(a, b)
            if c == a or c == b or not 1 <= c <= self.ps.dim:
                raise ValueError("invalid pivot %d for (%d, %d)" % (c, a, b))
            if r >= 1:
                left = self.element(a, c, 1, 0)
                right = self.element(c, b, r - 1, s)
            else:
                left = self.element(a, c, 0, 1)
                right = self.element(c, b, 0, s - 1)
            out = current_bracket(self.ps, left, right, self.max_degree)
        self._cache[key] = out
        return out
