"""Rational Cherednik algebra of S_l acting on (Laurent) polynomials,
as a right module.

Keys are exponent tuples.  The y-generators act by a global sign eps
times the divided-difference deformation of the partial derivative; eps
is not asserted but fixed by the mandatory self-check against the
defining relations (exactly one sign passes).

Tokens:
    ("p", g)    permutation (precomposition)
    ("s", i)    adjacent transposition, 1-based
    ("x", i)    multiplication by x_i
    ("xi", i)   multiplication by x_i^{-1} (Laurent variant only)
    ("y", i)    signed Dunkl operator
    ("U", i)    t/2 + x_i y_i + c sum_{j<i} (i j)
    ("yf", i)   ("U", i) + (c/2) sum_{j!=i} sign(j-i) (i j)
"""

from itertools import product as _product

from . import perms
from .scalars import is_zero


def _acc(d, key, c):
    s = d.get(key)
    s = c if s is None else s + c
    if is_zero(s):
        d.pop(key, None)
    else:
        d[key] = s


def divided_difference(e, i, j):
    """((1 - s_{ij}) x^e) / (x_i - x_j) as an exact sparse Laurent polynomial.

    i, j are 0-based positions.
    """
    a, b = e[i], e[j]
    if a == b:
        return {}
    out = {}
    e = list(e)
    if a > b:
        for s in range(a - b):
            e[i], e[j] = a - 1 - s, b + s
            out[tuple(e)] = 1
    else:
        for s in range(b - a):
            e[j], e[i] = b - 1 - s, a + s
            out[tuple(e)] = -1
    return out


class CherednikModule:
    """Right module over the rational Cherednik algebra on (Laurent) monomials."""

    def __init__(self, l, t, c, variant="poly", eps=None, check_radius=1):
        if variant not in ("poly", "laurent"):
            raise ValueError("variant must be 'poly' or 'laurent'")
        self.l = l
        self.t = t
        self.c = c
        self.variant = variant
        if eps is None:
            eps = self._calibrate_sign(check_radius)
        self.eps = eps

    # -- scope helpers --

    def basis_keys(self):
        raise ValueError("the (Laurent) polynomial module is infinite-dimensional; "
                         "use scope_keys with an explicit box")

    def scope_keys(self, radius=2, degree=None):
        if self.variant == "laurent":
            return [tuple(e) for e in _product(range(-radius, radius + 1), repeat=self.l)]
        degree = radius if degree is None else degree
        keys = [tuple(e) for e in _product(range(degree + 1), repeat=self.l)]
        return [e for e in keys if sum(e) <= degree]

    # -- right action --

    def act(self, e, token):
        kind = token[0]
        if kind == "p":
            g = token[1]
            return {tuple(e[g[i]] for i in range(self.l)): 1}
        if kind == "s":
            g = perms.adjacent(self.l, token[1] - 1)
            return {tuple(e[g[i]] for i in range(self.l)): 1}
        if kind == "x":
            i = token[1] - 1
            return {e[:i] + (e[i] + 1,) + e[i + 1:]: 1}
        if kind == "xi":
            if self.variant != "laurent":
                raise ValueError("x inverse needs the Laurent variant")
            i = token[1] - 1
            return {e[:i] + (e[i] - 1,) + e[i + 1:]: 1}
        if kind == "y":
            return self._dunkl(e, token[1])
        if kind == "U":
            return self._u_elem(e, token[1])
        if kind == "yf":
            i = token[1]
            out = self._u_elem(e, i)
            half = self.c / 2
            for j in range(1, self.l + 1):
                if j == i:
                    continue
                sign = 1 if j > i else -1
                g = perms.transposition(self.l, i - 1, j - 1)
                _acc(out, tuple(e[g[k]] for k in range(self.l)), sign * half)
            return out
        raise ValueError("no action for token %r" % (token,))

    def _dunkl(self, e, i1):
        i = i1 - 1
        out = {}
        if e[i]:
            out[e[:i] + (e[i] - 1,) + e[i + 1:]] = self.t * e[i]
        for j in range(self.l):
            if j == i:
                continue
            for key, sgn in divided_difference(e, i, j).items():
                _acc(out, key, sgn * self.c)
        if self.eps == -1:
            out = {k: -v for k, v in out.items()}
        return out

    def _u_elem(self, e, i1):
        out = {e: self.t / 2}
        xi = e[:i1 - 1] + (e[i1 - 1] + 1,) + e[i1:]
        for key, v in self._dunkl(xi, i1).items():
            _acc(out, key, v)
        for j in range(1, i1):
            g = perms.transposition(self.l, i1 - 1, j - 1)
            _acc(out, tuple(e[g[k]] for k in range(self.l)), self.c)
        return out

    # -- sign self-check --

    def _apply_word(self, e, word):
        vec = {e: 1}
        for token in word:
            nxt = {}
            for key, coeff in vec.items():
                for k2, c2 in self.act(key, token).items():
                    _acc(nxt, k2, coeff * c2)
            vec = nxt
        return vec

    def _relations_hold(self, scope):
        l = self.l
        for e in scope:
            for i in range(1, l + 1):
                for j in range(1, l + 1):
                    resid = {}
                    if i != j:
                        # [y_j, x_i] = -c (i j)
                        for k, c in self._apply_word(e, (("y", j), ("x", i))).items():
                            _acc(resid, k, c)
                        for k, c in self._apply_word(e, (("x", i), ("y", j))).items():
                            _acc(resid, k, -c)
                        g = perms.transposition(l, i - 1, j - 1)
                        _acc(resid, tuple(e[g[k]] for k in range(l)), self.c)
                        if resid:
                            return False
                        # [y_i, y_j] = 0
                        resid = {}
                        for k, c in self._apply_word(e, (("y", i), ("y", j))).items():
                            _acc(resid, k, c)
                        for k, c in self._apply_word(e, (("y", j), ("y", i))).items():
                            _acc(resid, k, -c)
                        if resid:
                            return False
                    else:
                        # [y_i, x_i] = t + c sum_{k!=i} (k i)
                        for k, c in self._apply_word(e, (("y", i), ("x", i))).items():
                            _acc(resid, k, c)
                        for k, c in self._apply_word(e, (("x", i), ("y", i))).items():
                            _acc(resid, k, -c)
                        _acc(resid, e, -self.t)
                        for k2 in range(1, l + 1):
                            if k2 == i:
                                continue
                            g = perms.transposition(l, k2 - 1, i - 1)
                            _acc(resid, tuple(e[g[k]] for k in range(l)), -self.c)
                        if resid:
                            return False
        return True

    def _calibrate_sign(self, radius):
        if self.variant == "laurent":
            scope = [tuple(e) for e in _product(range(-radius, radius + 1), repeat=self.l)]
        else:
            scope = [tuple(e) for e in _product(range(radius + 1), repeat=self.l)]
        passing = []
        for eps in (1, -1):
            self.eps = eps
            if self._relations_hold(scope):
                passing.append(eps)
        if len(passing) != 1:
            raise ValueError("Dunkl sign self-check did not single out a sign: %r" % passing)
        return passing[0]
