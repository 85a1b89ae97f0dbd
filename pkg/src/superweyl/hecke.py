"""Degenerate affine Hecke algebra of S_l: straightening and the
principal series right module.

Algebra elements are kept in the normal form sum of u-monomial * permutation.
The principal series is induced from a character u_i -> a_i of the
polynomial subalgebra; its basis is S_l and the u-action is computed by
straightening, never by a hand-unrolled table.

Module right actions are exposed through tokens:
    ("p", g)   right multiplication by a permutation (tuple)
    ("s", i)   adjacent transposition, 1-based i
    ("u", i)   polynomial generator
    ("z", k)   u_k - kappa * sum_{j<k} (j k)
    ("zf", k)  u_k + (kappa/2) * sum_{j!=k} sign(j-k) (k j)
"""

from . import perms
from .scalars import is_zero


def _acc(d, key, c):
    s = d.get(key)
    s = c if s is None else s + c
    if is_zero(s):
        d.pop(key, None)
    else:
        d[key] = s


class DegenerateHecke:
    """Straightening engine for the kappa-deformed symmetric group algebra."""

    def __init__(self, l, kappa):
        self.l = l
        self.kappa = kappa
        self._memo = {}

    def perm_times_u(self, w, j):
        """Normal form of w * u_j as {(umono, perm): coeff}; j is 1-based."""
        key = (w, j)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        l = self.l
        if w == perms.identity(l):
            mono = tuple(1 if t == j - 1 else 0 for t in range(l))
            out = {(mono, w): 1}
        else:
            i = perms.first_descent(w)
            s_i = perms.adjacent(l, i)
            w2 = perms.compose(w, s_i)
            # s_i u_j = u_{s_i(j)} s_i + kappa * eps
            if j - 1 == i:
                jp, eps = j + 1, -1
            elif j - 1 == i + 1:
                jp, eps = j - 1, 1
            else:
                jp, eps = j, 0
            out = {}
            for (mono, v), c in self.perm_times_u(w2, jp).items():
                _acc(out, (mono, perms.compose(v, s_i)), c)
            if eps:
                zero = (0,) * l
                _acc(out, (zero, w2), eps * self.kappa)
        self._memo[key] = out
        return out


class PrincipalSeries:
    """Right module with basis S_l induced from the character u_i -> a_i."""

    def __init__(self, l, kappa, spectrum):
        if len(spectrum) != l:
            raise ValueError("spectrum must have length %d" % l)
        self.l = l
        self.kappa = kappa
        self.spectrum = list(spectrum)
        self.algebra = DegenerateHecke(l, kappa)

    def basis_keys(self):
        return perms.all_perms(self.l)

    def scope_keys(self):
        return self.basis_keys()

    def character(self, mono):
        val = 1
        for i, e in enumerate(mono):
            for _ in range(e):
                val = val * self.spectrum[i]
        return val

    def act(self, w, token):
        kind = token[0]
        if kind == "p":
            return {perms.compose(w, token[1]): 1}
        if kind == "s":
            return {perms.compose(w, perms.adjacent(self.l, token[1] - 1)): 1}
        if kind == "u":
            out = {}
            for (mono, v), c in self.algebra.perm_times_u(w, token[1]).items():
                _acc(out, v, c * self.character(mono))
            return out
        if kind == "z":
            k = token[1]
            out = self.act(w, ("u", k))
            for j in range(1, k):
                t = perms.transposition(self.l, j - 1, k - 1)
                _acc(out, perms.compose(w, t), -self.kappa)
            return out
        if kind == "zf":
            k = token[1]
            out = self.act(w, ("u", k))
            half = self.kappa / 2
            for j in range(1, self.l + 1):
                if j == k:
                    continue
                sign = 1 if j > k else -1
                t = perms.transposition(self.l, k - 1, j - 1)
                _acc(out, perms.compose(w, t), sign * half)
            return out
        raise ValueError("principal series has no action for token %r" % (token,))


class GroupAlgebraModule:
    """The regular, trivial, and sign right modules over C[S_l]."""

    def __init__(self, l, kind="regular"):
        if kind not in ("regular", "trivial", "sign"):
            raise ValueError("unknown kind %r" % kind)
        self.l = l
        self.kind = kind

    def basis_keys(self):
        if self.kind == "regular":
            return perms.all_perms(self.l)
        return [()]

    def scope_keys(self):
        return self.basis_keys()

    def act(self, key, token):
        kind = token[0]
        if kind == "p":
            g = token[1]
        elif kind == "s":
            g = perms.adjacent(self.l, token[1] - 1)
        else:
            raise ValueError("group algebra module has no action for token %r" % (token,))
        if self.kind == "regular":
            return {perms.compose(key, g): 1}
        if self.kind == "trivial":
            return {(): 1}
        sgn = -1 if len(perms.coxeter_word(g)) % 2 else 1
        return {(): sgn}
