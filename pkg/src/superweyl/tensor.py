"""Z2-graded tensor powers of C(p|m|n-p) and sparse parity-graded operators.

Basis vectors of the tensor power are index tuples (1-based letters);
vectors are sparse dicts index -> scalar.  Operators store sparse columns
and a parity, and every constructor bakes the Koszul sign rule in: an
operator of parity q acting on factor k picks up (-1)^(q * sum of parities
of the letters in positions before k).
"""

from .scalars import is_zero
from . import perms


class ParitySequence:
    """Parities of letters 1..m+n: even exactly on the window p+1..p+m."""

    __slots__ = ("m", "n", "p", "dim", "_par")

    def __init__(self, m, n, p=0):
        if m < 2 or n < 2:
            raise ValueError("need m, n >= 2, got (%d, %d)" % (m, n))
        if not 0 <= p <= n:
            raise ValueError("shift p=%d out of range [0, %d]" % (p, n))
        self.m, self.n, self.p = m, n, p
        self.dim = m + n
        self._par = tuple(0 if p + 1 <= i <= p + m else 1 for i in range(1, m + n + 1))

    def parity(self, i):
        """Parity of letter i; i=0 is the extra affine node (always odd)."""
        if i == 0:
            return 1
        return self._par[i - 1]

    def parities(self):
        return self._par

    def __eq__(self, other):
        return (self.m, self.n, self.p) == (other.m, other.n, other.p)

    def __repr__(self):
        return "ParitySequence(m=%d, n=%d, p=%d)" % (self.m, self.n, self.p)


def all_indices(ps, l):
    dim = ps.dim
    out = [()]
    for _ in range(l):
        out = [idx + (i,) for idx in out for i in range(1, dim + 1)]
    return out


def vec_add_scaled(target, vec, coeff):
    """target += coeff * vec, in place, dropping exact zeros."""
    if is_zero(coeff):
        return target
    for k, c in vec.items():
        s = target.get(k)
        s = coeff * c if s is None else s + coeff * c
        if is_zero(s):
            target.pop(k, None)
        else:
            target[k] = s
    return target


def vec_is_zero(vec):
    return not vec


class TensorOp:
    """Sparse parity-homogeneous operator on the l-fold tensor power."""

    __slots__ = ("ps", "l", "parity", "cols", "unit")

    def __init__(self, ps, l, parity, cols, unit=None):
        self.ps = ps
        self.l = l
        self.parity = parity
        self.cols = cols
        self.unit = unit

    def col(self, index):
        return self.cols.get(index, {})

    def apply(self, vec):
        out = {}
        for index, c in vec.items():
            col = self.cols.get(index)
            if col:
                vec_add_scaled(out, col, c)
        return out

    def compose(self, other):
        """self after other."""
        if self.ps != other.ps or self.l != other.l:
            raise ValueError("operator ambient mismatch")
        cols = {}
        for j, col in other.cols.items():
            out = {}
            for i, c in col.items():
                ci = self.cols.get(i)
                if ci:
                    vec_add_scaled(out, ci, c)
            if out:
                cols[j] = out
        return TensorOp(self.ps, self.l, (self.parity + other.parity) % 2, cols)

    def add(self, other, coeff=1):
        if self.parity != other.parity and self.cols and other.cols:
            raise ValueError("adding operators of different parities")
        cols = {j: dict(col) for j, col in self.cols.items()}
        for j, col in other.cols.items():
            tgt = cols.setdefault(j, {})
            vec_add_scaled(tgt, col, coeff)
            if not tgt:
                del cols[j]
        parity = self.parity if self.cols else other.parity
        return TensorOp(self.ps, self.l, parity, cols)

    def scale(self, coeff):
        if is_zero(coeff):
            return TensorOp(self.ps, self.l, self.parity, {})
        return TensorOp(self.ps, self.l, self.parity,
                        {j: {i: coeff * c for i, c in col.items()} for j, col in self.cols.items()})

    def is_zero(self):
        return not self.cols

    def __eq__(self, other):
        return self.add(other, -1).is_zero()

    def check_homogeneous(self):
        ps = self.ps
        for j, col in self.cols.items():
            pj = sum(ps.parity(i) for i in j) % 2
            for i in col:
                if (sum(ps.parity(x) for x in i) - pj) % 2 != self.parity:
                    return False
        return True


def zero_op(ps, l):
    return TensorOp(ps, l, 0, {})


def identity_op(ps, l):
    return TensorOp(ps, l, 0, {idx: {idx: 1} for idx in all_indices(ps, l)})


def factor_op(ps, l, a, b, k, koszul=True):
    """E_{a,b} on factor k (1-based), identity elsewhere, with Koszul sign.

    koszul=False drops the sign prefix entirely (mutation hook for the
    sensitivity battery).
    """
    dim = ps.dim
    if not (1 <= a <= dim and 1 <= b <= dim):
        raise ValueError("letters (%d, %d) out of range 1..%d" % (a, b, dim))
    if not 1 <= k <= l:
        raise ValueError("factor %d out of range 1..%d" % (k, l))
    q = (ps.parity(a) + ps.parity(b)) % 2
    cols = {}
    for idx in all_indices(ps, l):
        if idx[k - 1] != b:
            continue
        prefix = sum(ps.parity(idx[j]) for j in range(k - 1)) % 2
        sign = -1 if (koszul and q and prefix) else 1
        target = idx[:k - 1] + (a,) + idx[k:]
        cols[idx] = {target: sign}
    return TensorOp(ps, l, q, cols, unit=(a, b, k))


def gl_action(ps, l, element, koszul=True):
    """Action of a gl element {(a,b): coeff} on the whole tensor power."""
    dim = ps.dim
    cols = {}
    for idx in all_indices(ps, l):
        out = {}
        prefix = 0
        for k in range(l):
            c = idx[k]
            for (a, b), coeff in element.items():
                if b != c:
                    continue
                q = (ps.parity(a) + ps.parity(b)) % 2
                sign = -1 if (koszul and q and prefix) else 1
                target = idx[:k] + (a,) + idx[k + 1:]
                s = out.get(target)
                s = sign * coeff if s is None else s + sign * coeff
                if is_zero(s):
                    out.pop(target, None)
                else:
                    out[target] = s
            prefix = (prefix + ps.parity(c)) % 2
        if out:
            cols[idx] = out
    parities = {(ps.parity(a) + ps.parity(b)) % 2 for (a, b) in element}
    if len(parities) > 1:
        raise ValueError("inhomogeneous gl element")
    return TensorOp(ps, l, parities.pop() if parities else 0, cols)


def koszul_sign(ps, g, index):
    """Sign of the signed place-permutation action of g on a basis index."""
    pars = [ps.parity(i) for i in index]
    return -1 if perms.num_odd_inversions(g, pars) % 2 else 1


def sym_op(ps, l, g):
    """Signed action of a permutation on the tensor power (even operator)."""
    cols = {}
    for idx in all_indices(ps, l):
        cols[idx] = {perms.act_on_index(g, idx): koszul_sign(ps, g, idx)}
    return TensorOp(ps, l, 0, cols)


def super_commutator(A, B):
    """AB - (-1)^{|A||B|} BA; for two odd operators this is AB + BA."""
    sign = -1 if (A.parity and B.parity) else 1
    return A.compose(B).add(B.compose(A), -sign)


def anticommutator(A, B):
    return A.compose(B).add(B.compose(A), 1)


def transpose_unit(ps, a, b):
    """The t-transpose: E_{a,b} maps to sign * E_{b,a}.

    Returns (sign, b, a) with sign = (-1)^(|a| + |a||b|).
    """
    pa, pb = ps.parity(a), ps.parity(b)
    sign = -1 if (pa + pa * pb) % 2 else 1
    return sign, b, a


def transpose_on_factor(op):
    """Transpose a single matrix-unit factor operator on its factor."""
    if op.unit is None:
        raise ValueError("transpose is defined for matrix-unit factor operators only")
    a, b, k = op.unit
    sign, c, d = transpose_unit(op.ps, a, b)
    return factor_op(op.ps, op.l, c, d, k).scale(sign)


def p_operator(ps, l, slot1, slot2):
    """P on factors (slot1, slot2): sum over a,b of (-1)^{|b|} E_{a,b} E_{b,a}."""
    dim = ps.dim
    out = zero_op(ps, l)
    for a in range(1, dim + 1):
        for b in range(1, dim + 1):
            sign = -1 if ps.parity(b) else 1
            term = factor_op(ps, l, a, b, slot1).compose(factor_op(ps, l, b, a, slot2))
            out = out.add(term, sign)
    return out


def p_transposed_operator(ps, l, slot1, slot2):
    """P^{t_{slot1}}: sum of (-1)^{|a|+|b|+|a||b|} E_{b,a} E_{b,a} on the two slots."""
    dim = ps.dim
    out = zero_op(ps, l)
    for a in range(1, dim + 1):
        for b in range(1, dim + 1):
            pa, pb = ps.parity(a), ps.parity(b)
            sign = -1 if (pa + pb + pa * pb) % 2 else 1
            term = factor_op(ps, l, b, a, slot1).compose(factor_op(ps, l, b, a, slot2))
            out = out.add(term, sign)
    return out
