"""The Schur-Weyl quotient SW(M) = (M (x) V^{(x)l}) / span{ms (x) v - m (x) sv}.

Two faces of the same quotient:

* SWBasis: an explicit basis with projection/section maps, computed by
  exact row reduction of the relation span (finite modules only).
* SWContext: a normal-form reducer for states whose module part is kept
  as a formal word of right-action tokens; zero tests evaluate the words
  on a scope of module keys.  This is the engine behind every relation
  battery, including the infinite-dimensional (Laurent) modules.

States are sparse dicts {(word, index): scalar} with word a tuple of
module tokens and index a tuple of letters.
"""

from itertools import permutations as _itperms

from . import perms
from .tensor import koszul_sign
from .scalars import is_zero


def _acc(d, key, c):
    s = d.get(key)
    s = c if s is None else s + c
    if is_zero(s):
        d.pop(key, None)
    else:
        d[key] = s


def state_add(target, state, coeff=1):
    for key, c in state.items():
        _acc(target, key, coeff * c)
    return target


class SWContext:
    """Reduction and evaluation context for one (module, parity sequence, l)."""

    def __init__(self, ps, module, l, n_sym=None):
        self.ps = ps
        self.module = module
        self.l = l
        self.n_sym = l if n_sym is None else n_sym
        self._eval_cache = {}
        self._act_cache = {}
        self._stab_cache = {}

    # -- normal form --

    def reduce(self, state):
        """Canonicalize every term to a sorted index prefix."""
        out = {}
        n = self.n_sym
        for (word, index), c in state.items():
            prefix = index[:n]
            tau = perms.sorting_permutation(prefix)
            if tau == perms.identity(n):
                _acc(out, (word, index), c)
                continue
            sign = koszul_sign(self.ps, tau, prefix)
            sorted_index = perms.act_on_index(tau, prefix) + index[n:]
            tinv = perms.inverse(tau)
            if word and word[-1][0] == "p":
                new_word = word[:-1] + (("p", perms.compose(word[-1][1], tinv)),)
            else:
                new_word = word + (("p", tinv),)
            _acc(out, (new_word, sorted_index), sign * c)
        return out

    def stabilizer(self, index):
        """Signed stabilizer of a sorted index prefix: list of (perm, sign)."""
        prefix = index[:self.n_sym]
        hit = self._stab_cache.get(prefix)
        if hit is not None:
            return hit
        blocks = {}
        for pos, letter in enumerate(prefix):
            blocks.setdefault(letter, []).append(pos)
        blocks = [b for b in blocks.values() if len(b) > 1]
        group = [perms.identity(self.n_sym)]
        for positions in blocks:
            new = []
            for arrangement in _itperms(positions):
                im = list(range(self.n_sym))
                for src, dst in zip(positions, arrangement):
                    im[src] = dst
                g = tuple(im)
                new.extend(perms.compose(g, h) for h in group)
            group = new
        result = [(g, koszul_sign(self.ps, g, prefix)) for g in group]
        self._stab_cache[prefix] = result
        return result

    # -- module word evaluation --

    def act(self, mkey, token):
        key = (mkey, token)
        hit = self._act_cache.get(key)
        if hit is None:
            hit = self.module.act(mkey, token)
            self._act_cache[key] = hit
        return hit

    def eval_word(self, mkey, word):
        if not word:
            return {mkey: 1}
        key = (mkey, word)
        hit = self._eval_cache.get(key)
        if hit is None:
            prev = self.eval_word(mkey, word[:-1])
            token = word[-1]
            hit = {}
            for mk, c in prev.items():
                for mk2, c2 in self.act(mk, token).items():
                    _acc(hit, mk2, c * c2)
            self._eval_cache[key] = hit
        return hit

    # -- zero test on a scope --

    def first_nonzero(self, state, scope_keys):
        """None if the state is zero in the quotient on the scope, else a
        witness tuple (index, module key, residual module vector)."""
        red = self.reduce(state)
        by_index = {}
        for (word, index), c in red.items():
            by_index.setdefault(index, []).append((word, c))
        for index in sorted(by_index):
            terms = by_index[index]
            stab = self.stabilizer(index)
            for mkey in scope_keys:
                acc = {}
                for word, c in terms:
                    for mk, v in self.eval_word(mkey, word).items():
                        _acc(acc, mk, c * v)
                if not acc:
                    continue
                if len(stab) == 1:
                    return (index, mkey, acc)
                proj = {}
                scale = 1
                for rho, sgn in stab:
                    for mk, v in acc.items():
                        for mk2, v2 in self.act(mk, ("p", rho)).items():
                            _acc(proj, mk2, sgn * v * v2)
                if proj:
                    norm = len(stab)
                    proj = {k: v / norm for k, v in proj.items()}
                    return (index, mkey, proj)
        return None


# -- explicit basis by exact row reduction (finite modules) --

class SWBasis:
    """Explicit basis of SW(M) with projection and section maps."""

    def __init__(self, ps, module, l, indices=None, module_keys=None):
        from .tensor import all_indices
        self.ps = ps
        self.module = module
        self.l = l
        if module_keys is None:
            module_keys = module.basis_keys()
        self.module_keys = sorted(module_keys)
        self.indices = indices if indices is not None else all_indices(ps, l)
        pairs = [(mk, idx) for mk in self.module_keys for idx in self.indices]
        pairs.sort()
        self.pairs = pairs
        self.col_of = {pair: i for i, pair in enumerate(pairs)}
        self._rows = self._row_reduce(self._relation_rows())
        self.free_cols = [i for i in range(len(pairs)) if i not in self._rows]
        self.dim = len(self.free_cols)
        self.basis_pairs = [pairs[i] for i in self.free_cols]

    def _relation_rows(self):
        rows = []
        l = self.l
        for mk in self.module_keys:
            for i in range(1, l):
                sigma = perms.adjacent(l, i - 1)
                moved = self.module.act(mk, ("s", i))
                for idx in self.indices:
                    row = {}
                    for mk2, c in moved.items():
                        _acc(row, self.col_of[(mk2, idx)], c)
                    target = perms.act_on_index(sigma, idx)
                    sign = koszul_sign(self.ps, sigma, idx)
                    _acc(row, self.col_of[(mk, target)], -sign)
                    if row:
                        rows.append(row)
        return rows

    @staticmethod
    def _row_reduce(rows):
        """Sparse reduced echelon form; returns {pivot_col: row} with rows
        normalized to pivot coefficient 1 and fully back-substituted."""
        pivots = {}
        for row in rows:
            row = dict(row)
            while row:
                p = min(row)
                if p not in pivots:
                    inv = 1 / row[p]
                    row = {c: v * inv for c, v in row.items()}
                    for q, other in pivots.items():
                        if p in other:
                            coeff = other.pop(p)
                            for c, v in row.items():
                                if c != p:
                                    _acc(other, c, -coeff * v)
                    pivots[p] = row
                    break
                lead = pivots[p]
                coeff = row.pop(p)
                for c, v in lead.items():
                    if c != p:
                        _acc(row, c, -coeff * v)
        return pivots

    def project_raw(self, vec):
        """Reduce a raw {(mkey, index): scalar} vector modulo the relation span."""
        out = {}
        for pair, c in vec.items():
            _acc(out, self.col_of[pair], c)
        for p in sorted(set(out) & set(self._rows)):
            if p not in out:
                continue
            coeff = out.pop(p)
            for c, v in self._rows[p].items():
                if c != p:
                    _acc(out, c, -coeff * v)
        return out

    def project(self, vec):
        """Quotient coordinates (dict over positions in basis_pairs)."""
        reduced = self.project_raw(vec)
        pos = {col: i for i, col in enumerate(self.free_cols)}
        return {pos[c]: v for c, v in reduced.items()}

    def section(self, i):
        """The chosen representative of the i-th quotient basis vector."""
        return {self.basis_pairs[i]: 1}
