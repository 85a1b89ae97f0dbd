"""Finitely presented (super)algebras as data, plus the generic checker.

Relation expressions are nested tuples:

    ("g", label)          a generator
    ("sc", scalar)        scalar multiple of the identity
    ("m", scalar, expr)   scalar multiple
    ("+", e1, e2, ...)    sum
    ("*", e1, e2, ...)    product in the algebra
    ("b", e1, e2)         super bracket, expanded by parity
    ("ac", e1, e2)        anticommutator
    ("ad", e1, k, e2)     k-fold nested bracket ad(e1)^k (e2)

Expansion turns an expression into a linear combination of words of
generator labels; evaluation applies realized operators pointwise to
scope vectors, and a relation passes iff its residual is exactly zero on
every scope vector.
"""

from .quotient import state_add
from .scalars import scalar_str


def W(*labels):
    return ("*",) + tuple(("g", lbl) for lbl in labels)


def G(label):
    return ("g", label)


def S(scalar):
    return ("sc", scalar)


def M(scalar, expr):
    return ("m", scalar, expr)


def ADD(*exprs):
    return ("+",) + tuple(exprs)


def B(e1, e2):
    return ("b", e1, e2)


def AC(e1, e2):
    return ("ac", e1, e2)


def AD(e1, k, e2):
    return ("ad", e1, k, e2)


class Rel:
    __slots__ = ("tag", "instance", "expr")

    def __init__(self, tag, instance, expr):
        self.tag = tag
        self.instance = instance
        self.expr = expr


class Presentation:
    def __init__(self, name, generators, relations):
        self.name = name
        self.generators = dict(generators)
        self.relations = relations
        for rel in relations:
            for lbl in _labels_of(rel.expr):
                if lbl not in self.generators:
                    raise ValueError("relation %s uses undeclared label %r" % (rel.tag, lbl))

    def parity_of(self, label):
        return self.generators[label]


def _labels_of(expr):
    kind = expr[0]
    if kind == "g":
        yield expr[1]
    elif kind == "sc":
        return
    elif kind == "m":
        yield from _labels_of(expr[2])
    elif kind in ("+", "*"):
        for e in expr[1:]:
            yield from _labels_of(e)
    elif kind in ("b", "ac"):
        yield from _labels_of(expr[1])
        yield from _labels_of(expr[2])
    elif kind == "ad":
        yield from _labels_of(expr[1])
        yield from _labels_of(expr[3])
    else:
        raise ValueError("bad expression node %r" % (expr,))


def expr_parity(expr, parity_of):
    kind = expr[0]
    if kind == "g":
        return parity_of(expr[1])
    if kind == "sc":
        return 0
    if kind == "m":
        return expr_parity(expr[2], parity_of)
    if kind == "+":
        ps = {expr_parity(e, parity_of) for e in expr[1:]}
        if len(ps) > 1:
            raise ValueError("inhomogeneous sum in a bracket operand")
        return ps.pop()
    if kind == "*":
        return sum(expr_parity(e, parity_of) for e in expr[1:]) % 2
    if kind in ("b", "ac"):
        return (expr_parity(expr[1], parity_of) + expr_parity(expr[2], parity_of)) % 2
    if kind == "ad":
        return (expr[2] * expr_parity(expr[1], parity_of)
                + expr_parity(expr[3], parity_of)) % 2
    raise ValueError("bad expression node %r" % (expr,))


def _convolve(A, B):
    out = {}
    for wa, ca in A.items():
        for wb, cb in B.items():
            w = wa + wb
            s = out.get(w)
            s = ca * cb if s is None else s + ca * cb
            if s:
                out[w] = s
            elif w in out:
                del out[w]
    return out


def _merge(out, other, coeff=1):
    for w, c in other.items():
        s = out.get(w)
        s = coeff * c if s is None else s + coeff * c
        if s:
            out[w] = s
        elif w in out:
            del out[w]
    return out


def expand(expr, parity_of):
    """Expression -> {word of labels: scalar}."""
    kind = expr[0]
    if kind == "g":
        return {(expr[1],): 1}
    if kind == "sc":
        return {(): expr[1]}
    if kind == "m":
        return {w: expr[1] * c for w, c in expand(expr[2], parity_of).items()}
    if kind == "+":
        out = {}
        for e in expr[1:]:
            _merge(out, expand(e, parity_of))
        return out
    if kind == "*":
        out = {(): 1}
        for e in expr[1:]:
            out = _convolve(out, expand(e, parity_of))
        return out
    if kind == "b":
        A = expand(expr[1], parity_of)
        Bx = expand(expr[2], parity_of)
        sign = -1 if (expr_parity(expr[1], parity_of)
                      and expr_parity(expr[2], parity_of)) else 1
        out = _convolve(A, Bx)
        return _merge(out, _convolve(Bx, A), -sign)
    if kind == "ac":
        A = expand(expr[1], parity_of)
        Bx = expand(expr[2], parity_of)
        out = _convolve(A, Bx)
        return _merge(out, _convolve(Bx, A), 1)
    if kind == "ad":
        inner = expr[3]
        for _ in range(expr[2]):
            inner = ("b", expr[1], inner)
        return expand(inner, parity_of)
    raise ValueError("bad expression node %r" % (expr,))


class RightRealization:
    """Realize labels as right multiplications by token words on a module."""

    def __init__(self, assignments):
        from .schurweyl import SWOp
        self._ops = {}
        for label, combo in assignments.items():
            def fn(word, index, _combo=combo):
                return {(suffix + word, index): coeff for suffix, coeff in _combo}
            self._ops[label] = SWOp(fn)

    def op(self, label):
        return self._ops[label]


class Scope:
    """Evaluation scope: quotient context, tensor indices, module keys."""

    def __init__(self, ctx, indices, module_keys):
        indices = list(indices)
        module_keys = list(module_keys)
        if not indices or not module_keys:
            raise ValueError("empty evaluation scope would make every check vacuous")
        self.ctx = ctx
        self.indices = indices
        self.module_keys = module_keys


def check_relation(rel, realization, scope, parity_of):
    """Evaluate one relation instance; returns a report entry dict."""
    words = expand(rel.expr, parity_of)
    for index in scope.indices:
        residual = {}
        for word, coeff in words.items():
            st = {((), index): 1}
            for lbl in reversed(word):
                st = realization.op(lbl).apply(st)
                if not st:
                    break
            if st:
                state_add(residual, st, coeff)
        if not residual:
            continue
        witness = scope.ctx.first_nonzero(residual, scope.module_keys)
        if witness is not None:
            w_index, w_mkey, w_vec = witness
            first_key = sorted(w_vec)[0]
            return {
                "tag": rel.tag,
                "instance": rel.instance,
                "status": "fail",
                "counterexample": {
                    "index": list(index),
                    "module_key": list(w_mkey) if isinstance(w_mkey, tuple) else w_mkey,
                    "residual_terms": len(w_vec),
                    "first_coefficient": scalar_str(w_vec[first_key]),
                },
            }
    return {"tag": rel.tag, "instance": rel.instance, "status": "pass", "counterexample": None}


def check_relations(relations, realization, scope, parity_of, fail_fast=False):
    entries = []
    for rel in relations:
        entry = check_relation(rel, realization, scope, parity_of)
        entries.append(entry)
        if fail_fast and entry["status"] == "fail":
            break
    return entries
