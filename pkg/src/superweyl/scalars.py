"""Exact scalars: rationals and multivariate parameter polynomials.

Every coefficient in the package is either a Rational (gmpy2.mpq when
available, else fractions.Fraction) or a Poly in the five formal
parameters lambda, beta, t, c, kappa with Rational coefficients.  There
is no floating point anywhere; zero tests are exact.
"""

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rational

PARAMS = ("lambda", "beta", "t", "c", "kappa")
_PINDEX = {name: i for i, name in enumerate(PARAMS)}
_NVARS = len(PARAMS)
_ZEXP = (0,) * _NVARS

ZERO = Rational(0)
ONE = Rational(1)
HALF = Rational(1, 2)


def rat(a, b=1):
    return Rational(a, b)


class Poly:
    """Sparse polynomial over the fixed parameter set, coefficients Rational.

    Terms map exponent tuples to nonzero Rational coefficients; the empty
    map is the zero polynomial.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def const(r):
        r = Rational(r)
        return Poly({_ZEXP: r} if r else {})

    @staticmethod
    def var(name):
        if name not in _PINDEX:
            raise ValueError("unknown parameter %r (admissible: %s)" % (name, ", ".join(PARAMS)))
        e = [0] * _NVARS
        e[_PINDEX[name]] = 1
        return Poly({tuple(e): ONE})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and _ZEXP in self.terms)

    def const_value(self):
        if not self.is_const():
            raise ValueError("polynomial %s is not constant" % self)
        return self.terms.get(_ZEXP, ZERO)

    def variables(self):
        seen = set()
        for e in self.terms:
            for i, d in enumerate(e):
                if d:
                    seen.add(PARAMS[i])
        return seen

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, ZERO) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly.const(-Rational(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Rational(other)
            if not c:
                return Poly()
            return Poly({e: c * v for e, v in self.terms.items()})
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, ZERO) + c1 * c2
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return Poly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            other = other.const_value()
        other = Rational(other)
        if not other:
            raise ZeroDivisionError("division of a parameter polynomial by zero")
        return Poly({e: c / other for e, c in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a parameter polynomial")
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        return self.is_const() and self.const_value() == other

    def __ne__(self, other):
        return not self.__eq__(other)

    def __bool__(self):
        return bool(self.terms)

    def evaluate(self, binding):
        """Substitute Rationals for every parameter occurring in self."""
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for i, d in enumerate(e):
                if d:
                    name = PARAMS[i]
                    if name not in binding:
                        raise KeyError("no binding for parameter %r" % name)
                    v = v * Rational(binding[name]) ** d
            total += v
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mon = "*".join(
                PARAMS[i] + ("^%d" % d if d > 1 else "")
                for i, d in enumerate(e) if d
            )
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append("%s*%s" % (c, mon))
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    __repr__ = __str__


def param(name):
    return Poly.var(name)


LAM = param("lambda")
BETA = param("beta")
T = param("t")
C = param("c")
KAPPA = param("kappa")


# Dispatch helpers used in hot loops; gmpy2.mpq already defers to
# Poly.__radd__/__rmul__ so plain operators work, but the explicit forms
# below keep rational-only paths free of isinstance churn on the Poly side.

def sadd(a, b):
    return a + b


def smul(a, b):
    return a * b


def sneg(a):
    return -a


def is_zero(s):
    if isinstance(s, Poly):
        return s.is_zero()
    return not s


def as_rational(s):
    """Collapse a constant scalar to a Rational."""
    if isinstance(s, Poly):
        return s.const_value()
    return Rational(s)


def evaluate(s, binding):
    if isinstance(s, Poly):
        return s.evaluate(binding)
    return Rational(s)


def substitute(s, binding):
    """Partial substitution: bind a subset of parameters, keep the rest formal."""
    if not isinstance(s, Poly):
        return s
    out = Poly()
    for e, c in s.terms.items():
        factor = Poly.const(c)
        for i, d in enumerate(e):
            if not d:
                continue
            name = PARAMS[i]
            if name in binding:
                b = binding[name]
                base = b if isinstance(b, Poly) else Poly.const(b)
                factor = factor * base ** d
            else:
                factor = factor * Poly.var(name) ** d
        out = out + factor
    return out


def scalar_str(s):
    return str(s)
