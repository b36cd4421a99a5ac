"""Exact sparse polynomials with rational coefficients.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name, the empty
tuple being the monomial 1.  Coefficients are Python ints whenever possible
and :class:`fractions.Fraction` otherwise, so nothing ever touches floating
point.  The symmetric-function code stores these monomials directly in its
term keys; :class:`Poly` is the user-facing wrapper.
"""

from fractions import Fraction
from numbers import Rational

ONE = ()


def normalize_scalar(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return normalize_scalar(Fraction(c))
    raise TypeError(f"non-rational coefficient {c!r}")


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in exps.items() if e))


def mono_pow(m, k):
    if k == 0 or not m:
        return ONE
    return tuple((n, e * k) for n, e in m)


def mono_div(m1, m2):
    """Exact quotient m1/m2, or None when m2 does not divide m1."""
    if not m2:
        return m1
    exps = dict(m1)
    for name, e in m2:
        left = exps.get(name, 0) - e
        if left < 0:
            return None
        exps[name] = left
    return tuple(sorted((n, e) for n, e in exps.items() if e))


def mono_degree(m, name=None):
    if name is None:
        return sum(e for _, e in m)
    return dict(m).get(name, 0)


def mono_str(m):
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)


class Poly:
    """Polynomial in named variables over the rationals.

    >>> q = Poly.var("q")
    >>> (q + 1) ** 2
    q^2 + 2*q + 1
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            c = normalize_scalar(terms)
            terms = {ONE: c} if c else {}
        self.terms = terms

    @classmethod
    def var(cls, name, exponent=1):
        return cls({((name, exponent),): 1} if exponent else {ONE: 1})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Poly):
            return x
        return cls(x)

    @classmethod
    def from_pairs(cls, pairs, name="q"):
        """Build a univariate polynomial from ``(power, "p/q")`` pairs."""
        terms = {}
        for power, coef in pairs:
            c = normalize_scalar(Fraction(coef))
            if c:
                terms[((name, power),) if power else ONE] = c
        return cls(terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = Poly.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = normalize_scalar(s)
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = normalize_scalar(other)
            if not c:
                return Poly()
            return Poly({m: normalize_scalar(v * c) for m, v in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly({m: normalize_scalar(c) for m, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other):
        """Divide by a monomial (times a nonzero rational); raises otherwise."""
        other = Poly.coerce(other)
        if len(other.terms) != 1:
            raise ValueError(f"can only divide by a single term, got {other}")
        (m2, c2), = other.terms.items()
        out = {}
        for m, c in self.terms.items():
            m1 = mono_div(m, m2)
            if m1 is None:
                raise ValueError(f"{other} does not divide {self}")
            out[m1] = normalize_scalar(Fraction(c) / c2)
        return Poly(out)

    # -- inspection -------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_constant(self):
        return all(m == ONE for m in self.terms)

    def constant(self):
        return self.terms.get(ONE, 0)

    def variables(self):
        return sorted({n for m in self.terms for n, _ in m})

    def degree(self, name=None):
        if not self.terms:
            return -1
        return max(mono_degree(m, name) for m in self.terms)

    def subs(self, **values):
        """Substitute rationals or polynomials for variables."""
        result = Poly()
        for m, c in self.terms.items():
            term = Poly(c)
            rest = []
            for n, e in m:
                if n in values:
                    term = term * Poly.coerce(values[n]) ** e
                else:
                    rest.append((n, e))
            result = result + term * Poly({tuple(rest): 1})
        return result

    def to_pairs(self, name="q"):
        """Univariate JSON form: sorted ``[power, "p/q"]`` pairs."""
        pairs = []
        for m, c in self.terms.items():
            if any(n != name for n, _ in m):
                raise ValueError(f"{self} is not univariate in {name}")
            pairs.append([mono_degree(m, name), str(c)])
        return sorted(pairs)

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (-mono_degree(mc[0]), mc[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self._sorted_terms():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = str(a)
            elif a == 1:
                body = mono_str(m)
            else:
                body = f"{a}*{mono_str(m)}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def needs_parens(self):
        return len(self.terms) > 1


QPoly = Poly
