"""Exact symmetric functions in the classical bases h, e, p, m and s.

An element is a :class:`SymFunc`: a basis tag plus a sparse map from
``(partition, monomial)`` to a rational number, where the monomial is a
product of formal parameters such as q (see :mod:`verschiebung.poly`).  So
``q*s[2] + s[2] - 3*s[]`` is stored with three keys.

The h basis is the working basis: products are concatenation of indexing
partitions, Jacobi-Trudi determinants land there directly, and Verschiebung
is a relabelling.  Every other basis converts to and from h through memoized
tables built per degree.
"""

from fractions import Fraction
from functools import lru_cache
from threading import RLock

from .partitions import (
    conjugate,
    contains,
    normalize,
    partitions_of,
    z_lambda,
)
from .poly import ONE, Poly, mono_mul, mono_str, normalize_scalar

BASES = ("h", "e", "p", "m", "s")

DEFAULT_MAX_DEGREE = 16
_max_degree = DEFAULT_MAX_DEGREE


class DegreeLimitError(ValueError):
    """Raised when a conversion would need tables beyond the degree cap."""


def set_max_degree(n: int):
    global _max_degree
    _max_degree = int(n)


def get_max_degree() -> int:
    return _max_degree


def check_degree(n: int):
    if n > _max_degree:
        raise DegreeLimitError(f"degree {n} exceeds the configured cap {_max_degree}")


_lock = RLock()


def _memo(fn):
    """lru_cache guarded by a shared re-entrant lock."""
    cached = lru_cache(maxsize=None)(fn)

    def wrapper(*args):
        with _lock:
            return cached(*args)

    wrapper.cache_clear = cached.cache_clear
    wrapper.__wrapped__ = fn
    wrapper.__doc__ = fn.__doc__
    wrapper.__name__ = fn.__name__
    return wrapper


# -- sparse dict helpers ----------------------------------------------------
#
# A "vector" below is a plain dict {(partition, mono): coeff}.  Partitions in
# keys are sorted decreasing tuples.


def merge_parts(a, b):
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def vec_add(acc, other, scale=1):
    for k, c in other.items():
        v = acc.get(k, 0) + c * scale
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)
    return acc


def vec_mul(x, y):
    """Product of two vectors in a multiplicative basis (h, e or p)."""
    out = {}
    for (p1, m1), c1 in x.items():
        for (p2, m2), c2 in y.items():
            k = (merge_parts(p1, p2), mono_mul(m1, m2))
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def vec_scale(x, scalar):
    """Multiply by a rational or a Poly."""
    if isinstance(scalar, Poly):
        out = {}
        for (p, m), c in x.items():
            for m2, c2 in scalar.terms.items():
                k = (p, mono_mul(m, m2))
                v = out.get(k, 0) + c * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out
    scalar = normalize_scalar(scalar)
    if not scalar:
        return {}
    return {k: c * scalar for k, c in x.items()}


def vec_clean(x):
    return {k: normalize_scalar(c) for k, c in x.items() if c}


def linear_map(x, image):
    """Apply a linear map given on basis partitions (image(p) -> vector with ONE monos)."""
    out = {}
    for (p, m), c in x.items():
        for (p2, m2), c2 in image(p).items():
            k = (p2, mono_mul(m, m2))
            v = out.get(k, 0) + c * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def multiplicative_image(parts, single):
    """Expand prod single(part) for a multiplicative basis change."""
    acc = {((), ONE): 1}
    for part in parts:
        acc = vec_mul(acc, single(part))
    return acc


# -- elementary tables ------------------------------------------------------


@_memo
def kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1 if not lam else 0
    k = mu[-1]
    rest = mu[:-1]
    total = 0
    for rho in _remove_horizontal_strips(lam, k):
        total += kostka(rho, rest)
    return total


def _remove_horizontal_strips(lam, k):
    """Partitions rho with lam/rho a horizontal strip of size k."""
    lam = tuple(lam)
    n = len(lam)
    out = []

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                out.append(normalize(acc))
            return
        low = lam[i + 1] if i + 1 < n else 0
        for rho_i in range(lam[i], low - 1, -1):
            take = lam[i] - rho_i
            if take > left:
                break
            rec(i + 1, left - take, acc + [rho_i])

    rec(0, k, [])
    return out


def _add_horizontal_strips(lam, k):
    """Partitions kappa with kappa/lam a horizontal strip of size k."""
    lam = tuple(lam)
    n = len(lam)
    out = []

    def rec(i, left, acc):
        if i == n:
            # the new row below the old shape
            if left <= (lam[-1] if lam else left):
                out.append(normalize(acc + [left]))
            return
        cap = lam[i - 1] - lam[i] if i else left
        for add in range(min(cap, left), -1, -1):
            rec(i + 1, left - add, acc + [lam[i] + add])

    rec(0, k, [])
    return out


@_memo
def h_to_s_single(mu):
    """h_mu in the Schur basis by iterated Pieri."""
    if not mu:
        return {(): 1}
    prev = h_to_s_single(mu[:-1])
    out = {}
    for lam, c in prev.items():
        for kappa in _add_horizontal_strips(lam, mu[-1]):
            out[kappa] = out.get(kappa, 0) + c
    return out


@_memo
def e_in_h(n):
    """e_n as a vector in h via sum (-1)^i e_i h_{n-i} = 0."""
    if n == 0:
        return {((), ONE): 1}
    acc = {}
    for i in range(1, n + 1):
        term = vec_mul({((i,), ONE): 1}, e_in_h(n - i))
        vec_add(acc, term, (-1) ** (i - 1))
    return acc


@_memo
def p_in_h(n):
    """Newton: p_n = n h_n - sum_{i<n} h_{n-i} p_i."""
    acc = {((n,), ONE): n}
    for i in range(1, n):
        vec_add(acc, vec_mul({((n - i,), ONE): 1}, p_in_h(i)), -1)
    return acc


@_memo
def h_in_p(n):
    """h_n = sum_mu p_mu / z_mu."""
    return {(mu, ONE): Fraction(1, z_lambda(mu)) for mu in partitions_of(n)}


@_memo
def p_in_e(n):
    """p_n in e: apply omega to the h expansion, omega p_n = (-1)^(n-1) p_n."""
    return {k: c * (-1) ** (n - 1) for k, c in p_in_h(n).items()}


@_memo
def _h_basis_p(lam):
    return multiplicative_image(lam, h_in_p)


@_memo
def _p_basis_h(lam):
    return multiplicative_image(lam, p_in_h)


@_memo
def _e_basis_h(lam):
    return multiplicative_image(lam, e_in_h)


@_memo
def _h_basis_e(lam):
    # e and h satisfy the same recursion, so the tables coincide
    return multiplicative_image(lam, e_in_h)


@_memo
def _p_basis_e(lam):
    return multiplicative_image(lam, p_in_e)


@_memo
def _h_basis_s(lam):
    return {(k, ONE): c for k, c in h_to_s_single(lam).items()}


@_memo
def _s_basis_h(lam):
    return jacobi_trudi(lam, ())


@_memo
def _s_basis_m(lam):
    n = sum(lam)
    return {(mu, ONE): kostka(lam, mu) for mu in partitions_of(n) if kostka(lam, mu)}


@_memo
def _m_basis_s(mu):
    """Invert s_mu = m_mu + sum_{nu < mu} K_{mu nu} m_nu."""
    out = {(mu, ONE): 1}
    for (nu, _), k in _s_basis_m(mu).items():
        if nu != mu:
            vec_add(out, _m_basis_s(nu), -k)
    return out


def _via(first, second):
    def image(lam):
        return linear_map(first(lam), second)
    return image


_TO_H = {
    "h": lambda lam: {(lam, ONE): 1},
    "e": _e_basis_h,
    "p": _p_basis_h,
    "s": _s_basis_h,
}
_FROM_H = {
    "h": lambda lam: {(lam, ONE): 1},
    "e": _h_basis_e,
    "p": _h_basis_p,
    "s": _h_basis_s,
}


def _convert(terms, source, target):
    if source == target:
        return dict(terms)
    for (lam, _) in terms:
        if source in ("m", "s") or target in ("m", "s", "p"):
            check_degree(sum(lam))
    if source == "m":
        return _convert(linear_map(terms, _m_basis_s), "s", target)
    if target == "m":
        return linear_map(_convert(terms, source, "s"), _s_basis_m)
    if source == "p" and target == "e":
        return linear_map(terms, _p_basis_e)
    if source == "h":
        return linear_map(terms, _FROM_H[target])
    in_h = linear_map(terms, _TO_H[source])
    return linear_map(in_h, _FROM_H[target]) if target != "h" else in_h


# -- determinants -------------------------------------------------------------


def determinant(matrix, mul=vec_mul):
    """Determinant of a square matrix of vectors (None or {} means zero).

    Expands row by row over the set of columns already used, so only
    nonzero entries are ever multiplied.
    """
    n = len(matrix)
    if n == 0:
        return {((), ONE): 1}
    states = {0: {((), ONE): 1}}
    for i in range(n):
        row = matrix[i]
        nxt = {}
        for mask, acc in states.items():
            for j in range(n):
                entry = row[j]
                if not entry or mask >> j & 1:
                    continue
                # columns already used to the right of j are inversions
                sign = -1 if bin(mask >> (j + 1)).count("1") % 2 else 1
                prod = mul(acc, entry)
                if not prod:
                    continue
                key = mask | (1 << j)
                if key in nxt:
                    vec_add(nxt[key], prod, sign)
                else:
                    nxt[key] = prod if sign == 1 else {k: -c for k, c in prod.items()}
        states = {k: v for k, v in nxt.items() if v}
        if not states:
            return {}
    return states.get((1 << n) - 1, {})


def h_entry(k, scale=1, mono=ONE):
    if k < 0:
        return {}
    return {((k,) if k else (), mono): scale}


@_memo
def jacobi_trudi(outer, inner):
    """det(h_{outer_i - inner_j - i + j}) for integer sequences, as an h-vector."""
    k = max(len(outer), len(inner))
    lam = tuple(outer) + (0,) * (k - len(outer))
    rho = tuple(inner) + (0,) * (k - len(inner))
    matrix = [[h_entry(lam[i] - rho[j] - i + j) for j in range(k)] for i in range(k)]
    return determinant(matrix)


@_memo
def dual_jacobi_trudi(outer, inner):
    """det(e_{outer'_i - inner'_j - i + j}) re-expressed in h."""
    lam, mu = conjugate(outer), conjugate(inner)
    k = max(len(lam), len(mu))
    lam = lam + (0,) * (k - len(lam))
    mu = mu + (0,) * (k - len(mu))
    matrix = [[h_entry(lam[i] - mu[j] - i + j) for j in range(k)] for i in range(k)]
    as_e = determinant(matrix)
    return linear_map(as_e, _e_basis_h)


# -- the element type -------------------------------------------------------


def _coerce_scalar_vector(x):
    if isinstance(x, Poly):
        return {((), m): c for m, c in x.terms.items()}
    x = normalize_scalar(x)
    return {((), ONE): x} if x else {}


class SymFunc:
    """A symmetric function in one of the bases h, e, p, m, s."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis="h", terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms = vec_clean(terms or {})

    # construction

    @classmethod
    def gen(cls, basis, lam=(), coeff=1):
        lam = normalize(lam)
        if basis in ("h", "e", "p"):
            lam = tuple(sorted(lam, reverse=True))
        out = cls(basis, {(lam, ONE): 1})
        return out * coeff if coeff != 1 else out

    @classmethod
    def scalar(cls, c, basis="h"):
        return cls(basis, _coerce_scalar_vector(c))

    @classmethod
    def zero(cls, basis="h"):
        return cls(basis)

    # conversions

    def to(self, basis):
        if basis == self.basis:
            return self
        return SymFunc(basis, _convert(self.terms, self.basis, basis))

    def coeff(self, lam) -> Poly:
        lam = normalize(lam)
        return Poly({m: c for (p, m), c in self.terms.items() if p == lam})

    def coefficients(self):
        """{partition: Poly} in the current basis."""
        out = {}
        for (p, m), c in self.terms.items():
            out.setdefault(p, {})[m] = c
        return {p: Poly(t) for p, t in out.items()}

    def support(self):
        return sorted({p for p, _ in self.terms}, key=_order_key)

    def degree(self):
        return max((sum(p) for p, _ in self.terms), default=-1)

    def homogeneous_part(self, n):
        return SymFunc(self.basis, {k: c for k, c in self.terms.items() if sum(k[0]) == n})

    def subs(self, **values):
        out = {}
        for (p, m), c in self.terms.items():
            factor = Poly({m: c}).subs(**values)
            vec_add(out, {(p, mm): cc for mm, cc in factor.terms.items()})
        return SymFunc(self.basis, out)

    # arithmetic

    def _aligned(self, other):
        if isinstance(other, SymFunc):
            return other.to(self.basis).terms
        return SymFunc.scalar(other, "h").to(self.basis).terms

    def __add__(self, other):
        return SymFunc(self.basis, vec_add(dict(self.terms), self._aligned(other)))

    __radd__ = __add__

    def __neg__(self):
        return SymFunc(self.basis, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return SymFunc(self.basis, vec_add(dict(self.terms), self._aligned(other), -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return SymFunc(self.basis, vec_scale(self.terms, other))
        return mul(self, other)

    def __rmul__(self, other):
        return SymFunc(self.basis, vec_scale(self.terms, other))

    def __pow__(self, k):
        out = SymFunc.scalar(1, self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            if other.basis == self.basis:
                return self.terms == other.terms
            return self.to("h").terms == other.to("h").terms
        if isinstance(other, (int, Fraction, Poly)):
            return self.to("h").terms == _coerce_scalar_vector(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.to("h").terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # rendering

    def __repr__(self):
        return render(self)

    def to_json(self):
        return {
            "basis": self.basis,
            "terms": [{"part": list(p), "coef": c.to_pairs()}
                      for p, c in sorted(self.coefficients().items(), key=lambda pc: _order_key(pc[0]))],
        }


def _order_key(lam):
    return (sum(lam), tuple(-x for x in lam))


def render(f: SymFunc) -> str:
    """Deterministic text: terms sorted by degree, then partition order."""
    if not f.terms:
        return "0"
    pieces = []
    coeffs = f.coefficients()
    for lam in sorted(coeffs, key=lambda x: (sum(x), x), reverse=True):
        c = coeffs[lam]
        basis = f"{f.basis}[{','.join(map(str, lam))}]"
        for mono, v in c._sorted_terms():
            sign = "-" if v < 0 else "+"
            a = abs(v)
            factors = []
            if a != 1:
                factors.append(str(a))
            if mono:
                factors.append(mono_str(mono))
            factors.append(basis)
            pieces.append((sign, "*".join(factors)))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


# -- public operations ------------------------------------------------------


def h(*parts):
    return SymFunc.gen("h", parts)


def e(*parts):
    return SymFunc.gen("e", parts)


def p(*parts):
    return SymFunc.gen("p", parts)


def s(*parts):
    return SymFunc.gen("s", parts)


def m(*parts):
    return SymFunc.gen("m", parts)


def generator(basis, lam):
    return SymFunc.gen(basis, lam)


def to_basis(f: SymFunc, basis) -> SymFunc:
    return f.to(basis)


def mul(f: SymFunc, g: SymFunc) -> SymFunc:
    """Ring product; computed by concatenation in a shared multiplicative basis."""
    if f.basis == g.basis and f.basis in ("h", "e", "p"):
        return SymFunc(f.basis, vec_mul(f.terms, g.terms))
    work = f.basis if f.basis in ("h", "e", "p") else "h"
    prod = SymFunc(work, vec_mul(f.to(work).terms, g.to(work).terms))
    return prod.to(f.basis)


def hall(f: SymFunc, g: SymFunc) -> Poly:
    """Hall inner product, with <s_lam, s_mu> = delta."""
    if f.basis == "p" and g.basis == "p":
        out = {}
        for (lam, m1), c1 in f.terms.items():
            for (mu, m2), c2 in g.terms.items():
                if lam == mu:
                    k = mono_mul(m1, m2)
                    out[k] = out.get(k, 0) + c1 * c2 * z_lambda(lam)
        return Poly(vec_clean(out))
    a = f.to("s").terms
    b = g.to("s").terms
    index = {}
    for (lam, m2), c2 in b.items():
        index.setdefault(lam, []).append((m2, c2))
    out = {}
    for (lam, m1), c1 in a.items():
        for m2, c2 in index.get(lam, ()):
            k = mono_mul(m1, m2)
            out[k] = out.get(k, 0) + c1 * c2
    return Poly(vec_clean(out))


def omega(f: SymFunc) -> SymFunc:
    if f.basis == "h":
        return SymFunc("e", f.terms).to("h")
    if f.basis == "e":
        return SymFunc("h", f.terms).to("e")
    if f.basis == "p":
        return SymFunc("p", {(lam, mo): c * (-1) ** (sum(lam) - len(lam))
                             for (lam, mo), c in f.terms.items()})
    if f.basis == "s":
        return SymFunc("s", {(conjugate(lam), mo): c for (lam, mo), c in f.terms.items()})
    return omega(f.to("h")).to(f.basis)


def plethysm_pt(f: SymFunc, t: int) -> SymFunc:
    """f composed with p_t: p_lam -> p_{t lam}."""
    if t < 1:
        raise ValueError("t must be positive")
    g = f.to("p")
    out = SymFunc("p", {(tuple(t * x for x in lam), mo): c for (lam, mo), c in g.terms.items()})
    return out.to(f.basis)


def verschiebung(f: SymFunc, t: int, via: str = "p") -> SymFunc:
    """The Verschiebung operator phi_t, adjoint to plethysm by p_t.

    ``via="p"`` divides power sums (phi_t p_lam = t^l p_{lam/t}); ``via="h"``
    uses phi_t h_lam = h_{lam/t}.  Both must agree.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if via == "h":
        g = f.to("h")
        out = {}
        for (lam, mo), c in g.terms.items():
            if all(x % t == 0 for x in lam):
                vec_add(out, {(tuple(x // t for x in lam), mo): c})
        return SymFunc("h", out).to(f.basis)
    if via == "p":
        out = {}
        for (lam, mo), c in _convert(f.terms, f.basis, "h").items():
            vec_add(out, {(k[0], mono_mul(mo, k[1])): c * v for k, v in _phi_h_via_p(lam, t).items()})
        return SymFunc("h", out).to(f.basis)
    raise ValueError(f"unknown route {via!r}")


@_memo
def _phi_p(lam, t):
    if all(x % t == 0 for x in lam):
        return {(tuple(x // t for x in lam), ONE): t ** len(lam)}
    return {}


@_memo
def _phi_h_via_p(lam, t):
    """phi_t h_lam computed by passing through the power sums."""
    check_degree(sum(lam))
    in_p = _h_basis_p(lam)
    image = linear_map(in_p, lambda mu: _phi_p(mu, t))
    return vec_clean(linear_map(image, _p_basis_h))


def skew_schur(outer, inner=()) -> SymFunc:
    """s_{outer/inner} in the h basis; zero when inner is not contained in outer."""
    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner):
        return SymFunc("h")
    return SymFunc("h", jacobi_trudi(outer, inner))


def skew_schur_seq(outer, inner) -> SymFunc:
    """Jacobi-Trudi determinant for an arbitrary integer sequence as inner shape."""
    return SymFunc("h", jacobi_trudi(tuple(outer), tuple(inner)))


def schur(lam) -> SymFunc:
    return skew_schur(lam, ())


def skew_schur_dual(outer, inner=()) -> SymFunc:
    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner):
        return SymFunc("h")
    return SymFunc("h", dual_jacobi_trudi(outer, inner))


def verschiebung_schur(outer, inner, t: int) -> SymFunc:
    """phi_t s_{outer/inner} as sgn_t times the product over the quotient."""
    from .littlewood import core_quotient, is_t_tileable, sgn_t

    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner) or not is_t_tileable((outer, inner), t):
        return SymFunc("h")
    a, b = core_quotient(outer, t), core_quotient(inner, t)
    acc = {((), ONE): sgn_t((outer, inner), t)}
    for lo, li in zip(a.quotient, b.quotient):
        acc = vec_mul(acc, jacobi_trudi(lo, li))
    return SymFunc("h", acc)


def schur_product_coeffs(shapes):
    """Schur expansion of a product of skew Schur functions, as {partition: int}."""
    acc = {((), ONE): 1}
    for shape in shapes:
        outer, inner = (shape, ()) if not shape or isinstance(shape[0], int) else shape
        outer, inner = normalize(outer), normalize(inner)
        if not contains(outer, inner):
            return {}
        acc = vec_mul(acc, jacobi_trudi(outer, inner))
    return {lam: c for (lam, _), c in _convert(acc, "h", "s").items()}


def lr_coeff(lam, factors) -> int:
    """Multi Littlewood-Richardson coefficient: coefficient of s_lam in the product."""
    lam = normalize(lam)
    shapes = []
    total = 0
    for f in factors:
        if not f or isinstance(f[0], int):
            f = (normalize(f), ())
        shapes.append((normalize(f[0]), normalize(f[1])))
        total += sum(f[0]) - sum(f[1])
    if total != sum(lam):
        return 0
    return schur_product_coeffs(shapes).get(lam, 0)


@_memo
def lr_table(lam):
    """All pairs (mu, nu) with c^lam_{mu nu} != 0, from s_{lam/mu} in the Schur basis."""
    from .partitions import sub_partitions
    out = {}
    for mu in sub_partitions(lam):
        for (nu, _), c in _convert(jacobi_trudi(lam, mu), "h", "s").items():
            if c:
                out[(mu, nu)] = c
    return out


def lr2(lam, mu, nu) -> int:
    return lr_table(normalize(lam)).get((normalize(mu), normalize(nu)), 0)


def power_sum_character(lam):
    """Coefficients of s_lam in the p basis multiplied by z_mu: chi^lam(mu)."""
    f = schur(lam).to("p")
    return {mu: normalize_scalar(c * z_lambda(mu)) for (mu, _), c in f.terms.items()}


def clear_caches():
    for fn in (kostka, h_to_s_single, e_in_h, p_in_h, h_in_p, p_in_e, _h_basis_p, _p_basis_h,
               _e_basis_h, _h_basis_e, _p_basis_e, _h_basis_s, _s_basis_h, _s_basis_m,
               _m_basis_s, jacobi_trudi, dual_jacobi_trudi, _phi_p, _phi_h_via_p, lr_table):
        fn.cache_clear()


__all__ = [
    "BASES", "DegreeLimitError", "SymFunc", "determinant", "dual_jacobi_trudi", "e", "generator", "h",
    "hall", "jacobi_trudi", "kostka", "lr2", "lr_coeff", "m", "mul", "omega", "p", "plethysm_pt",
    "render", "s", "schur", "set_max_degree", "skew_schur", "skew_schur_dual", "skew_schur_seq",
    "to_basis", "verschiebung", "verschiebung_schur",
]
