"""Plethysm by p_t: SXP rules, symmetric group characters and the
coefficients of universal characters composed with p_t.

Character values come from the Murnaghan-Nakayama rule on beta sets.  The
class functions are tied to symmetric functions by the characteristic map
ch(f) = sum_mu f(mu) p_mu / z_mu, under which phi_t becomes f -> f(t . ).
"""

from dataclasses import dataclass, field
from functools import lru_cache
from threading import Lock
from typing import Dict, List, Optional, Tuple

from .littlewood import (
    _check_t,
    core_quotient,
    from_core_quotient,
    is_t_core,
    is_t_tileable,
    sgn_t,
)
from .partitions import (
    Partition,
    conjugate,
    contains,
    is_z_asymmetric,
    normalize,
    partitions_of,
    rank,
    size,
    sub_partitions,
    z_lambda,
)
from .symfunc import (
    SymFunc,
    _convert,
    jacobi_trudi,
    lr_coeff,
    lr_table,
    plethysm_pt,
    schur_product_coeffs,
    skew_schur,
    verschiebung,
)
from .universal import family_name, universal_char, universal_expand


# -- characters ----------------------------------------------------------------


def _beta(lam, length):
    return [(lam[i] if i < len(lam) else 0) + length - 1 - i for i in range(length)]


def _from_beta(beta):
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return normalize([b - (n - 1 - i) for i, b in enumerate(beta)])


def _ribbons(lam, k):
    """All (smaller partition, height) obtained by removing a k-ribbon."""
    beta = _beta(lam, len(lam))
    occupied = set(beta)
    out = []
    for b in beta:
        if b - k >= 0 and b - k not in occupied:
            height = sum(1 for x in beta if b - k < x < b)
            out.append((_from_beta([x if x != b else b - k for x in beta]), height))
    return out


@lru_cache(maxsize=None)
def _chi(lam, mu):
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    return sum((-1) ** ht * _chi(small, rest) for small, ht in _ribbons(lam, k))


def chi(lam, mu) -> int:
    """chi^lam(mu) by the Murnaghan-Nakayama rule."""
    lam, mu = normalize(lam), normalize(mu)
    if size(lam) != size(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _chi(lam, mu)


@lru_cache(maxsize=None)
def _chi_skew(outer, inner, mu):
    if not mu:
        return 1 if outer == inner else 0
    k, rest = mu[0], mu[1:]
    return sum((-1) ** ht * _chi_skew(small, inner, rest)
               for small, ht in _ribbons(outer, k) if contains(small, inner))


def chi_skew(shape, mu) -> int:
    """Skew character chi^{outer/inner}(mu); zero if inner is not contained in outer."""
    outer, inner = normalize(shape[0]), normalize(shape[1])
    mu = normalize(mu)
    if size(outer) - size(inner) != size(mu):
        raise ValueError("size mismatch between skew shape and class")
    if not contains(outer, inner):
        return 0
    return _chi_skew(outer, inner, mu)


@dataclass
class CharValueTable:
    n: int
    values: Dict[Tuple[Partition, Partition], int] = field(default_factory=dict)

    def __getitem__(self, key):
        return self.values[key]

    def partitions(self):
        return partitions_of(self.n)

    def column_orthogonality(self) -> bool:
        parts = self.partitions()
        for i, mu in enumerate(parts):
            for rho in parts[i:]:
                total = sum(self.values[lam, mu] * self.values[lam, rho] for lam in parts)
                if total != (z_lambda(mu) if mu == rho else 0):
                    return False
        return True

    def row_orthogonality(self) -> bool:
        # sum_mu chi^lam(mu) chi^nu(mu) / z_mu = delta, scaled by n! to stay integral
        parts = self.partitions()
        fact = 1
        for k in range(2, self.n + 1):
            fact *= k
        for i, lam in enumerate(parts):
            for nu in parts[i:]:
                total = sum(self.values[lam, mu] * self.values[nu, mu] * (fact // z_lambda(mu))
                            for mu in parts)
                if total != (fact if lam == nu else 0):
                    return False
        return True

    def to_json(self):
        parts = self.partitions()
        return {"n": self.n, "classes": [list(mu) for mu in parts],
                "rows": [{"lambda": list(lam), "values": [self.values[lam, mu] for mu in parts]}
                         for lam in parts]}


_tables: Dict[int, CharValueTable] = {}
_tables_lock = Lock()


def character_table(n: int) -> CharValueTable:
    with _tables_lock:
        if n not in _tables:
            parts = partitions_of(n)
            _tables[n] = CharValueTable(n, {(lam, mu): _chi(lam, mu) for lam in parts for mu in parts})
        return _tables[n]


def characteristic(values, n: int) -> SymFunc:
    """ch(f) = sum_mu f(mu) p_mu / z_mu for a class function given as {mu: value}."""
    from fractions import Fraction
    terms = {}
    for mu in partitions_of(n):
        v = values.get(mu, 0) if isinstance(values, dict) else values(mu)
        if v:
            terms[mu] = Fraction(v, z_lambda(mu))
    out = SymFunc("p")
    for mu, c in terms.items():
        out = out + SymFunc.gen("p", mu, c)
    return out


def _phi_class(f, t):
    """phi_t on class functions: (phi_t f)(mu) = f(t mu)."""
    return lambda mu: f(tuple(t * x for x in mu))


def _psi_t(f, t):
    """psi_t on class functions, t^l(mu) f(mu/t) (zero unless t divides mu)."""
    def g(mu):
        if all(x % t == 0 for x in mu):
            return t ** len(mu) * f(tuple(x // t for x in mu))
        return 0
    return g


def class_inner(f, g, n: int):
    from fractions import Fraction
    return sum(Fraction(f(mu) * g(mu), z_lambda(mu)) for mu in partitions_of(n))


def littlewood_mult_check(lam, mu, t: int) -> bool:
    """chi^lam(t mu) against sgn_t(lam) times the induced quotient character at mu."""
    _check_t(t)
    lam, mu = normalize(lam), normalize(mu)
    if size(lam) != t * size(mu):
        raise ValueError("need |lam| = t |mu|")
    lhs = chi(lam, tuple(t * x for x in mu))
    cq = core_quotient(lam, t)
    if cq.core:
        return lhs == 0
    induced = sum(c * chi(nu, mu) for nu, c in schur_product_coeffs(cq.quotient).items())
    return lhs == sgn_t((lam, ()), t) * induced


def farahat_check(outer, inner, rho, t: int) -> bool:
    """chi^{outer/inner}(t rho) against the signed product of quotient skew characters."""
    _check_t(t)
    outer, inner, rho = normalize(outer), normalize(inner), normalize(rho)
    lhs = chi_skew((outer, inner), tuple(t * x for x in rho))
    if not contains(outer, inner) or not is_t_tileable((outer, inner), t):
        return lhs == 0
    a, b = core_quotient(outer, t), core_quotient(inner, t)
    coeffs = schur_product_coeffs(list(zip(a.quotient, b.quotient)))
    rhs = sum(c * chi(nu, rho) for nu, c in coeffs.items())
    return lhs == sgn_t((outer, inner), t) * rhs


def farahat_ch_check(outer, inner, t: int) -> bool:
    """ch of rho -> chi^{outer/inner}(t rho) equals phi_t s_{outer/inner}."""
    outer, inner = normalize(outer), normalize(inner)
    d = size(outer) - size(inner)
    if d % t:
        return verschiebung(skew_schur(outer, inner), t).is_zero()
    f = lambda mu: chi_skew((outer, inner), mu)
    lhs = characteristic(_phi_class(f, t), d // t)
    return lhs.to("h") == verschiebung(skew_schur(outer, inner), t).to("h")


# -- SXP rules -----------------------------------------------------------------


@dataclass(frozen=True)
class SXPTerm:
    nu: Partition
    sign: int
    coeff: int

    def to_json(self):
        return {"nu": list(self.nu), "sign": self.sign, "coeff": self.coeff}


def _multipartitions(n, k):
    if k == 0:
        if n == 0:
            yield ()
        return
    for m in range(n + 1):
        for first in partitions_of(m):
            for rest in _multipartitions(n - m, k - 1):
                yield (first,) + rest


@lru_cache(maxsize=None)
def empty_core_partitions(n: int, t: int) -> Tuple[Partition, ...]:
    """Partitions of t*n with empty t-core, built from their quotients."""
    out = [from_core_quotient((), q, t) for q in _multipartitions(n, t)]
    return tuple(sorted(out, reverse=True))


def sxp_schur(lam, t: int) -> List[SXPTerm]:
    """Schur expansion of s_lam o p_t, sorted by nu in reverse lexicographic order."""
    _check_t(t)
    lam = normalize(lam)
    out = []
    for nu in empty_core_partitions(size(lam), t):
        c = lr_coeff(lam, core_quotient(nu, t).quotient)
        if c:
            out.append(SXPTerm(nu, sgn_t((nu, ()), t), c))
    return out


def sxp_wildon(tau, shape, t: int) -> Dict[Partition, int]:
    """Schur coefficients of s_tau (s_{outer/inner} o p_t)."""
    _check_t(t)
    tau = normalize(tau)
    outer, inner = normalize(shape[0]), normalize(shape[1])
    if not contains(outer, inner):
        return {}
    ct = core_quotient(tau, t)
    n = size(tau) + t * (size(outer) - size(inner))
    out = {}
    for nu in partitions_of(n):
        if not contains(nu, tau) or not is_t_tileable((nu, tau), t):
            continue
        cn = core_quotient(nu, t)
        factors = [(a, b) for a, b in zip(cn.quotient, ct.quotient)] + [inner]
        c = lr_coeff(outer, factors)
        if c:
            out[nu] = sgn_t((nu, tau), t) * c
    return dict(sorted(out.items(), reverse=True))


def schur_coefficients(f: SymFunc) -> Dict[Partition, int]:
    """Integer Schur coefficients of a scalar-coefficient symmetric function."""
    out = {}
    for (lam, _), c in f.to("s").terms.items():
        out[lam] = out.get(lam, 0) + int(c)
    return {lam: c for lam, c in out.items() if c}


# -- universal characters composed with p_t --------------------------------------

# per family: z for the skew sum, the eta filter, and whether eta carries a sign
_CUMBERSOME = {
    "o": (1, lambda eta: all(x % 2 == 0 for x in eta)),
    "sp": (-1, lambda eta: all(x % 2 == 0 for x in conjugate(eta))),
    "so_plus": (0, lambda eta: True),
}


def _skew_sign(family, mu):
    if family == "so_plus":
        return (-1) ** ((size(mu) - rank(mu)) // 2)
    return (-1) ** (size(mu) // 2)


@lru_cache(maxsize=None)
def _a_row_formula(lam, family, t):
    z, keep = _CUMBERSOME[family]
    # Schur expansion of family_lam o p_t through the SXP rule
    schur_part = {}
    for mu in sub_partitions(lam):
        if not is_z_asymmetric(mu, z):
            continue
        w = _skew_sign(family, mu)
        for xi in empty_core_partitions(size(lam) - size(mu), t):
            c = lr_coeff(lam, list(core_quotient(xi, t).quotient) + [mu])
            if c:
                schur_part[xi] = schur_part.get(xi, 0) + w * sgn_t((xi, ()), t) * c
    # then s_xi = sum over (nu, eta) of c^xi_{nu,eta} times the family character of nu
    out = {}
    for xi, w in schur_part.items():
        if not w:
            continue
        for (nu, eta), c in lr_table(xi).items():
            if keep(eta):
                sign = (-1) ** size(eta) if family == "so_plus" else 1
                out[nu] = out.get(nu, 0) + sign * w * c
    return {nu: c for nu, c in out.items() if c}


@lru_cache(maxsize=None)
def _a_row_elimination(lam, family, t):
    f = plethysm_pt(universal_char(family, lam), t)
    return {nu: int(c.constant()) for nu, c in universal_expand(f, family).items()}


def a_coefficients(lam, family, t: int, method="formula") -> Dict[Partition, int]:
    """All nonzero a_{lam,nu}(t) with family_lam o p_t = sum_nu a_{lam,nu} family_nu.

    method "formula" sums skew Schur terms through the SXP rule and converts
    with the character interrelation; "elimination" expands the plethysm
    directly in the family basis.
    """
    _check_t(t)
    family = family_name(family)
    if family not in _CUMBERSOME:
        raise ValueError(f"a coefficients are defined for o, sp and so_plus, not {family}")
    lam = normalize(lam)
    if method == "formula":
        row = _a_row_formula(lam, family, t)
    elif method == "elimination":
        row = _a_row_elimination(lam, family, t)
    else:
        raise ValueError(f"unknown method {method!r}")
    return dict(sorted(row.items(), reverse=True))


def a_coeff(lam, nu, family, t: int, method="formula") -> int:
    return a_coefficients(lam, family, t, method).get(normalize(nu), 0)


def b_coeff(lam, mu, t: int) -> int:
    """Stable branching coefficient b_{lam,mu}(t); zero unless mu has empty t-core.

    The coefficient of s_lam in F_t times the product of the quotient of mu,
    where F_t = (sum_eta s_eta) (sum_eta s_eta^2)^{(t-2)/2} for t even and
    F_t = (sum_eta s_eta^2)^{(t-1)/2} for t odd.
    """
    _check_t(t)
    lam, mu = normalize(lam), normalize(mu)
    cq = core_quotient(mu, t)
    if cq.core:
        return 0
    free = size(lam) - sum(size(q) for q in cq.quotient)
    if free < 0:
        return 0
    series = free_series(free, t)
    total = 0
    for gamma, c in schur_product_coeffs(cq.quotient).items():
        if not contains(lam, gamma):
            continue
        for (rho, _), d in _convert(jacobi_trudi(lam, gamma), "h", "s").items():
            total += c * d * series.get(rho, 0)
    return total


def _truncated_product(acc, factor, n):
    new = {}
    for gamma, c in acc.items():
        for eta, e in factor.items():
            if size(gamma) + size(eta) > n:
                continue
            for nu, d in schur_product_coeffs([gamma, eta]).items():
                new[nu] = new.get(nu, 0) + c * e * d
    return {nu: c for nu, c in new.items() if c}


@lru_cache(maxsize=None)
def free_series(n: int, t: int) -> Dict[Partition, int]:
    """Schur coefficients of F_t (see b_coeff) up to degree n."""
    single = {eta: 1 for m in range(n + 1) for eta in partitions_of(m)}
    squares = {}
    for m in range(n // 2 + 1):
        for eta in partitions_of(m):
            for nu, d in schur_product_coeffs([eta, eta]).items():
                squares[nu] = squares.get(nu, 0) + d
    acc = dict(single) if t % 2 == 0 else {(): 1}
    for _ in range((t - 1) // 2):
        acc = _truncated_product(acc, squares, n)
    return acc


def universal_sxp(lam, family, t: int) -> Dict[Partition, int]:
    """Expansion of family_lam o p_t through the stable branching coefficients."""
    _check_t(t)
    family = family_name(family)
    lam = normalize(lam)
    out = {}
    if family in ("so_plus", "o"):
        for k in range(t * size(lam) + 1):
            if k % t:
                continue
            for mu in empty_core_partitions(k // t, t):
                c = b_coeff(lam, mu, t)
                if c:
                    out[mu] = sgn_t((mu, ()), t) * c
    elif family == "sp":
        sign = (-1) ** (size(lam) * (t - 1))
        for k in range(0, size(lam) + 1):
            for mu in empty_core_partitions(k, t):
                c = b_coeff(conjugate(lam), mu, t)
                if c:
                    out[conjugate(mu)] = sign * sgn_t((mu, ()), t) * c
    else:
        raise ValueError(f"no SXP rule for {family}")
    return dict(sorted(out.items(), reverse=True))


# -- weights for odd orthogonal groups ----------------------------------------


@dataclass(frozen=True)
class LeviShape:
    gl: Tuple[int, ...]
    so: Optional[int]

    def __str__(self):
        parts = [f"GL{n}" for n in self.gl]
        if self.so is not None:
            parts.append(f"SO{self.so}")
        return " x ".join(parts) if parts else "1"

    def to_json(self):
        return {"gl": list(self.gl), "so": self.so, "text": str(self)}


def pair_weight(alpha, beta, n: int) -> Tuple[int, ...]:
    """[alpha, beta]_n = (alpha_1, ..., 0, ..., -beta_l, ..., -beta_1)."""
    alpha, beta = normalize(alpha), normalize(beta)
    if len(alpha) + len(beta) > n:
        raise ValueError(f"[{alpha}, {beta}] does not fit in length {n}")
    return alpha + (0,) * (n - len(alpha) - len(beta)) + tuple(-x for x in reversed(beta))


def construction_so(lam, n: int, t: int):
    """Weights gamma_n(lam; t) and the Levi shape they are dominant for."""
    _check_t(t)
    lam = normalize(lam)
    if len(lam) > n:
        raise ValueError(f"l({lam}) > n = {n}")
    a, b = divmod(n, t)
    cq = core_quotient(lam, t)
    quot, kappa = cq.quotient, cq.kappa
    weights, gl = [], []
    for r in range((t - 2) // 2 + 1):
        low = 0 <= r <= b - 1
        if low and 0 <= t - r - 1 <= b - 1:
            d = 2
        elif low:
            d = 1
        else:
            d = 0
        m = 2 * a + d
        left, right = quot[(-r - b - 1) % t], quot[(r - b) % t]
        shift = kappa[(r - b) % t]
        weights.append(tuple(x + shift for x in pair_weight(left, right, m)))
        gl.append(m)
    so = None
    if t % 2:
        mid = (t - 1) // 2
        d = 1 if b > mid else 0
        gamma = quot[(mid - b) % t]
        if len(gamma) > a + d:
            raise ValueError(f"{gamma} longer than {a + d}")
        weights.append(gamma)
        so = 2 * (a + d) + 1
    return tuple(weights), LeviShape(tuple(gl), so)


__all__ = [
    "CharValueTable", "LeviShape", "SXPTerm", "a_coeff", "a_coefficients", "b_coeff",
    "character_table", "characteristic", "chi", "chi_skew", "class_inner", "construction_so",
    "empty_core_partitions", "free_series", "farahat_ch_check", "farahat_check", "littlewood_mult_check",
    "pair_weight", "schur_coefficients", "sxp_schur", "sxp_wildon", "universal_sxp",
]
