"""Littlewood decomposition: t-cores, t-quotients and the kappa vector.

Beads are the integers m_i = lam_i - i.  Runner r holds the beads with
m = r (mod t) (floored modulus) and a bead at m sits at position p = (m - r)//t
of its runner.  Positions p >= 0 count as positive.  With these conventions
the 3-core of (6,5,5,1) is (1,1) with kappa (1,-1,0).
"""

from dataclasses import dataclass
from functools import lru_cache
from threading import Lock
from typing import Optional, Tuple

from .partitions import (
    Partition,
    add_rectangle,
    conjugate,
    contains,
    is_z_asymmetric,
    normalize,
    rank,
    shifted_rank,
    strip_zeros,
)


@dataclass(frozen=True)
class CoreQuotient:
    t: int
    core: Partition
    quotient: Tuple[Partition, ...]
    kappa: Tuple[int, ...]

    def to_json(self):
        return {
            "t": self.t,
            "core": list(self.core),
            "quotient": [list(q) for q in self.quotient],
            "kappa": list(self.kappa),
        }


@dataclass(frozen=True)
class ZAsymWitness:
    z: int
    t: int
    a: int
    b: int
    nu: Tuple[Optional[Partition], ...]
    xi: Tuple[Optional[Partition], ...]
    conjugated: bool = False

    def to_json(self):
        def enc(seq):
            return [None if p is None else list(p) for p in seq]
        return {"z": self.z, "t": self.t, "a": self.a, "b": self.b,
                "nu": enc(self.nu), "xi": enc(self.xi), "conjugated": self.conjugated}


def _check_t(t):
    if not isinstance(t, int) or t < 2:
        raise ValueError(f"t must be an integer >= 2, got {t!r}")


def beads(lam, n: Optional[int] = None):
    """The first n beads m_i = lam_i - i (default n = l(lam) + 1)."""
    lam = normalize(lam)
    if n is None:
        n = len(lam) + 1
    if n < len(lam):
        raise ValueError("window shorter than the partition")
    return [(lam[i] if i < len(lam) else 0) - i - 1 for i in range(n)]


def core_quotient(lam, t: int, window: Optional[int] = None) -> CoreQuotient:
    _check_t(t)
    lam = normalize(lam)
    n = len(lam) + t if window is None else window
    if n < len(lam):
        raise ValueError("window shorter than the partition")
    # every m < -n is a bead; pad so each runner sees its bottom run
    n = max(n, len(lam) + t)
    ms = beads(lam, n)
    present = set(ms)
    kappa = []
    quotient = []
    for r in range(t):
        pos = sorted(((m - r) // t for m in ms if m % t == r), reverse=True)
        plus = sum(1 for p in pos if p >= 0)
        low = -n  # smallest bead value inside the window
        gaps = sum(1 for m in range(low, r) if m % t == r and m not in present)
        c = plus - gaps
        kappa.append(c)
        quotient.append(strip_zeros(p + j - c for j, p in enumerate(pos, 1)))
    kappa = tuple(kappa)
    return CoreQuotient(t, core_from_kappa(kappa, t), tuple(normalize(q) for q in quotient), kappa)


def _assemble(runners, t):
    """Rebuild a partition from per-runner bead positions given as (c_r, parts)."""
    longest = max(len(parts) for _, parts in runners) + 1
    # every position below cut is a bead on every runner
    cut = min(t * (c - longest) + r for r, (c, _) in enumerate(runners))
    cs = [c for c, _ in runners]
    depth = longest + max(cs) - min(cs) + 2
    ms = []
    for r, (c, parts) in enumerate(runners):
        for j in range(1, depth + 1):
            p = (parts[j - 1] if j <= len(parts) else 0) - j + c
            m = t * p + r
            if m >= cut:
                ms.append(m)
    ms.sort(reverse=True)
    return normalize(strip_zeros(m + i for i, m in enumerate(ms, 1)))


@lru_cache(maxsize=4096)
def _core_from_kappa_cached(kappa, t):
    return _assemble([(c, ()) for c in kappa], t)


_core_lock = Lock()


def core_from_kappa(kappa, t: int) -> Partition:
    _check_t(t)
    kappa = tuple(int(c) for c in kappa)
    if len(kappa) != t:
        raise ValueError(f"kappa must have {t} entries")
    if sum(kappa) != 0:
        raise ValueError(f"kappa {kappa} does not sum to zero")
    with _core_lock:
        return _core_from_kappa_cached(kappa, t)


def core_size(kappa, t):
    """|core| = sum(t c^2/2 + r c)."""
    twice = sum(t * c * c + 2 * r * c for r, c in enumerate(kappa))
    return twice // 2


def is_t_core(lam, t: int) -> bool:
    return all(not q for q in core_quotient(lam, t).quotient)


def from_core_quotient(core, quotient, t: int) -> Partition:
    _check_t(t)
    core = normalize(core)
    quotient = [normalize(q) for q in quotient]
    if len(quotient) != t:
        raise ValueError(f"need exactly {t} quotient partitions")
    cq = core_quotient(core, t)
    if any(cq.quotient):
        raise ValueError(f"{core} is not a {t}-core")
    return _assemble(list(zip(cq.kappa, quotient)), t)


def t_core(lam, t):
    return core_quotient(lam, t).core


def is_t_tileable(shape, t: int) -> bool:
    outer, inner = normalize(shape[0]), normalize(shape[1])
    if not contains(outer, inner):
        return False
    if (sum(outer) - sum(inner)) % t:
        return False
    a, b = core_quotient(outer, t), core_quotient(inner, t)
    return a.kappa == b.kappa and all(contains(p, q) for p, q in zip(a.quotient, b.quotient))


def _sign_to_core(lam, t):
    """(-1)^(beads jumped) while pushing every bead of lam flush-left."""
    lam = normalize(lam)
    n = len(lam) + t
    present = set(beads(lam, n))
    floor = -n
    sign = 1
    moved = True
    while moved:
        moved = False
        for m in sorted(present, reverse=True):
            if m - t >= floor and m - t not in present:
                jumped = sum(1 for x in range(m - t + 1, m) if x in present)
                present.remove(m)
                present.add(m - t)
                if jumped % 2:
                    sign = -sign
                moved = True
                break
    return sign


def sgn_t(shape, t: int) -> int:
    _check_t(t)
    outer, inner = normalize(shape[0]), normalize(shape[1])
    if not is_t_tileable((outer, inner), t):
        raise ValueError(f"{outer}/{inner} is not {t}-tileable")
    return _sign_to_core(outer, t) * _sign_to_core(inner, t)


def sgn_t_partition(lam, t: int) -> int:
    """sgn_t(lam/empty) for lam with empty t-core."""
    return sgn_t((lam, ()), t)


def remove_hook(lam, i, j):
    """Remove the rim ribbon attached to the hook at cell (i, j) (0-based)."""
    lam = list(lam)
    conj = conjugate(lam)
    bottom = conj[j] - 1
    new = lam[:]
    for r in range(i, bottom):
        new[r] = lam[r + 1] - 1
    new[bottom] = j
    return normalize(strip_zeros(new)), bottom - i


def peel_sign(shape, t: int, reverse: bool = False) -> Optional[int]:
    """Sign from geometric ribbon removal; None when the shape is not tileable.

    Ribbons are removed from the outer shape one hook at a time, searching
    depth first; ``reverse`` flips the order in which hooks are tried.
    """
    outer, inner = normalize(shape[0]), normalize(shape[1])
    if not contains(outer, inner):
        return None

    memo = {}

    def rec(lam):
        if lam == inner:
            return 1
        if lam in memo:
            return memo[lam]
        result = None
        cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
        if reverse:
            cells.reverse()
        conj = conjugate(lam)
        for i, j in cells:
            if lam[i] - j + conj[j] - i - 1 != t:
                continue
            smaller, height = remove_hook(lam, i, j)
            if not contains(smaller, inner):
                continue
            sub = rec(smaller)
            if sub is not None:
                result = sub * (-1) ** height
                break
        memo[lam] = result
        return result

    return rec(outer)


def sigma_perm(lam, t: int, n: int):
    """One-line notation (1-based) and sign of the residue sorting permutation."""
    _check_t(t)
    lam = normalize(lam)
    if n < len(lam):
        raise ValueError(f"n={n} is smaller than l(lambda)={len(lam)}")
    values = [(lam[i] if i < len(lam) else 0) - i - 1 for i in range(n)]
    order = sorted(range(n), key=lambda i: (values[i] % t, -values[i]))
    perm = tuple(i + 1 for i in order)
    return perm, permutation_sign(perm)


def permutation_sign(perm) -> int:
    perm = [p - 1 for p in perm]
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def in_C(kappa, b: int, t: int) -> bool:
    """Membership of kappa in the symmetry class C_{b;t} (0 <= b <= t-1)."""
    for r in range(b):
        if kappa[r] + kappa[b - r - 1]:
            return False
    for s in range(b, t):
        if kappa[s] + kappa[t + b - s - 1]:
            return False
    return True


def split_z(z: int, t: int):
    """z = a t + b with 0 <= b <= t-1."""
    return divmod(z, t)


def minimal_z_asym(kappa, z: int, t: int) -> Partition:
    """The smallest z-asymmetric partition whose t-core has the given kappa.

    For z = a t + b >= 0 the quotient is ((a+1)^c_r) on runners r < b and
    (a^c_s) on runners s >= b, in each case only where the entry is positive.
    Negative z is handled through conjugation.
    """
    _check_t(t)
    kappa = tuple(kappa)
    if len(kappa) != t or sum(kappa):
        raise ValueError(f"invalid kappa {kappa}")
    if z < 0:
        dual = tuple(-c for c in reversed(kappa))
        return conjugate(minimal_z_asym(dual, -z, t))
    a, b = split_z(z, t)
    if not in_C(kappa, b, t):
        raise ValueError(f"kappa {kappa} violates the symmetry conditions for z={z}, t={t}")
    quotient = []
    for r, c in enumerate(kappa):
        width = a + 1 if r < b else a
        quotient.append((width,) * c if c > 0 and width > 0 else ())
    return from_core_quotient(core_from_kappa(kappa, t), quotient, t)


def _peel_rectangle(part, width, height):
    """part minus (width^height) if that is again a partition, else None."""
    part = tuple(part)
    if height == 0 or width == 0:
        return part
    if len(part) < height:
        return None
    new = list(part)
    for i in range(height):
        new[i] -= width
    if new[height - 1] < 0:
        return None
    if any(x < y for x, y in zip(new, new[1:])):
        return None
    return normalize(strip_zeros(new))


def _fold(big, small, width, c):
    """Find nu with big = nu + (width^(c+k)), small = nu' + (width^k), k = rk_c(nu)."""
    for k in range(0, len(big) + 2):
        nu = _peel_rectangle(big, width, c + k)
        if nu is None:
            if width and c + k > len(big):
                break
            continue
        if shifted_rank(nu, c) != k:
            continue
        if normalize(strip_zeros(add_rectangle(conjugate(nu), width, k))) == small:
            return nu
    return None


def zasym_witness(lam, z: int, t: int) -> Optional[ZAsymWitness]:
    _check_t(t)
    lam = normalize(lam)
    if not is_z_asymmetric(lam, z):
        return None
    if z < 0:
        w = zasym_witness(conjugate(lam), -z, t)
        return None if w is None else ZAsymWitness(z, t, w.a, w.b, w.nu, w.xi, True)
    a, b = split_z(z, t)
    cq = core_quotient(lam, t)
    c, q = cq.kappa, cq.quotient
    if not in_C(c, b, t):
        return None
    nu = [None] * b
    for r in range(b):
        partner = b - r - 1
        if c[r] < 0:
            continue
        found = _fold(q[r], q[partner], a + 1, c[r])
        if found is None:
            return None
        nu[r] = found
    xi = [None] * (t - b)
    for s in range(b, t):
        partner = t + b - s - 1
        if c[s] < 0:
            continue
        found = _fold(q[s], q[partner], a, c[s])
        if found is None:
            return None
        xi[s - b] = found
    return ZAsymWitness(z, t, a, b, tuple(nu), tuple(xi))


def reconstruct_from_witness(w: ZAsymWitness, kappa) -> Partition:
    """Rebuild the partition from a witness and the kappa vector of its core."""
    t, a, b = w.t, w.a, w.b
    c = tuple(kappa)
    if w.conjugated:
        c = tuple(-x for x in reversed(c))
    quotient = [None] * t

    def place(index, partner, nu, width, cr):
        k = shifted_rank(nu, cr)
        quotient[index] = normalize(strip_zeros(add_rectangle(nu, width, cr + k)))
        other = normalize(strip_zeros(add_rectangle(conjugate(nu), width, k)))
        if quotient[partner] is not None and quotient[partner] != other:
            raise ValueError("inconsistent witness")
        quotient[partner] = other

    for r, nu in enumerate(w.nu):
        if nu is not None:
            place(r, b - r - 1, nu, a + 1, c[r])
    for s, xi in enumerate(w.xi, start=b):
        if xi is not None:
            place(s, t + b - s - 1, xi, a, c[s])
    lam = from_core_quotient(core_from_kappa(c, t), quotient, t)
    return conjugate(lam) if w.conjugated else lam


def rank_decomposition_check(lam, t: int) -> bool:
    cq = core_quotient(lam, t)
    rhs = rank(cq.core) + sum(shifted_rank(q, c) for q, c in zip(cq.quotient, cq.kappa))
    return rank(lam) == rhs


def cut_and_twist(lam) -> Partition:
    """Shift every bead at a nonnegative position one step right: (u+z-1|v) -> (u+z|v)."""
    lam = normalize(lam)
    ms = beads(lam, len(lam) + 1)
    shifted = [m + 1 if m >= 0 else m for m in ms]
    return normalize(strip_zeros(m + i for i, m in enumerate(shifted, 1)))
