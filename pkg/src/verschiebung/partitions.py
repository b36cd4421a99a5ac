"""Integer partitions as plain tuples.

A partition is a weakly decreasing tuple of positive integers; the empty
tuple is the empty partition.  Every function here accepts lists or tuples,
possibly with trailing zeros, and returns normalized tuples.
"""

from functools import lru_cache
from typing import NamedTuple, Optional, Sequence, Tuple

Partition = Tuple[int, ...]


class FrobeniusCoords(NamedTuple):
    arms: Tuple[int, ...]
    legs: Tuple[int, ...]

    def __str__(self):
        return "(" + ",".join(map(str, self.arms)) + " | " + ",".join(map(str, self.legs)) + ")"


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    def __str__(self):
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


def normalize(parts: Sequence[int]) -> Partition:
    """Drop trailing zeros and check the sequence is a partition."""
    parts = tuple(int(p) for p in parts)
    n = len(parts)
    while n and parts[n - 1] == 0:
        n -= 1
    parts = parts[:n]
    for i, p in enumerate(parts):
        if p < 0:
            raise ValueError(f"negative part in {parts}")
        if i and p > parts[i - 1]:
            raise ValueError(f"{parts} is not weakly decreasing")
    if 0 in parts:
        raise ValueError(f"zero part inside {parts}")
    return parts


def is_partition(seq) -> bool:
    try:
        normalize(seq)
    except ValueError:
        return False
    return True


def size(lam) -> int:
    return sum(lam)


def skew(outer, inner=()) -> SkewShape:
    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner):
        raise ValueError(f"{format_partition(inner)} is not contained in {format_partition(outer)}")
    return SkewShape(outer, inner)


def parse_partition(text: str) -> Partition:
    """Parse ``"6,5,5,1"``; ``"-"`` and the empty string mean the empty partition."""
    text = text.strip()
    if text in ("-", "", "()"):
        return ()
    text = text.strip("()[]")
    try:
        parts = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return normalize(parts)


def format_partition(lam) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def conjugate(lam) -> Partition:
    lam = normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def rank(lam) -> int:
    """Frobenius rank: the number of diagonal cells."""
    return sum(1 for i, p in enumerate(lam) if p > i)


def sequence_rank(seq) -> int:
    """Number of i (1-based) with seq_i >= i; agrees with rank on partitions."""
    return sum(1 for i, p in enumerate(seq, 1) if p >= i)


def shifted_rank(lam, c: int) -> int:
    lam = normalize(lam)
    if c >= 0:
        return rank(lam[c:])
    return rank(conjugate(lam)[-c:])


def frobenius(lam) -> FrobeniusCoords:
    lam = normalize(lam)
    conj = conjugate(lam)
    d = rank(lam)
    return FrobeniusCoords(tuple(lam[i] - i - 1 for i in range(d)),
                           tuple(conj[i] - i - 1 for i in range(d)))


def from_frobenius(arms, legs) -> Partition:
    arms, legs = tuple(arms), tuple(legs)
    if len(arms) != len(legs):
        raise ValueError("arms and legs must have the same length")
    for seq in (arms, legs):
        if any(x < 0 for x in seq) or any(x <= y for x, y in zip(seq, seq[1:])):
            raise ValueError(f"{seq} is not strictly decreasing and nonnegative")
    d = len(arms)
    if d == 0:
        return ()
    rows = [arms[i] + i + 1 for i in range(d)]
    # rows below the diagonal block are read from the legs
    cols = [legs[j] + j + 1 for j in range(d)]
    nrows = cols[0]
    for i in range(d, nrows):
        rows.append(sum(1 for j in range(d) if cols[j] > i))
    return normalize(rows)


def hook_lengths(lam):
    lam = normalize(lam)
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def contains(outer, inner) -> bool:
    if len(inner) > len(outer):
        return False
    return all(q <= p for p, q in zip(outer, inner))


def is_z_asymmetric(lam, z: int) -> bool:
    """True when lam = (u+z | u) in Frobenius notation."""
    arms, legs = frobenius(lam)
    return all(a - b == z for a, b in zip(arms, legs))


def _strict_sequences(floor: int, budget: int, extra: int):
    """Strictly decreasing tuples w with w_i >= floor and sum(2 w_i + extra) <= budget."""
    out = [()]

    def grow(prefix, used, below):
        for w in range(floor, below):
            cost = 2 * w + extra
            if used + cost > budget:
                break
            seq = prefix + (w,)
            out.append(seq)
            grow(seq, used + cost, w)

    # the largest entry comes first, so recurse on entries below it
    def start():
        w = floor
        while 2 * w + extra <= budget:
            out.append((w,))
            grow((w,), 2 * w + extra, w)
            w += 1

    start()
    return out


def enumerate_z_asymmetric(z: int, max_size: int):
    """All z-asymmetric partitions of size at most max_size, sorted by size."""
    result = []
    for w in _strict_sequences(0, max_size, abs(z) + 1):
        if z >= 0:
            lam = from_frobenius(tuple(x + z for x in w), w)
        else:
            lam = from_frobenius(w, tuple(x - z for x in w))
        result.append(lam)
    return sorted(result, key=lambda p: (sum(p), tuple(-x for x in p)))


def z_asymmetric_counts(z: int, max_size: int):
    """Coefficients of prod_{i>=0} (1 + q^(1+|z|+2i)) up to q^max_size."""
    coeffs = [1] + [0] * max_size
    e = 1 + abs(z)
    while e <= max_size:
        for n in range(max_size, e - 1, -1):
            coeffs[n] += coeffs[n - e]
        e += 2
    return coeffs


def ribbon_info(shape) -> Optional[Tuple[int, int]]:
    """(size, height) if outer/inner is a ribbon, otherwise None."""
    outer, inner = normalize(shape[0]), normalize(shape[1])
    if not contains(outer, inner):
        return None
    cells = set()
    for i, p in enumerate(outer):
        q = inner[i] if i < len(inner) else 0
        for j in range(q, p):
            cells.add((i, j))
    if not cells:
        return None
    for (i, j) in cells:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            return None
    # edge connectivity
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if seen != cells:
        return None
    rows = {i for i, _ in cells}
    return len(cells), len(rows) - 1


def add_rectangle(seq, width: int, height: int):
    """Add width to each of the first height entries (padding with zeros)."""
    seq = list(seq) + [0] * max(0, height - len(seq))
    for i in range(height):
        seq[i] += width
    return tuple(seq)


def strip_zeros(seq):
    seq = tuple(seq)
    n = len(seq)
    while n and seq[n - 1] == 0:
        n -= 1
    return seq[:n]


def dominance_key(lam):
    return tuple(-p for p in lam)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: Optional[int] = None) -> Tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int):
    for k in range(n + 1):
        yield from partitions_of(k)


def partitions_in_box(rows: int, cols: int):
    """All partitions fitting inside an rows x cols rectangle."""
    def rec(i, bound):
        if i == rows or bound == 0:
            yield ()
            return
        for p in range(bound, -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest
    yield from rec(0, cols)


def sub_partitions(lam):
    """All partitions contained in lam."""
    lam = normalize(lam)

    def rec(i, bound):
        if i == len(lam):
            yield ()
            return
        yield ()
        for p in range(1, min(bound, lam[i]) + 1):
            for rest in rec(i + 1, p):
                yield (p,) + rest
    yield from rec(0, lam[0] if lam else 0)


def z_lambda(lam) -> int:
    """Centralizer order prod m_i! i^m_i."""
    from math import factorial
    out = 1
    for part in set(lam):
        m = lam.count(part)
        out *= factorial(m) * part ** m
    return out
