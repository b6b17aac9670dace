"""Partition combinatorics: hooks, contents, box moves and part surgery.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the empty partition.  Keeping them as tuples makes them cheap dict
keys for the memoized lattice recursions downstream.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .exactalg import MPoly, RatFunc, alpha_power

Partition = tuple

VALID_MODIFY_KINDS = ("down_r", "up_r", "down_rs", "up_rs", "Down_rs", "Up_rs")


class WeightMismatch(Exception):
    pass


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize an iterable of parts into a partition tuple."""
    t = tuple(int(p) for p in parts)
    if any(p <= 0 for p in t):
        raise ValueError(f"parts must be positive: {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {t}")
    return t


def from_parts(parts: Iterable[int]) -> Partition:
    """Sort an arbitrary multiset of positive parts into a partition."""
    t = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in t):
        raise ValueError(f"parts must be positive: {t}")
    return t


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def mult(lam: Partition, i: int) -> int:
    return sum(1 for p in lam if p == i)


def mults(lam: Partition) -> dict:
    out = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    out = [0] * lam[0]
    for p in lam:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def z_factor(lam: Partition) -> int:
    z = 1
    for part, m in mults(lam).items():
        z *= part ** m
        for t in range(1, m + 1):
            z *= t
    return z


def boxes(lam: Partition):
    """All cells (i, j) of the diagram, 1-based."""
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            yield i, j


def hook_products(lam: Partition):
    """Lower/upper hook products and their product, as polynomials in alpha.

    h  = prod over boxes of (arm-adjusted colength + 1 + alpha*arm),
    h' = prod of (colength + alpha*(arm + 1)), j = h*h'.
    """
    conj = conjugate(lam)
    h = MPoly.const(1, ("alpha",))
    hp = MPoly.const(1, ("alpha",))
    for i, j in boxes(lam):
        leg = conj[j - 1] - i
        arm = lam[i - 1] - j
        h = h * MPoly(("alpha",), {(0,): leg + 1, (1,): arm})
        hp = hp * MPoly(("alpha",), {(0,): leg, (1,): arm + 1})
    return h, hp, h * hp


def alpha_content_sum(lam: Partition) -> RatFunc:
    """Sum of alpha-contents (j - 1 - (i-1)/alpha) over all boxes."""
    col_sum = sum(j - 1 for _, j in boxes(lam))
    row_sum = sum(i - 1 for i, _ in boxes(lam))
    # (alpha*col_sum - row_sum) / alpha
    return RatFunc(MPoly(("alpha",), {(1,): col_sum, (0,): -row_sum}),
                   MPoly.variable("alpha"))


def raising_factorial(u, lam: Partition) -> RatFunc:
    """Generalized raising factorial (u)_lam; u is a variable name or a value."""
    if isinstance(u, str):
        up = MPoly.variable(u)
    elif isinstance(u, MPoly):
        up = u
    else:
        up = MPoly.const(u)
    alpha = MPoly.variable("alpha")
    num = MPoly.const(1)
    n = 0
    for i, j in boxes(lam):
        # u + j - 1 - (i-1)/alpha, cleared:  alpha*u + alpha*(j-1) - (i-1)
        num = num * (alpha * up + alpha.scale(j - 1) - (i - 1))
        n += 1
    return RatFunc(num, alpha_power(n))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff mu <= lam in dominance order (equal weights required)."""
    if weight(mu) != weight(lam):
        raise WeightMismatch(f"|{mu}| != |{lam}|")
    partial_mu = 0
    partial_lam = 0
    for i in range(max(len(mu), len(lam))):
        partial_mu += mu[i] if i < len(mu) else 0
        partial_lam += lam[i] if i < len(lam) else 0
        if partial_mu > partial_lam:
            return False
    return True


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff mu fits inside lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def add_moves(lam: Partition):
    """Valid one-box additions as (row index i, resulting partition)."""
    out = []
    for i in range(1, len(lam) + 2):
        if i == 1 or i == len(lam) + 1 or lam[i - 2] > lam[i - 1]:
            if i <= len(lam):
                new = lam[:i - 1] + (lam[i - 1] + 1,) + lam[i:]
            else:
                new = lam + (1,)
            out.append((i, new))
    return out


def remove_moves(lam: Partition):
    """Valid one-box removals as (row index i, resulting partition)."""
    out = []
    for i in range(1, len(lam) + 1):
        nxt = lam[i] if i < len(lam) else 0
        if lam[i - 1] > nxt:
            part = lam[i - 1] - 1
            new = lam[:i - 1] + ((part,) if part else ()) + lam[i:]
            out.append((i, new))
    return out


def box_moves(lam: Partition) -> dict:
    return {"add": add_moves(lam), "remove": remove_moves(lam)}


def _remove_part(parts: list, value: int) -> bool:
    try:
        parts.remove(value)
        return True
    except ValueError:
        return False


def mu_modify(mu: Partition, kind: str, *args) -> Optional[Partition]:
    """Single part surgery; returns None when a required part is absent.

    down_r(r):    remove one part r, add one part r-1        (r >= 2)
    up_r(r):      remove one part r, add one part r+1
    down_rs(r,s): remove parts r and s, add one part r+s-1
    up_rs(r,s):   add parts r and s, remove one part r+s+1
    Down_rs(r,s): remove parts r and s, add one part r+s
    Up_rs(r,s):   add parts r and s, remove one part r+s
    """
    if kind not in VALID_MODIFY_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    parts = list(mu)
    if kind == "down_r":
        (r,) = args
        if r < 2 or not _remove_part(parts, r):
            return None
        parts.append(r - 1)
    elif kind == "up_r":
        (r,) = args
        if not _remove_part(parts, r):
            return None
        parts.append(r + 1)
    elif kind == "down_rs":
        r, s = args
        if not _remove_part(parts, r):
            return None
        if not _remove_part(parts, s):
            return None
        parts.append(r + s - 1)
    elif kind == "up_rs":
        r, s = args
        if not _remove_part(parts, r + s + 1):
            return None
        parts.extend((r, s))
    elif kind == "Down_rs":
        r, s = args
        if not _remove_part(parts, r):
            return None
        if not _remove_part(parts, s):
            return None
        parts.append(r + s)
    else:  # Up_rs
        r, s = args
        if not _remove_part(parts, r + s):
            return None
        parts.extend((r, s))
    return tuple(sorted(parts, reverse=True))


def enumerate_partitions(n: int, inside: Optional[Partition] = None) -> list:
    """All partitions of n, descending lexicographic; optionally those inside a shape."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    out = []

    def gen(remaining, max_part, prefix, row):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        cap = min(remaining, max_part)
        if inside is not None:
            if row >= len(inside):
                return
            cap = min(cap, inside[row])
        for p in range(cap, 0, -1):
            prefix.append(p)
            gen(remaining - p, p, prefix, row + 1)
            prefix.pop()

    gen(n, n, [], 0)
    return out


def m1_free(mu: Partition) -> bool:
    return 1 not in mu


def strip_ones(mu: Partition):
    """(partition without its parts 1, number of parts 1 removed)."""
    core = tuple(p for p in mu if p > 1)
    return core, len(mu) - len(core)


def render_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return ()
    return partition(int(tok) for tok in text.split(","))


def rectangle(p: int, q: int) -> Partition:
    """p parts equal to q."""
    if p < 0 or q < 0 or (p > 0) != (q > 0):
        raise ValueError(f"bad rectangle {p}x{q}")
    return (q,) * p


def multirectangle(ps, qs) -> Partition:
    """Union of rectangles p_i x q_i; requires q strictly decreasing."""
    ps, qs = tuple(ps), tuple(qs)
    if len(ps) != len(qs):
        raise ValueError("p and q sequences must have equal length")
    if any(p < 1 for p in ps) or any(q < 1 for q in qs):
        raise ValueError("rectangle sides must be positive")
    if any(qs[i] <= qs[i + 1] for i in range(len(qs) - 1)):
        raise ValueError(f"column lengths must strictly decrease: {qs}")
    parts = []
    for p, q in zip(ps, qs):
        parts.extend([q] * p)
    return tuple(parts)


def binomial(n, k: int):
    """Binomial coefficient with polynomial or integer n and integer k >= 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if isinstance(n, MPoly):
        out = MPoly.const(1, n.vars)
        for t in range(k):
            out = out * (n - t)
        return out.scale(Fraction(1, _factorial(k)))
    out = 1
    for t in range(k):
        out *= n - t
    return Fraction(out, _factorial(k))


def _factorial(k: int) -> int:
    out = 1
    for t in range(2, k + 1):
        out *= t
    return out
