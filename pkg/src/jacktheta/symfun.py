"""Symmetric functions as finite coefficient maps in the power-sum / monomial bases.

The p <-> m transition matrices are built per weight from an exact assignment
count, validated on first build against direct expansion in as many variables
as the weight, and cached for the life of the process.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import Dict

from .exactalg import MPoly, RatFunc, alpha_power
from .partitions import (Partition, enumerate_partitions, from_parts, mults,
                         weight, z_factor)

POWER_SUM = "p"
MONOMIAL = "m"

# direct-expansion validation is affordable up to this weight; all production
# uses stay well below it
_VALIDATE_MAX_WEIGHT = 10

_lock = threading.Lock()
_p_to_m_cache: Dict[int, dict] = {}
_m_to_p_cache: Dict[int, dict] = {}


class SymFun:
    """Finite mapping from index partitions to RatFunc coefficients in one basis."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs=None):
        if basis not in (POWER_SUM, MONOMIAL):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        cleaned = {}
        for lam, c in (coeffs or {}).items():
            if not isinstance(c, RatFunc):
                c = RatFunc(c) if isinstance(c, MPoly) else RatFunc.const(c)
            if not c.is_zero():
                cleaned[tuple(lam)] = c
        self.coeffs = cleaned

    @classmethod
    def term(cls, basis: str, index: Partition, coef=1) -> "SymFun":
        return cls(basis, {tuple(index): coef})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, index: Partition) -> RatFunc:
        return self.coeffs.get(tuple(index), RatFunc.const(0))

    def __add__(self, other: "SymFun") -> "SymFun":
        if self.basis != other.basis:
            raise ValueError("cannot add across bases")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
        return SymFun(self.basis, out)

    def __neg__(self) -> "SymFun":
        return SymFun(self.basis, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: "SymFun") -> "SymFun":
        return self + (-other)

    def scale(self, c) -> "SymFun":
        if not isinstance(c, RatFunc):
            c = RatFunc(c) if isinstance(c, MPoly) else RatFunc.const(c)
        if c.is_zero():
            return SymFun(self.basis)
        return SymFun(self.basis, {lam: v * c for lam, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def sorted_items(self):
        """Canonical order: by weight, then descending lexicographic index."""
        return sorted(self.coeffs.items(), key=lambda kv: (weight(kv[0]), tuple(-p for p in kv[0])))

    def to_obj(self):
        return {
            "basis": self.basis,
            "terms": [
                {"index": list(lam), "coef": c.to_obj()}
                for lam, c in self.sorted_items()
            ],
        }

    @classmethod
    def from_obj(cls, obj) -> "SymFun":
        return cls(obj["basis"],
                   {tuple(t["index"]): RatFunc.from_obj(t["coef"]) for t in obj["terms"]})

    def __repr__(self):
        if not self.coeffs:
            return "SymFun(0)"
        bits = [f"({c.render()})*{self.basis}_{list(lam)}" for lam, c in self.sorted_items()]
        return "SymFun(" + " + ".join(bits) + ")"


# -- transition matrices -----------------------------------------------------


def _assign_count(parts: tuple, caps: tuple) -> int:
    """Number of maps from the given parts onto capacity slots filling each exactly.

    parts: multiset of part values to distribute (weakly decreasing tuple);
    caps:  remaining slot capacities (weakly decreasing tuple, zeros dropped).
    """
    if sum(parts) != sum(caps):
        return 0
    return _assign_count_rec(parts, caps)


_assign_memo: dict = {}


def _assign_count_rec(parts: tuple, caps: tuple) -> int:
    if not parts:
        return 1  # caps sums to zero and has no zero entries, so it is empty
    key = (parts, caps)
    hit = _assign_memo.get(key)
    if hit is not None:
        return hit
    p0 = parts[0]
    rest = parts[1:]
    total = 0
    seen = set()
    for idx, c in enumerate(caps):
        if c < p0 or c in seen:
            continue
        seen.add(c)
        m = caps.count(c)
        reduced = caps[:idx] + caps[idx + 1:]
        if c > p0:
            reduced = tuple(sorted(reduced + (c - p0,), reverse=True))
        total += m * _assign_count_rec(rest, reduced)
    _assign_memo[key] = total
    return total


def p_to_m_matrix(n: int) -> dict:
    """Row map rho -> {mu: integer} such that p_rho = sum_mu R[rho][mu] m_mu."""
    with _lock:
        hit = _p_to_m_cache.get(n)
    if hit is not None:
        return hit
    partitions_n = enumerate_partitions(n)
    rows = {}
    for rho in partitions_n:
        row = {}
        for mu in partitions_n:
            cnt = _assign_count(rho, mu)
            if cnt:
                row[mu] = cnt
        rows[rho] = row
    if n <= _VALIDATE_MAX_WEIGHT:
        _validate_rows(n, rows)
    with _lock:
        _p_to_m_cache.setdefault(n, rows)
        return _p_to_m_cache[n]


def m_to_p_matrix(n: int) -> dict:
    """Row map mu -> {rho: Fraction} inverting p_to_m_matrix(n)."""
    with _lock:
        hit = _m_to_p_cache.get(n)
    if hit is not None:
        return hit
    rows = p_to_m_matrix(n)
    # R[rho][mu] != 0 forces rho <= mu in dominance, hence in lex order, so R
    # is triangular over ascending lex and forward substitution inverts it
    order = sorted(rows.keys())
    inv = {}
    for mu in order:
        x: dict = {}
        for nu in order:
            s = Fraction(1) if nu == mu else Fraction(0)
            for rho, xr in x.items():
                c = rows[rho].get(nu)
                if c:
                    s -= xr * c
            if s:
                x[nu] = s / rows[nu][nu]
        inv[mu] = x
    with _lock:
        _m_to_p_cache.setdefault(n, inv)
        return _m_to_p_cache[n]


def _validate_rows(n: int, rows: dict) -> None:
    """First-build self check: compare each row against expansion in n variables."""
    if n == 0:
        return
    m_expansions = {mu: expand_monomial(mu, n) for mu in rows}
    for rho, row in rows.items():
        direct = expand_power_sum(rho, n)
        recon: dict = {}
        for mu, c in row.items():
            for mono, v in m_expansions[mu].items():
                recon[mono] = recon.get(mono, 0) + c * v
        recon = {k: v for k, v in recon.items() if v}
        if recon != direct:
            raise AssertionError(f"transition row for p_{rho} failed direct expansion check")


def expand_power_sum(rho: Partition, n_vars: int) -> dict:
    """p_rho expanded in n_vars variables as {exponent tuple: int}."""
    out = {(0,) * n_vars: 1}
    for r in rho:
        nxt: dict = {}
        for mono, c in out.items():
            for i in range(n_vars):
                exp = list(mono)
                exp[i] += r
                key = tuple(exp)
                nxt[key] = nxt.get(key, 0) + c
        out = nxt
    return out


def expand_monomial(mu: Partition, n_vars: int) -> dict:
    """m_mu expanded in n_vars variables as {exponent tuple: 1}."""
    if len(mu) > n_vars:
        return {}
    padded = tuple(mu) + (0,) * (n_vars - len(mu))
    return {perm: 1 for perm in _distinct_perms(padded)}


def _distinct_perms(values: tuple):
    pool = sorted(values, reverse=True)

    def gen(remaining):
        if not remaining:
            yield ()
            return
        prev = object()
        for i, v in enumerate(remaining):
            if v == prev:
                continue
            prev = v
            for rest in gen(remaining[:i] + remaining[i + 1:]):
                yield (v,) + rest

    return gen(tuple(pool))


# -- operations ---------------------------------------------------------------


def convert(f: SymFun, target: str) -> SymFun:
    """Exact change of basis between power sums and monomials."""
    if target not in (POWER_SUM, MONOMIAL):
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    out: dict = {}
    by_weight: dict = {}
    for lam, c in f.coeffs.items():
        by_weight.setdefault(weight(lam), {})[lam] = c
    for n, chunk in by_weight.items():
        matrix = p_to_m_matrix(n) if f.basis == POWER_SUM else m_to_p_matrix(n)
        for lam, c in chunk.items():
            for tgt, entry in matrix[lam].items():
                s = out.get(tgt)
                add = c * RatFunc.const(entry)
                out[tgt] = add if s is None else s + add
    return SymFun(target, out)


def scalar_product(f: SymFun, g: SymFun) -> RatFunc:
    """Alpha-deformed pairing: <p_lam, p_mu> = delta * alpha^len(lam) * z_lam."""
    fp = convert(f, POWER_SUM)
    gp = convert(g, POWER_SUM)
    if len(gp.coeffs) < len(fp.coeffs):
        fp, gp = gp, fp
    total = RatFunc.const(0)
    for lam, c in fp.coeffs.items():
        d = gp.coeffs.get(lam)
        if d is not None:
            total = total + c * d * RatFunc(alpha_power(len(lam)).scale(z_factor(lam)))
    return total


def mul_p1(f: SymFun) -> SymFun:
    """Multiply by p_1 in the power-sum basis (append one part 1 per index)."""
    if f.basis != POWER_SUM:
        raise ValueError("mul_p1 expects the power-sum basis")
    return SymFun(POWER_SUM, {lam + (1,): c for lam, c in f.coeffs.items()})


def apply_E2(f: SymFun) -> SymFun:
    """The raising derivation sum_k k p_{k+1} d/dp_k, applied termwise.

    On p_mu this replaces one occurrence of each part r by r+1, weighted by
    r times the multiplicity of r.
    """
    if f.basis != POWER_SUM:
        raise ValueError("apply_E2 expects the power-sum basis")
    out: dict = {}
    for lam, c in f.coeffs.items():
        for r, m in mults(lam).items():
            lifted = list(lam)
            lifted.remove(r)
            lifted.append(r + 1)
            key = from_parts(lifted)
            add = c * RatFunc.const(r * m)
            s = out.get(key)
            s = add if s is None else s + add
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return SymFun(POWER_SUM, out)
