"""Jack polynomials in J-normalization and their coefficient machinery.

The expansion is built per weight by exact Gram-Schmidt over the power-sum
basis: taking monomial vectors in an order refining dominance and
orthogonalizing for the alpha-pairing yields the unique triangular orthogonal
family, which is then scaled so the p_{1^n} coefficient is 1 (equivalently the
m_{1^n} coefficient is n!).
"""
from __future__ import annotations

import os
import threading
from fractions import Fraction
from typing import Dict, Optional

from .exactalg import MPoly, RatFunc, alpha_power
from .partitions import (Partition, WeightMismatch, add_moves, contains,
                         dominance_leq, hook_products, length, remove_moves,
                         weight, z_factor)
from . import symfun
from .symfun import MONOMIAL, POWER_SUM, SymFun

DEFAULT_MAX_WEIGHT = int(os.environ.get("JACK_MAX_WEIGHT", "8"))


class WeightLimitExceeded(Exception):
    pass


class InvalidMove(Exception):
    pass


class NotContained(Exception):
    pass


class JackExpansion:
    """Both basis forms of one Jack polynomial."""

    __slots__ = ("lam", "in_p", "in_m")

    def __init__(self, lam: Partition, in_p: SymFun, in_m: SymFun):
        self.lam = lam
        self.in_p = in_p
        self.in_m = in_m

    def __repr__(self):
        return f"JackExpansion({self.lam}, {self.in_p!r})"


_lock = threading.Lock()
_weight_cache: Dict[int, dict] = {}   # n -> {lam: {rho: RatFunc}} p-basis rows
_expansion_cache: Dict[Partition, JackExpansion] = {}


def _pairing_norm(rho: Partition) -> RatFunc:
    return RatFunc(alpha_power(length(rho)).scale(z_factor(rho)))


def _dot(a: dict, b: dict) -> RatFunc:
    if len(b) < len(a):
        a, b = b, a
    total = RatFunc.const(0)
    for rho, c in a.items():
        d = b.get(rho)
        if d is not None:
            total = total + c * d * _pairing_norm(rho)
    return total


def _jack_weight_rows(n: int) -> dict:
    with _lock:
        hit = _weight_cache.get(n)
    if hit is not None:
        return hit
    if n == 0:
        rows = {(): {(): RatFunc.const(1)}}
    else:
        m2p = symfun.m_to_p_matrix(n)
        order = sorted(m2p.keys())  # ascending lex refines dominance
        basis_vectors = {
            lam: {rho: RatFunc.const(c) for rho, c in m2p[lam].items()}
            for lam in order
        }
        ortho: dict = {}
        norms: dict = {}
        for lam in order:
            vec = dict(basis_vectors[lam])
            for mu in order:
                if mu == lam:
                    break
                coef = _dot(basis_vectors[lam], ortho[mu]) / norms[mu]
                if coef.is_zero():
                    continue
                for rho, c in ortho[mu].items():
                    s = vec.get(rho, RatFunc.const(0)) - coef * c
                    if s.is_zero():
                        vec.pop(rho, None)
                    else:
                        vec[rho] = s
            ortho[lam] = vec
            norms[lam] = _dot(vec, vec)
        ones = (1,) * n
        rows = {}
        for lam in order:
            lead = ortho[lam][ones]  # nonzero: J-normalization exists
            rows[lam] = {rho: c / lead for rho, c in ortho[lam].items()}
    with _lock:
        _weight_cache.setdefault(n, rows)
        return _weight_cache[n]


def jack(lam: Partition, max_weight: Optional[int] = None) -> JackExpansion:
    """Jack polynomial J_lam in both bases; weight-limited by configuration."""
    lam = tuple(lam)
    limit = DEFAULT_MAX_WEIGHT if max_weight is None else max_weight
    if weight(lam) > limit:
        raise WeightLimitExceeded(f"|{lam}| = {weight(lam)} exceeds limit {limit}")
    hit = _expansion_cache.get(lam)
    if hit is not None:
        return hit
    rows = _jack_weight_rows(weight(lam))
    in_p = SymFun(POWER_SUM, rows[lam])
    in_m = symfun.convert(in_p, MONOMIAL)
    exp = JackExpansion(lam, in_p, in_m)
    _check_expansion(exp)
    with _lock:
        _expansion_cache.setdefault(lam, exp)
        return _expansion_cache[lam]


def _check_expansion(exp: JackExpansion) -> None:
    n = weight(exp.lam)
    if n == 0:
        return
    ones = (1,) * n
    lead = exp.in_m.coefficient(ones)
    fact = 1
    for t in range(2, n + 1):
        fact *= t
    if lead != RatFunc.const(fact):
        raise AssertionError(f"m_(1^n) coefficient of J_{exp.lam} is not {n}!")
    for mu in exp.in_m.coeffs:
        if not dominance_leq(mu, exp.lam):
            raise AssertionError(f"J_{exp.lam} has non-dominated monomial index {mu}")
    for rho, c in exp.in_p.coeffs.items():
        if not c.is_polynomial():
            raise AssertionError(f"theta^{exp.lam}_{rho} has a nontrivial denominator")


def theta(lam: Partition, rho: Partition, max_weight: Optional[int] = None) -> MPoly:
    """Power-sum coefficient of J_lam at p_rho, as a polynomial in alpha."""
    lam, rho = tuple(lam), tuple(rho)
    if weight(lam) != weight(rho):
        raise WeightMismatch(f"|{lam}| != |{rho}|")
    c = jack(lam, max_weight).in_p.coefficient(rho)
    return c.as_poly()


# -- Pieri and binomial coefficients ------------------------------------------


def pieri_c(lam: Partition, i: int) -> RatFunc:
    """Coefficient of J_{lam^(i)} in p_1 * J_lam (closed form)."""
    lam = tuple(lam)
    valid = {idx for idx, _ in add_moves(lam)}
    if i not in valid:
        raise InvalidMove(f"row {i} is not a valid addition for {lam}")
    ell = length(lam)
    lam_i = lam[i - 1] if i <= ell else 0
    alpha = MPoly.variable("alpha")
    out = RatFunc(MPoly.const(1),
                  alpha.scale(lam_i) + MPoly.const(ell - i + 2))
    for j in range(1, ell + 2):
        if j == i:
            continue
        lam_j = lam[j - 1] if j <= ell else 0
        diff = lam_i - lam_j
        out = out * RatFunc(alpha.scale(diff) + MPoly.const(j - i + 1),
                            alpha.scale(diff) + MPoly.const(j - i))
    return out


def binom_one_box(lam: Partition, i: int) -> RatFunc:
    """Generalized binomial binom(lam, lam_(i)) for a valid one-box removal."""
    lam = tuple(lam)
    valid = {idx for idx, _ in remove_moves(lam)}
    if i not in valid:
        raise InvalidMove(f"row {i} is not a valid removal for {lam}")
    ell = length(lam)
    lam_i = lam[i - 1]
    alpha = MPoly.variable("alpha")
    # lam_i + (ell - i)/alpha
    out = RatFunc(alpha.scale(lam_i) + MPoly.const(ell - i), alpha)
    for j in range(1, ell + 1):
        if j == i:
            continue
        diff = lam_i - lam[j - 1]
        out = out * RatFunc(alpha.scale(diff) + MPoly.const(j - i - 1),
                            alpha.scale(diff) + MPoly.const(j - i))
    return out


_binom_cache: Dict[tuple, RatFunc] = {}


def binom(lam: Partition, mu: Partition) -> RatFunc:
    """Generalized binomial coefficient binom(lam, mu) for mu inside lam.

    Computed by the downward recurrence
    (|lam| - |mu|) binom(lam, mu) = sum_i binom(lam, lam_(i)) binom(lam_(i), mu)
    with base binom(mu, mu) = 1, memoized over intermediate shapes.
    """
    lam, mu = tuple(lam), tuple(mu)
    if not contains(lam, mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    return _binom_inner(lam, mu)


def _binom_inner(lam: Partition, mu: Partition) -> RatFunc:
    if not contains(lam, mu):
        return RatFunc.const(0)
    if lam == mu:
        return RatFunc.const(1)
    key = (lam, mu)
    hit = _binom_cache.get(key)
    if hit is None:
        total = RatFunc.const(0)
        for i, nu in remove_moves(lam):
            sub = _binom_inner(nu, mu)
            if not sub.is_zero():
                total = total + binom_one_box(lam, i) * sub
        hit = total / RatFunc.const(weight(lam) - weight(mu))
        _binom_cache[key] = hit
    return hit


def rect_binom(p, q, rho: Partition) -> RatFunc:
    """Closed form binom(p x q, rho); p and q may be symbols or integers.

    Equals (-1)^k alpha^(2k) (-q)_rho (p/alpha)_rho / j_rho with k = |rho|,
    assembled with denominators already cleared.
    """
    rho = tuple(rho)
    k = weight(rho)
    pv = MPoly.variable(p) if isinstance(p, str) else MPoly.const(p)
    qv = MPoly.variable(q) if isinstance(q, str) else MPoly.const(q)
    alpha = MPoly.variable("alpha")
    num = MPoly.const(1)
    for i, j in ((i, j) for i, part in enumerate(rho, 1) for j in range(1, part + 1)):
        # alpha^2 * (-q + j-1 - (i-1)/alpha) * (p/alpha + j-1 - (i-1)/alpha)
        num = num * (alpha * (-qv) + alpha.scale(j - 1) - (i - 1))
        num = num * (pv + alpha.scale(j - 1) - (i - 1))
    _, _, j_rho = hook_products(rho)
    if k % 2:
        num = -num
    return RatFunc(num, j_rho)


def jack_principal(lam: Partition, N) -> RatFunc:
    """Principal specialization J_lam(1^N) = alpha^|lam| (N/alpha)_lam."""
    lam = tuple(lam)
    Nv = MPoly.variable(N) if isinstance(N, str) else MPoly.const(N)
    alpha = MPoly.variable("alpha")
    out = MPoly.const(1)
    for i, part in enumerate(lam, 1):
        for j in range(1, part + 1):
            out = out * (Nv + alpha.scale(j - 1) - (i - 1))
    return RatFunc(out)
