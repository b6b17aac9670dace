"""Named checkers for the linear identities and the positivity conjectures.

Every checker computes both sides exactly and returns a structured Report.
Proved identities that break are verdict "fail" (an implementation bug);
conjecture audits are verdict "finding" whichever way they come out.
"""
from __future__ import annotations

import random
import time
from typing import Iterable, List, Optional

from .exactalg import MPoly, RatFunc
from . import jack as jackmod
from . import rect as rectmod
from . import theta as thetamod
from .partitions import (Partition, add_moves, alpha_content_sum, binomial,
                         enumerate_partitions, from_parts, length, m1_free,
                         mults, mu_modify, remove_moves, weight, z_factor)
from .symfun import SymFun, scalar_product

ALPHA = RatFunc(MPoly.variable("alpha"))
IDENTITY_CHECKS = ("I1", "I2", "I3", "I4", "I5", "I6", "I7", "P1")


class Report:
    """Structured outcome of one check."""

    __slots__ = ("check_id", "params", "verdict", "witness", "runtime_ms")

    def __init__(self, check_id, params, verdict, witness, runtime_ms):
        self.check_id = check_id
        self.params = params
        self.verdict = verdict
        self.witness = witness
        self.runtime_ms = runtime_ms

    def to_obj(self):
        return {
            "check_id": self.check_id,
            "params": self.params,
            "verdict": self.verdict,
            "witness": self.witness,
            "runtime_ms": self.runtime_ms,
        }

    def __repr__(self):
        return f"Report({self.check_id}, {self.params}, {self.verdict})"


def _report(check_id, params, lhs: RatFunc, rhs: RatFunc, t0: float) -> Report:
    ok = lhs == rhs
    witness = None
    if not ok:
        witness = {
            "lhs": lhs.render(),
            "rhs": rhs.render(),
            "diff": (lhs - rhs).render(),
        }
    ms = int((time.perf_counter() - t0) * 1000)
    return Report(check_id, params, "pass" if ok else "fail", witness, ms)


def _hat(lam, mu) -> RatFunc:
    return RatFunc(thetamod._theta_hat_ext(tuple(lam), tuple(mu)))


def _hat_general(lam, rho) -> RatFunc:
    return RatFunc(thetamod._theta_general_ext(tuple(lam), tuple(rho)))


def _row_content(lam, i) -> RatFunc:
    """lam_i - (i-1)/alpha with lam_i = 0 beyond the last row."""
    lam_i = lam[i - 1] if i <= len(lam) else 0
    return RatFunc(MPoly.const(lam_i)) - RatFunc(MPoly.const(i - 1), MPoly.variable("alpha"))


def _pad_theta(lam, mu) -> RatFunc:
    """theta^lam_{mu,1^(n-k)} for arbitrary mu (ones allowed), zero-extended."""
    n, k = weight(lam), weight(mu)
    if k > n:
        return RatFunc.const(0)
    idx = from_parts(list(mu) + [1] * (n - k))
    return RatFunc(jackmod.theta(lam, idx))


# -- identity checkers ---------------------------------------------------------


def check_I1_binomial_sum(lam, mu, r, perturb: int = 0) -> Report:
    """Binomial lowering of padded coefficients to an intermediate weight."""
    lam, mu = tuple(lam), tuple(mu)
    n, k = weight(lam), weight(mu)
    if not k <= r <= n:
        raise ValueError(f"need |mu| <= r <= |lam|, got {k}, {r}, {n}")
    t0 = time.perf_counter()
    lhs = _pad_theta(lam, mu) * RatFunc.const(binomial(n - k + mults(mu).get(1, 0), n - r))
    rhs = RatFunc.const(0)
    for rho in enumerate_partitions(r, inside=lam):
        b = jackmod._binom_inner(lam, rho)
        if not b.is_zero():
            rhs = rhs + b * _pad_theta(rho, mu)
    if perturb:
        lhs = lhs + perturb
    return _report("I1", {"lambda": list(lam), "mu": list(mu), "r": r},
                   lhs, rhs, t0)


def check_I2_p1_lower(lam, mu, perturb: int = 0) -> Report:
    """(n - k) vt^lam_mu = sum_i binom(lam, lam_(i)) vt^(lam_(i))_mu."""
    lam, mu = _ident_args(lam, mu)
    t0 = time.perf_counter()
    n, k = weight(lam), weight(mu)
    lhs = _hat(lam, mu) * RatFunc.const(n - k)
    rhs = RatFunc.const(0)
    for i, nu in remove_moves(lam):
        rhs = rhs + jackmod.binom_one_box(lam, i) * _hat(nu, mu)
    if perturb:
        lhs = lhs + perturb
    return _report("I2", {"lambda": list(lam), "mu": list(mu)}, lhs, rhs, t0)


def check_I3_E0_raise(lam, mu, perturb: int = 0) -> Report:
    """vt^lam_mu = sum_i c_i(lam) vt^(lam^(i))_mu."""
    lam, mu = _ident_args(lam, mu)
    t0 = time.perf_counter()
    lhs = _hat(lam, mu)
    rhs = RatFunc.const(0)
    for i, nu in add_moves(lam):
        rhs = rhs + jackmod.pieri_c(lam, i) * _hat(nu, mu)
    if perturb:
        lhs = lhs + perturb
    return _report("I3", {"lambda": list(lam), "mu": list(mu)}, lhs, rhs, t0)


def check_I4_E2(lam, mu, perturb: int = 0) -> Report:
    """The raising-derivation identity on one-box removals."""
    lam, mu = _ident_args(lam, mu)
    t0 = time.perf_counter()
    lhs = _hat(lam, from_parts(mu + (2,)))
    for r, m in mults(mu).items():
        lhs = lhs + _hat(lam, mu_modify(mu, "up_r", r)) * RatFunc.const(r * m)
    rhs = RatFunc.const(0)
    for i, nu in remove_moves(lam):
        w = _row_content(lam, i) - 1
        rhs = rhs + jackmod.binom_one_box(lam, i) * w * _hat(nu, mu)
    rhs = rhs * ALPHA
    if perturb:
        lhs = lhs + perturb
    return _report("I4", {"lambda": list(lam), "mu": list(mu)}, lhs, rhs, t0)


def check_I5_E0_N0(lam, mu, perturb: int = 0) -> Report:
    """The N-free component of the one-variable derivative identity."""
    lam, mu = _ident_args(lam, mu)
    t0 = time.perf_counter()
    lhs = RatFunc.const(0)
    for r, m in mults(mu).items():
        down = mu_modify(mu, "down_r", r)
        if down is not None:
            lhs = lhs + _hat_general(lam, down) * RatFunc.const(r * m)
    rhs = RatFunc.const(0)
    for i, nu in add_moves(lam):
        rhs = rhs + jackmod.pieri_c(lam, i) * _row_content(lam, i) * _hat(nu, mu)
    if perturb:
        lhs = lhs + perturb
    return _report("I5", {"lambda": list(lam), "mu": list(mu)}, lhs, rhs, t0)


def check_I6_D1(lam, mu, perturb: int = 0) -> Report:
    """The N^0 component of the degree-lowering Laplacian identity."""
    lam, mu = _ident_args(lam, mu)
    t0 = time.perf_counter()
    n, k = weight(lam), weight(mu)
    mm = mults(mu)
    beta = ALPHA - 1
    lhs = RatFunc.const(0)
    for r, mr in mm.items():
        for s, ms in mm.items():
            c = r * s * mr * (ms - (1 if r == s else 0))
            if c:
                lhs = lhs + _hat(lam, mu_modify(mu, "down_rs", r, s)) * RatFunc.const(c)
    for r, mr in mm.items():
        c = r * (r - 1) * mr
        down = mu_modify(mu, "down_r", r)
        if c and down is not None:
            lhs = lhs + beta * _hat_general(lam, down) * RatFunc.const(c)
    for r, mr in mm.items():
        for i in range(1, r - 1):
            up = mu_modify(mu, "up_rs", i, r - i - 1)
            if up is not None:
                lhs = lhs + ALPHA * _hat_general(lam, up) * RatFunc.const(r * mr)
    rhs = _hat(lam, mu) * RatFunc.const(-(n + k))
    for i, nu in add_moves(lam):
        w = _row_content(lam, i)
        rhs = rhs + ALPHA * jackmod.pieri_c(lam, i) * w * w * _hat(nu, mu)
    if perturb:
        lhs = lhs + perturb
    return _report("I6", {"lambda": list(lam), "mu": list(mu)}, lhs, rhs, t0)


def check_I7_D2dag(lam, mu, perturb: int = 0) -> Report:
    """The degree-preserving identity from the N-free Laplacian."""
    lam, mu = _ident_args(lam, mu)
    t0 = time.perf_counter()
    mm = mults(mu)
    beta = ALPHA - 1
    lhs = _hat(lam, from_parts(mu + (2,)))
    for r, mr in mm.items():
        lhs = lhs + _hat(lam, mu_modify(mu, "up_r", r)) * RatFunc.const(2 * r * mr)
    for r, mr in mm.items():
        for s, ms in mm.items():
            c = r * s * mr * (ms - (1 if r == s else 0))
            if c:
                down = mu_modify(mu, "Down_rs", r, s)
                lhs = lhs + _hat(lam, down) * RatFunc.const(c)
    for r, mr in mm.items():
        for i in range(1, r):
            up = mu_modify(mu, "Up_rs", i, r - i)
            if up is not None:
                lhs = lhs + ALPHA * _hat_general(lam, up) * RatFunc.const(r * mr)
    drop = sum(r * (r - 1) * m for r, m in mm.items())
    d1 = alpha_content_sum(lam)
    rhs = (ALPHA * d1 * 2 - beta * drop) * _hat(lam, mu)
    if perturb:
        lhs = lhs + perturb
    return _report("I7", {"lambda": list(lam), "mu": list(mu)}, lhs, rhs, t0)


def check_prop1(lam, mu, r, perturb: int = 0) -> Report:
    """Dual route for the padded coefficient through the inner-product map.

    The left side evaluates (p_1^r/r! * alpha^(k-l) p_mu) on lam through the
    graded expansion definition (scalar products against the Jack expansion);
    the right side is the binomial multiple of the direct coefficient
    read-off.  Arbitrary mu, including parts 1.
    """
    lam, mu = tuple(lam), tuple(mu)
    n, k = weight(lam), weight(mu)
    if k + r > n:
        raise ValueError(f"need |mu| + r <= |lam|, got {k} + {r} > {n}")
    t0 = time.perf_counter()
    idx = from_parts(list(mu) + [1] * (n - k))
    jexp = jackmod.jack(lam)
    num = scalar_product(SymFun.term("p", idx), jexp.in_p)
    fact = 1
    for t in range(2, r + 1):
        fact *= t
    for t in range(2, n - k - r + 1):
        fact *= t
    lhs = num * (ALPHA ** (k - length(mu) - n)) / fact
    ones = mults(mu).get(1, 0)
    factor = binomial(n - k, r) * binomial(n - k + ones, ones) * z_factor(mu)
    rhs = _pad_theta(lam, mu) * RatFunc.const(factor)
    if perturb:
        lhs = lhs + perturb
    return _report("P1", {"lambda": list(lam), "mu": list(mu), "r": r},
                   lhs, rhs, t0)


def _ident_args(lam, mu):
    lam, mu = tuple(lam), tuple(mu)
    if not m1_free(mu):
        raise thetamod.MuHasOnes(f"mu = {mu} has parts equal to 1")
    return lam, mu


CHECK_FUNCS = {
    "I1": check_I1_binomial_sum,
    "I2": check_I2_p1_lower,
    "I3": check_I3_E0_raise,
    "I4": check_I4_E2,
    "I5": check_I5_E0_N0,
    "I6": check_I6_D1,
    "I7": check_I7_D2dag,
    "P1": check_prop1,
}


def check_params(check_id: str, lam: Partition):
    """Deterministic parameter lists per check for one lambda."""
    n = weight(lam)
    if check_id == "I1":
        for r in range(0, n + 1):
            for j in range(0, r + 1):
                for mu in enumerate_partitions(j):
                    yield (lam, mu, r)
    elif check_id == "P1":
        for j in range(0, n + 1):
            for mu in enumerate_partitions(j):
                for r in range(0, n - j + 1):
                    yield (lam, mu, r)
    else:
        for j in range(0, n + 1):
            for mu in enumerate_partitions(j):
                if m1_free(mu):
                    yield (lam, mu)


def sweep(check_ids: Iterable[str], lam_weights: Iterable[int],
          seed: int = 42, sample: Optional[int] = None) -> List[Report]:
    """Run checkers over all lambdas of the given weights.

    Exhaustive by default; with sample set, a seeded random subset of the
    full parameter list is used.  Reports come back in deterministic order.
    """
    jobs = []
    for check_id in check_ids:
        if check_id not in CHECK_FUNCS:
            raise ValueError(f"unknown check id {check_id!r}")
        for n in sorted(set(lam_weights)):
            for lam in enumerate_partitions(n):
                for params in check_params(check_id, lam):
                    jobs.append((check_id, params))
    if sample is not None and sample < len(jobs):
        rng = random.Random(seed)
        jobs = sorted(rng.sample(jobs, sample), key=lambda j: (j[0], j[1]))
    return [CHECK_FUNCS[cid](*params) for cid, params in jobs]


def summarize(reports: List[Report]) -> dict:
    counts = {"pass": 0, "fail": 0, "finding": 0}
    first_failures = []
    total_ms = 0
    for rep in reports:
        counts[rep.verdict] += 1
        total_ms += rep.runtime_ms
        if rep.verdict == "fail" and len(first_failures) < 5:
            first_failures.append(rep.to_obj())
    return {
        "total": len(reports),
        "pass": counts["pass"],
        "fail": counts["fail"],
        "finding": counts["finding"],
        "first_failures": first_failures,
        "runtime_ms": total_ms,
    }


# -- conjecture and table suites -----------------------------------------------


def conjecture1_sweep(m: int, mu_max: int) -> List[Report]:
    """Conjecture-1 audits for all 1-free mu with 2 <= |mu| <= mu_max."""
    mus = [mu for k in range(2, mu_max + 1)
           for mu in enumerate_partitions(k) if m1_free(mu)]
    t0 = time.perf_counter()
    if m == 1:
        polys = {mu: thetamod.rect_theta_symbolic(1, mu, mode="closed_form_m1")
                 for mu in mus}
    else:
        polys = thetamod.rect_theta_symbolic_group(m, mus, mode="interpolate")
    shared_ms = int((time.perf_counter() - t0) * 1000) // max(1, len(mus))
    reports = []
    for mu in mus:
        audit = polys[mu].conjecture_audit()
        good = audit.all_integer and audit.all_nonnegative and audit.has_unit_coefficient
        reports.append(Report(
            "conjecture1",
            {"m": m, "mu": list(mu)},
            "finding",
            {"holds": good, "audit": audit.to_obj()},
            shared_ms,
        ))
    return reports


def table6_check() -> List[Report]:
    """The eleven displayed rectangular relations, as exact identities."""
    reports = []
    for name, lhs, rhs in rectmod.table6_relations():
        t0 = time.perf_counter()
        rep = _report(f"table6.{name}", {}, RatFunc(lhs), RatFunc(rhs), t0)
        reports.append(rep)
    return reports


def thm2_check(mu) -> List[Report]:
    """Theorem-2 sum: polynomiality plus the nonnegativity finding."""
    mu = tuple(mu)
    t0 = time.perf_counter()
    reports = []
    try:
        total = thetamod.theorem2_sum(mu)
        poly_ok = True
        payload = None
    except Exception as exc:  # denominators failing to cancel is a failure
        poly_ok = False
        payload = {"error": str(exc)}
        total = None
    ms = int((time.perf_counter() - t0) * 1000)
    reports.append(Report("thm2.polynomial", {"mu": list(mu)},
                          "pass" if poly_ok else "fail", payload, ms))
    if total is not None:
        t0 = time.perf_counter()
        beta_form = total.substitute({"alpha": MPoly.variable("beta") + 1})
        audit = beta_form.coefficient_audit()
        ms = int((time.perf_counter() - t0) * 1000)
        reports.append(Report(
            "thm2.nonneg", {"mu": list(mu)}, "finding",
            {"holds": audit.all_nonnegative, "audit": audit.to_obj()}, ms))
    return reports


def theorem1_suite(mu_max: int = 6) -> List[Report]:
    """Theorem-1 audits over all 1-free mu up to the given weight."""
    reports = []
    for k in range(2, mu_max + 1):
        for mu in enumerate_partitions(k):
            if not m1_free(mu):
                continue
            t0 = time.perf_counter()
            audit = rectmod.theorem1_audit(mu)
            ms = int((time.perf_counter() - t0) * 1000)
            reports.append(Report(
                "theorem1.nonneg", {"mu": list(mu)},
                "pass" if audit["beta_form_nonnegative"] else "fail",
                None if audit["beta_form_nonnegative"]
                else {"audit": audit["beta_audit"].to_obj()}, ms))
            reports.append(Report(
                "theorem1.integrality", {"mu": list(mu)}, "finding",
                {"holds": audit["beta_form_integer"],
                 "mixed_nonnegative": audit["mixed_form_nonnegative"]}, 0))
    return reports


def identity_suite(max_n: int, check_ids=IDENTITY_CHECKS) -> List[Report]:
    """Exhaustive identity checks for all lambda up to the given weight."""
    return sweep(check_ids, range(0, max_n + 1))
