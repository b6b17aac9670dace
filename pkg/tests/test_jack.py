"""Jack expansions, Pieri coefficients and generalized binomials.

The weight-2 expansions are frozen from an independent linear solve of the
three defining conditions, done right here with plain Fractions.
"""
import random
from fractions import Fraction

import pytest

from jacktheta.exactalg import MPoly, RatFunc
from jacktheta import jack as J
from jacktheta import partitions as P
from jacktheta import symfun as S

ALPHA = MPoly.variable("alpha")


def weight2_oracle():
    """Solve the defining conditions at weight 2 by hand.

    J = a p_2 + b p_11 with <J_(2), J_(11)> = 0 and theta_(1saturating1) = 1.
    The pairing gives <a2 p2 + b2 p11, a1 p2 + b1 p11> = 2 alpha a2 a1
    + 2 alpha^2 b2 b1.  Triangularity in m forces J_(11) proportional to
    m_11 = (p_11 - p_2)/2, so a = -b there; normalization sets b = 1.
    Orthogonality then pins J_(2).
    """
    a = RatFunc(ALPHA)
    j11 = {(2,): RatFunc.const(-1), (1, 1): RatFunc.const(1)}
    # J_(2) = a p_2 + p_11 with 0 = <J2, J11> = -2 alpha a + 2 alpha^2
    # => a = alpha
    j2 = {(2,): a, (1, 1): RatFunc.const(1)}
    return j2, j11


def test_jack_small_weights_match_oracle():
    assert J.jack((1,)).in_p.coeffs == {(1,): RatFunc.const(1)}
    j2, j11 = weight2_oracle()
    assert J.jack((2,)).in_p.coeffs == j2
    assert J.jack((1, 1)).in_p.coeffs == j11


def test_gram_property():
    """<J_lam, J_mu> = delta * h_lam h'_lam, all pairs of weight <= 6."""
    for n in range(0, 7):
        parts = P.enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                sp = S.scalar_product(J.jack(lam).in_p, J.jack(mu).in_p)
                if lam == mu:
                    _, _, j_norm = P.hook_products(lam)
                    assert sp == RatFunc(j_norm), lam
                else:
                    assert sp.is_zero(), (lam, mu)


def test_theta_examples():
    assert J.theta((2,), (2,)) == ALPHA
    for n in range(1, 7):
        for lam in P.enumerate_partitions(n):
            assert J.theta(lam, (1,) * n) == MPoly.const(1)
    # 2 theta^lam_{2,1^(n-2)} = 2 alpha d_1(lam)
    for n in range(2, 7):
        for lam in P.enumerate_partitions(n):
            idx = P.from_parts([2] + [1] * (n - 2))
            lhs = RatFunc(J.theta(lam, idx).scale(2))
            assert lhs == RatFunc(ALPHA) * P.alpha_content_sum(lam) * 2, lam


def test_theta_polynomial_and_z_integrality():
    for n in range(1, 9):
        for lam in P.enumerate_partitions(n):
            for rho, c in J.jack(lam).in_p.coeffs.items():
                assert c.is_polynomial(), (lam, rho)
                audit = c.as_poly().scale(P.z_factor(rho)).coefficient_audit()
                assert audit.all_integer, (lam, rho)


def test_theta_weight_mismatch():
    with pytest.raises(P.WeightMismatch):
        J.theta((2,), (1,))


def test_weight_limit():
    with pytest.raises(J.WeightLimitExceeded):
        J.jack((5, 4), max_weight=8)


def test_monomial_form_invariants():
    for lam in [(3,), (2, 1), (2, 2), (3, 1)]:
        exp = J.jack(lam)
        n = P.weight(lam)
        fact = 1
        for t in range(2, n + 1):
            fact *= t
        assert exp.in_m.coefficient((1,) * n) == RatFunc.const(fact)
        for mu in exp.in_m.coeffs:
            assert P.dominance_leq(mu, lam)


def test_pieri_empty_partition():
    assert J.pieri_c((), 1) == RatFunc.const(1)


def test_pieri_rectangle_closed_forms():
    for p, q in [(2, 3), (3, 2), (2, 2), (4, 1)]:
        lam = P.rectangle(p, q)
        pa = RatFunc(MPoly.const(p))
        qa = RatFunc(ALPHA.scale(q))
        assert J.pieri_c(lam, 1) == pa / (pa + qa)
        assert J.pieri_c(lam, p + 1) == qa / (pa + qa)


def test_pieri_invalid_move():
    with pytest.raises(J.InvalidMove):
        J.pieri_c((2, 2), 2)
    with pytest.raises(J.InvalidMove):
        J.binom_one_box((2, 2), 1)


def test_pieri_reconstruction():
    """p_1 J_lam = sum_i c_i(lam) J_(lam^(i)), exactly, |lam| <= 7."""
    for n in range(0, 8):
        for lam in P.enumerate_partitions(n):
            lhs = S.mul_p1(J.jack(lam).in_p)
            rhs = S.SymFun("p")
            for i, nu in P.add_moves(lam):
                rhs = rhs + J.jack(nu).in_p.scale(J.pieri_c(lam, i))
            assert (lhs - rhs).is_zero(), lam


def test_eq41_connection():
    """c_i(lam) = alpha binom(lam^(i), lam) j_lam / j_(lam^(i)), |lam| <= 6."""
    for n in range(0, 7):
        for lam in P.enumerate_partitions(n):
            _, _, j_lam = P.hook_products(lam)
            for i, nu in P.add_moves(lam):
                _, _, j_nu = P.hook_products(nu)
                rhs = RatFunc(ALPHA) * J.binom_one_box(nu, i) * RatFunc(j_lam) / RatFunc(j_nu)
                assert J.pieri_c(lam, i) == rhs, (lam, i)


def test_binom_one_box_examples():
    for p, q in [(2, 3), (3, 3), (4, 2)]:
        lam = P.rectangle(p, q)
        assert J.binom_one_box(lam, p) == RatFunc.const(p * q)
    assert J.binom_one_box((1,), 1) == RatFunc.const(1)


def test_binom_base_cases():
    assert J.binom((3, 2), (3, 2)) == RatFunc.const(1)
    for n in range(0, 7):
        for lam in P.enumerate_partitions(n):
            assert J.binom(lam, ()) == RatFunc.const(1), lam
            assert J.binom(lam, (1,) if n else ()) == RatFunc.const(n if n else 1)


def test_binom_not_contained():
    with pytest.raises(J.NotContained):
        J.binom((2, 2), (3,))


def test_binom_rect_value():
    assert J.binom((2, 2), (1,)) == RatFunc.const(4)
    assert J.rect_binom(2, 2, (1,)) == RatFunc.const(4)


def test_binom_composition_identity():
    """binom(|lam|-|mu|, r-|mu|) binom(lam,mu) = sum binom(lam,rho) binom(rho,mu)."""
    rng = random.Random(42)
    lams = [lam for n in range(2, 8) for lam in P.enumerate_partitions(n)]
    for _ in range(25):
        lam = rng.choice(lams)
        n = P.weight(lam)
        k = rng.randrange(0, n + 1)
        subs = P.enumerate_partitions(k, inside=lam)
        if not subs:
            continue
        mu = rng.choice(subs)
        r = rng.randrange(k, n + 1)
        lhs = J.binom(lam, mu) * RatFunc.const(P.binomial(n - k, r - k))
        rhs = RatFunc.const(0)
        for rho in P.enumerate_partitions(r, inside=lam):
            rhs = rhs + J._binom_inner(lam, rho) * J._binom_inner(rho, mu)
        assert lhs == rhs, (lam, mu, r)


def test_rect_binom_symbolic():
    pq = MPoly.variable("p") * MPoly.variable("q")
    assert J.rect_binom("p", "q", (1,)) == RatFunc(pq)
    assert J.rect_binom("p", "q", ()) == RatFunc.const(1)


def test_rect_binom_vs_recurrence_3x3():
    for p in range(1, 4):
        for q in range(1, 4):
            lam = P.rectangle(p, q)
            for k in range(0, p * q + 1):
                for rho in P.enumerate_partitions(k, inside=lam):
                    assert J.rect_binom(p, q, rho) == J.binom(lam, rho), (p, q, rho)


def test_jack_principal():
    N = RatFunc.variable("N")
    assert J.jack_principal((1,), "N") == N
    assert J.jack_principal((2,), "N") == N * (N + RatFunc(ALPHA))
    # one-box ratio: J_(lam^(i))(1^N)/J_lam(1^N) = N + alpha lam_i - i + 1
    ratio = J.jack_principal((3, 1), "N") / J.jack_principal((2, 1), "N")
    assert ratio == N + RatFunc(ALPHA.scale(2))
