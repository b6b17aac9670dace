"""Partition combinatorics: hooks, contents, moves, enumeration."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jacktheta.exactalg import MPoly, RatFunc
from jacktheta import partitions as P

ALPHA = MPoly.variable("alpha")


@st.composite
def partition_st(draw, max_weight=18):
    n = draw(st.integers(0, max_weight))
    if n == 0:
        return ()
    parts = []
    remaining = n
    cap = n
    while remaining:
        p = draw(st.integers(1, min(cap, remaining)))
        parts.append(p)
        cap = p
        remaining -= p
    return tuple(parts)


def test_conjugate_examples():
    assert P.conjugate((3, 2)) == (2, 2, 1)
    assert P.conjugate(()) == ()
    assert P.conjugate(P.rectangle(3, 5)) == P.rectangle(5, 3)


@settings(deadline=None, max_examples=80)
@given(partition_st(max_weight=30))
def test_conjugate_involution(lam):
    assert P.conjugate(P.conjugate(lam)) == lam


@settings(deadline=None, max_examples=80)
@given(partition_st(max_weight=30))
def test_conjugate_multiplicities(lam):
    conj = P.conjugate(lam)
    for i in range(1, len(lam) + 1):
        nxt = lam[i] if i < len(lam) else 0
        assert P.mult(conj, i) == lam[i - 1] - nxt


def test_z_factor_examples():
    assert P.z_factor((2, 2)) == 8
    assert P.z_factor((3, 2)) == 6
    assert P.z_factor(()) == 1


def test_hook_products_examples():
    h, hp, j = P.hook_products((1,))
    assert (h, hp, j) == (MPoly.const(1), ALPHA, ALPHA)
    # frozen from the direct two-box product; cross-checked against the
    # Jack norm <J_2, J_2> in test_jack
    h, hp, j = P.hook_products((2,))
    assert h == ALPHA + 1
    assert hp == (ALPHA ** 2).scale(2)
    assert j == (ALPHA ** 2 * (ALPHA + 1)).scale(2)
    assert P.hook_products(()) == (MPoly.const(1), MPoly.const(1), MPoly.const(1))


def test_hook_self_duality_at_alpha_one():
    # h and h' coincide at alpha = 1 (the Schur hook product squared)
    one = MPoly.const(1)
    for lam in [(3, 1), (2, 2, 1), (4, 2)]:
        h, hp, _ = P.hook_products(lam)
        assert h.substitute({"alpha": one}) == hp.substitute({"alpha": one})


def test_alpha_content_sum_examples():
    assert P.alpha_content_sum((2,)) == RatFunc.const(1)
    assert P.alpha_content_sum((1, 1)) == RatFunc(MPoly.const(-1), ALPHA)
    assert P.alpha_content_sum((2, 2)) == RatFunc(ALPHA.scale(2) - 2, ALPHA)


def test_raising_factorial_examples():
    u = RatFunc.variable("u")
    assert P.raising_factorial("u", (2,)) == u * (u + 1)
    assert P.raising_factorial("u", (1, 1)) == u * (u - RatFunc(MPoly.const(1), ALPHA))
    assert P.raising_factorial("u", ()) == RatFunc.const(1)


def test_dominance():
    assert P.dominance_leq((1, 1, 1), (3,))
    assert not P.dominance_leq((3,), (1, 1, 1))
    assert P.dominance_leq((2, 2), (3, 1))
    with pytest.raises(P.WeightMismatch):
        P.dominance_leq((2,), (3,))


def test_box_moves_examples():
    moves = P.box_moves((2, 2))
    assert moves["add"] == [(1, (3, 2)), (3, (2, 2, 1))]
    assert moves["remove"] == [(2, (2, 1))]
    rect = P.rectangle(3, 4)
    radd = P.box_moves(rect)["add"]
    assert [i for i, _ in radd] == [1, 4]
    assert P.box_moves(rect)["remove"] == [(3, (4, 4, 3))]
    assert P.box_moves(()) == {"add": [(1, (1,))], "remove": []}


@settings(deadline=None, max_examples=60)
@given(partition_st(max_weight=20))
def test_add_move_content_delta(lam):
    """d1(lam^(i)) - d1(lam) equals the alpha-content of the added box."""
    d1 = P.alpha_content_sum(lam)
    for i, nu in P.add_moves(lam):
        lam_i = lam[i - 1] if i <= len(lam) else 0
        expected = RatFunc(ALPHA.scale(lam_i) - (i - 1), ALPHA)
        assert P.alpha_content_sum(nu) - d1 == expected


def test_mu_modify_kinds():
    assert P.mu_modify((3, 2), "down_r", 3) == (2, 2)
    assert P.mu_modify((3, 2), "down_r", 4) is None
    assert P.mu_modify((3, 2), "up_r", 2) == (3, 3)
    assert P.mu_modify((3, 2), "down_rs", 3, 2) == (4,)
    # up_rs removes one part r+s+1; absent part means no partition
    assert P.mu_modify((3, 2), "up_rs", 1, 1) == (2, 1, 1)
    assert P.mu_modify((3, 2), "up_rs", 1, 2) is None
    assert P.mu_modify((3, 2), "Down_rs", 3, 2) == (5,)
    assert P.mu_modify((3, 2), "Up_rs", 1, 2) == (2, 2, 1)
    assert P.mu_modify((2, 2), "down_rs", 2, 2) == (3,)
    assert P.mu_modify((2,), "down_rs", 2, 2) is None
    with pytest.raises(ValueError):
        P.mu_modify((2,), "sideways", 2)


def test_mu_modify_weight_bookkeeping():
    mu = (4, 3, 2)
    k = P.weight(mu)
    assert P.weight(P.mu_modify(mu, "down_r", 3)) == k - 1
    assert P.weight(P.mu_modify(mu, "down_rs", 4, 2)) == k - 1
    assert P.length(P.mu_modify(mu, "down_rs", 4, 2)) == len(mu) - 1
    assert P.weight(P.mu_modify(mu, "up_rs", 1, 2)) == k - 1
    assert P.length(P.mu_modify(mu, "up_rs", 1, 2)) == len(mu) + 1
    assert P.weight(P.mu_modify(mu, "Down_rs", 3, 2)) == k
    assert P.weight(P.mu_modify(mu, "Up_rs", 2, 2)) == k


def test_enumerate_partitions():
    assert len(P.enumerate_partitions(4)) == 5
    assert P.enumerate_partitions(5, inside=(2, 2, 2)) == [(2, 2, 1)]
    assert P.enumerate_partitions(0) == [()]
    order = P.enumerate_partitions(6)
    assert order == sorted(order, reverse=True)
    assert len(set(order)) == len(order)


def test_parse_render():
    assert P.parse_partition("3,2,1") == (3, 2, 1)
    assert P.parse_partition("-") == ()
    assert P.render_partition(()) == "-"
    assert P.render_partition((3, 2)) == "3,2"
    with pytest.raises(ValueError):
        P.parse_partition("2,3")


def test_multirectangle():
    assert P.multirectangle((2, 1), (3, 1)) == (3, 3, 1)
    with pytest.raises(ValueError):
        P.multirectangle((1, 1), (2, 2))


def test_binomial_helper():
    assert P.binomial(5, 2) == 10
    assert P.binomial(3, 0) == 1
    n = MPoly.variable("n")
    assert P.binomial(n, 2) == (n * (n - 1)).scale(Fraction(1, 2))
