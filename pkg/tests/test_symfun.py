"""Basis transitions, the deformed pairing, and the raising derivation.

The transition matrices are checked against an independent brute-force
expansion in N variables written here, not the one the module itself uses.
"""
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jacktheta.exactalg import MPoly, RatFunc, alpha_power
from jacktheta import partitions as P
from jacktheta import symfun as S


# -- independent oracle: expand in N concrete variables ------------------------


def brute_power_sum(rho, n_vars):
    monos = {(0,) * n_vars: 1}
    for r in rho:
        out = {}
        for mono, c in monos.items():
            for i in range(n_vars):
                key = mono[:i] + (mono[i] + r,) + mono[i + 1:]
                out[key] = out.get(key, 0) + c
        monos = out
    return monos


def brute_monomial(mu, n_vars):
    if len(mu) > n_vars:
        return {}
    padded = tuple(mu) + (0,) * (n_vars - len(mu))
    return {perm: 1 for perm in set(itertools.permutations(padded))}


def brute_expand(f: S.SymFun, n_vars: int):
    table = brute_power_sum if f.basis == S.POWER_SUM else brute_monomial
    out = {}
    for lam, c in f.coeffs.items():
        assert c.is_polynomial() and c.num.is_const()
        scalar = c.num.const_value()
        for mono, v in table(lam, n_vars).items():
            s = out.get(mono, Fraction(0)) + scalar * v
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return out


def test_p2_in_monomials():
    f = S.convert(S.SymFun.term("p", (2,)), "m")
    assert f.coeffs == {(2,): RatFunc.const(1)}


def test_p1_squared_in_monomials():
    f = S.convert(S.SymFun.term("p", (1, 1)), "m")
    assert f.coeffs == {(2,): RatFunc.const(1), (1, 1): RatFunc.const(2)}


def test_p_ones_leading_monomial_coefficient():
    # p_1^n = n! m_(1^n) + higher terms in dominance
    for n in range(1, 7):
        f = S.convert(S.SymFun.term("p", (1,) * n), "m")
        fact = 1
        for t in range(2, n + 1):
            fact *= t
        assert f.coefficient((1,) * n) == RatFunc.const(fact)


def test_conversion_against_brute_force():
    for n in range(1, 7):
        for rho in P.enumerate_partitions(n):
            f = S.SymFun.term("p", rho)
            m_form = S.convert(f, "m")
            assert brute_expand(f, n) == brute_expand(m_form, n)


def test_roundtrip_conversion():
    for n in list(range(0, 9)) + [10]:
        for lam in P.enumerate_partitions(n)[:6]:
            f = S.SymFun.term("p", lam, RatFunc(MPoly.variable("alpha")))
            assert S.convert(S.convert(f, "m"), "p") == f
            g = S.SymFun.term("m", lam)
            assert S.convert(S.convert(g, "p"), "m") == g


def test_augmented_monomials_are_integral_in_p():
    # the monomial basis scaled by the product of multiplicity factorials
    # expands integrally in power sums
    for n in range(1, 9):
        matrix = S.m_to_p_matrix(n)
        for mu, row in matrix.items():
            scale = 1
            for _, m in P.mults(mu).items():
                for t in range(2, m + 1):
                    scale *= t
            for rho, c in row.items():
                v = c * scale
                assert v.denominator == 1, (mu, rho, c)


def test_scalar_product_examples():
    p1 = S.SymFun.term("p", (1,))
    assert S.scalar_product(p1, p1) == RatFunc(MPoly.variable("alpha"))
    assert S.scalar_product(S.SymFun.term("p", (2,)), S.SymFun.term("p", (1, 1))).is_zero()
    p11 = S.SymFun.term("p", (1, 1))
    assert S.scalar_product(p11, p11) == RatFunc(alpha_power(2).scale(2))


@settings(deadline=None, max_examples=30)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(-3, 3), st.integers(-3, 3))
def test_scalar_product_bilinear_symmetric(a, b, ca, cb):
    lam = P.enumerate_partitions(a)[0]
    mu = P.enumerate_partitions(b)[-1]
    f = S.SymFun.term("p", lam, ca)
    g = S.SymFun.term("p", mu, cb)
    h = f + g if a == b else S.SymFun("p", {lam: ca, mu: cb})
    assert S.scalar_product(f, g) == S.scalar_product(g, f)
    lhs = S.scalar_product(h, h)
    rhs = (S.scalar_product(f, f) + S.scalar_product(g, g)
           + S.scalar_product(f, g) * 2)
    assert lhs == rhs


def test_mul_p1():
    assert S.mul_p1(S.SymFun.term("p", (2,))).coeffs == {(2, 1): RatFunc.const(1)}
    assert S.mul_p1(S.SymFun.term("p", (1,), 3)).coeffs == {(1, 1): RatFunc.const(3)}
    assert S.mul_p1(S.SymFun("p")).is_zero()


def test_apply_E2_examples():
    assert S.apply_E2(S.SymFun.term("p", (2,))).coeffs == {(3,): RatFunc.const(2)}
    assert S.apply_E2(S.SymFun.term("p", (2, 2))).coeffs == {(3, 2): RatFunc.const(4)}
    assert S.apply_E2(S.SymFun.term("p", (1,))).coeffs == {(2,): RatFunc.const(1)}


def test_apply_E2_against_finite_derivation():
    """E2 agrees with sum_i x_i^2 d/dx_i on expansions in enough variables."""
    for n in range(1, 6):
        for mu in P.enumerate_partitions(n):
            n_vars = n + 1
            f = S.SymFun.term("p", mu)
            derived = {}
            for mono, c in brute_expand(f, n_vars).items():
                for i, e in enumerate(mono):
                    if e:
                        key = mono[:i] + (e + 1,) + mono[i + 1:]
                        derived[key] = derived.get(key, 0) + c * e
            derived = {k: v for k, v in derived.items() if v}
            assert derived == brute_expand(S.apply_E2(f), n_vars)


def test_E2_p1_commutator_is_p2():
    """[E2, p1] = p2 on every p_mu with |mu| <= 8."""
    for n in range(0, 9):
        for mu in P.enumerate_partitions(n):
            f = S.SymFun.term("p", mu)
            lhs = S.apply_E2(S.mul_p1(f)) - S.mul_p1(S.apply_E2(f))
            rhs = S.SymFun.term("p", P.from_parts(list(mu) + [2]))
            assert lhs == rhs, mu


def test_cross_basis_addition_rejected():
    with pytest.raises(ValueError):
        S.SymFun.term("p", (1,)) + S.SymFun.term("m", (1,))


def test_json_roundtrip():
    f = S.SymFun("p", {(2, 1): RatFunc(MPoly.variable("alpha")), (3,): RatFunc.const(Fraction(1, 2))})
    assert S.SymFun.from_obj(f.to_obj()) == f
