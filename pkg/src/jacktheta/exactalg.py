"""Exact sparse multivariate polynomials and rational functions over Fraction.

Everything downstream (hook products, Pieri coefficients, the rectangular
recurrence) runs on these two types; there is no floating point anywhere, so
positivity and integrality verdicts are exact.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class ExactAlgError(Exception):
    pass


class NotDivisible(ExactAlgError):
    """Exact division failed; carries the offending remainder."""

    def __init__(self, remainder: "MPoly"):
        super().__init__(f"not divisible, remainder {remainder}")
        self.remainder = remainder


class DenominatorVanishes(ExactAlgError):
    pass


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _grlex_key(item):
    exp, _ = item
    return (sum(exp), exp)


class MPoly:
    """Sparse polynomial over Q in an ordered tuple of named variables.

    Terms map exponent tuples (one entry per variable) to nonzero Fractions.
    Instances are immutable by convention; all operations return new values.
    """

    __slots__ = ("vars", "terms", "_hash", "_key")

    def __init__(self, vars: Iterable[str], terms: Mapping[tuple, Scalar]):
        vs = tuple(vars)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variable names in {vs}")
        cleaned = {}
        arity = len(vs)
        for exp, coef in terms.items():
            exp = tuple(exp)
            if len(exp) != arity or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for vars {vs}")
            c = _as_fraction(coef)
            if c:
                cleaned[exp] = c
        self.vars = vs
        self.terms = cleaned
        self._hash = None
        self._key = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value: Scalar, vars: Iterable[str] = ()) -> "MPoly":
        vs = tuple(vars)
        return cls(vs, {(0,) * len(vs): _as_fraction(value)})

    @classmethod
    def zero(cls, vars: Iterable[str] = ()) -> "MPoly":
        return cls(vars, {})

    @classmethod
    def variable(cls, name: str) -> "MPoly":
        return cls((name,), {(1,): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def const_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        [(exp, c)] = self.terms.items()
        if any(exp):
            raise ValueError(f"{self} is not constant")
        return c

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def effective_vars(self) -> tuple:
        used = [False] * len(self.vars)
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def leading_term(self):
        """(exponent, coefficient) maximal in graded-lex order; None if zero."""
        if not self.terms:
            return None
        exp = max(self.terms, key=lambda e: (sum(e), e))
        return exp, self.terms[exp]

    def sorted_terms(self):
        """Terms in canonical order: graded-lex descending."""
        return sorted(self.terms.items(), key=_grlex_key, reverse=True)

    # -- canonical identity ------------------------------------------------

    def canonical_key(self):
        """Mathematical content: unused variables dropped, names sorted."""
        if self._key is None:
            eff = self.effective_vars()
            order = tuple(sorted(eff))
            idx = [self.vars.index(v) for v in order]
            terms = frozenset(
                (tuple(exp[i] for i in idx), c) for exp, c in self.terms.items()
            )
            self._key = (order, terms)
        return self._key

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_const() and self.const_value() == other
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.canonical_key())
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        vs, ta, tb = _aligned(self, other)
        out = dict(ta)
        for exp, c in tb.items():
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MPoly(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        vs, ta, tb = _aligned(self, other)
        out = {}
        for ea, ca in ta.items():
            for eb, cb in tb.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(exp, Fraction(0)) + ca * cb
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return MPoly(vs, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "MPoly":
        c = _as_fraction(c)
        if not c:
            return MPoly.zero(self.vars)
        return MPoly(self.vars, {e: v * c for e, v in self.terms.items()})

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: Mapping[str, Union["MPoly", Scalar]]) -> "MPoly":
        """Exact substitution of variables by polynomials or scalars."""
        missing = [v for v in bindings if v not in self.vars]
        if missing:
            raise ValueError(f"variables {missing} not present in {self.vars}")
        keep = [v for v in self.vars if v not in bindings]
        values = {}
        for v in self.vars:
            if v in bindings:
                b = bindings[v]
                values[v] = b if isinstance(b, MPoly) else MPoly.const(b)
            else:
                values[v] = MPoly.variable(v)
        result = MPoly.zero(tuple(keep))
        pow_cache = {v: {0: MPoly.const(1)} for v in self.vars}

        def vpow(v, e):
            cache = pow_cache[v]
            if e not in cache:
                cache[e] = vpow(v, e - 1) * values[v]
            return cache[e]

        for exp, coef in self.terms.items():
            term = MPoly.const(coef)
            for v, e in zip(self.vars, exp):
                if e:
                    term = term * vpow(v, e)
            result = result + term
        return result

    # -- division ----------------------------------------------------------

    def divide_exact(self, other: "MPoly") -> "MPoly":
        """Quotient self / other when the division is exact; NotDivisible otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        vs, ta, tb = _aligned(self, other)
        rem = dict(ta)
        div = MPoly(vs, tb)
        lt_exp, lt_coef = div.leading_term()
        quot = {}
        while rem:
            rexp = max(rem, key=lambda e: (sum(e), e))
            rcoef = rem[rexp]
            qexp = tuple(a - b for a, b in zip(rexp, lt_exp))
            if any(e < 0 for e in qexp):
                raise NotDivisible(MPoly(vs, rem))
            qcoef = rcoef / lt_coef
            quot[qexp] = qcoef
            for dexp, dcoef in div.terms.items():
                exp = tuple(a + b for a, b in zip(qexp, dexp))
                s = rem.get(exp, Fraction(0)) - qcoef * dcoef
                if s:
                    rem[exp] = s
                else:
                    rem.pop(exp, None)
        return MPoly(vs, quot)

    # -- content and audits --------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational content (gcd of coefficients); 0 for the zero poly."""
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = _igcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // _igcd(den_lcm, c.denominator)
        if num_gcd == 0:
            return Fraction(0)
        return Fraction(num_gcd, den_lcm)

    def primitive(self):
        """(content-with-sign, primitive part): leading grlex coefficient > 0."""
        if self.is_zero():
            return Fraction(0), self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return c, self.scale(1 / c)

    def coefficient_audit(self) -> "CoeffAudit":
        non_integer = []
        negative = []
        units = []
        for exp, c in self.sorted_terms():
            if c.denominator != 1:
                non_integer.append((exp, c))
            if c < 0:
                negative.append((exp, c))
            if c == 1:
                units.append(exp)
        return CoeffAudit(
            all_integer=not non_integer,
            all_nonnegative=not negative,
            has_unit_coefficient=bool(units),
            non_integer=non_integer,
            negative=negative,
            units=units,
        )

    # -- serialization -----------------------------------------------------

    def to_obj(self):
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(exp), "coef": _frac_str(c)}
                for exp, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_obj(cls, obj) -> "MPoly":
        terms = {
            tuple(t["exp"]): _frac_parse(t["coef"]) for t in obj["terms"]
        }
        return cls(tuple(obj["vars"]), terms)

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "MPoly":
        return cls.from_obj(json.loads(text))

    def render(self) -> str:
        """Human-readable form, terms in canonical order."""
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.vars, exp)
                if e
            ]
            if not factors:
                body = _frac_str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_frac_str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MPoly({self.render()})"


class CoeffAudit:
    """Outcome of a coefficient audit: integrality / nonnegativity / unit witness."""

    def __init__(self, all_integer, all_nonnegative, has_unit_coefficient,
                 non_integer, negative, units):
        self.all_integer = all_integer
        self.all_nonnegative = all_nonnegative
        self.has_unit_coefficient = has_unit_coefficient
        self.non_integer = non_integer
        self.negative = negative
        self.units = units

    def to_obj(self):
        return {
            "integer": self.all_integer,
            "nonneg": self.all_nonnegative,
            "unit": self.has_unit_coefficient,
            "witnesses": {
                "non_integer": [[list(e), _frac_str(c)] for e, c in self.non_integer[:5]],
                "negative": [[list(e), _frac_str(c)] for e, c in self.negative[:5]],
                "unit": [list(e) for e in self.units[:1]],
            },
        }

    def __repr__(self):
        return (f"CoeffAudit(integer={self.all_integer}, "
                f"nonneg={self.all_nonnegative}, unit={self.has_unit_coefficient})")


# -- alignment and helpers ---------------------------------------------------


def _aligned(a: MPoly, b: MPoly):
    """Common variable tuple plus both term dicts re-indexed over it.

    Same declared order is kept as-is; otherwise the name union is taken in
    sorted order so results do not depend on operand order.
    """
    if a.vars == b.vars:
        return a.vars, a.terms, b.terms
    union = tuple(sorted(set(a.vars) | set(b.vars)))
    return union, _reindex(a, union), _reindex(b, union)


def _reindex(p: MPoly, union: tuple):
    pos = {v: i for i, v in enumerate(union)}
    idx = [pos[v] for v in p.vars]
    out = {}
    for exp, c in p.terms.items():
        new = [0] * len(union)
        for i, e in zip(idx, exp):
            new[i] = e
        out[tuple(new)] = c
    return out


def _igcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _frac_parse(s: str) -> Fraction:
    return Fraction(s)


# -- polynomial gcd ----------------------------------------------------------


def gcd_poly(a: MPoly, b: MPoly) -> MPoly:
    """Primitive gcd (integer content 1, positive grlex-leading coefficient)."""
    if a.is_zero():
        return b.primitive()[1] if not b.is_zero() else MPoly.const(1)
    if b.is_zero():
        return a.primitive()[1]
    if a.is_const() or b.is_const():
        return MPoly.const(1)
    _, pa = a.primitive()
    _, pb = b.primitive()
    g = _gcd_primitive(pa, pb)
    return g.primitive()[1]


def _gcd_primitive(a: MPoly, b: MPoly) -> MPoly:
    eff_a = set(a.effective_vars())
    eff_b = set(b.effective_vars())
    eff = eff_a & eff_b
    if not eff:
        return MPoly.const(1)
    if len(eff_a | eff_b) == 1:
        v = next(iter(eff))
        return _gcd_univariate(a, b, v)
    # one univariate side: the gcd divides it, so it is univariate too and
    # divides every coefficient of the other side grouped by the remaining
    # variables; this keeps alpha-only denominators cheap
    if len(eff_a) == 1 or len(eff_b) == 1:
        uni, multi = (a, b) if len(eff_a) == 1 else (b, a)
        v = next(iter(eff))
        g = _to_dense(uni, v)
        for chunk in _split_by_others(multi, v).values():
            g = _dense_gcd(g, chunk)
            if len(g) == 1:
                return MPoly.const(1)
        return _from_dense(g, v)
    # multivariate: primitive PRS in the last shared variable
    v = sorted(eff)[-1]
    ca, pa = _content_in(a, v)
    cb, pb = _content_in(b, v)
    cont = _gcd_primitive(ca, cb)
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    while not pb.is_zero():
        r = _pseudo_rem(pa, pb, v)
        pa, pb = pb, _content_in(r, v)[1] if not r.is_zero() else MPoly.zero(r.vars)
    return cont * pa


def _content_in(p: MPoly, v: str):
    """(content, primitive part) of p viewed as a polynomial in v."""
    if p.is_zero():
        return MPoly.const(1), p
    i = p.vars.index(v)
    coeffs = {}
    for exp, c in p.terms.items():
        key = exp[i]
        rest = exp[:i] + (0,) + exp[i + 1:]
        coeffs.setdefault(key, {})[rest] = c
    cont = MPoly.zero(p.vars)
    for d in sorted(coeffs):
        cont = gcd_poly(cont, MPoly(p.vars, coeffs[d]))
        if cont.is_const():
            break
    if cont.is_const():
        return MPoly.const(1), p
    return cont, p.divide_exact(cont)


def _pseudo_rem(a: MPoly, b: MPoly, v: str) -> MPoly:
    """Pseudo-remainder of a by b viewed as polynomials in v."""
    da, db = a.degree_in(v), b.degree_in(v)
    if da < db:
        return a
    lcb = _coeff_in(b, v, db)
    x = MPoly.variable(v)
    rem = a
    while not rem.is_zero() and rem.degree_in(v) >= db:
        dr = rem.degree_in(v)
        lcr = _coeff_in(rem, v, dr)
        rem = rem * lcb - b * lcr * x ** (dr - db)
    return rem


def _coeff_in(p: MPoly, v: str, d: int) -> MPoly:
    i = p.vars.index(v)
    out = {}
    for exp, c in p.terms.items():
        if exp[i] == d:
            out[exp[:i] + (0,) + exp[i + 1:]] = c
    return MPoly(p.vars, out)


def _gcd_univariate(a: MPoly, b: MPoly, v: str) -> MPoly:
    return _from_dense(_dense_gcd(_to_dense(a, v), _to_dense(b, v)), v)


def _dense_gcd(fa, fb):
    fa, fb = list(fa), list(fb)
    while fb:
        fa, fb = fb, _dense_mod(fa, fb)
    return fa


def _split_by_others(p: MPoly, v: str) -> dict:
    """Dense v-coefficient lists of p grouped by the monomials in the other variables."""
    i = p.vars.index(v)
    groups: dict = {}
    for exp, c in p.terms.items():
        rest = exp[:i] + exp[i + 1:]
        groups.setdefault(rest, {})[exp[i]] = c
    out = {}
    for rest, chunk in groups.items():
        d = max(chunk)
        dense = [Fraction(0)] * (d + 1)
        for e, c in chunk.items():
            dense[e] = c
        out[rest] = dense
    return out


def _to_dense(p: MPoly, v: str):
    if v in p.vars:
        i = p.vars.index(v)
    else:
        i = None
    d = p.degree_in(v)
    out = [Fraction(0)] * (d + 1)
    for exp, c in p.terms.items():
        out[exp[i] if i is not None else 0] += c
    while out and not out[-1]:
        out.pop()
    return out


def _from_dense(coeffs, v: str) -> MPoly:
    return MPoly((v,), {(i,): c for i, c in enumerate(coeffs) if c})


def _dense_mod(a, b):
    lb = b[-1]
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] / lb
        if c:
            off = len(r) - len(b)
            for i, bc in enumerate(b):
                r[off + i] -= c * bc
        r.pop()
        while r and not r[-1]:
            r.pop()
    return r


# -- rational functions ------------------------------------------------------


class RatFunc:
    """Reduced quotient of two MPoly values.

    Normal form: gcd(num, den) = 1, den has integer content 1 and positive
    graded-lex leading coefficient; the rational content lives in num.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, MPoly):
            num = MPoly.const(num)
        if den is None:
            den = MPoly.const(1, num.vars)
        elif not isinstance(den, MPoly):
            den = MPoly.const(den, num.vars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _reduce(num: MPoly, den: MPoly):
        if num.is_zero():
            return num, MPoly.const(1, num.vars)
        if not den.is_const():
            g = gcd_poly(num, den)
            if not (g.is_const() and g.const_value() == 1):
                num = num.divide_exact(g)
                den = den.divide_exact(g)
        dc, dp = den.primitive()
        if dc != 1:
            num = num.scale(1 / dc)
            den = dp
        return num, den

    @classmethod
    def const(cls, value: Scalar) -> "RatFunc":
        return cls(MPoly.const(value))

    @classmethod
    def variable(cls, name: str) -> "RatFunc":
        return cls(MPoly.variable(name))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_const() and self.den.const_value() == 1

    def as_poly(self) -> MPoly:
        if not self.is_polynomial():
            raise NotDivisible(self.num)
        return self.num

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # normal form is unique, but cross-multiplying is immune to var padding
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def substitute(self, bindings) -> "RatFunc":
        num = self.num.substitute({v: b for v, b in bindings.items() if v in self.num.vars})
        den = self.den.substitute({v: b for v, b in bindings.items() if v in self.den.vars})
        if den.is_zero():
            raise DenominatorVanishes(f"denominator vanishes under {bindings}")
        return RatFunc(num, den)

    def to_obj(self):
        return {"num": self.num.to_obj(), "den": self.den.to_obj()}

    @classmethod
    def from_obj(cls, obj) -> "RatFunc":
        return cls(MPoly.from_obj(obj["num"]), MPoly.from_obj(obj["den"]))

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "RatFunc":
        return cls.from_obj(json.loads(text))

    def render(self) -> str:
        if self.is_polynomial():
            return self.num.render()
        return f"({self.num.render()}) / ({self.den.render()})"

    def __repr__(self):
        return f"RatFunc({self.render()})"


# shared symbols used across the package
ALPHA = MPoly.variable("alpha")
BETA = MPoly.variable("beta")


def alpha_power(n: int) -> MPoly:
    return MPoly(("alpha",), {(n,): Fraction(1)})
