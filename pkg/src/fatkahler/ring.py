"""Bigraded polynomials in X0, X1, Y0, Y1 with rational coefficients.

X-variables have bidegree (1, 0) and Y-variables (0, 1).  A monomial is a
4-tuple of exponents ``(a0, a1, b0, b1)``.  Polynomials are immutable.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from types import MappingProxyType

VARIABLES = ("X0", "X1", "Y0", "Y1")
_VAR_INDEX = {name: k for k, name in enumerate(VARIABLES)}


def preceq(d1, d2):
    """Componentwise order on bidegrees."""
    return d1[0] <= d2[0] and d1[1] <= d2[1]


def add_degrees(d1, d2):
    return (d1[0] + d2[0], d1[1] + d2[1])


def monomial_bidegree(mon):
    return (mon[0] + mon[1], mon[2] + mon[3])


@lru_cache(maxsize=None)
def monomial_basis(deg):
    """Monomials of bidegree ``deg`` in descending lex order on (a0, a1, b0, b1).

    The position of ``(i-a1, a1, j-b1, b1)`` is ``a1*(j+1) + b1``.
    """
    i, j = deg
    if i < 0 or j < 0:
        return ()
    return tuple((i - a1, a1, j - b1, b1) for a1 in range(i + 1) for b1 in range(j + 1))


def monomial_index(mon):
    return mon[1] * (mon[2] + mon[3] + 1) + mon[3]


def _var_index(var):
    if isinstance(var, int):
        if 0 <= var < 4:
            return var
    elif var in _VAR_INDEX:
        return _VAR_INDEX[var]
    raise ValueError(f"unknown variable {var!r}")


class BiPoly:
    """Sparse polynomial: a map from exponent tuples to nonzero Fractions."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mon, c in dict(terms).items():
                mon = tuple(int(e) for e in mon)
                if len(mon) != 4 or min(mon) < 0:
                    raise ValueError(f"bad exponent tuple {mon!r}")
                c = Fraction(c)
                if c:
                    clean[mon] = clean.get(mon, 0) + c
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, clean):
        obj = cls.__new__(cls)
        obj._terms = clean
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c):
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def variable(cls, var):
        mon = [0, 0, 0, 0]
        mon[_var_index(var)] = 1
        return cls._wrap({tuple(mon): Fraction(1)})

    @classmethod
    def monomial(cls, mon, c=1):
        return cls({mon: c})

    @classmethod
    def from_vector(cls, vec, deg):
        """Read a coefficient vector indexed by ``monomial_basis(deg)``."""
        basis = monomial_basis(deg)
        if len(vec) != len(basis):
            raise ValueError("vector length does not match the monomial basis")
        return cls._wrap({m: Fraction(c) for m, c in zip(basis, vec) if c})

    @classmethod
    def parse(cls, text):
        return parse_poly(text)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, mon):
        return self._terms.get(tuple(mon), Fraction(0))

    def bidegrees(self):
        return {monomial_bidegree(m) for m in self._terms}

    def is_bihomogeneous(self):
        return len(self.bidegrees()) <= 1

    @property
    def bidegree(self):
        """The common bidegree, or None for zero or mixed polynomials."""
        degs = self.bidegrees()
        if len(degs) == 1:
            return next(iter(degs))
        return None

    def coefficient_vector(self, deg=None):
        if deg is None:
            deg = self.bidegree
            if deg is None:
                raise ValueError("polynomial is not bihomogeneous")
        vec = [Fraction(0)] * len(monomial_basis(deg))
        for mon, c in self._terms.items():
            if monomial_bidegree(mon) != tuple(deg):
                raise ValueError("polynomial has terms outside the requested bidegree")
            vec[monomial_index(mon)] = c
        return vec

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for mon, c in other._terms.items():
            s = out.get(mon, 0) + c
            if s:
                out[mon] = s
            else:
                out.pop(mon, None)
        return BiPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return BiPoly()
        return BiPoly._wrap({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mon = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                out[mon] = out.get(mon, 0) + c1 * c2
        return BiPoly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def partial(self, var):
        k = _var_index(var)
        out = {}
        for mon, c in self._terms.items():
            e = mon[k]
            if e:
                m = list(mon)
                m[k] = e - 1
                out[tuple(m)] = c * e
        return BiPoly._wrap(out)

    def evaluate(self, point):
        """Value at a point with stored normalized coordinates."""
        if not self.is_bihomogeneous():
            raise ValueError("evaluation needs a bihomogeneous polynomial")
        x0, x1 = point.x
        y0, y1 = point.y
        total = Fraction(0)
        for (a0, a1, b0, b1), c in self._terms.items():
            total += c * x0**a0 * x1**a1 * y0**b0 * y1**b1
        return total

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: (monomial_bidegree(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mon, c in self.sorted_terms():
            factors = []
            for name, e in zip(VARIABLES, mon):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = f"{a}*" + "*".join(factors)
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"BiPoly({str(self)!r})"


X0, X1, Y0, Y1 = (BiPoly.variable(v) for v in VARIABLES)


def bipoly_arith(op, f, g):
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def bipoly_partial(f, var):
    return f.partial(var)


def evaluate(f, point):
    return f.evaluate(point)


# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(X0|X1|Y0|Y1)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("var", var))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of polynomial")
        self.pos += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.bidegrees() != {(0, 0)}:
                    raise ValueError("division is only allowed by nonzero constants")
                value = value.scale(1 / rhs.coefficient((0, 0, 0, 0)))
        return value

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base**e
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return BiPoly.constant(val)
        if kind == "var":
            return BiPoly.variable(val)
        if val == "(":
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        raise ValueError(f"unexpected token {val!r}")


def parse_poly(text):
    """Parse text such as ``3/2*X0^2*X1*Y1 - Y0^3``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial")
    parser = _Parser(tokens)
    value = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input in polynomial {text!r}")
    return value


# linear coordinate changes

def _mat(m):
    rows = tuple(tuple(Fraction(v) for v in row) for row in m)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("a change matrix must be 2x2")
    return rows


def _det(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _inv(m):
    d = _det(m)
    return ((m[1][1] / d, -m[0][1] / d), (-m[1][0] / d, m[0][0] / d))


@dataclass(frozen=True)
class LinearChange:
    """Substitution X_k -> sum_l xmat[k][l] X_l and likewise for Y.

    Applying it to F gives G(X, Y) = F(xmat X, ymat Y), so G takes at
    (u, v) the value F takes at (xmat u, ymat v).
    """

    xmat: tuple = ((1, 0), (0, 1))
    ymat: tuple = ((1, 0), (0, 1))

    def __post_init__(self):
        xm, ym = _mat(self.xmat), _mat(self.ymat)
        if _det(xm) == 0 or _det(ym) == 0:
            raise ValueError("linear change must be invertible")
        object.__setattr__(self, "xmat", xm)
        object.__setattr__(self, "ymat", ym)

    @classmethod
    def carrying(cls, x, y):
        """Change whose result at [1:0]x[1:0] behaves like the input at [x]x[y].

        The first column of each matrix is the given coordinate pair; the
        second column completes it to an invertible matrix.
        """
        return cls(carrying_matrix(x), carrying_matrix(y))

    def inverse(self):
        return LinearChange(_inv(self.xmat), _inv(self.ymat))

    def apply(self, f):
        return apply_change(self, f)


def exact(v):
    """Fraction with denominator 1 becomes an int; keeps inner loops on ints."""
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def carrying_matrix(pair):
    """Invertible 2x2 matrix whose first column is the given pair."""
    a0, a1 = (exact(v) for v in pair)
    if a0:
        return ((a0, 0), (a1, 1))
    if a1:
        return ((0, 1), (a1, 0))
    raise ValueError("coordinates (0, 0) do not define a point")


def _linear_power_table(mat, n):
    """Powers of the two substituted linear forms, as dicts (e0, e1) -> coeff."""
    forms = []
    for k in range(2):
        form = {}
        if mat[k][0]:
            form[(1, 0)] = mat[k][0]
        if mat[k][1]:
            form[(0, 1)] = mat[k][1]
        powers = [{(0, 0): Fraction(1)}]
        for _ in range(n):
            prev = powers[-1]
            nxt = {}
            for (e0, e1), c in prev.items():
                for (f0, f1), d in form.items():
                    key = (e0 + f0, e1 + f1)
                    nxt[key] = nxt.get(key, 0) + c * d
            powers.append(nxt)
        forms.append(powers)
    return forms


def apply_change(change, f):
    if not isinstance(change, LinearChange):
        raise TypeError("expected a LinearChange")
    if f.is_zero():
        return f
    nx = max(max(m[0], m[1]) for m in f.terms)
    ny = max(max(m[2], m[3]) for m in f.terms)
    xp = _linear_power_table(change.xmat, nx)
    yp = _linear_power_table(change.ymat, ny)
    out = {}
    for (a0, a1, b0, b1), c in f:
        xpart = _mul_dicts(xp[0][a0], xp[1][a1])
        ypart = _mul_dicts(yp[0][b0], yp[1][b1])
        for (e0, e1), cx in xpart.items():
            for (g0, g1), cy in ypart.items():
                mon = (e0, e1, g0, g1)
                out[mon] = out.get(mon, 0) + c * cx * cy
    return BiPoly._wrap({m: v for m, v in out.items() if v})


def _mul_dicts(p, q):
    out = {}
    for (a, b), c in p.items():
        for (d, e), v in q.items():
            key = (a + d, b + e)
            out[key] = out.get(key, 0) + c * v
    return out


def dehomogenized_coefficients(mat, exps, order):
    """Coefficients of t^u, u < order, in (m00 + m01 t)^e0 (m10 + m11 t)^e1."""
    (m00, m01), (m10, m11) = mat
    e0, e1 = exps
    p = [0] * order
    if order == 0:
        return p
    # (m00 + m01 t)^e0 truncated
    first = [comb(e0, u) * m00 ** (e0 - u) * m01**u if u <= e0 else 0 for u in range(order)]
    second = [comb(e1, u) * m10 ** (e1 - u) * m11**u if u <= e1 else 0 for u in range(order)]
    for u in range(order):
        if first[u]:
            for w in range(order - u):
                if second[w]:
                    p[u + w] += first[u] * second[w]
    return p
