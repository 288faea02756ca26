"""Tiny exact multivariate polynomials over the rationals.

Framing coefficients of family Kirby diagrams and the gleam ledgers are
affine expressions in the family parameters (m, n, l, eps, ...).  This
class keeps that bookkeeping exact without pulling in a CAS; products
(needed only transiently inside determinants) are supported too.

A polynomial is a map monomial -> Fraction where a monomial is a sorted
tuple of variable names with multiplicity, e.g. () for the constant term
and ('m', 'm', 'n') for m^2 n.
"""

from __future__ import annotations

from fractions import Fraction


class Expr:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in dict(terms).items():
                c = Fraction(c)
                if c:
                    clean[tuple(sorted(mono))] = c
        self.terms = clean

    @classmethod
    def const(cls, value):
        return cls({(): Fraction(value)})

    @classmethod
    def var(cls, name):
        return cls({(name,): Fraction(1)})

    @staticmethod
    def wrap(value):
        if isinstance(value, Expr):
            return value
        return Expr.const(value)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = Expr.wrap(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return Expr(out)

    __radd__ = __add__

    def __neg__(self):
        return Expr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Expr.wrap(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Expr.wrap(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return Expr(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Expr.const(other)
        if not isinstance(other, Expr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ----------------------------------------------------------

    def is_constant(self):
        return all(m == () for m in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("%s is not constant" % self)
        return self.terms.get((), Fraction(0))

    def variables(self):
        names = set()
        for mono in self.terms:
            names.update(mono)
        return names

    def coefficient(self, name):
        """Coefficient of the degree-1 monomial in ``name`` (affine reading)."""
        return self.terms.get((name,), Fraction(0))

    def substitute(self, values):
        """Evaluate, fully or partially, at values: name -> number."""
        out = Expr()
        for mono, c in self.terms.items():
            factor = Fraction(c)
            rest = []
            for name in mono:
                if name in values:
                    factor *= Fraction(values[name])
                else:
                    rest.append(name)
            out = out + Expr({tuple(rest): factor})
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            body = "*".join(mono) if mono else ""
            if body and abs(c) == 1:
                text = body
            elif body:
                text = "%s*%s" % (abs(c), body)
            else:
                text = str(abs(c))
            parts.append(("-" if c < 0 else "+", text))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            s += " %s %s" % (sign, text)
        return s

    __repr__ = __str__


def expr_det(matrix):
    """Determinant of a small matrix with Expr/number entries (minor expansion)."""
    n = len(matrix)
    if n == 0:
        return Expr.const(1)
    if n == 1:
        return Expr.wrap(matrix[0][0])
    total = Expr()
    for j in range(n):
        entry = Expr.wrap(matrix[0][j])
        if not entry:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = entry * expr_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total
