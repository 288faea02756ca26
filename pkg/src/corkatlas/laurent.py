"""Integer Laurent polynomials in one variable t.

Coefficients are arbitrary-precision Python ints and a polynomial is a
sparse map exponent -> coefficient with no stored zeros, so everything
here is exact.  This is the house of the Alexander polynomials: the
evaluations needed by the Casson surgery formula (value and second
derivative at t=1), the symmetry test Delta(t) = Delta(1/t), the
normalization to the representative with Delta(1) = +1, and a bounded
Fox-Milnor factorization search.
"""

from __future__ import annotations

import itertools
import re

from .errors import NotAlexanderLike, ParseError


class LaurentPoly:
    """A Laurent polynomial sum_k c_k t^k with integer coefficients.

    Instances behave as immutable values; arithmetic returns new objects.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for k, c in dict(coeffs).items():
                if c:
                    clean[int(k)] = int(c)
        self.coeffs = clean

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def term(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def t(cls):
        return cls({1: 1})

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: c * other for k, c in self.coeffs.items()})
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shifted(self, k):
        """Multiply by the unit t^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def reversed(self):
        """Substitute t -> t^{-1}."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    # -- inspection ------------------------------------------------------------

    def coefficient(self, k):
        return self.coeffs.get(k, 0)

    @property
    def min_exponent(self):
        return min(self.coeffs) if self.coeffs else 0

    @property
    def max_exponent(self):
        return max(self.coeffs) if self.coeffs else 0

    def terms(self):
        """Sorted (exponent, coefficient) pairs, exponents strictly increasing."""
        return sorted(self.coeffs.items())

    def __repr__(self):
        return "LaurentPoly(%s)" % (dict(self.terms()),)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in sorted(self.coeffs.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else ("t^-1" if k == -1 else "t^%d" % k)
                body = var if mag == 1 else "%d*%s" % (mag, var)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    # -- serialization -----------------------------------------------------

    def to_pairs(self):
        """Sparse textual form, e.g. ``[(-2,1),(-1,-2),(0,3),(1,-2),(2,1)]``."""
        return "[" + ",".join("(%d,%d)" % t for t in self.terms()) + "]"

    @classmethod
    def from_pairs(cls, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ParseError("expected [(exp,coeff),...], got %r" % text)
        body = text[1:-1].strip()
        if not body:
            return cls.zero()
        pairs = re.findall(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", body)
        remainder = re.sub(r"\(\s*-?\d+\s*,\s*-?\d+\s*\)\s*,?\s*", "", body)
        if remainder.strip():
            raise ParseError("unparsed polynomial text %r" % remainder)
        coeffs = {}
        last = None
        for e, c in pairs:
            e = int(e)
            if last is not None and e <= last:
                raise ParseError("exponents must be strictly increasing")
            last = e
            coeffs[e] = int(c)
        return cls(coeffs)


# -- operations --------------------------------------------------------------


def eval_at_one(p: LaurentPoly) -> int:
    """p(1), i.e. the coefficient sum."""
    return sum(p.coeffs.values())


def second_derivative_at_one(p: LaurentPoly) -> int:
    """p''(1) = sum c_k k (k-1), the Casson surgery-formula input."""
    return sum(c * k * (k - 1) for k, c in p.coeffs.items())


def is_symmetric(p: LaurentPoly) -> bool:
    """True iff p(t) = p(1/t)."""
    return all(p.coefficient(-k) == c for k, c in p.coeffs.items())


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """The unit multiple +-t^k p that is symmetric with value +1 at t=1.

    Alexander polynomials are defined up to such units; this picks the
    canonical representative.  Raises NotAlexanderLike if no unit multiple
    is symmetric with value +-1 at t=1.
    """
    if not p:
        raise NotAlexanderLike("the zero polynomial has no Alexander normalization")
    span = p.min_exponent + p.max_exponent
    if span % 2 != 0:
        raise NotAlexanderLike("no symmetric unit multiple: odd exponent span")
    centered = p.shifted(-span // 2)
    if not is_symmetric(centered):
        raise NotAlexanderLike("no symmetric unit multiple of %s" % p)
    value = eval_at_one(centered)
    if value == 1:
        return centered
    if value == -1:
        return -centered
    raise NotAlexanderLike("symmetric multiple evaluates to %d, not +-1, at t=1" % value)


def fox_milnor_factor(p: LaurentPoly, max_degree: int):
    """Bounded search for f with f(t) f(1/t) = p, the ribbon-knot condition.

    ``p`` must be symmetric with p(1) = 1 (the normalized form).  The search
    runs over integer vectors (a_0, ..., a_d) with a_0, a_d != 0, d the half
    exponent span of p, and |a_i| bounded by the largest |coefficient| of p.
    Returns the factor as a LaurentPoly in nonnegative powers of t, or None
    if the search space contains no factor.
    """
    if not is_symmetric(p):
        raise ValueError("fox_milnor_factor requires a symmetric polynomial")
    if eval_at_one(p) != 1:
        raise ValueError("fox_milnor_factor requires p(1) = 1")
    if p == LaurentPoly.one():
        return LaurentPoly.one()
    d = p.max_exponent
    if d == 0 or d > max_degree:
        return None
    bound = max(abs(c) for c in p.coeffs.values())
    coeff_range = range(-bound, bound + 1)
    nonzero = [c for c in coeff_range if c]
    for a0 in nonzero:
        for ad in nonzero:
            # leading and trailing products are forced
            if a0 * ad != p.coefficient(d):
                continue
            for middle in itertools.product(coeff_range, repeat=d - 1):
                vec = (a0,) + middle + (ad,)
                if abs(sum(vec)) != 1:
                    continue
                f = LaurentPoly(dict(enumerate(vec)))
                if f * f.reversed() == p:
                    return f
    return None
