"""The parametric 4-manifold families as first-class objects.

An instance is a family tag plus integer parameters: A(m,n) and
Ã(m, n-1/2) built on the abalone polyhedra, B(l,m,n) on Bing's house,
and the W±(l,k) manifolds which reduce to A/Ã instances.  The module
ties together the closed-form Alexander polynomials, the Casson
invariant of the boundary through the surgery formula, and the
Mazur-type and cork certificates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import kirby, legendrian, polyhedron
from .errors import OutOfRegime, ParseError, UnsupportedFamily, ZeroParameter
from .laurent import LaurentPoly, second_derivative_at_one
from .symbolic import Expr

_ARITY = {"A": 2, "ATilde": 2, "Bing": 3, "WPlus": 2, "WMinus": 2}


@dataclass(frozen=True)
class FamilyInstance:
    """family tag plus integer parameters.

    ATilde(m, n) denotes the manifold with half-integer second gleam
    n - 1/2; the stored parameters are always integers.
    """

    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in _ARITY:
            raise UnsupportedFamily("unknown family %r" % self.family)
        if len(self.params) != _ARITY[self.family]:
            raise UnsupportedFamily(
                "family %s takes %d parameters, got %d"
                % (self.family, _ARITY[self.family], len(self.params))
            )
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))


@dataclass
class CorkCertificate:
    stein_ok: bool
    symmetric_diagram: bool
    homology_sphere_boundary: bool
    contractible: bool
    annotation: str = ""


@dataclass
class MazurVerdict:
    mazur_shape: bool
    evidence: str
    casson: object  # integer or None
    verdict: bool
    reason: str


# -- closed forms -----------------------------------------------------------------


def closed_form_alexander(family, m) -> LaurentPoly:
    """Alexander polynomial of the surgery knot; depends only on |m|."""
    if m == 0:
        raise ZeroParameter("the closed forms require m != 0")
    a = abs(m)
    if family == "A":
        exponents = [(a + 1, 1), (a, -1), (0, 3), (-a, -1), (-a - 1, 1)]
    elif family == "ATilde":
        exponents = [(a, -1), (a - 1, 1), (0, 3), (-a + 1, 1), (-a, -1)]
    else:
        raise UnsupportedFamily("no closed form for family %r" % family)
    # terms are summed one by one: at small m some exponents coincide
    # and their coefficients merge (e.g. A at m=1 gives -2t)
    p = LaurentPoly({1: -1, -1: -1})
    for k, c in exponents:
        p = p + LaurentPoly.term(k, c)
    return p


def epsilon(m) -> int:
    """Surgery sign: -1 for m > 0, +1 for m < 0."""
    if m == 0:
        raise ZeroParameter("epsilon requires m != 0")
    return -1 if m > 0 else 1


def casson_boundary(inst: FamilyInstance) -> int:
    """Casson invariant of the boundary through the surgery formula.

    lambda = lambda(S^3) + (eps/2) * Delta''(1) with lambda(S^3) = 0;
    the W families reduce to ATilde instances first.
    """
    if inst.family in ("WPlus", "WMinus"):
        sign = "+" if inst.family == "WPlus" else "-"
        inst = w_identification(sign, *inst.params).instances[0]
    if inst.family not in ("A", "ATilde"):
        raise UnsupportedFamily("no Casson formula for family %r" % inst.family)
    m = inst.params[0]
    delta = closed_form_alexander(inst.family, m)
    value = Fraction(epsilon(m), 2) * second_derivative_at_one(delta)
    if value.denominator != 1:
        raise UnsupportedFamily("surgery formula gave a non-integer")
    return int(value)


# -- diagrams and certificates --------------------------------------------------


def family_diagram(inst: FamilyInstance) -> kirby.KirbyDiagram:
    """The reduced handle diagram: one dotted circle and one 2-handle
    running algebraically once through it.  The framing is kept as a
    symbol; none of the homology outputs depend on it."""
    if inst.family in ("WPlus", "WMinus"):
        sign = "+" if inst.family == "WPlus" else "-"
        inst = w_identification(sign, *inst.params).instances[0]
    if inst.family not in ("A", "ATilde", "Bing"):
        raise UnsupportedFamily("no diagram for family %r" % inst.family)
    handle = kirby.TwoHandle("k1", Expr.var("f"), {"h1": [1]})
    return kirby.KirbyDiagram(["h1"], [handle])


def mazur_type_certificate(inst: FamilyInstance) -> MazurVerdict:
    """Mazur handle shape plus evidence that the boundary is not S^3."""
    pres = kirby.homology_presentation(family_diagram(inst))
    shape = pres.mazur_shape and pres.boundary_h1_order == 1
    if inst.family == "Bing":
        l, m, n = inst.params
        gleams = polyhedron.GleamAssignment({"e3": l, "e4": m, "e5": n})
        if polyhedron.hyperbolicity_criterion(polyhedron.builtin("bings_house"), gleams):
            return MazurVerdict(shape, "hyperbolicity", None, shape,
                                "all slope lengths exceed 6")
        if l == 0 and m * n > 0:
            return MazurVerdict(shape, "same-sign regime", None, shape,
                                "l = 0 with m, n of the same sign")
        return MazurVerdict(shape, "none", None, False,
                            "no evidence: not hyperbolic, not in the same-sign regime")
    try:
        casson = casson_boundary(inst)
    except ZeroParameter:
        casson = 0
    if casson != 0:
        return MazurVerdict(shape, "casson", casson, shape, "lambda = %d" % casson)
    return MazurVerdict(shape, "none", casson, False, "no evidence: lambda = 0")


def cork_certificate(inst: FamilyInstance) -> CorkCertificate:
    """The checkable parts of the cork statements.

    Regimes: ATilde(m, -3/2) with m < 0, and B(0,m,n) with m, n < 0.
    The diagram symmetry and the non-extension of the involution are
    facts about the pictures, carried as metadata.
    """
    if inst.family == "ATilde":
        m, n = inst.params
        if n != -1 or m >= 0:
            raise OutOfRegime("cork regime is ATilde(m, -3/2) with m < 0")
        front = legendrian.family_front("ATilde", m)
        annotation = ""
    elif inst.family == "Bing":
        l, m, n = inst.params
        if l != 0 or m >= 0 or n >= 0:
            raise OutOfRegime("cork regime is B(0,m,n) with m, n < 0")
        front = legendrian.family_front("Bing", m, n)
        annotation = "diffeomorphic to the Akbulut-Yasui cork W1-bar" if (m, n) == (-1, -1) else ""
    else:
        raise OutOfRegime("no cork regime for family %r" % inst.family)
    pres = kirby.homology_presentation(family_diagram(inst))
    return CorkCertificate(
        stein_ok=legendrian.eliashberg_stein_check(front),
        symmetric_diagram=True,
        homology_sphere_boundary=pres.boundary_h1_order == 1,
        contractible=pres.h1 == (0, []) and pres.h2_rank == 0,
        annotation=annotation,
    )


# -- identifications ------------------------------------------------------------


@dataclass
class WIdentification:
    instances: list  # FamilyInstance
    class_key: int  # invariant of (l, k) -> (l+1, k-1)


def w_identification(sign, l, k) -> WIdentification:
    """W±(l,k) as A/ATilde instances; the class key is l + k."""
    total = l + k
    if sign in ("+", 1):
        instances = [FamilyInstance("ATilde", (1, total - 1)),
                     FamilyInstance("A", (-1, total + 2))]
    elif sign in ("-", -1):
        instances = [FamilyInstance("ATilde", (-1, total - 1)),
                     FamilyInstance("A", (1, total - 5))]
    else:
        raise UnsupportedFamily("sign must be '+' or '-'")
    return WIdentification(instances, total)


def mirror(inst: FamilyInstance) -> FamilyInstance:
    """Reverse orientation by negating every gleam parameter."""
    if inst.family == "A":
        m, n = inst.params
        return FamilyInstance("A", (-m, -n))
    if inst.family == "ATilde":
        # the half-integer slot n - 1/2 negates to -n + 1/2 = (1 - n) - 1/2
        m, n = inst.params
        return FamilyInstance("ATilde", (-m, 1 - n))
    if inst.family == "Bing":
        return FamilyInstance("Bing", tuple(-p for p in inst.params))
    raise UnsupportedFamily("mirror is defined for A, ATilde and Bing")


def remark_34_check(n) -> bool:
    """Consistency of A(+-1, n) = ATilde(-+1, n +- 7/2) at the Casson level.

    The slot arithmetic: n + 7/2 = n' - 1/2 gives n' = n + 4, and
    n - 7/2 = n' - 1/2 gives n' = n - 3.
    """
    plus = casson_boundary(FamilyInstance("A", (1, n)))
    plus_image = casson_boundary(FamilyInstance("ATilde", (-1, n + 4)))
    minus = casson_boundary(FamilyInstance("A", (-1, n)))
    minus_image = casson_boundary(FamilyInstance("ATilde", (1, n - 3)))
    return plus == plus_image and minus == minus_image


# -- notation -------------------------------------------------------------------

_NOTATION = re.compile(r"^(A|At|B|W\+|W-)\(([^()]*)\)$")


def format_notation(inst: FamilyInstance) -> str:
    if inst.family == "A":
        return "A(%d,%d)" % inst.params
    if inst.family == "ATilde":
        m, n = inst.params
        return "At(%d,%d/2)" % (m, 2 * n - 1)
    if inst.family == "Bing":
        return "B(%d,%d,%d)" % inst.params
    tag = "W+" if inst.family == "WPlus" else "W-"
    return "%s(%d,%d)" % ((tag,) + inst.params)


def parse_notation(text: str) -> FamilyInstance:
    """A(m,n), At(m,p/2) with p odd, B(l,m,n), W+(l,k), W-(l,k)."""
    m = _NOTATION.match(text.replace(" ", ""))
    if not m:
        raise ParseError("bad instance notation %r" % text)
    tag, body = m.groups()
    try:
        values = [Fraction(p) for p in body.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad parameters in %r" % text)
    if tag == "At":
        if len(values) != 2 or values[0].denominator != 1 or values[1].denominator != 2:
            raise ParseError("At takes an integer and a half-integer, got %r" % text)
        return FamilyInstance("ATilde", (int(values[0]), int(values[1] + Fraction(1, 2))))
    if any(v.denominator != 1 for v in values):
        raise ParseError("parameters of %r must be integers" % text)
    values = [int(v) for v in values]
    family = {"A": "A", "B": "Bing", "W+": "WPlus", "W-": "WMinus"}[tag]
    try:
        return FamilyInstance(family, tuple(values))
    except UnsupportedFamily as exc:
        raise ParseError(str(exc))
