"""Gleam bookkeeping for the shadow descriptions of the three families.

A projected link on a polyhedron is kept as an explicit crossing ledger:
each crossing distributes the corner contributions (+1/2, -1/2, -1/2,
+1/2) to the four adjacent regions of the subdivision, each curve has a
twist number tw and a framing coefficient, and each disk region D_j
acquires gleam n_j - tw(C_j).  Collapsing the boundary regions merges
the subdivision regions onto the base polyhedron, summing gleams.

Framings are symbolic (Expr), so the same ledger serves both the forward
computation and the inverse solve from target gleams.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import (
    NotCollapsible,
    ParityViolation,
    ParseError,
    UnknownRegion,
)
from .polyhedron import GleamAssignment, builtin
from .symbolic import Expr

# slot order of a crossing record: (++, +-, -+, --); the over/under
# quadrant convention gives +1/2 on ++ and --, -1/2 on +- and -+
_SLOT_SIGNS = (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2))


@dataclass(frozen=True)
class Crossing:
    kind: str  # self | curve-curve | curve-singular
    slots: tuple  # four region names in (++, +-, -+, --) order


@dataclass
class AnnotatedProjection:
    base: str  # builtin polyhedron name
    curves: list  # curve names, ordered
    framings: dict  # curve -> Expr (symbolic or constant)
    twist: dict  # curve -> Fraction half-integer
    crossings: list  # Crossing
    disks: dict  # curve -> disk region name
    boundary_regions: list  # subdivision regions collapsed away
    merge: dict = field(default_factory=dict)  # base region -> constituents

    def subdivision_regions(self):
        names = set(self.disks.values()) | set(self.boundary_regions)
        for parts in self.merge.values():
            names.update(parts)
        return names


# -- the three ledgers -------------------------------------------------------


def family_ledger(family):
    """Crossing ledgers of the three projected families.

    Corner placements reproduce the worked sums: the abalone regions
    collect 1/2 - 1/2 and 4(1/2) - 4(1/2), the Moebius region of
    a_tilde collects a net -1/2, and every region of Bing's house
    collects zero.
    """
    if family == "A":
        return AnnotatedProjection(
            base="abalone",
            curves=["C1", "C2"],
            framings={"C1": Expr.var("M"), "C2": Expr.var("N")},
            twist={"C1": Fraction(0), "C2": Fraction(1)},
            crossings=[
                Crossing("curve-curve", ("e1s", "e1s", "R1", "R1")),
                Crossing("curve-singular", ("e2s", "e2s", "R2", "R2")),
                Crossing("curve-singular", ("e2s", "e2s", "R2", "R2")),
                Crossing("curve-singular", ("e2s", "e2s", "R2", "R2")),
                Crossing("curve-singular", ("e2s", "e2s", "R2", "R2")),
            ],
            disks={"C1": "D1", "C2": "D2"},
            boundary_regions=["R1", "R2"],
            merge={"e1": ["D1", "e1s"], "e2": ["D2", "e2s"]},
        )
    if family == "ATilde":
        return AnnotatedProjection(
            base="a_tilde",
            curves=["C1", "C2"],
            framings={"C1": Expr.var("M"), "C2": Expr.var("N")},
            twist={"C1": Fraction(0), "C2": Fraction(1)},
            crossings=[
                Crossing("curve-curve", ("e1s", "e1s", "R1", "R1")),
                Crossing("curve-singular", ("R2", "e2s", "R1", "R2")),
            ],
            disks={"C1": "D1", "C2": "D2"},
            boundary_regions=["R1", "R2"],
            merge={"e1~": ["D1", "e1s"], "e2~": ["D2", "e2s"]},
        )
    if family == "Bing":
        return AnnotatedProjection(
            base="bings_house",
            curves=["C1", "C2", "C3"],
            framings={"C1": Expr.var("L"), "C2": Expr.var("M"), "C3": Expr.var("N")},
            twist={"C1": Fraction(0), "C2": Fraction(0), "C3": Fraction(0)},
            crossings=[
                Crossing("curve-singular", ("e3s", "e3s", "R1", "R1")),
                Crossing("curve-singular", ("e3s", "e3s", "R1", "R1")),
                Crossing("curve-singular", ("e3s", "e3s", "R1", "R1")),
                Crossing("curve-singular", ("e3s", "e3s", "R1", "R1")),
                Crossing("self", ("e4s", "e4s", "R2", "R2")),
                Crossing("self", ("e5s", "e5s", "R3", "R3")),
            ],
            disks={"C1": "D1", "C2": "D2", "C3": "D3"},
            boundary_regions=["R1", "R2", "R3"],
            merge={
                "e3": ["D1", "e3s"],
                "e4": ["D2", "e4s"],
                "e5": ["D3", "e5s"],
            },
        )
    raise UnknownRegion("unknown family %r" % family)


# -- forward pipeline -----------------------------------------------------------


def disk_gleam(n_j, tw):
    """Gleam of the disk region bounded by a projected attaching circle."""
    if isinstance(n_j, Expr) or isinstance(tw, Expr):
        return Expr.wrap(n_j) - Expr.wrap(tw)
    return Fraction(n_j) - Fraction(tw)


def region_gleam(proj: AnnotatedProjection, region):
    """Sum of the +-1/2 corner contributions a region collects."""
    if region not in proj.subdivision_regions():
        raise UnknownRegion("region %r is not in the subdivision" % region)
    total = Fraction(0)
    for x in proj.crossings:
        for slot, sign in zip(x.slots, _SLOT_SIGNS):
            if slot == region:
                total += sign
    return total


def collapse_boundary(proj: AnnotatedProjection, gleams):
    """Merge subdivision regions onto the base polyhedron, summing gleams.

    ``gleams`` maps every non-boundary subdivision region to its gleam
    (numbers or Expr).  Returns (builtin polyhedron, merged gleam map).
    """
    base = builtin(proj.base)
    internal = {r.name for r in base.internal_regions()}
    for name in proj.boundary_regions:
        if name in internal or any(name in parts for parts in proj.merge.values()):
            raise NotCollapsible("region %r is internal, cannot collapse" % name)
    merged = {}
    for target, parts in proj.merge.items():
        if target not in internal:
            raise UnknownRegion("merge target %r is not a base region" % target)
        total = Expr.const(0)
        for part in parts:
            total = total + Expr.wrap(gleams[part])
        merged[target] = total
    return base, merged


def forward_gleams(proj: AnnotatedProjection):
    """Run the whole ledger: disk gleams, corner sums, collapse."""
    gleams = {}
    for curve in proj.curves:
        gleams[proj.disks[curve]] = disk_gleam(proj.framings[curve], proj.twist[curve])
    for region in proj.subdivision_regions():
        if region in proj.boundary_regions or region in gleams:
            continue
        gleams[region] = region_gleam(proj, region)
    return collapse_boundary(proj, gleams)


def mirror_ledger(proj: AnnotatedProjection) -> AnnotatedProjection:
    """Swap every crossing's over/under data and reverse the twists."""
    flipped = [Crossing(x.kind, (x.slots[1], x.slots[0], x.slots[3], x.slots[2]))
               for x in proj.crossings]
    return replace(
        proj,
        crossings=flipped,
        twist={c: -t for c, t in proj.twist.items()},
        framings=dict(proj.framings),
    )


# -- inverse solve ------------------------------------------------------------


_FAMILY_SLOTS = {
    "A": ("e1", "e2"),
    "ATilde": ("e1~", "e2~"),
    "Bing": ("e3", "e4", "e5"),
}


def solve_framings(family, targets):
    """Framing coefficients whose ledger produces the target gleams.

    ``targets`` lists the gleams of the base regions in slot order:
    A and Bing take integers, ATilde takes (integer, half-integer).
    Returns the framing coefficients as a tuple of integers in curve
    order, found by solving the symbolic forward pipeline.
    """
    proj = family_ledger(family)
    slots = _FAMILY_SLOTS.get(family)
    if slots is None:
        raise UnknownRegion("unknown family %r" % family)
    if len(targets) != len(slots):
        raise ParityViolation("family %s takes %d gleams" % (family, len(slots)))
    targets = [Fraction(t) for t in targets]
    base = builtin(proj.base)
    assignment = GleamAssignment(dict(zip(slots, targets)))
    from .polyhedron import check_gleam_parity

    if not check_gleam_parity(base, assignment):
        return _parity_error(family, targets)
    _, merged = forward_gleams(proj)
    # each merged gleam is affine in the framing symbols; solve the system
    values = {}
    for region, target in zip(slots, targets):
        expr = merged[region]
        names = sorted(expr.variables())
        if len(names) != 1:
            raise ParityViolation("region %r does not isolate one framing" % region)
        name = names[0]
        coeff = expr.coefficient(name)
        const = expr.substitute({name: 0}).constant_value()
        values[name] = (target - const) / coeff
    out = []
    for curve in proj.curves:
        name = sorted(proj.framings[curve].variables())[0]
        value = values[name]
        if value.denominator != 1:
            raise ParityViolation("framing %s = %s is not an integer" % (name, value))
        out.append(int(value))
    return tuple(out)


def _parity_error(family, targets):
    raise ParityViolation(
        "gleams %s violate the %s parity constraint"
        % ("(" + ", ".join(str(t) for t in targets) + ")", family)
    )


# -- ledger files ---------------------------------------------------------------


def write_ledger(proj: AnnotatedProjection) -> str:
    lines = ["ledger v1", "BASE %s" % proj.base]
    for x in proj.crossings:
        lines.append("XG %s %s" % (x.kind, " ".join(x.slots)))
    for curve in proj.curves:
        lines.append("TW %s %s" % (curve, proj.twist[curve]))
    for curve in proj.curves:
        lines.append("FR %s %s" % (curve, proj.framings[curve]))
    return "\n".join(lines) + "\n"


def read_ledger(text: str, template: AnnotatedProjection) -> AnnotatedProjection:
    """Re-read the mutable parts of a ledger written by write_ledger.

    The merge plan and region roles come from the template; the file
    carries base, crossings, twists and framing symbols.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or lines[0] != "ledger v1":
        raise ParseError("missing 'ledger v1' header", position="line 1")
    crossings = []
    twist = {}
    framings = {}
    base = template.base
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if parts[0] == "BASE" and len(parts) == 2:
            base = parts[1]
        elif parts[0] == "XG" and len(parts) == 6:
            crossings.append(Crossing(parts[1], tuple(parts[2:6])))
        elif parts[0] == "TW" and len(parts) == 3:
            twist[parts[1]] = Fraction(parts[2])
        elif parts[0] == "FR" and len(parts) == 3:
            value = parts[2]
            framings[parts[1]] = (
                Expr.const(Fraction(value))
                if value.lstrip("+-").replace("/", "").isdigit()
                else Expr.var(value)
            )
        else:
            raise ParseError("bad ledger line %r" % ln, position="line %d" % lineno)
    return replace(template, base=base, crossings=crossings, twist=twist, framings=framings)
