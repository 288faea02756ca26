"""Combinatorial almost-special polyhedra with gleams.

A polyhedron is CW data: true vertices, triple edges (loops allowed) and
regions attached along cyclic circuit words of signed edge-sides.  Each
region also records the number N of Moebius bands along its closure
circuit (which drives the gleam parity rule), and whether it is a
boundary region.  The combinatorial length k of a region is the number
of edge-sides its closure traverses, i.e. the length of its circuit.

Gleams are half-integers subject to gl(R) - N(R)/2 being an integer.
The slope length enters only through its square sl^2 = 4 gl^2 + k^2,
kept as an exact rational so the hyperbolicity cutoff sl > 6 is an
exact comparison sl^2 > 36.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import HasBoundary, InvalidDiagram, MissingRegion, ParseError
from .intmat import cokernel, rank, smith_normal_form


@dataclass
class Region:
    name: str
    circuit: list  # [(edge name, +1 or -1), ...] cyclic
    mobius: int = 0
    boundary: bool = False

    @property
    def k(self):
        return len(self.circuit)


@dataclass
class SpecialPolyhedron:
    vertices: list  # names
    edges: dict  # name -> (tail vertex, head vertex)
    regions: list  # Region
    name: str = ""

    def region(self, name):
        for r in self.regions:
            if r.name == name:
                return r
        raise MissingRegion("no region named %r" % name)

    def internal_regions(self):
        return [r for r in self.regions if not r.boundary]

    def validate_special(self):
        """The almost-special polyhedron conditions for the builtins:
        degree-4 true vertices and exactly 3 region-sides per edge."""
        degree = {v: 0 for v in self.vertices}
        for tail, head in self.edges.values():
            degree[tail] += 1
            degree[head] += 1
        for v, deg in degree.items():
            if deg != 4:
                raise InvalidDiagram("true vertex %r has degree %d" % (v, deg))
        sides = {e: 0 for e in self.edges}
        for r in self.regions:
            for e, _s in r.circuit:
                if e not in sides:
                    raise InvalidDiagram("region %r uses unknown edge %r" % (r.name, e))
                sides[e] += 1
        for e, count in sides.items():
            if count != 3:
                raise InvalidDiagram("edge %r carries %d region-sides" % (e, count))
        return self


@dataclass
class GleamAssignment:
    gleam: dict = field(default_factory=dict)  # region name -> Fraction, den | 2

    def __post_init__(self):
        clean = {}
        for name, value in self.gleam.items():
            value = Fraction(value)
            if value.denominator not in (1, 2):
                raise InvalidDiagram("gleam %s of %r is not a half integer" % (value, name))
            clean[name] = value
        self.gleam = clean

    def negated(self):
        return GleamAssignment({k: -v for k, v in self.gleam.items()})


# -- builtins ---------------------------------------------------------------


def builtin(name):
    """The three polyhedra of the construction.

    Circuit words are pinned by the published combinatorics: vertex,
    edge and region counts, the degree-4 and 3-sides-per-edge rules,
    contractibility, the region lengths k forced by the slope-length
    formulas, and the Moebius count of the second region of a_tilde.
    """
    if name == "abalone":
        return SpecialPolyhedron(
            vertices=["v"],
            edges={"a": ("v", "v"), "b": ("v", "v")},
            regions=[
                Region("e1", [("a", 1), ("b", 1), ("b", -1)]),
                Region("e2", [("b", 1), ("a", 1), ("a", -1)]),
            ],
            name="abalone",
        ).validate_special()
    if name == "a_tilde":
        return SpecialPolyhedron(
            vertices=["v"],
            edges={"a": ("v", "v"), "b": ("v", "v")},
            regions=[
                Region("e1~", [("a", 1), ("b", 1), ("b", -1)]),
                Region("e2~", [("b", 1), ("a", 1), ("a", -1)], mobius=1),
            ],
            name="a_tilde",
        ).validate_special()
    if name == "bings_house":
        return SpecialPolyhedron(
            vertices=["v1", "v2"],
            edges={
                "a": ("v1", "v2"),
                "b": ("v1", "v2"),
                "c": ("v1", "v1"),
                "d": ("v2", "v2"),
            },
            regions=[
                Region(
                    "e3",
                    [
                        ("a", 1),
                        ("d", 1),
                        ("a", -1),
                        ("c", 1),
                        ("a", 1),
                        ("d", -1),
                        ("b", -1),
                        ("c", -1),
                        ("b", 1),
                        ("b", -1),
                    ],
                ),
                Region("e4", [("c", 1)]),
                Region("e5", [("d", 1)]),
            ],
            name="bings_house",
        ).validate_special()
    raise MissingRegion("unknown builtin polyhedron %r" % name)


# -- gleam parity -------------------------------------------------------------


def check_gleam_parity(p: SpecialPolyhedron, g: GleamAssignment) -> bool:
    for r in p.internal_regions():
        if r.name not in g.gleam:
            raise MissingRegion("no gleam assigned to region %r" % r.name)
        if (g.gleam[r.name] - Fraction(r.mobius, 2)).denominator != 1:
            return False
    return True


# -- CW topology --------------------------------------------------------------


def euler_characteristic(p: SpecialPolyhedron) -> int:
    return len(p.vertices) - len(p.edges) + len(p.regions)


def _boundary_maps(p):
    vi = {v: i for i, v in enumerate(p.vertices)}
    ei = {e: i for i, e in enumerate(p.edges)}
    d1 = [[0] * len(p.edges) for _ in p.vertices]
    for e, (tail, head) in p.edges.items():
        d1[vi[head]][ei[e]] += 1
        d1[vi[tail]][ei[e]] -= 1
    d2 = [[0] * len(p.regions) for _ in p.edges]
    for j, r in enumerate(p.regions):
        for e, s in r.circuit:
            d2[ei[e]][j] += s
    return d1, d2


def homology(p: SpecialPolyhedron):
    """Cellular homology (H0, H1, H2), each as (free rank, torsion list)."""
    for r in p.regions:
        if r.boundary:
            raise HasBoundary("region %r is a boundary region" % r.name)
    d1, d2 = _boundary_maps(p)
    n_v, n_e, n_r = len(p.vertices), len(p.edges), len(p.regions)
    r1 = rank(d1) if n_v and n_e else 0
    f2 = smith_normal_form(d2) if n_e and n_r else []
    r2 = len(f2)
    h0 = (n_v - r1, [])
    h1 = (n_e - r1 - r2, [d for d in f2 if d != 1])
    h2 = (n_r - r2, [])
    return h0, h1, h2


# -- slope lengths -------------------------------------------------------------


def slope_length(p: SpecialPolyhedron, g: GleamAssignment, region) -> Fraction:
    """The exact rational sl^2 = 4 gl^2 + k^2 of an internal region."""
    r = p.region(region)
    if r.boundary:
        raise MissingRegion("region %r is not internal" % region)
    if r.name not in g.gleam:
        raise MissingRegion("no gleam assigned to region %r" % region)
    gl = g.gleam[r.name]
    return 4 * gl * gl + Fraction(r.k * r.k)


def hyperbolicity_criterion(p: SpecialPolyhedron, g: GleamAssignment) -> bool:
    """True iff every internal region has slope length above 6, exactly."""
    return all(slope_length(p, g, r.name) > 36 for r in p.internal_regions())


# -- textual files ------------------------------------------------------------


def write_poly(p: SpecialPolyhedron) -> str:
    lines = ["poly v1"]
    if p.name:
        lines.append("NAME %s" % p.name)
    for v in p.vertices:
        lines.append("V %s" % v)
    for e, (tail, head) in p.edges.items():
        lines.append("E %s %s %s" % (e, tail, head))
    for r in p.regions:
        word = " ".join("%s%s" % (e, "+" if s == 1 else "-") for e, s in r.circuit)
        lines.append(
            "R %s: %s | N=%d k=%d boundary=%d"
            % (r.name, word, r.mobius, r.k, 1 if r.boundary else 0)
        )
    return "\n".join(lines) + "\n"


def read_poly(text: str) -> SpecialPolyhedron:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or lines[0] != "poly v1":
        raise ParseError("missing 'poly v1' header", position="line 1")
    p = SpecialPolyhedron([], {}, [])
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        tag = parts[0]
        if tag == "NAME" and len(parts) == 2:
            p.name = parts[1]
        elif tag == "V" and len(parts) == 2:
            p.vertices.append(parts[1])
        elif tag == "E" and len(parts) == 4:
            p.edges[parts[1]] = (parts[2], parts[3])
        elif tag == "R":
            try:
                head, tail = ln.split(":", 1)
                name = head.split()[1]
                word, attrs = tail.split("|")
                circuit = []
                for token in word.split():
                    if token[-1] not in "+-":
                        raise ValueError(token)
                    circuit.append((token[:-1], 1 if token[-1] == "+" else -1))
                fields = dict(a.split("=") for a in attrs.split())
                region = Region(
                    name,
                    circuit,
                    mobius=int(fields["N"]),
                    boundary=bool(int(fields["boundary"])),
                )
                if int(fields["k"]) != region.k:
                    raise ValueError("k mismatch")
                p.regions.append(region)
            except (ValueError, IndexError, KeyError):
                raise ParseError("bad region line %r" % ln, position="line %d" % lineno)
        else:
            raise ParseError("bad record %r" % ln, position="line %d" % lineno)
    return p
