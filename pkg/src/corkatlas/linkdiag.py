"""Planar diagrams of oriented links (PD codes).

A crossing stores its four arc identifiers in counterclockwise order
starting from the incoming under-strand, plus a sign.  With slots
numbered 0..3 that means: the under-strand runs slot 0 -> slot 2, and
the over-strand runs slot 3 -> slot 1 for a positive crossing and
slot 1 -> slot 3 for a negative one.

Components are oriented cycles of arcs.  Everything downstream (writhe,
linking numbers, Seifert matrices, the Alexander oracle) is derived from
this combinatorial data alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _seifert
from .errors import InvalidDiagram, NotAKnot, ParseError, UnknownComponent
from .laurent import LaurentPoly, normalize_alexander


@dataclass(frozen=True)
class Crossing:
    arcs: tuple  # (a, b, c, d) counterclockwise from the incoming under-strand
    sign: int  # +1 or -1

    def __post_init__(self):
        if len(self.arcs) != 4:
            raise InvalidDiagram("crossing needs exactly four arcs: %r" % (self.arcs,))
        if self.sign not in (1, -1):
            raise InvalidDiagram("crossing sign must be +-1, got %r" % (self.sign,))

    @property
    def under_in(self):
        return self.arcs[0]

    @property
    def under_out(self):
        return self.arcs[2]

    @property
    def over_in(self):
        return self.arcs[3] if self.sign == 1 else self.arcs[1]

    @property
    def over_out(self):
        return self.arcs[1] if self.sign == 1 else self.arcs[3]

    def over_in_slot(self):
        return 3 if self.sign == 1 else 1

    def over_out_slot(self):
        return 1 if self.sign == 1 else 3


@dataclass
class PDCode:
    crossings: list
    components: dict  # name -> list of arcs forming an oriented cycle
    meta: dict = field(default_factory=dict)

    # -- validation ----------------------------------------------------------

    def all_arcs(self):
        arcs = []
        for cycle in self.components.values():
            arcs.extend(cycle)
        return arcs

    def arc_component(self):
        owner = {}
        for name, cycle in self.components.items():
            for a in cycle:
                if a in owner:
                    raise InvalidDiagram("arc %r appears in two components" % (a,))
                owner[a] = name
        return owner

    def successor(self):
        """arc -> next arc along its component."""
        succ = {}
        for cycle in self.components.values():
            for i, a in enumerate(cycle):
                succ[a] = cycle[(i + 1) % len(cycle)]
        return succ

    def validate(self):
        owner = self.arc_component()
        succ = self.successor()
        incoming = {}
        outgoing = {}
        for idx, x in enumerate(self.crossings):
            for a in x.arcs:
                if a not in owner:
                    raise InvalidDiagram("crossing arc %r not in any component" % (a,))
            for a in (x.under_in, x.over_in):
                if a in incoming:
                    raise InvalidDiagram("arc %r is incoming at two crossings" % (a,))
                incoming[a] = idx
            for a in (x.under_out, x.over_out):
                if a in outgoing:
                    raise InvalidDiagram("arc %r is outgoing at two crossings" % (a,))
                outgoing[a] = idx
            if succ.get(x.under_in) != x.under_out:
                raise InvalidDiagram(
                    "under-strand %r -> %r disagrees with component order"
                    % (x.under_in, x.under_out)
                )
            if succ.get(x.over_in) != x.over_out:
                raise InvalidDiagram(
                    "over-strand %r -> %r disagrees with component order (sign?)"
                    % (x.over_in, x.over_out)
                )
        arcs = self.all_arcs()
        if self.crossings:
            crossing_arcs = sorted(a for x in self.crossings for a in x.arcs)
            expected = sorted(arcs + arcs)
            # crossingless components contribute no crossing slots
            free = sorted(
                a
                for name, cycle in self.components.items()
                if not any(a in incoming or a in outgoing for a in cycle)
                for a in cycle
            )
            expected = sorted(a for a in expected if a not in set(free))
            if crossing_arcs != expected:
                raise InvalidDiagram("each arc must occur exactly twice at crossings")
        return self

    # -- basic derived data ----------------------------------------------------

    def component_names(self):
        return list(self.components)

    def is_knot(self):
        return len(self.components) == 1


def writhe(d: PDCode) -> int:
    """Sum of crossing signs."""
    d.validate()
    return sum(x.sign for x in d.crossings)


def linking_number(d: PDCode, a, b) -> int:
    """Half the signed count of crossings between components a and b."""
    d.validate()
    if a not in d.components or b not in d.components:
        raise UnknownComponent("unknown component in (%r, %r)" % (a, b))
    if a == b:
        raise UnknownComponent("linking number needs two distinct components")
    owner = d.arc_component()
    total = 0
    for x in d.crossings:
        under = owner[x.under_in]
        over = owner[x.over_in]
        if {under, over} == {a, b}:
            total += x.sign
    if total % 2:
        raise InvalidDiagram("inter-component crossing sum must be even")
    return total // 2


def mirror(d: PDCode) -> PDCode:
    """Switch every crossing (over <-> under), keeping the plane fixed."""
    new = []
    for x in d.crossings:
        a, b, c, e = x.arcs
        if x.sign == 1:
            new.append(Crossing((e, a, b, c), -1))
        else:
            new.append(Crossing((b, c, e, a), 1))
    return PDCode(new, {k: v[:] for k, v in d.components.items()}, dict(d.meta))


@dataclass
class SeifertMatrix:
    entries: list  # square integer matrix
    genus: int

    def size(self):
        return len(self.entries)


def seifert_matrix(d: PDCode) -> SeifertMatrix:
    """Seifert matrix of a knot diagram via Seifert's algorithm.

    The diagram is first brought to closed-braid form by Vogel moves
    (Reidemeister II only, so the knot type is untouched); on a closed
    braid the surface generators and their linking numbers are read off
    combinatorially.
    """
    d.validate()
    if not d.is_knot():
        raise NotAKnot("seifert_matrix needs a one-component diagram")
    entries = _seifert.seifert_matrix_entries(d)
    return SeifertMatrix(entries, genus=len(entries) // 2)


def alexander(d: PDCode) -> LaurentPoly:
    """Normalized Alexander polynomial det(t V - V^T) from the Seifert matrix."""
    v = seifert_matrix(d).entries
    n = len(v)
    if n == 0:
        return LaurentPoly.one()
    t = LaurentPoly.t()
    m = [[t * v[i][j] - v[j][i] for j in range(n)] for i in range(n)]
    return normalize_alexander(_seifert.laurent_det(m))


# -- braid closures -----------------------------------------------------------


def braid_closure(word, strands=None) -> PDCode:
    """PD code of the closure of a braid word.

    The word is a list of nonzero ints: i > 0 is the positive generator on
    strands (i, i+1) (the right strand passes over, so closure of [1, 1, 1]
    is the right trefoil with writhe +3), i < 0 its inverse.
    """
    if strands is None:
        strands = (max(abs(i) for i in word) + 1) if word else 1
    if any(i == 0 or abs(i) >= strands for i in word):
        raise InvalidDiagram("braid letter out of range for %d strands" % strands)
    next_arc = 0
    current = []
    for _ in range(strands):
        current.append(next_arc)
        next_arc += 1
    start = current[:]
    crossings = []
    for letter in word:
        j = abs(letter) - 1
        left_in, right_in = current[j], current[j + 1]
        left_out, right_out = next_arc, next_arc + 1
        next_arc += 2
        if letter > 0:
            # under-strand: upper-left -> lower-right; over: upper-right -> lower-left
            crossings.append(Crossing((left_in, left_out, right_out, right_in), 1))
        else:
            crossings.append(Crossing((right_in, left_in, left_out, right_out), -1))
        current[j], current[j + 1] = left_out, right_out
    # close up: bottom arc at position p is identified with the top arc
    ident = {c: s for c, s in zip(current, start) if c != s}

    def resolve(a):
        while a in ident:
            a = ident[a]
        return a

    crossings = [Crossing(tuple(resolve(a) for a in x.arcs), x.sign) for x in crossings]
    # trace components
    succ = {}
    for x in crossings:
        succ[x.under_in] = x.under_out
        succ[x.over_in] = x.over_out
    arcs = sorted({a for x in crossings for a in x.arcs})
    components = {}
    seen = set()
    for a in arcs:
        if a in seen:
            continue
        cycle = [a]
        seen.add(a)
        b = succ[a]
        while b != a:
            cycle.append(b)
            seen.add(b)
            b = succ[b]
        components["K%d" % len(components)] = cycle
    # strands no letter touches close into crossing-free circles
    crossing_arcs = {a for x in crossings for a in x.arcs}
    for p in range(strands):
        if start[p] not in crossing_arcs:
            components["K%d" % len(components)] = [start[p]]
    return PDCode(crossings, components).validate()


# -- textual PD files -------------------------------------------------------


def write_pd(d: PDCode) -> str:
    lines = ["pd v1"]
    for key in sorted(d.meta):
        lines.append("M %s %s" % (key, d.meta[key]))
    for x in d.crossings:
        lines.append(
            "X %d %d %d %d %s" % (*x.arcs, "+" if x.sign == 1 else "-")
        )
    for name, cycle in d.components.items():
        lines.append("C %s: %s" % (name, " ".join(str(a) for a in cycle)))
    return "\n".join(lines) + "\n"


def read_pd(text: str) -> PDCode:
    lines = [ln.rstrip("\n") for ln in text.splitlines()]
    stripped = [ln for ln in lines if ln.strip()]
    if not stripped or stripped[0].strip() != "pd v1":
        raise ParseError("missing 'pd v1' header", position="line 1")
    crossings = []
    components = {}
    meta = {}
    for lineno, ln in enumerate(stripped[1:], start=2):
        parts = ln.split()
        if parts[0] == "M":
            if len(parts) < 3:
                raise ParseError("bad meta line", position="line %d" % lineno)
            meta[parts[1]] = " ".join(parts[2:])
        elif parts[0] == "X":
            if len(parts) != 6 or parts[5] not in "+-":
                raise ParseError("bad crossing line %r" % ln, position="line %d" % lineno)
            try:
                arcs = tuple(int(p) for p in parts[1:5])
            except ValueError:
                raise ParseError("bad arc id in %r" % ln, position="line %d" % lineno)
            crossings.append(Crossing(arcs, 1 if parts[5] == "+" else -1))
        elif parts[0] == "C":
            head = ln.split(":", 1)
            if len(head) != 2:
                raise ParseError("bad component line %r" % ln, position="line %d" % lineno)
            name = head[0].split(None, 1)[1].strip()
            try:
                cycle = [int(p) for p in head[1].split()]
            except ValueError:
                raise ParseError("bad arc id in %r" % ln, position="line %d" % lineno)
            if not cycle:
                raise ParseError("empty component %r" % name, position="line %d" % lineno)
            components[name] = cycle
        else:
            raise ParseError("unknown record %r" % parts[0], position="line %d" % lineno)
    return PDCode(crossings, components, meta).validate()
