"""Legendrian front combinatorics for the Stein checks.

A front is stored as count data: the list of crossing signs, the cusp
counts and the framing coefficient of the 2-handle attached along it.
That is all the Thurston-Bennequin computation tb = wr - #left cusps
needs, and the Stein criterion compares the framing against tb - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidDiagram, OutOfRegime, ParseError


@dataclass
class FrontDiagram:
    crossing_signs: list  # +-1
    left_cusps: int
    right_cusps: int
    framing_coefficient: int
    ambient: str = "S3"  # S3 | S1xS2

    def validate(self):
        if any(s not in (1, -1) for s in self.crossing_signs):
            raise InvalidDiagram("crossing signs must be +-1")
        if self.left_cusps < 0 or self.right_cusps < 0:
            raise InvalidDiagram("cusp counts must be nonnegative")
        if (self.left_cusps + self.right_cusps) % 2:
            raise InvalidDiagram("total cusp count must be even")
        if self.ambient not in ("S3", "S1xS2"):
            raise InvalidDiagram("unknown ambient tag %r" % self.ambient)
        return self

    @property
    def writhe(self):
        return sum(self.crossing_signs)


def thurston_bennequin(f: FrontDiagram) -> int:
    """tb = writhe minus the number of left cusps."""
    return f.writhe - f.left_cusps


def eliashberg_stein_check(f: FrontDiagram) -> bool:
    """Whether the 2-handle framing admits a Stein structure: f <= tb - 1."""
    return f.framing_coefficient <= thurston_bennequin(f) - 1


def family_front(family, *params) -> FrontDiagram:
    """The Legendrian fronts of the cork regime.

    ATilde takes m < 0, Bing takes m < 0 and n < 0.  Both fronts carry
    the 0-framed 2-handle and run through the 1-handle balls.
    """
    if family == "ATilde":
        (m,) = params
        if m >= 0:
            raise OutOfRegime("ATilde front requires m < 0, got m=%d" % m)
        wr = 2 * abs(m) + 1
        cusps = 2 * abs(m) - 1
    elif family == "Bing":
        m, n = params
        if m >= 0 or n >= 0:
            raise OutOfRegime("Bing front requires m < 0 and n < 0, got (%d, %d)" % (m, n))
        wr = 2 * abs(m) + 2 * abs(n)
        cusps = wr - 2
    else:
        raise OutOfRegime("no front family %r" % family)
    return FrontDiagram([1] * wr, cusps, cusps, 0, "S1xS2").validate()


# -- front files -----------------------------------------------------------------


def write_front(f: FrontDiagram) -> str:
    signs = "".join("+" if s == 1 else "-" for s in f.crossing_signs)
    return "\n".join(
        [
            "front v1",
            "SIGNS %s" % (signs or "."),
            "CUSPS %d %d" % (f.left_cusps, f.right_cusps),
            "FRAMING %d" % f.framing_coefficient,
            "AMBIENT %s" % f.ambient,
        ]
    ) + "\n"


def read_front(text: str) -> FrontDiagram:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or lines[0] != "front v1":
        raise ParseError("missing 'front v1' header", position="line 1")
    fields = {}
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if parts[0] in fields or parts[0] not in ("SIGNS", "CUSPS", "FRAMING", "AMBIENT"):
            raise ParseError("bad front line %r" % ln, position="line %d" % lineno)
        fields[parts[0]] = (parts[1:], lineno)
    try:
        (signs,), _ = fields["SIGNS"]
        cusps, _ = fields["CUSPS"]
        (framing,), _ = fields["FRAMING"]
        (ambient,), _ = fields["AMBIENT"]
        if signs == ".":
            signs = ""
        if set(signs) - set("+-"):
            raise ValueError(signs)
        f = FrontDiagram(
            [1 if c == "+" else -1 for c in signs],
            int(cusps[0]),
            int(cusps[1]),
            int(framing),
            ambient,
        )
    except (KeyError, ValueError, IndexError) as exc:
        raise ParseError("incomplete front file (%s)" % exc)
    try:
        return f.validate()
    except InvalidDiagram as exc:
        raise ParseError(str(exc))
