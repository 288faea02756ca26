"""Kirby diagrams at the algebraic level.

A diagram is bookkeeping data: dotted circles (1-handles), 2-handles
with framings (exact affine expressions in the family parameters),
ordered signed pass sequences through each 1-handle's spanning disk,
and a symmetric integer linking matrix.  Handle slides, blow-ups,
blow-downs and cancellations update this data; planar isotopy is out
of scope, so "unknotted" is carried as metadata where blow-downs need
it.

homology_presentation certifies contractibility (H1 = H2 = 0), Mazur
handle shape, and the order of H1 of the boundary via the linking
presentation after eliminating the 1-handles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    NotBlowDownable,
    NotCancellable,
    NotTwoHandle,
    ParseError,
)
from .intmat import cokernel, rank
from .symbolic import Expr, expr_det


@dataclass
class TwoHandle:
    name: str
    framing: Expr
    passes: dict = field(default_factory=dict)  # one-handle -> list of +-1
    unknot: bool = False  # metadata: attaching circle unknotted

    def copy(self):
        return TwoHandle(
            self.name,
            self.framing,
            {h: list(seq) for h, seq in self.passes.items()},
            self.unknot,
        )

    def algebraic_pass(self, one_handle):
        return sum(self.passes.get(one_handle, []))

    def geometric_pass(self, one_handle):
        return len(self.passes.get(one_handle, []))


@dataclass
class KirbyDiagram:
    one_handles: list
    two_handles: list  # TwoHandle
    linking: dict = field(default_factory=dict)  # frozenset({a, b}) -> int

    def copy(self):
        return KirbyDiagram(
            list(self.one_handles),
            [h.copy() for h in self.two_handles],
            dict(self.linking),
        )

    def two_handle(self, name):
        for h in self.two_handles:
            if h.name == name:
                return h
        raise NotTwoHandle("no 2-handle named %r" % name)

    def lk(self, a, b):
        """Off-diagonal linking; the diagonal of the linking matrix is
        the framing, see ``handle_slide``."""
        if a == b:
            raise NotTwoHandle("linking needs two distinct 2-handles")
        return self.linking.get(frozenset((a, b)), 0)

    def set_lk(self, a, b, value):
        key = frozenset((a, b))
        if isinstance(value, Expr) and value.is_constant():
            value = value.constant_value()
            value = int(value) if value.denominator == 1 else value
        if value:
            self.linking[key] = value
        else:
            self.linking.pop(key, None)


# -- moves ------------------------------------------------------------------------


def handle_slide(k: KirbyDiagram, slider, over, sign) -> KirbyDiagram:
    """Slide 2-handle ``slider`` across ``over`` with the given band sign.

    This is the congruence of the linking matrix (framings on the
    diagonal) by the elementary row operation i += s*j, together with
    the same operation on the pass sequences.
    """
    if slider == over:
        raise NotTwoHandle("cannot slide a handle over itself")
    if sign not in (1, -1):
        raise NotTwoHandle("slide sign must be +-1")
    out = k.copy()
    hi = out.two_handle(slider)
    hj = out.two_handle(over)
    hi.framing = hi.framing + hj.framing + 2 * sign * Expr.wrap(out.lk(slider, over))
    for other in out.two_handles:
        if other.name == slider:
            continue
        column = hj.framing if other.name == over else out.lk(over, other.name)
        out.set_lk(slider, other.name,
                   Expr.wrap(out.lk(slider, other.name)) + sign * Expr.wrap(column))
    for h in out.one_handles:
        seq = hj.passes.get(h, [])
        if seq:
            hi.passes.setdefault(h, []).extend(sign * s for s in seq)
    hi.unknot = False
    return out


def blow_up(k: KirbyDiagram, sign) -> KirbyDiagram:
    """Append a +-1-framed unknotted 2-handle split from everything."""
    if sign not in (1, -1):
        raise NotTwoHandle("blow-up sign must be +-1")
    out = k.copy()
    used = {h.name for h in out.two_handles}
    n = 1
    while "E%d" % n in used:
        n += 1
    out.two_handles.append(TwoHandle("E%d" % n, Expr.const(sign), {}, unknot=True))
    return out


def blow_down(k: KirbyDiagram, handle) -> KirbyDiagram:
    """Remove a +-1-framed unknotted 2-handle, twisting what links it."""
    out = k.copy()
    he = out.two_handle(handle)
    if not he.unknot:
        raise NotBlowDownable("%r is not marked unknotted" % handle)
    if any(he.passes.get(h) for h in out.one_handles):
        raise NotBlowDownable("%r passes through a 1-handle" % handle)
    if not he.framing.is_constant() or he.framing.constant_value() not in (1, -1):
        raise NotBlowDownable("%r framing is not +-1" % handle)
    eps = int(he.framing.constant_value())
    others = [h for h in out.two_handles if h.name != handle]
    for h in others:
        c = Expr.wrap(out.lk(h.name, handle))
        h.framing = h.framing - eps * c * c
    for a in range(len(others)):
        for b in range(a + 1, len(others)):
            na, nb = others[a].name, others[b].name
            out.set_lk(
                na,
                nb,
                Expr.wrap(out.lk(na, nb))
                - eps * Expr.wrap(out.lk(na, handle)) * Expr.wrap(out.lk(nb, handle)),
            )
    for h in others:
        out.set_lk(h.name, handle, 0)
    out.two_handles = others
    return out


def cancel_pair(k: KirbyDiagram, one_handle, two_handle) -> KirbyDiagram:
    """Erase a geometrically-once-passing 1-/2-handle pair.

    Other 2-handles are first slid over the cancelling 2-handle until
    they clear the 1-handle, then the pair is removed.
    """
    if one_handle not in k.one_handles:
        raise NotCancellable("no 1-handle named %r" % one_handle)
    out = k.copy()
    hc = out.two_handle(two_handle)
    if hc.geometric_pass(one_handle) != 1:
        raise NotCancellable(
            "2-handle %r passes %d times through %r"
            % (two_handle, hc.geometric_pass(one_handle), one_handle)
        )
    sigma = hc.passes[one_handle][0]
    current = out
    for h in list(out.two_handles):
        if h.name == two_handle:
            continue
        for s in list(current.two_handle(h.name).passes.get(one_handle, [])):
            current = handle_slide(current, h.name, two_handle, -s * sigma)
            seq = current.two_handle(h.name).passes[one_handle]
            seq.remove(s)
            seq.remove(-s)
    current.one_handles.remove(one_handle)
    current.two_handles = [h for h in current.two_handles if h.name != two_handle]
    for h in current.two_handles:
        h.passes.pop(one_handle, None)
        current.set_lk(h.name, two_handle, 0)
    return current


# -- homology -------------------------------------------------------------------


@dataclass
class Presentation:
    h1: tuple  # (free rank, torsion list)
    h2_rank: int
    boundary_h1_order: object  # positive int or "infinite"
    mazur_shape: bool


def homology_presentation(k: KirbyDiagram) -> Presentation:
    ones = list(k.one_handles)
    twos = list(k.two_handles)
    p = [[h.algebraic_pass(o) for o in ones] for h in twos]
    if twos and ones:
        pr = rank(p)
    elif twos or ones:
        pr = 0
        p = [[0] * len(ones) for _ in twos]
    else:
        pr = 0
    h1 = cokernel(p, len(ones)) if ones else (0, [])
    h2_rank = len(twos) - pr
    # boundary: linking/framing block bordered by the pass matrix
    n, m = len(twos), len(ones)
    size = n + m
    mat = [[Expr.const(0)] * size for _ in range(size)]
    for i, hi in enumerate(twos):
        mat[i][i] = hi.framing
        for j in range(i + 1, n):
            v = Expr.wrap(k.lk(hi.name, twos[j].name))
            mat[i][j] = v
            mat[j][i] = v
    for i in range(n):
        for j in range(m):
            v = Expr.const(p[i][j])
            mat[i][n + j] = v
            mat[n + j][i] = v
    det = expr_det(mat)
    if not det.is_constant():
        raise NotTwoHandle("boundary presentation determinant is not constant")
    value = det.constant_value()
    if value == 0:
        order = "infinite"
    else:
        order = abs(int(value))
    mazur = (
        len(ones) == 1
        and len(twos) == 1
        and h1 == (0, [])
        and h2_rank == 0
    )
    return Presentation(h1, h2_rank, order, mazur)


# -- textual diagrams ----------------------------------------------------------


_TERM = re.compile(r"^([+-]?)(\d+)?(?:\*?([A-Za-z]\w*))?$")


def parse_expr(text: str) -> Expr:
    """Affine expressions like ``n+1``, ``-2*m+3``, ``0``, ``eps``."""
    text = text.replace(" ", "")
    if not text:
        raise ParseError("empty expression")
    tokens = re.findall(r"[+-]?[^+-]+", text)
    if "".join(tokens) != text:
        raise ParseError("bad expression %r" % text)
    out = Expr.const(0)
    for token in tokens:
        m = _TERM.match(token)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ParseError("bad term %r in %r" % (token, text))
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            out = out + Expr({(m.group(3),): Fraction(sign * coeff)})
        else:
            out = out + Expr.const(sign * coeff)
    return out


def format_expr(e: Expr) -> str:
    return str(e).replace(" ", "")


def write_kirby(k: KirbyDiagram) -> str:
    lines = ["kirby v1"]
    for h in k.one_handles:
        lines.append("H1 %s" % h)
    for h in k.two_handles:
        flag = " unknot" if h.unknot else ""
        lines.append("H2 %s %s%s" % (h.name, format_expr(h.framing), flag))
    for h in k.two_handles:
        for o in k.one_handles:
            seq = h.passes.get(o)
            if seq:
                lines.append(
                    "PASS %s %s %s" % (h.name, o, "".join("+" if s == 1 else "-" for s in seq))
                )
    names = [h.name for h in k.two_handles]
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            v = k.lk(names[i], names[j])
            if v:
                lines.append("LK %s %s %s" % (names[i], names[j], format_expr(Expr.wrap(v))))
    return "\n".join(lines) + "\n"


def read_kirby(text: str) -> KirbyDiagram:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or lines[0] != "kirby v1":
        raise ParseError("missing 'kirby v1' header", position="line 1")
    k = KirbyDiagram([], [])
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        try:
            if parts[0] == "H1" and len(parts) == 2:
                k.one_handles.append(parts[1])
            elif parts[0] == "H2" and len(parts) in (3, 4):
                unknot = len(parts) == 4 and parts[3] == "unknot"
                if len(parts) == 4 and not unknot:
                    raise ValueError(parts[3])
                k.two_handles.append(TwoHandle(parts[1], parse_expr(parts[2]), {}, unknot))
            elif parts[0] == "PASS" and len(parts) == 4:
                h = k.two_handle(parts[1])
                if parts[2] not in k.one_handles or set(parts[3]) - set("+-"):
                    raise ValueError(ln)
                h.passes[parts[2]] = [1 if c == "+" else -1 for c in parts[3]]
            elif parts[0] == "LK" and len(parts) == 4:
                k.two_handle(parts[1])
                k.two_handle(parts[2])
                k.set_lk(parts[1], parts[2], parse_expr(parts[3]))
            else:
                raise ValueError(ln)
        except (ValueError, NotTwoHandle):
            raise ParseError("bad kirby line %r" % ln, position="line %d" % lineno)
    return k


# -- move scripts ----------------------------------------------------------------


def parse_moves(text: str):
    """A move script: header ``kmoves v1`` then one move per line."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or lines[0] != "kmoves v1":
        raise ParseError("missing 'kmoves v1' header", position="line 1")
    moves = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        op = parts[0]
        if op == "diagram" and len(parts) == 2:
            moves.append(("diagram", parts[1]))
        elif op == "slide" and len(parts) == 4 and parts[3] in ("+", "-"):
            moves.append(("slide", parts[1], parts[2], 1 if parts[3] == "+" else -1))
        elif op == "blowup" and len(parts) == 2 and parts[1] in ("+", "-"):
            moves.append(("blowup", 1 if parts[1] == "+" else -1))
        elif op == "blowdown" and len(parts) == 2:
            moves.append(("blowdown", parts[1]))
        elif op == "cancel" and len(parts) == 3:
            moves.append(("cancel", parts[1], parts[2]))
        else:
            raise ParseError("bad move %r" % ln, position="line %d" % lineno)
    return moves


def apply_move(k: KirbyDiagram, move) -> KirbyDiagram:
    op = move[0]
    if op == "slide":
        return handle_slide(k, move[1], move[2], move[3])
    if op == "blowup":
        return blow_up(k, move[1])
    if op == "blowdown":
        return blow_down(k, move[1])
    if op == "cancel":
        return cancel_pair(k, move[1], move[2])
    raise ParseError("unknown move %r" % (move,))


def move_preserves(move):
    """Which presentation fields the move must leave unchanged."""
    if move[0] in ("slide", "cancel"):
        return ("h1", "h2_rank", "boundary_h1_order")
    return ("h1", "boundary_h1_order")
