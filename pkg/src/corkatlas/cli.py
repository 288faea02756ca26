"""Command line surface.

Subcommands: invariants, atlas, oracle, gleam-solve, stein-check,
kirby, shadow-info.  Every command is a pure function of its inputs;
identical invocations produce byte-identical output.

Exit codes: 0 success, 2 parse or usage error, 3 domain error,
4 invariant violation during kirby replay.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from fractions import Fraction

from . import families, kirby, legendrian, linkdiag, polyhedron, shadowmap
from .errors import CorkAtlasError, NotAKnot, ParseError
from .laurent import eval_at_one, fox_milnor_factor, second_derivative_at_one


class ReplayViolation(Exception):
    """A kirby move changed a monitored invariant."""


def fixtures_dir():
    override = os.environ.get("CORKATLAS_FIXTURES")
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), "data")


def _resolve(path):
    if os.path.exists(path):
        return path
    candidate = os.path.join(fixtures_dir(), path)
    if os.path.exists(candidate):
        return candidate
    raise ParseError("no such file: %s" % path)


def _read(path):
    with open(_resolve(path)) as fh:
        return fh.read()


def _rational(x):
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator) if x.denominator != 1 else str(x.numerator)


def _parse_range(text):
    """Inclusive integer range ``a..b``; a single integer means a..a."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        value = int(text)
        return range(value, value + 1)
    except ValueError:
        raise ParseError("bad range %r, expected a..b" % text)


_CLI_FAMILY = {"A": "A", "At": "ATilde", "B": "Bing"}


# -- invariants -------------------------------------------------------------------


def _homology_summary(pres):
    def group(free, torsion):
        parts = ["Z"] * free + ["Z/%d" % d for d in torsion]
        return "+".join(parts) if parts else "0"

    return "H1=%s;H2=Z^%d;bd=%s" % (
        group(*pres.h1), pres.h2_rank, pres.boundary_h1_order
    )


def _cork_regime(inst):
    if inst.family == "ATilde":
        return inst.params[1] == -1 and inst.params[0] < 0
    if inst.family == "Bing":
        l, m, n = inst.params
        return l == 0 and m < 0 and n < 0
    return False


def _polyhedron_gleams(inst):
    if inst.family == "A":
        m, n = inst.params
        return "abalone", {"e1": Fraction(m), "e2": Fraction(n)}
    if inst.family == "ATilde":
        m, n = inst.params
        return "a_tilde", {"e1~": Fraction(m), "e2~": Fraction(n) - Fraction(1, 2)}
    if inst.family == "Bing":
        l, m, n = inst.params
        return "bings_house", {"e3": Fraction(l), "e4": Fraction(m), "e5": Fraction(n)}
    return None, None


def _slope_lengths(inst):
    base, gleams = _polyhedron_gleams(inst)
    if base is None:
        return None
    p = polyhedron.builtin(base)
    g = polyhedron.GleamAssignment(gleams)
    return [(r.name, polyhedron.slope_length(p, g, r.name)) for r in p.internal_regions()]


def cmd_invariants(args, out):
    inst = families.parse_notation(args.instance)
    out.write("instance: %s\n" % families.format_notation(inst))
    try:
        casson = families.casson_boundary(inst)
        out.write("casson: %d\n" % casson)
    except CorkAtlasError:
        out.write("casson: n/a\n")
    verdict = families.mazur_type_certificate(inst)
    out.write("mazur_shape: %s\n" % str(verdict.mazur_shape).lower())
    out.write("mazur_type: %s (%s)\n" % (str(verdict.verdict).lower(), verdict.reason))
    regime = _cork_regime(inst)
    out.write("cork_regime: %s\n" % str(regime).lower())
    if regime:
        cert = families.cork_certificate(inst)
        out.write(
            "cork_certificate: stein_ok=%s symmetric=%s boundary_hs=%s contractible=%s\n"
            % tuple(
                str(v).lower()
                for v in (cert.stein_ok, cert.symmetric_diagram,
                          cert.homology_sphere_boundary, cert.contractible)
            )
        )
        if cert.annotation:
            out.write("note: %s\n" % cert.annotation)
    if inst.family == "Bing":
        for name, sl2 in _slope_lengths(inst):
            out.write("sl2[%s]: %s\n" % (name, _rational(sl2)))
    return 0


# -- atlas ----------------------------------------------------------------------


def _atlas_instances(family, args):
    if family in ("A", "ATilde"):
        for m in args.m_range:
            if m == 0:
                continue
            for n in args.n_range:
                yield families.FamilyInstance(family, (m, n))
    else:
        for l in args.l_range:
            for m in args.m_range:
                for n in args.n_range:
                    yield families.FamilyInstance("Bing", (l, m, n))


def _atlas_row(inst):
    try:
        casson = str(families.casson_boundary(inst))
    except CorkAtlasError:
        casson = "n/a"
    verdict = families.mazur_type_certificate(inst)
    regime = _cork_regime(inst)
    if regime:
        if inst.family == "ATilde":
            front = legendrian.family_front("ATilde", inst.params[0])
        else:
            front = legendrian.family_front("Bing", inst.params[1], inst.params[2])
        tb = str(legendrian.thurston_bennequin(front))
    else:
        tb = "n/a"
    lengths = _slope_lengths(inst)
    sl2_min = _rational(min(v for _, v in lengths)) if lengths else "n/a"
    pres = kirby.homology_presentation(families.family_diagram(inst))
    return [
        families.format_notation(inst),
        casson,
        str(verdict.verdict).lower(),
        str(regime).lower(),
        tb,
        sl2_min,
        _homology_summary(pres),
    ]


def cmd_atlas(args, out):
    family = _CLI_FAMILY.get(args.family)
    if family is None:
        raise ParseError("atlas family must be one of A, At, B")
    if family == "Bing" and args.l_range is None:
        raise ParseError("family B needs -l")
    if family != "Bing" and args.l_range is not None:
        raise ParseError("-l is only for family B")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["instance", "casson", "mazur_verdict", "cork_regime",
                     "tb", "sl2_min", "homology"])
    for inst in _atlas_instances(family, args):
        writer.writerow(_atlas_row(inst))
    text = buf.getvalue()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


# -- oracle --------------------------------------------------------------------


def cmd_oracle(args, out):
    d = linkdiag.read_pd(_read(args.pd_file))
    if not d.is_knot():
        raise NotAKnot("%s has %d components" % (args.pd_file, len(d.components)))
    delta = linkdiag.alexander(d)
    out.write("alexander: %s\n" % delta.to_pairs())
    out.write("at_one: %d\n" % eval_at_one(delta))
    out.write("second_derivative_at_one: %d\n" % second_derivative_at_one(delta))
    span = delta.max_exponent - delta.min_exponent if delta else 0
    factor = fox_milnor_factor(delta, span // 2)
    out.write("fox_milnor: %s\n" % (factor.to_pairs() if factor is not None else "none"))
    family = d.meta.get("family")
    if family in ("A", "ATilde"):
        m = int(d.meta["m"])
        closed = families.closed_form_alexander(family, m)
        out.write("closed_form: %s\n" % ("match" if closed == delta else "MISMATCH"))
    return 0


# -- gleam-solve -----------------------------------------------------------------


def cmd_gleam_solve(args, out):
    family = _CLI_FAMILY.get(args.family)
    if family is None:
        raise ParseError("gleam-solve family must be one of A, At, B")
    try:
        targets = []
        if family == "Bing":
            if args.l is None:
                raise ParseError("family B needs -l")
            targets.append(Fraction(args.l))
        elif args.l is not None:
            raise ParseError("-l is only for family B")
        targets.append(Fraction(args.m))
        targets.append(Fraction(args.n))
    except (ValueError, ZeroDivisionError):
        raise ParseError("gleams must be rationals like 2 or -3/2")
    values = shadowmap.solve_framings(family, targets)
    proj = shadowmap.family_ledger(family)
    names = [sorted(proj.framings[c].variables())[0] for c in proj.curves]
    out.write(" ".join("%s=%d" % (name, v) for name, v in zip(names, values)) + "\n")
    return 0


# -- stein-check -----------------------------------------------------------------


def cmd_stein_check(args, out):
    front = legendrian.read_front(_read(args.front_file))
    tb = legendrian.thurston_bennequin(front)
    ok = legendrian.eliashberg_stein_check(front)
    out.write("tb: %d\n" % tb)
    out.write("framing: %d\n" % front.framing_coefficient)
    out.write("stein_ok: %s\n" % str(ok).lower())
    return 0


# -- kirby replay -----------------------------------------------------------------


def _format_move(move):
    if move[0] == "slide":
        return "slide %s %s %s" % (move[1], move[2], "+" if move[3] == 1 else "-")
    if move[0] == "blowup":
        return "blowup %s" % ("+" if move[1] == 1 else "-")
    return " ".join(str(p) for p in move)


def cmd_kirby(args, out):
    if args.action != "replay":
        raise ParseError("kirby supports the 'replay' action")
    moves = kirby.parse_moves(_read(args.script))
    if not moves or moves[0][0] != "diagram":
        raise ParseError("move script must start with a 'diagram' line")
    diagram = kirby.read_kirby(_read(moves[0][1]))
    pres = kirby.homology_presentation(diagram)
    out.write("move | h1 | h2_rank | boundary_h1_order\n")
    out.write("(start) | %s | %d | %s\n" % (pres.h1, pres.h2_rank, pres.boundary_h1_order))
    for move in moves[1:]:
        diagram = kirby.apply_move(diagram, move)
        after = kirby.homology_presentation(diagram)
        for name in kirby.move_preserves(move):
            if getattr(pres, name) != getattr(after, name):
                out.write(
                    "VIOLATION at %s: %s changed %s -> %s\n"
                    % (_format_move(move), name, getattr(pres, name), getattr(after, name))
                )
                raise ReplayViolation(name)
        out.write("%s | %s | %d | %s\n" % (_format_move(move), after.h1,
                                           after.h2_rank, after.boundary_h1_order))
        pres = after
    out.write("all monitors unchanged\n")
    return 0


# -- shadow-info ------------------------------------------------------------------


def cmd_shadow_info(args, out):
    p = polyhedron.read_poly(_read(args.poly_file))
    out.write("name: %s\n" % (p.name or "(unnamed)"))
    out.write("euler_characteristic: %d\n" % polyhedron.euler_characteristic(p))
    h0, h1, h2 = polyhedron.homology(p)

    def group(free, torsion):
        parts = ["Z"] * free + ["Z/%d" % d for d in torsion]
        return "+".join(parts) if parts else "0"

    out.write("homology: H0=%s H1=%s H2=%s\n" % (group(*h0), group(*h1), group(*h2)))
    for r in p.internal_regions():
        parity = "half-integer" if r.mobius % 2 else "integer"
        out.write("region %s: k=%d N=%d gleam-parity=%s\n" % (r.name, r.k, r.mobius, parity))
    return 0


# -- entry point ------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="corkatlas")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariants of one family instance")
    p.add_argument("instance")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("atlas", help="CSV sweep over a parameter grid")
    p.add_argument("family", choices=["A", "At", "B"])
    p.add_argument("-l", dest="l_range", type=_parse_range, default=None)
    p.add_argument("-m", dest="m_range", type=_parse_range, required=True)
    p.add_argument("-n", dest="n_range", type=_parse_range, required=True)
    p.add_argument("-o", dest="output", default=None)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("oracle", help="Alexander data of a PD file")
    p.add_argument("pd_file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gleam-solve", help="framings from target gleams")
    p.add_argument("family", choices=["A", "At", "B"])
    p.add_argument("-l", default=None)
    p.add_argument("-m", required=True)
    p.add_argument("-n", required=True)
    p.set_defaults(func=cmd_gleam_solve)

    p = sub.add_parser("stein-check", help="tb and the Stein criterion of a front file")
    p.add_argument("front_file")
    p.set_defaults(func=cmd_stein_check)

    p = sub.add_parser("kirby", help="replay a move script with invariant monitors")
    p.add_argument("action")
    p.add_argument("script")
    p.set_defaults(func=cmd_kirby)

    p = sub.add_parser("shadow-info", help="topology summary of a polyhedron file")
    p.add_argument("poly_file")
    p.set_defaults(func=cmd_shadow_info)

    return parser


def _merge_negative_values(argv):
    """Join -l/-m/-n with the following token so values like -3..3 parse."""
    merged = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in ("-l", "-m", "-n") and i + 1 < len(argv):
            merged.append("%s=%s" % (tok, argv[i + 1]))
            skip = True
        else:
            merged.append(tok)
    return merged


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_negative_values(argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args, sys.stdout)
    except ParseError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except ReplayViolation:
        return 4
    except CorkAtlasError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 3


if __name__ == "__main__":
    sys.exit(main())
