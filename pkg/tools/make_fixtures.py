"""Dev script: generate the shipped data files in src/corkatlas/data.

Knot fixtures are braid closures whose Alexander polynomials match the
family closed forms exactly; the n variants are stabilizations so each
file is a distinct diagram.  Every file is verified before writing.
"""

import os
import sys

from corkatlas import families, kirby, legendrian, linkdiag, polyhedron
from corkatlas.laurent import LaurentPoly
from corkatlas.linkdiag import alexander, braid_closure, linking_number, write_pd, writhe
from corkatlas.symbolic import Expr

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "corkatlas", "data")

# braid words realizing the closed-form Alexander polynomials
WORDS = {
    ("A", 1): ([-1, -1, -1, -2, -2, -2], 3),
    ("A", 2): ([-1, -1, -1, 2, 2, 2, -1, -1, 3, -2, 3], 4),
    ("A", 3): ([2, -1, 1, 4, -1, -1, 3, 3, -1, -1, -1, 2, 1, -3, 2, 1, 1, -3], 5),
    ("ATilde", 1): ([1, 1, 2, -1, -3, 2, -3], 4),
    ("ATilde", 2): ([-2, 2, 4, 1, 3, -1, -2, 3, -1, 2, -3, 2, -4, -3, -1, -3, -2, 3], 5),
    ("ATilde", 3): ([1, -4, 2, -4, -3, -1, 2, 3, 3, -4, -1, -1, 4, 4, 2, 2, -3, -4, 2, -4], 5),
}


def put(name, text):
    path = os.path.join(DATA, name)
    with open(path, "w") as fh:
        fh.write(text)
    print("wrote", name)


def knot_fixture(family, m, n):
    word, strands = WORDS[(family, m)]
    word = list(word)
    if n == 1:
        word, strands = word + [strands], strands + 1
    elif n == -1:
        word, strands = word + [-strands], strands + 1
    elif n != 0:
        raise ValueError("only n in {-1, 0, 1} is generated")
    d = braid_closure(word, strands=strands)
    assert d.is_knot()
    assert alexander(d) == families.closed_form_alexander(family, m), (family, m, n)
    d.meta["family"] = family
    d.meta["m"] = str(m)
    d.meta["n"] = str(n)
    d.meta["writhe"] = str(writhe(d))
    return write_pd(d)


def lemma32_fixture(m):
    d = braid_closure([1] * (2 * m), strands=2)
    a, b = d.component_names()
    assert linking_number(d, a, b) == m
    d.meta["family"] = "lemma32"
    d.meta["m"] = str(m)
    return write_pd(d)


def framing_fixture(curve, tw):
    # the attaching circle next to its framing curve: tw = linking number
    d = braid_closure([1] * (2 * tw), strands=2)
    a, b = d.component_names()
    assert linking_number(d, a, b) == tw
    d.meta["family"] = "A-framing"
    d.meta["curve"] = curve
    d.meta["tw"] = str(tw)
    return write_pd(d)


def kirby_base():
    # the two-handle pair of the slide lemma: framings (eps, n') with
    # eps = -1, n' = 2, linked once, over a single 1-handle
    eps = kirby.TwoHandle("Keps", Expr.const(-1), {"h1": [1, -1]})
    kn = kirby.TwoHandle("Kn", Expr.const(2), {"h1": [1]})
    k = kirby.KirbyDiagram(["h1"], [eps, kn])
    k.set_lk("Keps", "Kn", 1)
    pres = kirby.homology_presentation(k)
    assert pres.h1 == (0, []) and pres.boundary_h1_order == 1
    return kirby.write_kirby(k)


KMOVES = """kmoves v1
diagram lemma32_base.kirby
slide Keps Kn +
slide Keps Kn +
slide Keps Kn -
blowup +
slide Kn E1 -
blowdown E1
slide Keps Kn -
cancel h1 Kn
"""


def verify_kmoves():
    moves = kirby.parse_moves(KMOVES)
    k = kirby.read_kirby(kirby_base())
    pres = kirby.homology_presentation(k)
    for move in moves[1:]:
        k = kirby.apply_move(k, move)
        after = kirby.homology_presentation(k)
        for field in kirby.move_preserves(move):
            assert getattr(pres, field) == getattr(after, field), (move, field)
        pres = after


def main():
    os.makedirs(DATA, exist_ok=True)
    missing = [key for key, value in WORDS.items() if value is None]
    if missing:
        print("WARNING: missing braid words for", missing)
    for family, tag in (("A", "K"), ("ATilde", "Kt")):
        for m in (1, 2, 3):
            if WORDS[(family, m)] is None:
                continue
            for n in (-1, 0, 1):
                put("%s_m%d_n%d.pd" % (tag, m, n), knot_fixture(family, m, n))
    for m in (1, 2, 3):
        put("lemma32_m%d.pd" % m, lemma32_fixture(m))
    put("a_framing_c1.pd", framing_fixture("C1", 0))
    put("a_framing_c2.pd", framing_fixture("C2", 1))

    unknot = braid_closure([], strands=1)
    unknot.meta["family"] = "unknot"
    put("unknot.pd", write_pd(unknot))
    trefoil = braid_closure([1, 1, 1], strands=2)
    assert alexander(trefoil) == LaurentPoly({1: 1, 0: -1, -1: 1})
    trefoil.meta["family"] = "trefoil"
    trefoil.meta["writhe"] = str(writhe(trefoil))
    put("trefoil.pd", write_pd(trefoil))

    put("lemma32_base.kirby", kirby_base())
    verify_kmoves()
    put("lemma32_base.kmoves", KMOVES)

    put("atilde_m-2.front", legendrian.write_front(legendrian.family_front("ATilde", -2)))
    put("bing_m-1_n-1.front", legendrian.write_front(legendrian.family_front("Bing", -1, -1)))

    for name in ("abalone", "a_tilde", "bings_house"):
        put("%s.poly" % name, polyhedron.write_poly(polyhedron.builtin(name)))
    sphere = polyhedron.SpecialPolyhedron(
        vertices=["v"],
        edges={"a": ("v", "v")},
        regions=[polyhedron.Region("f1", [("a", 1)]), polyhedron.Region("f2", [("a", -1)])],
        name="sphere",
    )
    put("sphere.poly", polyhedron.write_poly(sphere))
    print("done")


if __name__ == "__main__":
    main()
