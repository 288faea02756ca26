"""Property-based checks over randomly generated inputs."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from corkatlas import families, kirby, shadowmap
from corkatlas.laurent import LaurentPoly, eval_at_one, second_derivative_at_one
from corkatlas.symbolic import Expr

coeff_dicts = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6)
polys = coeff_dicts.map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_distributivity(p, q, r):
    assert (p + q) * r == p * r + q * r


@given(polys, polys)
def test_reversed_is_multiplicative(p, q):
    assert (p * q).reversed() == p.reversed() * q.reversed()


@given(polys, polys)
def test_eval_at_one_is_multiplicative(p, q):
    assert eval_at_one(p * q) == eval_at_one(p) * eval_at_one(q)


@given(polys, polys)
def test_second_derivative_is_additive(p, q):
    assert second_derivative_at_one(p + q) == (
        second_derivative_at_one(p) + second_derivative_at_one(q)
    )


@given(polys)
def test_pairs_round_trip(p):
    assert LaurentPoly.from_pairs(p.to_pairs()) == p


@given(st.integers(-20, 20).filter(bool), st.integers(-20, 20))
def test_casson_mirror_antisymmetry(m, n):
    for family in ("A", "ATilde"):
        inst = families.FamilyInstance(family, (m, n))
        assert families.casson_boundary(families.mirror(inst)) == (
            -families.casson_boundary(inst)
        )


@given(st.sampled_from(["A", "ATilde", "Bing", "WPlus", "WMinus"]),
       st.lists(st.integers(-50, 50), min_size=2, max_size=3))
def test_notation_round_trip(family, params):
    params = params[: families._ARITY[family]]
    if len(params) != families._ARITY[family]:
        params = (params + [0, 0, 0])[: families._ARITY[family]]
    inst = families.FamilyInstance(family, tuple(params))
    assert families.parse_notation(families.format_notation(inst)) == inst


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30))
def test_gleam_solve_round_trip(a, b, c):
    for family, targets in (
        ("A", [Fraction(a), Fraction(b)]),
        ("ATilde", [Fraction(a), Fraction(b) - Fraction(1, 2)]),
        ("Bing", [Fraction(a), Fraction(b), Fraction(c)]),
    ):
        values = shadowmap.solve_framings(family, targets)
        proj = shadowmap.family_ledger(family)
        names = [sorted(proj.framings[cu].variables())[0] for cu in proj.curves]
        _, merged = shadowmap.forward_gleams(proj)
        env = dict(zip(names, values))
        got = [Expr.wrap(merged[r]).substitute(env).constant_value()
               for r in shadowmap._FAMILY_SLOTS[family]]
        assert got == targets


framings = st.integers(-4, 4)
passes = st.lists(st.sampled_from([1, -1]), max_size=3)


@st.composite
def diagrams(draw):
    ones = ["h%d" % i for i in range(draw(st.integers(1, 2)))]
    count = draw(st.integers(2, 3))
    handles = [
        kirby.TwoHandle("K%d" % i, Expr.const(draw(framings)),
                        {o: draw(passes) for o in ones})
        for i in range(count)
    ]
    d = kirby.KirbyDiagram(ones, handles)
    for i in range(count):
        for j in range(i + 1, count):
            d.set_lk("K%d" % i, "K%d" % j, draw(st.integers(-2, 2)))
    return d


@settings(max_examples=60, deadline=None)
@given(diagrams(), st.integers(0, 5), st.sampled_from([1, -1]))
def test_slide_preserves_homology(d, pick, sign):
    names = [h.name for h in d.two_handles]
    i = pick % len(names)
    j = (pick + 1) % len(names)
    before = kirby.homology_presentation(d)
    after = kirby.homology_presentation(kirby.handle_slide(d, names[i], names[j], sign))
    assert (before.h1, before.h2_rank, before.boundary_h1_order) == (
        after.h1, after.h2_rank, after.boundary_h1_order
    )


@settings(max_examples=60, deadline=None)
@given(diagrams(), st.sampled_from([1, -1]))
def test_blow_up_down_round_trip(d, eps):
    text = kirby.write_kirby(d)
    assert kirby.write_kirby(kirby.blow_down(kirby.blow_up(d, eps), "E1")) == text
    assert kirby.write_kirby(kirby.read_kirby(text)) == text
