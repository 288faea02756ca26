from fractions import Fraction

import pytest

from corkatlas.errors import OutOfRegime, ParseError, UnsupportedFamily, ZeroParameter
from corkatlas.families import (
    FamilyInstance,
    casson_boundary,
    closed_form_alexander,
    cork_certificate,
    epsilon,
    family_diagram,
    format_notation,
    mazur_type_certificate,
    mirror,
    parse_notation,
    remark_34_check,
    w_identification,
)
from corkatlas.kirby import homology_presentation
from corkatlas.laurent import (
    LaurentPoly,
    eval_at_one,
    fox_milnor_factor,
    is_symmetric,
    second_derivative_at_one,
)


def test_instance_validation():
    FamilyInstance("A", (1, 2))
    FamilyInstance("Bing", (0, -1, -1))
    with pytest.raises(UnsupportedFamily):
        FamilyInstance("A", (1, 2, 3))
    with pytest.raises(UnsupportedFamily):
        FamilyInstance("C", (1, 2))


def test_closed_form_small_m():
    # coefficients merge at small m; the sums must come out right
    assert closed_form_alexander("A", 1) == LaurentPoly({2: 1, 1: -2, 0: 3, -1: -2, -2: 1})
    assert closed_form_alexander("ATilde", 1) == LaurentPoly({1: -2, 0: 5, -1: -2})
    assert closed_form_alexander("ATilde", 2) == LaurentPoly({2: -1, 0: 3, -2: -1})


def test_closed_form_general_m():
    for family in ("A", "ATilde"):
        for m in range(3, 8):
            p = closed_form_alexander(family, m)
            assert p == closed_form_alexander(family, -m)
            assert is_symmetric(p)
            assert eval_at_one(p) == 1
    with pytest.raises(ZeroParameter):
        closed_form_alexander("A", 0)
    with pytest.raises(UnsupportedFamily):
        closed_form_alexander("Bing", 1)


def test_second_derivative_closed_forms():
    for m in list(range(-6, 0)) + list(range(1, 7)):
        assert second_derivative_at_one(closed_form_alexander("A", m)) == 4 * abs(m)
        assert second_derivative_at_one(closed_form_alexander("ATilde", m)) == -4 * abs(m)


def test_fox_milnor_closed_forms():
    for family in ("A", "ATilde"):
        for m in (1, 2, 3, 4):
            p = closed_form_alexander(family, m)
            f = fox_milnor_factor(p, max_degree=m + 1)
            assert f is not None
            prod = f * f.reversed()
            assert prod == p or prod == -p


def test_epsilon():
    assert epsilon(3) == -1 and epsilon(-2) == 1
    with pytest.raises(ZeroParameter):
        epsilon(0)


def test_casson_values():
    for m in range(1, 8):
        for n in (-2, 0, 5):
            assert casson_boundary(FamilyInstance("A", (m, n))) == -2 * m
            assert casson_boundary(FamilyInstance("A", (-m, n))) == 2 * m
            assert casson_boundary(FamilyInstance("ATilde", (m, n))) == 2 * m
            assert casson_boundary(FamilyInstance("ATilde", (-m, n))) == -2 * m
    with pytest.raises(UnsupportedFamily):
        casson_boundary(FamilyInstance("Bing", (0, 1, 1)))


def test_casson_w_families():
    for l in range(-3, 4):
        for k in range(-3, 4):
            assert casson_boundary(FamilyInstance("WPlus", (l, k))) == 2
            assert casson_boundary(FamilyInstance("WMinus", (l, k))) == -2


def test_casson_mirror_antisymmetry():
    for inst in (FamilyInstance("A", (2, 1)), FamilyInstance("A", (-3, 0)),
                 FamilyInstance("ATilde", (1, -1)), FamilyInstance("ATilde", (-4, 2))):
        assert casson_boundary(mirror(inst)) == -casson_boundary(inst)


def test_mirror_involutive():
    for inst in (FamilyInstance("A", (2, 1)), FamilyInstance("ATilde", (1, -1)),
                 FamilyInstance("Bing", (0, -1, 3))):
        assert mirror(mirror(inst)) == inst
    with pytest.raises(UnsupportedFamily):
        mirror(FamilyInstance("WPlus", (0, 0)))


def test_family_diagram_is_mazur_shape():
    for inst in (FamilyInstance("A", (1, 0)), FamilyInstance("ATilde", (-2, -1)),
                 FamilyInstance("Bing", (0, -1, -1)), FamilyInstance("WPlus", (1, 1))):
        pres = homology_presentation(family_diagram(inst))
        assert pres.mazur_shape
        assert pres.h1 == (0, []) and pres.h2_rank == 0
        assert pres.boundary_h1_order == 1


def test_mazur_verdict_a_families():
    v = mazur_type_certificate(FamilyInstance("A", (3, 1)))
    assert v.mazur_shape and v.verdict
    assert v.evidence == "casson" and v.casson == -6
    v = mazur_type_certificate(FamilyInstance("A", (0, 1)))
    assert not v.verdict and v.reason == "no evidence: lambda = 0"


def test_mazur_verdict_bing():
    v = mazur_type_certificate(FamilyInstance("Bing", (1, 3, -3)))
    assert v.verdict and v.evidence == "hyperbolicity"
    v = mazur_type_certificate(FamilyInstance("Bing", (0, -1, -2)))
    assert v.verdict and v.evidence == "same-sign regime"
    v = mazur_type_certificate(FamilyInstance("Bing", (1, 1, -1)))
    assert not v.verdict and v.evidence == "none"


def test_cork_certificate_regimes():
    c = cork_certificate(FamilyInstance("ATilde", (-2, -1)))
    assert c.stein_ok and c.contractible and c.homology_sphere_boundary
    assert c.annotation == ""
    c = cork_certificate(FamilyInstance("Bing", (0, -1, -1)))
    assert c.stein_ok and c.contractible
    assert "W1-bar" in c.annotation
    with pytest.raises(OutOfRegime):
        cork_certificate(FamilyInstance("ATilde", (2, -1)))
    with pytest.raises(OutOfRegime):
        cork_certificate(FamilyInstance("ATilde", (-2, 0)))
    with pytest.raises(OutOfRegime):
        cork_certificate(FamilyInstance("Bing", (1, -1, -1)))
    with pytest.raises(OutOfRegime):
        cork_certificate(FamilyInstance("A", (1, 1)))


def test_w_identification():
    w = w_identification("+", 2, 3)
    assert w.class_key == 5
    assert w.instances == [FamilyInstance("ATilde", (1, 4)), FamilyInstance("A", (-1, 7))]
    w = w_identification("-", 2, 3)
    assert w.instances == [FamilyInstance("ATilde", (-1, 4)), FamilyInstance("A", (1, 0))]
    # the class key is the (l,k) -> (l+1,k-1) invariant
    assert w_identification("+", 3, 2).instances == w_identification("+", 2, 3).instances
    with pytest.raises(UnsupportedFamily):
        w_identification("*", 0, 0)


def test_remark_34():
    for n in range(-5, 6):
        assert remark_34_check(n)


def test_notation_round_trip():
    for inst in (FamilyInstance("A", (3, -2)), FamilyInstance("ATilde", (-1, -1)),
                 FamilyInstance("Bing", (0, -1, -1)), FamilyInstance("WPlus", (2, 3)),
                 FamilyInstance("WMinus", (-1, 0))):
        assert parse_notation(format_notation(inst)) == inst
    assert format_notation(FamilyInstance("ATilde", (-1, -1))) == "At(-1,-3/2)"
    assert parse_notation("At(2, 5/2)") == FamilyInstance("ATilde", (2, 3))


def test_notation_errors():
    for bad in ("A(1)", "A(1,2,3)", "At(1,2)", "At(1,1/3)", "A(1/2,0)", "Q(1,2)", "A(1,2"):
        with pytest.raises(ParseError):
            parse_notation(bad)
