import pytest

from corkatlas.errors import (
    InvalidDiagram,
    NotAKnot,
    ParseError,
    UnknownComponent,
)
from corkatlas.laurent import LaurentPoly
from corkatlas.linkdiag import (
    PDCode,
    alexander,
    braid_closure,
    linking_number,
    mirror,
    read_pd,
    seifert_matrix,
    write_pd,
    writhe,
)


def trefoil():
    return braid_closure([1, 1, 1], strands=2)


def figure_eight():
    return braid_closure([1, -2, 1, -2], strands=3)


def unknot():
    return braid_closure([], strands=1)


def test_writhe():
    assert writhe(unknot()) == 0
    assert writhe(trefoil()) == 3
    assert writhe(mirror(trefoil())) == -3
    assert writhe(figure_eight()) == 0


def test_validate_rejects_bad_incidence():
    d = trefoil()
    crossings = list(d.crossings)
    arcs = list(crossings[0].arcs)
    arcs[0] = 999
    crossings[0] = type(crossings[0])(tuple(arcs), crossings[0].sign)
    with pytest.raises(InvalidDiagram):
        PDCode(crossings, d.components, {}).validate()


def test_linking_number():
    split = braid_closure([], strands=2)
    a, b = split.component_names()
    assert linking_number(split, a, b) == 0
    hopf = braid_closure([1, 1], strands=2)
    a, b = hopf.component_names()
    assert linking_number(hopf, a, b) == 1
    assert linking_number(hopf, b, a) == 1
    with pytest.raises(UnknownComponent):
        linking_number(hopf, a, "nope")


def test_seifert_matrix_sizes_and_skew():
    assert seifert_matrix(unknot()).size() == 0
    v = seifert_matrix(trefoil()).entries
    assert len(v) == 2
    v8 = seifert_matrix(figure_eight()).entries
    det = v8[0][0] * v8[1][1] - v8[0][1] * v8[1][0]
    sym = [[v8[i][j] - v8[j][i] for j in range(2)] for i in range(2)]
    assert abs(sym[0][1]) == 1 and sym[0][0] == sym[1][1] == 0
    assert det in (-1, 1)  # genus-1 knot with determinant-size entries


def test_seifert_matrix_requires_knot():
    with pytest.raises(NotAKnot):
        seifert_matrix(braid_closure([1, 1], strands=2))


def test_alexander_small_knots():
    assert alexander(unknot()) == LaurentPoly.one()
    assert alexander(trefoil()) == LaurentPoly({1: 1, 0: -1, -1: 1})
    assert alexander(figure_eight()) == LaurentPoly({1: -1, 0: 3, -1: -1})
    # connected-sum-like braid: both trefoil chiralities give the same polynomial
    assert alexander(mirror(trefoil())) == alexander(trefoil())


def test_alexander_mirror_symmetry():
    for word, strands in [([1, 1, 1], 2), ([1, -2, 1, -2], 3),
                          ([1, 1, 2, -1, -3, 2, -3], 4),
                          ([-1, -1, -1, 2, 2, 2, -1, -1, 3, -2, 3], 4)]:
        d = braid_closure(word, strands=strands)
        assert alexander(mirror(d)) == alexander(d)


def test_braid_closure_components():
    d = braid_closure([1], strands=2)
    assert d.is_knot()
    d = braid_closure([1, 1], strands=2)
    assert sorted(d.component_names()) == ["K0", "K1"]
    # untouched strands survive as crossing-free components
    d = braid_closure([1], strands=4)
    assert len(d.components) == 3


def test_pd_file_round_trip():
    d = trefoil()
    d.meta["family"] = "trefoil"
    d.meta["writhe"] = "3"
    text = write_pd(d)
    back = read_pd(text)
    assert write_pd(back) == text
    assert back.meta["family"] == "trefoil"
    assert alexander(back) == alexander(d)


def test_pd_parse_errors():
    with pytest.raises(ParseError):
        read_pd("nonsense")
    with pytest.raises(ParseError):
        read_pd("pd v1\nX 1 2 3\n")
    with pytest.raises(ParseError):
        read_pd("pd v1\nX 1 2 3 4 0\n")
