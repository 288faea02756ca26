import random

import pytest

from corkatlas.errors import NotBlowDownable, NotCancellable, NotTwoHandle, ParseError
from corkatlas.kirby import (
    KirbyDiagram,
    TwoHandle,
    apply_move,
    blow_down,
    blow_up,
    cancel_pair,
    handle_slide,
    homology_presentation,
    move_preserves,
    parse_expr,
    parse_moves,
    read_kirby,
    write_kirby,
)
from corkatlas.symbolic import Expr


def presentation_triple(k):
    p = homology_presentation(k)
    return p.h1, p.h2_rank, p.boundary_h1_order


def random_diagram(rng, ones=2, twos=3):
    one_handles = ["h%d" % i for i in range(ones)]
    handles = [
        TwoHandle(
            "K%d" % i,
            Expr.const(rng.randint(-3, 3)),
            {o: [rng.choice([1, -1]) for _ in range(rng.randint(0, 3))]
             for o in one_handles},
        )
        for i in range(twos)
    ]
    k = KirbyDiagram(one_handles, handles)
    for i in range(twos):
        for j in range(i + 1, twos):
            k.set_lk("K%d" % i, "K%d" % j, rng.randint(-2, 2))
    return k


def test_slide_framing_formula():
    eps, n = Expr.var("eps"), Expr.var("n")
    k = KirbyDiagram([], [TwoHandle("A", eps), TwoHandle("B", n)])
    k.set_lk("A", "B", 1)
    out = handle_slide(k, "A", "B", 1)
    assert out.two_handle("A").framing == eps + n + 2
    assert out.two_handle("B").framing == n  # slid-over handle unchanged


def test_slide_unlinked():
    a, b = Expr.var("a"), Expr.var("b")
    k = KirbyDiagram([], [TwoHandle("A", a), TwoHandle("B", b)])
    out = handle_slide(k, "A", "B", 1)
    assert out.two_handle("A").framing == a + b


def test_slide_linking_two():
    f1, f2 = Expr.var("f1"), Expr.var("f2")
    k = KirbyDiagram([], [TwoHandle("one", f1), TwoHandle("two", f2)])
    k.set_lk("one", "two", 2)
    out = handle_slide(k, "one", "two", -1)
    assert out.two_handle("one").framing == f1 + f2 - 4


def test_slide_rejects_bad_arguments():
    k = KirbyDiagram([], [TwoHandle("A", Expr.const(0))])
    with pytest.raises(NotTwoHandle):
        handle_slide(k, "A", "A", 1)
    with pytest.raises(NotTwoHandle):
        handle_slide(k, "A", "nope", 1)


def test_slide_preserves_presentation():
    rng = random.Random(11)
    for _ in range(200):
        k = random_diagram(rng)
        before = presentation_triple(k)
        i, j = rng.sample(range(3), 2)
        out = handle_slide(k, "K%d" % i, "K%d" % j, rng.choice([1, -1]))
        assert presentation_triple(out) == before


def test_slide_then_inverse_restores_algebraic_data():
    rng = random.Random(13)
    for _ in range(100):
        k = random_diagram(rng)
        i, j = rng.sample(range(3), 2)
        s = rng.choice([1, -1])
        back = handle_slide(handle_slide(k, "K%d" % i, "K%d" % j, s),
                            "K%d" % i, "K%d" % j, -s)
        ni = "K%d" % i
        assert back.two_handle(ni).framing == k.two_handle(ni).framing
        for other in ("K0", "K1", "K2"):
            if other != ni:
                assert Expr.wrap(back.lk(ni, other)) == Expr.wrap(k.lk(ni, other))
        for o in k.one_handles:
            assert back.two_handle(ni).algebraic_pass(o) == k.two_handle(ni).algebraic_pass(o)


def test_blow_up_then_down_is_identity():
    rng = random.Random(17)
    for _ in range(50):
        k = random_diagram(rng)
        before = presentation_triple(k)
        up = blow_up(k, rng.choice([1, -1]))
        assert presentation_triple(up)[1] == before[1] + 1  # one extra H2 generator
        down = blow_down(up, "E1")
        assert presentation_triple(down) == before
        assert write_kirby(down) == write_kirby(k)


def test_blow_down_adjusts_framing_and_linking():
    k = KirbyDiagram([], [TwoHandle("K", Expr.const(3)),
                          TwoHandle("E", Expr.const(-1), unknot=True)])
    k.set_lk("K", "E", 1)
    out = blow_down(k, "E")
    assert out.two_handle("K").framing == Expr.const(4)  # 3 - (-1) * 1^2


def test_blow_down_preconditions():
    k = KirbyDiagram(["h"], [TwoHandle("K", Expr.const(1)),
                             TwoHandle("E", Expr.const(2), unknot=True),
                             TwoHandle("F", Expr.const(1), {"h": [1]}, unknot=True)])
    with pytest.raises(NotBlowDownable):
        blow_down(k, "K")  # not flagged unknotted
    with pytest.raises(NotBlowDownable):
        blow_down(k, "E")  # framing not +-1
    with pytest.raises(NotBlowDownable):
        blow_down(k, "F")  # passes through a 1-handle


def test_slide_over_blown_up_handle_then_blow_down():
    rng = random.Random(19)
    for _ in range(50):
        k = random_diagram(rng)
        before = presentation_triple(k)
        up = blow_up(k, rng.choice([1, -1]))
        for _ in range(rng.randint(1, 3)):
            up = handle_slide(up, "K%d" % rng.randrange(3), "E1", rng.choice([1, -1]))
        assert presentation_triple(blow_down(up, "E1")) == before


def test_cancel_pair():
    rng = random.Random(23)
    for _ in range(100):
        k = random_diagram(rng)
        k.two_handles[0].passes["h0"] = [rng.choice([1, -1])]
        before = presentation_triple(k)
        out = cancel_pair(k, "h0", "K0")
        assert presentation_triple(out) == before
        assert "h0" not in out.one_handles
        assert all(h.name != "K0" for h in out.two_handles)


def test_cancel_lone_pair_gives_empty_diagram():
    k = KirbyDiagram(["h"], [TwoHandle("K", Expr.const(0), {"h": [-1]})])
    out = cancel_pair(k, "h", "K")
    assert out.one_handles == [] and out.two_handles == []
    p = homology_presentation(out)
    assert p.h1 == (0, []) and p.h2_rank == 0 and p.boundary_h1_order == 1


def test_cancel_requires_single_geometric_pass():
    k = KirbyDiagram(["h"], [TwoHandle("K", Expr.const(0), {"h": [1, -1, 1]})])
    with pytest.raises(NotCancellable):
        cancel_pair(k, "h", "K")
    with pytest.raises(NotCancellable):
        cancel_pair(k, "nope", "K")


def test_mazur_shape_presentation():
    k = KirbyDiagram(["h1"], [TwoHandle("K", Expr.var("f"), {"h1": [1]})])
    p = homology_presentation(k)
    assert p.h1 == (0, [])
    assert p.h2_rank == 0
    assert p.boundary_h1_order == 1
    assert p.mazur_shape


def test_empty_diagram_presentation():
    p = homology_presentation(KirbyDiagram([], []))
    assert p.h1 == (0, []) and p.h2_rank == 0 and p.boundary_h1_order == 1
    assert not p.mazur_shape


def test_infinite_boundary_order():
    k = KirbyDiagram([], [TwoHandle("K", Expr.const(0))])
    assert homology_presentation(k).boundary_h1_order == "infinite"


def test_parse_expr():
    assert parse_expr("n+1") == Expr.var("n") + 1
    assert parse_expr("-2*m+3") == -2 * Expr.var("m") + 3
    assert parse_expr("0") == Expr.const(0)
    assert parse_expr("eps") == Expr.var("eps")
    with pytest.raises(ParseError):
        parse_expr("n+")
    with pytest.raises(ParseError):
        parse_expr("")


def test_kirby_file_round_trip():
    k = KirbyDiagram(["h1"], [TwoHandle("K", parse_expr("n+1"), {"h1": [1, -1, 1]}),
                              TwoHandle("E", Expr.const(-1), unknot=True)])
    k.set_lk("K", "E", 3)
    text = write_kirby(k)
    assert write_kirby(read_kirby(text)) == text
    with pytest.raises(ParseError):
        read_kirby("nonsense")
    with pytest.raises(ParseError):
        read_kirby("kirby v1\nPASS K h1 ++\n")


def test_move_script_round_trip_and_monitors():
    text = "kmoves v1\ndiagram base.kirby\nslide A B +\nblowup -\nblowdown E1\ncancel h K\n"
    moves = parse_moves(text)
    assert moves[0] == ("diagram", "base.kirby")
    assert moves[1] == ("slide", "A", "B", 1)
    assert moves[2] == ("blowup", -1)
    assert "h2_rank" in move_preserves(moves[1])
    assert "h2_rank" not in move_preserves(moves[2])
    with pytest.raises(ParseError):
        parse_moves("kmoves v1\nwiggle A\n")
    with pytest.raises(ParseError):
        parse_moves("not a script")


def test_apply_move_dispatch():
    k = KirbyDiagram([], [TwoHandle("A", Expr.const(1)), TwoHandle("B", Expr.const(0))])
    out = apply_move(k, ("slide", "A", "B", 1))
    assert out.two_handle("A").framing == Expr.const(1)
    out = apply_move(k, ("blowup", 1))
    assert any(h.name == "E1" for h in out.two_handles)
