import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import catalan
from orschubert.errors import DegreeError, FrameError, FrameMismatchError, TagError, TwistError
from orschubert.schur import ChowClass, mult
from orschubert.wring import (
    WClass, basis_class, halved_frame, omega, oriented_giambelli, oriented_pieri, top_twist,
    unit_class, wdegree, wmult,
)
from orschubert.young import Extra, Frame, even_diagrams, partitions_in_frame, twist


def W(p, f, c=1):
    return basis_class(p, f, c)


def S(core, f):
    return WClass(f, {(core, Extra.NONE): 1})


def test_halved_frames():
    assert halved_frame(Frame(4, 4)) == Frame(2, 2)
    assert halved_frame(Frame(5, 5)) == Frame(2, 2)   # Gr(2,4) models Gr(5,10)
    assert halved_frame(Frame(4, 5)) == Frame(2, 2)
    assert halved_frame(Frame(3, 4)) == Frame(1, 2)
    assert halved_frame(Frame(6, 8)) == Frame(3, 4)


def test_omega_examples():
    f = Frame(5, 5)
    h = halved_frame(f)
    assert omega(ChowClass.schubert((2, 2), h), f).diagrams() == {(4, 4, 4, 4): 1}
    assert omega(ChowClass.zero(h), f) == 0
    g = Frame(4, 4)
    assert omega(ChowClass.schubert((1,), halved_frame(g)), g) == W((2, 2), g)
    with pytest.raises(FrameError):
        omega(ChowClass.schubert((1,), Frame(3, 3)), g)


def test_golden_products():
    f = Frame(5, 5)
    assert W((2, 2), f) ** 4 == W((4, 4, 4, 4), f, 2)
    assert W((5, 3, 3, 1, 1), f) * W((2, 2), f) * W((2, 2), f) == W((5, 5, 5, 3, 3), f, 2)
    g = Frame(6, 8)
    assert (W((8, 2, 2), g) ** 4).diagrams() == {g.rectangle: 1}


def test_relations():
    for k in range(1, 7):
        for w in range(1, 7):
            f = Frame(k, w)
            h = halved_frame(f)
            if k % 2 == 0:
                ek = unit_class(Extra.EK, f)
                expected = omega(ChowClass.schubert((1,) * (k // 2), h), f) if w >= 2 else WClass.zero(f)
                assert ek * ek == expected
            if w % 2 == 0:
                ep = unit_class(Extra.EPERP, f)
                expected = omega(ChowClass.schubert((w // 2,), h), f) if k >= 2 else WClass.zero(f)
                assert ep * ep == expected
            if k % 2 == 0 and w % 2 == 0:
                assert unit_class(Extra.EK, f) * unit_class(Extra.EPERP, f) == 0
            if k % 2 and w % 2:
                assert unit_class(Extra.R, f) ** 2 == 0
    with pytest.raises(TagError):
        unit_class(Extra.R, Frame(4, 4))


def test_euler_squares_as_diagrams():
    f = Frame(4, 6)
    assert (unit_class(Extra.EK, f) ** 2).diagrams() == {(2, 2, 2, 2): 1}
    assert (unit_class(Extra.EPERP, f) ** 2).diagrams() == {(6, 6): 1}


def test_oriented_pieri():
    f = Frame(6, 6)
    one = S((1,), f)
    assert oriented_pieri(one, 1) == S((2,), f) + S((1, 1), f)
    x = S((2, 1), f) + S((1,), f) * 3
    assert oriented_pieri(x, 0) == x
    h = halved_frame(f)
    for core in partitions_in_frame(h):
        for b in range(0, 4):
            special = omega(ChowClass.schubert((b,), h), f) if b else WClass.unit(f)
            assert oriented_pieri(S(core, f), b) == wmult(S(core, f), special)
    with pytest.raises(TagError):
        oriented_pieri(unit_class(Extra.EK, f), 1)


def test_oriented_giambelli():
    f = Frame(6, 8)
    h = halved_frame(f)
    for a in range(1, 5):
        for b in range(1, min(a, 3) + 1):
            lhs = S((a, b), f)
            s = lambda j: S((j,), f) if 0 < j <= h.w else (WClass.unit(f) if j == 0 else WClass.zero(f))
            assert lhs == s(a) * s(b) - s(a + 1) * s(b - 1)
    for core in partitions_in_frame(h):
        assert oriented_giambelli(core, f) == S(core, f)
    assert oriented_giambelli((3,), f) == S((3,), f)
    g = Frame(5, 5)
    assert oriented_giambelli((2, 1), g, Extra.R).diagrams() == {(5, 5, 5, 3, 3): 1}
    assert (W((5, 5, 5, 1, 1), g) * W((2, 2), g)).diagrams() == {(5, 5, 5, 3, 3): 1}


def test_wdegree():
    f = Frame(4, 4)
    assert wdegree(W((2, 2), f) ** 4) == 2
    assert wdegree(WClass.zero(f)) == 0
    g = Frame(5, 5)
    assert wdegree(W((5, 3, 3, 1, 1), g) * W((4, 4, 2, 2), g)) == 1
    with pytest.raises(DegreeError):
        wdegree(W((2, 2), f))
    with pytest.raises(TwistError):
        wdegree(WClass.zero(Frame(2, 3)), 0)
    for n in range(1, 7):
        assert wdegree(W((2, 2), Frame(4, 2 * n)) ** (2 * n)) == catalan(n)


def test_top_twist():
    for k in range(1, 6):
        for w in range(1, 6):
            assert top_twist(Frame(k, w)) == (k + w) % 2


def test_frame_mismatch():
    with pytest.raises(FrameMismatchError):
        W((2, 2), Frame(4, 4)) * W((2, 2), Frame(4, 5))


def test_omega_is_ring_map():
    for k in range(1, 7):
        for w in range(1, 7):
            f = Frame(k, w)
            h = halved_frame(f)
            basis = list(partitions_in_frame(h))
            for a in basis:
                for b in basis:
                    x, y = ChowClass.schubert(a, h), ChowClass.schubert(b, h)
                    assert omega(mult(x, y), f) == omega(x, f) * omega(y, f)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_ring_laws_and_twist_additivity(data):
    f = Frame(data.draw(st.integers(1, 6)), data.draw(st.integers(1, 6)))
    ev = list(even_diagrams(f))
    a, b, c = (data.draw(st.sampled_from(ev)) for _ in range(3))
    x, y, z = W(a, f), W(b, f), W(c, f)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    prod = x * y
    assert all(v > 0 for v in prod.terms.values())
    if prod:
        assert prod.twist == twist(a, f) ^ twist(b, f)
