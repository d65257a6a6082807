import itertools

import pytest
from hypothesis import given, settings, strategies as st

from orschubert.chmod2 import Ch2Class, cbar, cbar_perp, mult2, sq2, sq2_image_contains
from orschubert.cw import lift_schubert
from orschubert.errors import FrameMismatchError, TwistError
from orschubert.iring import (
    IClass, bockstein, imult, is_torsion, pontryagin_reduction, rho, torsion_witness,
)
from orschubert.schur import ChowClass
from orschubert.wring import WClass, basis_class, halved_frame, omega, unit_class
from orschubert.young import Extra, Frame, double, partitions_in_frame

TORSION = [(4, 3, 1), (4, 2, 2), (3, 3, 1, 1), (3, 2, 2, 1)]


def B(f, *ps):
    return Ch2Class(f, ps)


def test_bockstein_examples():
    g = Frame(2, 3)
    x = bockstein(cbar(1, g), 0)
    assert is_torsion(x) and x.twist == 0
    assert rho(x) == B(g, (2,), (1, 1)) == cbar(2, g) + cbar_perp(2, g)
    for n in range(2, 7):
        h = Frame(2, n - 1)
        assert rho(bockstein(Ch2Class.unit(h), 1)) == cbar(1, h)
    assert bockstein(Ch2Class.zero(g), 0) == IClass.zero(g)


def test_rho_of_units():
    f = Frame(4, 6)
    assert rho(IClass.from_free(unit_class(Extra.EK, f))) == cbar(4, f)
    assert rho(IClass.from_free(unit_class(Extra.EPERP, f))) == cbar_perp(6, f)
    g = Frame(3, 5)
    assert rho(IClass.from_free(unit_class(Extra.R, g))) == cbar(2, g) * cbar_perp(5, g)


def test_rho_of_bockstein_is_sq2():
    for k in range(1, 4):
        for w in range(1, 4):
            f = Frame(k, w)
            for p in partitions_in_frame(f):
                for tw in (0, 1):
                    assert rho(bockstein(B(f, p), tw)) == sq2(B(f, p), tw)


def test_sigma22_squared():
    f = Frame(4, 4)
    lift = IClass(f, 0, basis_class((2, 2), f))
    sq = imult(lift, lift)
    assert sq.free.diagrams() == {(4, 4): 1, (2, 2, 2, 2): 1}
    assert sq.torsion == B(f, *TORSION)
    ok, witness = torsion_witness(sq)
    assert ok and sq2(witness, 0) == sq.torsion
    assert sq2(B(f, (4, 2, 1), (3, 2, 1, 1)), 0) == sq.torsion
    assert not is_torsion(sq)
    torsion_only = IClass(f, 0, None, sq.torsion)
    assert is_torsion(torsion_only)


def test_products_with_torsion():
    f = Frame(3, 4)
    t = bockstein(B(f, (1,)), 0)
    for p in partitions_in_frame(f):
        x = lift_or_none(p, f)
        if x is None:
            continue
        prod = imult(x, t)
        assert is_torsion(prod)
        assert rho(prod) == mult2(rho(x), sq2(B(f, (1,)), 0))


def lift_or_none(p, f):
    for tw in (0, 1):
        try:
            return lift_schubert(p, f, tw).ipart
        except Exception:
            continue
    return None


def test_unit_and_errors():
    f = Frame(4, 4)
    x = IClass(f, 0, basis_class((2, 2), f))
    assert imult(IClass.unit(f), x) == x
    with pytest.raises(TwistError):
        IClass(f, 0, unit_class(Extra.EK, f))
    with pytest.raises(TwistError):
        x + bockstein(B(f, (1,)), 1)
    with pytest.raises(FrameMismatchError):
        imult(x, IClass.unit(Frame(3, 3)))


def canonical_lifts(f):
    out = []
    for p in partitions_in_frame(f):
        for tw in (0, 1):
            try:
                out.append(lift_schubert(p, f, tw).ipart)
            except Exception:
                pass
    return out


def test_torsion_of_lift_products_lies_in_sq2_image():
    for k in range(1, 5):
        for w in range(1, 5):
            if k * w > 12:
                continue
            f = Frame(k, w)
            lifts = canonical_lifts(f)
            for x, y in itertools.combinations_with_replacement(lifts, 2):
                prod = imult(x, y)
                assert rho(prod) == mult2(rho(x), rho(y))
                ok, _ = torsion_witness(prod)
                assert ok, (f, x, y)


def test_torsion_ideal():
    f = Frame(4, 4)
    t = bockstein(B(f, (2, 1)), 0)
    for x in canonical_lifts(f):
        assert is_torsion(imult(t, x))


def test_pontryagin_lift():
    # The Pontryagin-class determinant reduces to the doubled partition up to Sq^2-image.
    for k in range(1, 7):
        for w in range(1, 7):
            f = Frame(k, w)
            for core in partitions_in_frame(halved_frame(f)):
                for rows in (False, True):
                    diff = pontryagin_reduction(core, f, rows) + B(f, double(core))
                    ok, _ = sq2_image_contains(diff, 0)
                    assert ok, (f, core, rows)
                x = IClass.from_free(omega(ChowClass.schubert(core, halved_frame(f)), f))
                assert rho(x) == B(f, double(core))


def test_pontryagin_reduction_small_cores():
    f = Frame(6, 6)
    s2, s4 = cbar_perp(2, f), cbar_perp(4, f)
    assert pontryagin_reduction((1,), f, rows=True) == s2 * s2
    # det [[s2^2, s4^2], [1, s2^2]] over GF(2)
    assert pontryagin_reduction((1, 1), f, rows=True) == s2 ** 4 + s4 * s4
    # column version: core (2) has conjugate (1, 1), giving det [[c2^2, c4^2], [1, c2^2]]
    c2, c4 = cbar(2, f), cbar(4, f)
    assert pontryagin_reduction((1, 1), f) == c4 * c4
    assert pontryagin_reduction((2,), f) == c2 ** 4 + c4 * c4


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_rho_is_multiplicative(data):
    f = Frame(data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4)))
    lifts = canonical_lifts(f)
    x, y = data.draw(st.sampled_from(lifts)), data.draw(st.sampled_from(lifts))
    assert rho(imult(x, y)) == mult2(rho(x), rho(y))
    assert imult(x, y).twist == x.twist ^ y.twist
