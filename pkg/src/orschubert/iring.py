"""I-cohomology classes: a free W-part plus 2-torsion stored through its mod-2 reduction.

The reduction map is injective on torsion, so a torsion class is kept as the
mod-2 class it reduces to.  The free part uses the even-diagram basis, and the
reduction of a basis class is the mod-2 Schubert class of its diagram.
"""

from __future__ import annotations

from itertools import permutations
from typing import Optional, Tuple

from .chmod2 import Ch2Class, cbar, cbar_perp, mult2, sq2, sq2_image_contains
from .errors import FrameMismatchError, TwistError
from .wring import WClass, halved_frame, wmult
from .young import Frame, Partition, check_fits, conjugate, format_partition, partition


class IClass:
    """Homogeneous-twist element of the I-cohomology ring of Gr(k, n)."""

    __slots__ = ("frame", "twist", "free", "torsion")

    def __init__(self, frame: Frame, twist: int, free: Optional[WClass] = None,
                 torsion: Optional[Ch2Class] = None):
        if twist not in (0, 1):
            raise TwistError(f"twist must be 0 or 1, got {twist!r}")
        free = WClass.zero(frame) if free is None else free
        torsion = Ch2Class.zero(frame) if torsion is None else torsion
        if free.frame != frame or torsion.frame != frame:
            raise FrameMismatchError("free and torsion parts must share the frame")
        if free and free.twist != twist:
            raise TwistError(f"free part has twist {free.twist}, class has twist {twist}")
        self.frame = frame
        self.twist = twist
        self.free = free
        self.torsion = torsion

    @classmethod
    def unit(cls, frame: Frame) -> "IClass":
        return cls(frame, 0, WClass.unit(frame))

    @classmethod
    def zero(cls, frame: Frame, twist: int = 0) -> "IClass":
        return cls(frame, twist)

    @classmethod
    def from_free(cls, free: WClass, twist: Optional[int] = None) -> "IClass":
        tw = free.twist if free else (twist or 0)
        return cls(free.frame, tw, free)

    def __add__(self, other: "IClass") -> "IClass":
        _check(self, other)
        if self.twist != other.twist:
            raise TwistError("cannot add classes of different twist")
        return IClass(self.frame, self.twist, self.free + other.free,
                      self.torsion + other.torsion)

    def __mul__(self, other: "IClass") -> "IClass":
        return imult(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IClass):
            return NotImplemented
        return (self.frame, self.twist) == (other.frame, other.twist) and \
            self.free == other.free and self.torsion == other.torsion

    __hash__ = None

    def __repr__(self) -> str:
        return f"IClass({self.frame}, tw={self.twist}, free={self.free!r}, torsion={self.torsion!r})"


def _check(x: IClass, y: IClass) -> None:
    if not isinstance(x, IClass) or not isinstance(y, IClass):
        raise TypeError("expected IClass operands")
    if x.frame != y.frame:
        raise FrameMismatchError(f"frames {x.frame} and {y.frame} differ")


def bockstein(x: Ch2Class, tw: int) -> IClass:
    """The torsion class beta_tw(x); it reduces to Sq^2_tw(x)."""
    return IClass(x.frame, tw, None, sq2(x, tw))


def rho_free(w: WClass) -> Ch2Class:
    """Mod-2 reduction of a free class: each basis class goes to its diagram."""
    return Ch2Class._raw(w.frame, (p for p, c in w.diagrams().items() if c % 2))


def rho(x: IClass) -> Ch2Class:
    return rho_free(x.free) + x.torsion


def imult(x: IClass, y: IClass) -> IClass:
    """Product; the free part by the W-ring table, torsion fixed by reducing both sides."""
    _check(x, y)
    free = wmult(x.free, y.free)
    torsion = mult2(rho(x), rho(y)) + rho_free(free)
    return IClass(x.frame, x.twist ^ y.twist, free, torsion)


def is_torsion(x: IClass) -> bool:
    return not x.free


def torsion_witness(x: IClass) -> Tuple[bool, Optional[Ch2Class]]:
    """A class y with beta(y) equal to the torsion part, if the torsion part is one."""
    return sq2_image_contains(x.torsion, x.twist)


def pontryagin_reduction(core, f: Frame, rows: bool = False) -> Ch2Class:
    """Reduction of the Pontryagin-class determinant for a core partition.

    The core's Schubert class is the dual Giambelli determinant in Chern classes
    c_i; sending c_i to the Pontryagin class p_{2i} and reducing gives the
    determinant of the squares cbar_{2m}^2.  With ``rows`` the perpendicular
    classes are used instead.
    """
    core = partition(core)
    check_fits(core, halved_frame(f))
    shape = core if rows else conjugate(core)
    special = cbar_perp if rows else cbar
    r = len(shape)
    squares = {}
    out = Ch2Class.zero(f)
    for perm in permutations(range(r)):
        term = Ch2Class.unit(f)
        for i in range(r):
            m = shape[i] + perm[i] - i
            if m < 0:
                term = Ch2Class.zero(f)
                break
            if m not in squares:
                squares[m] = mult2(special(2 * m, f), special(2 * m, f))
            term = mult2(term, squares[m])
            if not term:
                break
        out = out + term
    return out
