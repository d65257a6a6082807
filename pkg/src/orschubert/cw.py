"""Chow-Witt classes of Gr(k, n) as compatible pairs (I-cohomology class, Chow class).

Top-degree classes have quadratic-form degrees a<1> + b<-1> when the twist
matches the orientation class of the Grassmannian, and plain integer degrees
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

from .chmod2 import Ch2Class, liftable, reduce, sq2
from .errors import (
    AreaError, FrameMismatchError, InternalError, NotLiftableError, ParityError, TwistError,
)
from .iring import IClass, imult, rho, rho_free
from .schur import ChowClass, degree, mult
from .wring import WClass, basis_class, top_twist, wdegree, wmult
from .young import Frame, area, check_fits, format_partition, is_even, partition, twist


@dataclass(frozen=True)
class GWForm:
    """The diagonal form pos<1> + neg<-1> in the Grothendieck-Witt ring."""

    pos: int
    neg: int

    def __post_init__(self):
        if self.pos < 0 or self.neg < 0:
            raise ValueError(f"multiplicities must be nonnegative, got ({self.pos}, {self.neg})")

    @classmethod
    def hyperbolic(cls, count: int = 1) -> "GWForm":
        return cls(count, count)

    @property
    def rank(self) -> int:
        return self.pos + self.neg

    @property
    def signature(self) -> int:
        return self.pos - self.neg

    @property
    def is_hyperbolic(self) -> bool:
        return self.pos == self.neg

    def __add__(self, other: "GWForm") -> "GWForm":
        return GWForm(self.pos + other.pos, self.neg + other.neg)

    def __mul__(self, other: "GWForm") -> "GWForm":
        # <-1>^2 = <1>
        return GWForm(self.pos * other.pos + self.neg * other.neg,
                      self.pos * other.neg + self.neg * other.pos)

    def __str__(self) -> str:
        return f"{self.pos}<1> + {self.neg}<-1>"


Degree = Union[GWForm, int]


class CWClass:
    """Chow-Witt class: I-cohomology part and Chow part with matching mod-2 reductions."""

    __slots__ = ("frame", "twist", "ipart", "chow")

    def __init__(self, ipart: IClass, chow: ChowClass):
        if ipart.frame != chow.frame:
            raise FrameMismatchError(f"frames {ipart.frame} and {chow.frame} differ")
        reduction = reduce(chow)
        if rho(ipart) != reduction:
            raise InternalError("I-cohomology part and Chow part reduce to different classes")
        if sq2(reduction, ipart.twist):
            raise InternalError("Chow part is not in the kernel of the twisted Sq^2")
        self.frame = chow.frame
        self.twist = ipart.twist
        self.ipart = ipart
        self.chow = chow

    @classmethod
    def unit(cls, frame: Frame) -> "CWClass":
        return cls(IClass.unit(frame), ChowClass.unit(frame))

    def __mul__(self, other: "CWClass") -> "CWClass":
        return cwmult(self, other)

    def __pow__(self, e: int) -> "CWClass":
        out = CWClass.unit(self.frame)
        for _ in range(e):
            out = cwmult(out, self)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, CWClass):
            return NotImplemented
        return self.ipart == other.ipart and self.chow == other.chow

    __hash__ = None

    def __repr__(self) -> str:
        return f"CWClass({self.frame}, tw={self.twist}, ipart={self.ipart!r}, chow={self.chow!r})"


def canonical_twist(p, f: Frame) -> int:
    """Twist used when none is given: an even diagram's own twist, else a liftable one."""
    p = partition(p)
    check_fits(p, f)
    if is_even(p, f):
        return twist(p, f)
    bar = Ch2Class._raw(f, [p])
    for tw in (0, 1):
        if liftable(bar, tw):
            return tw
    return 0


def lift_schubert(p, f: Frame, tw: int) -> CWClass:
    """Canonical lift of sigma_p to the Chow-Witt ring twisted by tw.

    Even diagrams with their own twist lift to the even basis class; every other
    liftable diagram lifts to the unique torsion class reducing to sigma_p.
    """
    p = partition(p)
    check_fits(p, f)
    if tw not in (0, 1):
        raise TwistError(f"twist must be 0 or 1, got {tw!r}")
    bar = Ch2Class._raw(f, [p])
    obstruction = sq2(bar, tw)
    if obstruction:
        raise NotLiftableError(
            f"sigma({format_partition(p)}) does not lift with twist {tw}: "
            f"Sq^2 = {' + '.join('s(' + format_partition(q) + ')' for q in obstruction)}",
            obstruction)
    chow = ChowClass.schubert(p, f)
    if is_even(p, f) and twist(p, f) == tw:
        free = basis_class(p, f)
        ipart = IClass(f, tw, free, bar + rho_free(free))
    else:
        ipart = IClass(f, tw, None, bar)
    return CWClass(ipart, chow)


def cwmult(x: CWClass, y: CWClass) -> CWClass:
    """Componentwise product; the mod-2 side is read off the Chow product."""
    if not isinstance(x, CWClass) or not isinstance(y, CWClass):
        raise TypeError("cwmult expects CWClass operands")
    if x.frame != y.frame:
        raise FrameMismatchError(f"frames {x.frame} and {y.frame} differ")
    chow = mult(x.chow, y.chow)
    free = wmult(x.ipart.free, y.ipart.free)
    ipart = IClass(x.frame, x.twist ^ y.twist, free, reduce(chow) + rho_free(free))
    return CWClass(ipart, chow)


def cwmult_reference(x: CWClass, y: CWClass) -> CWClass:
    """Same product, with the I-cohomology part multiplied on its own."""
    return CWClass(imult(x.ipart, y.ipart), mult(x.chow, y.chow))


def cwdegree(x: CWClass) -> Degree:
    """GW-valued degree of a top-degree class, or the integer degree if the twist is off."""
    r = degree(x.chow)
    f = x.frame
    if x.twist != top_twist(f):
        wdegree(x.ipart.free)  # degree check only
        return r
    m = wdegree(x.ipart.free, x.twist)
    if (r - m) % 2:
        raise ParityError(f"Chow degree {r} and W-degree {m} differ in parity")
    return GWForm((r + m) // 2, (r - m) // 2)


def schubert_problem(parts: Sequence[Tuple[object, Optional[int]]], f: Frame) -> Degree:
    """Degree of the product of canonical lifts; a twist of None picks canonical_twist."""
    resolved = []
    for p, tw in parts:
        p = partition(p)
        check_fits(p, f)
        resolved.append((p, canonical_twist(p, f) if tw is None else tw))
    total = sum(area(p) for p, _ in resolved)
    if total != f.dim:
        raise AreaError(f"areas add up to {total}, the Grassmannian has dimension {f.dim}")
    lifts = [lift_schubert(p, f, tw) for p, tw in resolved]
    return cwdegree(product(lifts, f))


def product(classes: Iterable[CWClass], f: Frame) -> CWClass:
    # Multiply the classes with many Chow terms last: each step then expands a single
    # Schubert class against the accumulated product.
    ordered = sorted(classes, key=lambda c: len(c.chow))
    out = CWClass.unit(f)
    for c in ordered:
        out = cwmult(out, c)
    return out
