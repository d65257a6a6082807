"""W-cohomology of Gr(k, n), untwisted and det-twisted together, on the even-diagram basis.

A basis element is an even diagram written as (core, extra): the core is a
partition in a halved frame, and the extra factor is one of the Euler classes
or the exterior class R.  Untagged classes multiply exactly like Schubert
classes of the halved Grassmannian; the extra factors follow a small table.
Coefficients are integers m standing for m<1> in the Witt ring.
"""

from __future__ import annotations

from itertools import permutations
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Tuple

from .errors import (
    DegreeError, FrameError, FrameMismatchError, NotEvenError, TagError, TwistError,
)
from .schur import ChowClass, _perm_sign, _times_schur, pieri_row
from .young import (
    EvenDecomposition, Extra, Frame, Partition, area, check_fits, combine_even, core_frame,
    decompose_even, extra_allowed, fits_in_frame, format_partition, partition,
)

Key = Tuple[Partition, Extra]


def halved_frame(f: Frame) -> Frame:
    """Frame of the Grassmannian whose Chow ring models the untagged classes."""
    return Frame(f.k // 2, f.w // 2)


class WClass:
    """Integer combination of even-diagram basis classes of one frame."""

    __slots__ = ("frame", "_terms")

    def __init__(self, frame: Frame, terms: Optional[Mapping] = None):
        self.frame = frame
        clean: Dict[Key, int] = {}
        for (core, extra), c in (terms or {}).items():
            core = partition(core)
            extra = Extra(extra)
            combine_even(EvenDecomposition(core, extra), frame)
            c = int(c)
            if c:
                key = (core, extra)
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self._terms = clean

    @classmethod
    def _raw(cls, frame: Frame, terms: Dict[Key, int]) -> "WClass":
        obj = cls.__new__(cls)
        obj.frame = frame
        obj._terms = {key: c for key, c in terms.items() if c}
        return obj

    @classmethod
    def zero(cls, frame: Frame) -> "WClass":
        return cls._raw(frame, {})

    @classmethod
    def unit(cls, frame: Frame) -> "WClass":
        return cls._raw(frame, {((), Extra.NONE): 1})

    @property
    def terms(self) -> Mapping[Key, int]:
        return MappingProxyType(self._terms)

    def diagrams(self) -> Dict[Partition, int]:
        """The class on the even-diagram basis of the full frame."""
        return {combine_even(EvenDecomposition(*key), self.frame): c
                for key, c in self._terms.items()}

    def __iter__(self):
        items = [(combine_even(EvenDecomposition(*key), self.frame), key, c)
                 for key, c in self._terms.items()]
        items.sort(key=lambda t: (area(t[0]), tuple(-x for x in t[0])))
        return iter((key, c) for _, key, c in items)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, core, extra: Extra = Extra.NONE) -> int:
        return self._terms.get((partition(core), extra), 0)

    def coefficient_of_diagram(self, p) -> int:
        p = partition(p)
        if not fits_in_frame(p, self.frame):
            return 0
        try:
            key = tuple(decompose_even(p, self.frame))
        except NotEvenError:
            return 0
        return self._terms.get(key, 0)

    @property
    def twists(self) -> set:
        return {extra.twist for _, extra in self._terms}

    @property
    def twist(self) -> Optional[int]:
        """Common twist bit of the terms; None for the zero class."""
        bits = self.twists
        if len(bits) > 1:
            raise TwistError("class mixes untwisted and det-twisted terms")
        return next(iter(bits)) if bits else None

    def degrees(self) -> set:
        return {area(p) for p in self.diagrams()}

    def _check(self, other) -> None:
        if not isinstance(other, WClass):
            raise TypeError(f"cannot combine WClass with {type(other).__name__}")
        if other.frame != self.frame:
            raise FrameMismatchError(f"frames {self.frame} and {other.frame} differ")

    def __add__(self, other: "WClass") -> "WClass":
        self._check(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return WClass._raw(self.frame, out)

    def __neg__(self) -> "WClass":
        return WClass._raw(self.frame, {key: -c for key, c in self._terms.items()})

    def __sub__(self, other: "WClass") -> "WClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return WClass._raw(self.frame, {key: c * other for key, c in self._terms.items()})
        return wmult(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "WClass":
        out = WClass.unit(self.frame)
        for _ in range(e):
            out = wmult(out, self)
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, WClass):
            return NotImplemented
        return self.frame == other.frame and self._terms == other._terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self._terms:
            return f"WClass({self.frame}, 0)"
        parts = []
        for (core, extra), c in self:
            label = f"[{format_partition(core)}|{extra.name}]"
            parts.append(label if c == 1 else f"{c}*{label}")
        return f"WClass({self.frame}, {' + '.join(parts)})"


def basis_class(p, f: Frame, coeff: int = 1) -> WClass:
    """The W-cohomology basis class of an even diagram."""
    core, extra = decompose_even(partition(p), f)
    return WClass._raw(f, {(core, extra): coeff})


def unit_class(extra: Extra, f: Frame) -> WClass:
    """The bare extra factor: e_k, the perpendicular Euler class, R, or 1."""
    if not extra_allowed(f, extra):
        raise TagError(f"{extra.name} does not exist in the {f} frame")
    return WClass._raw(f, {((), extra): 1})


def omega(x: ChowClass, f: Frame) -> WClass:
    """Ring map from the Chow ring of the halved Grassmannian, by doubling partitions."""
    if x.frame != halved_frame(f):
        raise FrameError(f"omega needs a class over {halved_frame(f)}, got {x.frame}")
    return WClass._raw(f, {(p, Extra.NONE): c for p, c in x.terms.items()})


def _tag_product(s: Extra, t: Extra, f: Frame):
    """Result tag and extra core factor for a product of two tags, or None if it vanishes."""
    if s is Extra.NONE:
        return t, ()
    if t is Extra.NONE:
        return s, ()
    if s is t is Extra.EK:
        return Extra.NONE, (1,) * (f.k // 2)
    if s is t is Extra.EPERP:
        return Extra.NONE, (f.w // 2,)
    if {s, t} == {Extra.EK, Extra.EPERP} or s is t is Extra.R:
        return None
    raise TagError(f"tags {s.name} and {t.name} cannot occur in one frame")


def wmult(x: WClass, y: WClass) -> WClass:
    x._check(y)
    f = x.frame
    h = halved_frame(f)
    # Group the second factor by tag so each core product is one Giambelli expansion.
    out: Dict[Key, int] = {}
    by_tag: Dict[Extra, Dict[Partition, int]] = {}
    for (core, extra), c in x._terms.items():
        by_tag.setdefault(extra, {})[core] = c
    for (core_b, t), cb in y._terms.items():
        for s, cores_a in by_tag.items():
            rule = _tag_product(s, t, f)
            if rule is None:
                continue
            tag, factor = rule
            acc = _times_schur(cores_a, core_b, h)
            if factor:
                acc = _times_schur(acc, factor, h)
            target = core_frame(f, tag)
            for core, c in acc.items():
                if fits_in_frame(core, target):
                    key = (core, tag)
                    out[key] = out.get(key, 0) + cb * c
    return WClass._raw(f, out)


def _untagged(x: WClass, op: str) -> ChowClass:
    if any(extra is not Extra.NONE for _, extra in x.terms):
        raise TagError(f"{op} needs a class without Euler or exterior factors; use wmult")
    return ChowClass._raw(halved_frame(x.frame), {core: c for (core, _), c in x.terms.items()})


def oriented_pieri(x: WClass, b: int) -> WClass:
    """x times the doubled special class S_b, by the classical Pieri rule on cores."""
    return omega(pieri_row(_untagged(x, "oriented_pieri"), b), x.frame)


def oriented_giambelli(core, f: Frame, extra: Extra = Extra.NONE) -> WClass:
    """Evaluate det(S_{a_i + j - i}) with wmult, times the bare extra factor.

    Summands whose cores no longer fit next to the extra factor vanish, so the
    result is the single basis class (core, extra).
    """
    core = partition(core)
    h = halved_frame(f)
    check_fits(core, h)
    specials = {}

    def special(j: int) -> WClass:
        if j not in specials:
            specials[j] = (WClass.unit(f) if j == 0 else
                           omega(ChowClass._raw(h, {(j,): 1}), f) if j <= h.w else WClass.zero(f))
        return specials[j]

    r = len(core)
    out = WClass.zero(f)
    for perm in permutations(range(r)):
        term = WClass.unit(f) * _perm_sign(perm)
        for i in range(r):
            j = core[i] + perm[i] - i
            if j < 0:
                term = WClass.zero(f)
                break
            term = wmult(term, special(j))
        out = out + term
    if extra is not Extra.NONE:
        out = wmult(out, unit_class(extra, f))
    return out


def top_decomposition(f: Frame) -> EvenDecomposition:
    return decompose_even(f.rectangle, f)


def top_twist(f: Frame) -> int:
    """Twist of the point class; 0 exactly when n is even."""
    return top_decomposition(f).extra.twist


def wdegree(x: WClass, tw: Optional[int] = None) -> int:
    """The integer m with W-valued degree m<1> of a top-degree class.

    ``tw`` is the twist of x when x alone does not reveal it (x = 0).
    """
    f = x.frame
    top = top_decomposition(f)
    for key in x.terms:
        if area(combine_even(EvenDecomposition(*key), f)) != f.dim:
            raise DegreeError(f"wdegree needs a class of codimension {f.dim}")
    if tw is not None and tw != top.extra.twist:
        raise TwistError(
            f"the top W-cohomology group of {f} carries twist {top.extra.twist}, not {tw}")
    return x.terms.get(tuple(top), 0)
