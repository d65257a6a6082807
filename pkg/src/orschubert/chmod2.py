"""The mod-2 Chow ring Ch(Gr(k, n)) and the twisted Steenrod squares on it.

A mod-2 class is the set of Schubert cells with coefficient 1.  ``tw`` is the
twist bit: 0 for the trivial line bundle, 1 for the determinant bundle.
"""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import FrameMismatchError
from .schur import ChowClass, _times_schur, column_strips
from .young import (
    Color, Frame, Partition, addable_boxes, area, boundary_profile, check_fits,
    checkerboard_color, conjugate, format_partition, partition, partitions_in_frame,
)


class Ch2Class:
    """Element of Ch(Gr(k, n)) as a set of Schubert diagrams."""

    __slots__ = ("frame", "terms")

    def __init__(self, frame: Frame, terms: Iterable = ()):
        self.frame = frame
        acc = set()
        for p in terms:
            p = partition(p)
            check_fits(p, frame)
            acc ^= {p}
        self.terms = frozenset(acc)

    @classmethod
    def _raw(cls, frame: Frame, terms) -> "Ch2Class":
        obj = cls.__new__(cls)
        obj.frame = frame
        obj.terms = frozenset(terms)
        return obj

    @classmethod
    def schubert(cls, p, frame: Frame) -> "Ch2Class":
        return cls(frame, [p])

    @classmethod
    def unit(cls, frame: Frame) -> "Ch2Class":
        return cls._raw(frame, [()])

    @classmethod
    def zero(cls, frame: Frame) -> "Ch2Class":
        return cls._raw(frame, ())

    def __iter__(self):
        return iter(sorted(self.terms, key=lambda p: (area(p), tuple(-x for x in p))))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __contains__(self, p) -> bool:
        return partition(p) in self.terms

    def degrees(self) -> set:
        return {area(p) for p in self.terms}

    def homogeneous_part(self, j: int) -> "Ch2Class":
        return Ch2Class._raw(self.frame, (p for p in self.terms if area(p) == j))

    def _check(self, other) -> None:
        if not isinstance(other, Ch2Class):
            raise TypeError(f"cannot combine Ch2Class with {type(other).__name__}")
        if other.frame != self.frame:
            raise FrameMismatchError(f"frames {self.frame} and {other.frame} differ")

    def __add__(self, other: "Ch2Class") -> "Ch2Class":
        self._check(other)
        return Ch2Class._raw(self.frame, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return self if other % 2 else Ch2Class.zero(self.frame)
        return mult2(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "Ch2Class":
        out = Ch2Class.unit(self.frame)
        for _ in range(e):
            out = mult2(out, self)
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Ch2Class):
            return NotImplemented
        return self.frame == other.frame and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.frame, self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return f"Ch2Class({self.frame}, 0)"
        body = " + ".join(f"s({format_partition(p)})" for p in self)
        return f"Ch2Class({self.frame}, {body})"

    def to_chow(self) -> ChowClass:
        """The lift with all coefficients 1."""
        return ChowClass._raw(self.frame, {p: 1 for p in self.terms})


def reduce(x: ChowClass) -> Ch2Class:
    return Ch2Class._raw(x.frame, (p for p, c in x.terms.items() if c % 2))


def _mod2(terms: Dict[Partition, int]) -> set:
    return {p for p, c in terms.items() if c % 2}


def mult2(x: Ch2Class, y: Ch2Class) -> Ch2Class:
    x._check(y)
    if len(y) > len(x):
        x, y = y, x
    base = {p: 1 for p in x.terms}
    out = set()
    for lam in y.terms:
        out ^= _mod2(_times_schur(base, lam, x.frame))
    return Ch2Class._raw(x.frame, out)


def cbar(j: int, f: Frame) -> Ch2Class:
    """Reduction of the j-th Chern class of the tautological subbundle, sigma_{1^j}."""
    if j < 0 or j > f.k or (j > 0 and f.w == 0):
        return Ch2Class.zero(f)
    return Ch2Class._raw(f, [(1,) * j])


def cbar_perp(j: int, f: Frame) -> Ch2Class:
    """Reduction of the j-th Chern class of the quotient bundle, sigma_j."""
    if j < 0 or j > f.w or (j > 0 and f.k == 0):
        return Ch2Class.zero(f)
    return Ch2Class._raw(f, [(j,) if j else ()])


_TARGET = {0: Color.WHITE, 1: Color.BLACK}


def _check_twist(tw: int) -> int:
    if tw not in (0, 1):
        raise ValueError(f"twist must be 0 or 1, got {tw!r}")
    return tw


def sq2_diagram(p: Partition, f: Frame, tw: int) -> set:
    """Checkerboard rule on one Schubert cell: add a box of the twist's color."""
    want = _TARGET[_check_twist(tw)]
    rows = list(p) + [0] * (f.k - len(p))
    out = set()
    for r, c in addable_boxes(p, f):
        if checkerboard_color(r, c) is want:
            rows[r - 1] += 1
            out.add(partition(rows))
            rows[r - 1] -= 1
    return out


def sq2(x: Ch2Class, tw: int) -> Ch2Class:
    """Sq^2 twisted by O (tw=0) or det (tw=1), extended linearly over degrees."""
    out = set()
    for p in x.terms:
        out ^= sq2_diagram(p, x.frame, tw)
    return Ch2Class._raw(x.frame, out)


def _times_cbar(terms: set, j: int, f: Frame) -> set:
    if j == 0:
        return set(terms)
    if j < 0 or j > f.k:
        return set()
    out = set()
    for a in terms:
        for q in column_strips(a, j, f.k, f.w):
            out ^= {q}
    return out


def _sq2_chern_word(word: Tuple[int, ...], f: Frame, tw: int) -> set:
    """Sq^2 of the product c_{m1} c_{m2} ... via the Wu formula and the Cartan rule."""
    out = set()
    for i, m in enumerate(word):
        rest = word[:i] + word[i + 1:]
        # Sq^2_O(c_m) = c_1 c_m + (m-1) c_{m+1}
        images = [(1, m)]
        if (m - 1) % 2:
            images.append((m + 1,))
        for img in images:
            acc = {()}
            for t in rest + img:
                acc = _times_cbar(acc, t, f)
                if not acc:
                    break
            out ^= acc
    if tw:
        acc = {()}
        for t in word + (1,):
            acc = _times_cbar(acc, t, f)
        out ^= acc
    return out


def sq2_wu(x: Ch2Class, tw: int) -> Ch2Class:
    """Reference Sq^2 via the dual Giambelli determinant in the classes c_i = sigma_{1^i}.

    Sq^2_O acts as a derivation with Sq^2_O(c_j) = c_1 c_j + (j-1) c_{j+1}, and
    Sq^2_det(y) = c_1 y + Sq^2_O(y).
    """
    _check_twist(tw)
    f = x.frame
    out = set()
    for p in x.terms:
        conj = conjugate(p)
        r = len(conj)
        for perm in permutations(range(r)):
            word = tuple(conj[i] + perm[i] - i for i in range(r))
            if any(m < 0 for m in word):
                continue
            out ^= _sq2_chern_word(tuple(m for m in word if m), f, tw)
    return Ch2Class._raw(f, out)


def liftable(x: Ch2Class, tw: int) -> bool:
    """Whether x lies in the kernel of Sq^2_tw, i.e. comes from the twisted Chow-Witt ring."""
    return not sq2(x, tw)


def sq2_vanishes_by_parity(p, f: Frame, tw: int) -> bool:
    """Decide Sq^2_tw(sigma_p) = 0 from the boundary profile alone.

    Corner conditions compare consecutive inner corners; the last comparison
    would need e_{p+1}, which does not exist, so the range stops at p-2.  The
    first-row comparison d_1 + e_2 - e_1 is vacuous for a single segment.
    """
    _check_twist(tw)
    p = partition(p)
    d, e = boundary_profile(p, f)
    count, w = len(d), f.w
    if any((d[i + 1] - d[i] + e[i + 2] - e[i + 1]) % 2 for i in range(count - 2)):
        return False
    hook_even = True if count == 1 else (d[0] + e[1] - e[0]) % 2 == 0
    hook_odd = True if count == 1 else (d[0] + e[1] - e[0]) % 2 == 1
    if tw == 0:
        return ((w - e[0]) % 2 == 0 and hook_even) or (e[0] == 0 and w % 2 == 1 and hook_odd)
    return ((w - e[0]) % 2 == 1 and hook_even) or (e[0] == 0 and w % 2 == 0 and hook_odd)


def _basis(f: Frame, j: int) -> List[Partition]:
    return list(partitions_in_frame(f, j)) if j >= 0 else []


def sq2_image_contains(x: Ch2Class, tw: int) -> Tuple[bool, Optional[Ch2Class]]:
    """Solve x = Sq^2_tw(y) degree by degree over GF(2).

    Returns ``(True, y)`` with a witness when a preimage exists, else ``(False, None)``.
    """
    _check_twist(tw)
    f = x.frame
    witness = set()
    for j in sorted(x.degrees()):
        found = _solve_degree(x.homogeneous_part(j), j - 1, tw)
        if found is None:
            return False, None
        witness |= found
    return True, Ch2Class._raw(f, witness)


def _solve_degree(target: Ch2Class, j: int, tw: int) -> Optional[set]:
    f = target.frame
    source = _basis(f, j)
    image_basis = _basis(f, j + 1)
    index = {p: i for i, p in enumerate(image_basis)}

    def vec(cells) -> int:
        v = 0
        for q in cells:
            v ^= 1 << index[q]
        return v

    # Row-reduce the images, tracking which source cells make up each pivot row.
    pivots: Dict[int, Tuple[int, int]] = {}
    for s, p in enumerate(source):
        v, combo = vec(sq2_diagram(p, f, tw)), 1 << s
        while v:
            lead = v.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (v, combo)
                break
            pv, pc = pivots[lead]
            v, combo = v ^ pv, combo ^ pc
    v, combo = vec(target.terms), 0
    while v:
        lead = v.bit_length() - 1
        if lead not in pivots:
            return None
        pv, pc = pivots[lead]
        v, combo = v ^ pv, combo ^ pc
    return {source[s] for s in range(len(source)) if combo >> s & 1}
