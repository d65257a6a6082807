"""The integral Chow ring of Gr(k, n) in the Schubert basis.

Products are computed in the quotient ring: every Pieri step discards diagrams
that leave the frame.  Schur classes with a row longer than the frame width lie
in the ideal defining the Chow ring, so the truncation is exact.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .errors import DegreeError, FrameError, FrameMismatchError
from .young import (
    Frame, Partition, area, check_fits, complement, conjugate, format_partition, pad,
    partition,
)

Terms = Dict[Partition, int]


class ChowClass:
    """Finite integer combination of Schubert classes sigma_p for p in the frame."""

    __slots__ = ("frame", "_terms")

    def __init__(self, frame: Frame, terms: Optional[Mapping] = None):
        self.frame = frame
        clean: Terms = {}
        for p, c in (terms or {}).items():
            p = partition(p)
            check_fits(p, frame)
            c = int(c)
            if c:
                clean[p] = clean.get(p, 0) + c
                if not clean[p]:
                    del clean[p]
        self._terms = clean

    @classmethod
    def schubert(cls, p, frame: Frame, coeff: int = 1) -> "ChowClass":
        return cls(frame, {partition(p): coeff})

    @classmethod
    def unit(cls, frame: Frame) -> "ChowClass":
        return cls(frame, {(): 1})

    @classmethod
    def zero(cls, frame: Frame) -> "ChowClass":
        return cls(frame)

    @classmethod
    def _raw(cls, frame: Frame, terms: Terms) -> "ChowClass":
        obj = cls.__new__(cls)
        obj.frame = frame
        obj._terms = {p: c for p, c in terms.items() if c}
        return obj

    @property
    def terms(self) -> Mapping[Partition, int]:
        return MappingProxyType(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items(), key=_term_order))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, p) -> int:
        return self._terms.get(partition(p), 0)

    def degrees(self) -> set:
        return {area(p) for p in self._terms}

    def _check(self, other: "ChowClass") -> None:
        if not isinstance(other, ChowClass):
            raise TypeError(f"cannot combine ChowClass with {type(other).__name__}")
        if other.frame != self.frame:
            raise FrameMismatchError(f"frames {self.frame} and {other.frame} differ")

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        out = dict(self._terms)
        for p, c in other._terms.items():
            out[p] = out.get(p, 0) + c
        return ChowClass._raw(self.frame, out)

    def __neg__(self) -> "ChowClass":
        return ChowClass._raw(self.frame, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass._raw(self.frame, {p: c * other for p, c in self._terms.items()})
        return mult(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "ChowClass":
        out = ChowClass.unit(self.frame)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.frame == other.frame and self._terms == other._terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"ChowClass({self.frame}, {format_terms(self._terms)})"


def _term_order(item):
    p = item[0]
    return (area(p), tuple(-x for x in p))


def format_terms(terms: Mapping[Partition, int]) -> str:
    if not terms:
        return "0"
    parts = []
    for p, c in sorted(terms.items(), key=_term_order):
        label = f"s({format_partition(p)})"
        parts.append(label if c == 1 else f"{c}*{label}")
    return " + ".join(parts)


@lru_cache(maxsize=None)
def row_strips(a: Partition, b: int, k: int, w: int) -> Tuple[Partition, ...]:
    """Diagrams c in the k x w frame with c/a a horizontal strip of b boxes."""
    if b < 0:
        return ()
    rows = pad(a, k)
    out = []

    def rec(i: int, left: int, acc: Tuple[int, ...]) -> None:
        if i == k:
            if left == 0:
                out.append(partition(acc))
            return
        cap = w if i == 0 else rows[i - 1]
        top = min(cap - rows[i], left)
        for add in range(top, -1, -1):
            rec(i + 1, left - add, acc + (rows[i] + add,))

    rec(0, b, ())
    return tuple(out)


@lru_cache(maxsize=None)
def column_strips(a: Partition, b: int, k: int, w: int) -> Tuple[Partition, ...]:
    """Diagrams c in the k x w frame with c/a a vertical strip of b boxes."""
    if b < 0:
        return ()
    rows = pad(a, k)
    out = []

    def rec(i: int, left: int, acc: Tuple[int, ...]) -> None:
        if left > k - i:
            return
        if i == k:
            out.append(partition(acc))
            return
        rec(i + 1, left, acc + (rows[i],))
        if left and rows[i] + 1 <= w and (i == 0 or acc[i - 1] >= rows[i] + 1):
            rec(i + 1, left - 1, acc + (rows[i] + 1,))

    rec(0, b, ())
    return tuple(out)


def _pieri_terms(terms: Mapping[Partition, int], b: int, frame: Frame, column: bool) -> Terms:
    if b == 0:
        return dict(terms)
    strips = column_strips if column else row_strips
    out: Terms = {}
    k, w = frame.k, frame.w
    for a, c in terms.items():
        for q in strips(a, b, k, w):
            out[q] = out.get(q, 0) + c
    return {p: c for p, c in out.items() if c}


def pieri_row(x: ChowClass, b: int) -> ChowClass:
    """x times the special class sigma_b (one row of b boxes)."""
    return ChowClass._raw(x.frame, _pieri_terms(x._terms, b, x.frame, column=False))


def pieri_col(x: ChowClass, b: int) -> ChowClass:
    """x times sigma_{1^b} (one column of b boxes)."""
    return ChowClass._raw(x.frame, _pieri_terms(x._terms, b, x.frame, column=True))


def _perm_sign(perm: Tuple[int, ...]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def giambelli(p, f: Frame) -> ChowClass:
    """Evaluate det(sigma_{a_i + j - i}) as a signed sum of products of row classes."""
    p = partition(p)
    check_fits(p, f)
    r = len(p)
    out: Terms = {}
    for perm in permutations(range(r)):
        term: Terms = {(): _perm_sign(perm)}
        for i in range(r):
            b = p[i] + perm[i] - i
            if b < 0:
                term = {}
                break
            term = _pieri_terms(term, b, f, column=False)
            if not term:
                break
        for q, c in term.items():
            out[q] = out.get(q, 0) + c
    return ChowClass._raw(f, out)


def _times_schur(terms: Mapping[Partition, int], lam: Partition, frame: Frame) -> Terms:
    """terms * sigma_lam via a memoized Laplace expansion of the Giambelli determinant.

    Uses rows sigma_j or columns sigma_{1^j} (dual determinant on the conjugate),
    whichever gives the smaller determinant.  Expanding along the first row, the
    minors only depend on the set of remaining columns, so there are 2^r of them.
    """
    column = len(lam) > (lam[0] if lam else 0)
    shape = conjugate(lam) if column else lam
    r = len(shape)
    if r == 0:
        return dict(terms)
    cache: Dict[int, Terms] = {0: dict(terms)}

    def minor(cols: int, row: int) -> Terms:
        # terms * det(entries of rows row..r-1 restricted to column set `cols`)
        if cols in cache:
            return cache[cols]
        out: Terms = {}
        pos = 0
        for j in range(r):
            if not cols >> j & 1:
                continue
            b = shape[row] + j - row
            sign = -1 if pos % 2 else 1
            pos += 1
            if b < 0 or (b > frame.k if column else b > frame.w):
                continue
            sub = minor(cols & ~(1 << j), row + 1)
            if not sub:
                continue
            for q, c in _pieri_terms(sub, b, frame, column).items():
                out[q] = out.get(q, 0) + sign * c
        out = {q: c for q, c in out.items() if c}
        cache[cols] = out
        return out

    return minor((1 << r) - 1, 0)


def mult(x: ChowClass, y: ChowClass) -> ChowClass:
    """Product in CH(Gr(k, n)); the factor with fewer terms is expanded by Giambelli."""
    if not isinstance(y, ChowClass) or not isinstance(x, ChowClass):
        raise TypeError("mult expects two ChowClass values")
    if x.frame != y.frame:
        raise FrameMismatchError(f"frames {x.frame} and {y.frame} differ")
    if len(y) > len(x):
        x, y = y, x
    out: Terms = {}
    for lam, c in y._terms.items():
        for q, d in _times_schur(x._terms, lam, x.frame).items():
            out[q] = out.get(q, 0) + c * d
    return ChowClass._raw(x.frame, out)


def product(classes: Iterable[ChowClass], frame: Frame) -> ChowClass:
    out = ChowClass.unit(frame)
    for x in classes:
        out = mult(out, x)
    return out


def degree(x: ChowClass) -> int:
    """Coefficient of the point class (the full rectangle) of a top-degree class."""
    top = x.frame.dim
    stray = [p for p in x._terms if area(p) != top]
    if stray:
        raise DegreeError(
            f"degree needs a class of codimension {top}; found terms of area "
            f"{sorted({area(p) for p in stray})}")
    return x._terms.get(x.frame.rectangle, 0)


def pairing(x: ChowClass, y: ChowClass) -> int:
    """deg(x * y) by Poincare duality, without forming the product."""
    if x.frame != y.frame:
        raise FrameMismatchError(f"frames {x.frame} and {y.frame} differ")
    f = x.frame
    total = 0
    for p, c in x._terms.items():
        total += c * y._terms.get(complement(p, f), 0)
    return total


def lr_coeff(a, b, c, f: Frame) -> int:
    """Coefficient of sigma_c in sigma_a * sigma_b."""
    a, b, c = partition(a), partition(b), partition(c)
    for p in (a, b, c):
        check_fits(p, f)
    if area(a) + area(b) != area(c):
        return 0
    return mult(ChowClass.schubert(a, f), ChowClass.schubert(b, f)).coefficient(c)


def special_row(j: int, f: Frame) -> ChowClass:
    """sigma_j, the j-th Chern class of the quotient bundle."""
    if j < 0 or j > f.w:
        return ChowClass.zero(f)
    return ChowClass.schubert((j,), f)


def special_column(j: int, f: Frame) -> ChowClass:
    """sigma_{1^j}, the j-th Chern class of the tautological subbundle (up to sign)."""
    if j < 0 or j > f.k:
        return ChowClass.zero(f)
    if j > 0 and f.w == 0:
        return ChowClass.zero(f)
    return ChowClass.schubert((1,) * j, f)
