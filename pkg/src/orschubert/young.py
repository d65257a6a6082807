"""Young diagrams in a k x (n-k) frame.

Partitions are plain tuples of positive integers in weakly decreasing order;
trailing zeros are stripped so that equal diagrams compare equal.  The frame
is passed alongside whenever the boundary of the diagram matters.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence, Tuple

from .errors import DecompositionError, FrameError, NotDoubledError, NotEvenError

Partition = Tuple[int, ...]


def partition(parts: Sequence[int] = ()) -> Partition:
    """Validate and normalize a sequence of parts into a partition."""
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts of {parts} are not weakly decreasing")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3,3,1,1"``; ``""``, ``"0"`` and ``"()"`` give the empty partition."""
    text = text.strip().strip("()[]").strip()
    if not text:
        return ()
    return partition(int(x) for x in text.split(","))


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "()"


def area(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def pad(p: Partition, k: int) -> Tuple[int, ...]:
    return tuple(p) + (0,) * (k - len(p))


@dataclass(frozen=True, order=True)
class Frame:
    """A k x w box; Young diagrams in it index the Schubert cells of Gr(k, k+w).

    Frames with zero rows or columns are allowed: they model a point and show up
    as halved frames of small Grassmannians.
    """

    k: int
    w: int

    def __post_init__(self):
        if self.k < 0 or self.w < 0:
            raise ValueError(f"frame dimensions must be nonnegative, got {self.k}x{self.w}")

    @property
    def n(self) -> int:
        return self.k + self.w

    @property
    def dim(self) -> int:
        return self.k * self.w

    @property
    def rectangle(self) -> Partition:
        return partition((self.w,) * self.k)

    def __str__(self) -> str:
        return f"{self.k}x{self.w}"

    @classmethod
    def grassmannian(cls, k: int, n: int) -> "Frame":
        if not 1 <= k < n:
            raise ValueError(f"Gr({k},{n}) needs 1 <= k < n")
        return cls(k, n - k)


_FRAME_KXW = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")
_FRAME_GR = re.compile(r"^\s*Gr\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


def parse_frame(text: str) -> Frame:
    """Parse ``"5x5"`` (rows x columns) or ``"Gr(5,10)"``."""
    m = _FRAME_KXW.match(text)
    if m:
        k, w = int(m.group(1)), int(m.group(2))
        if k < 1 or w < 1:
            raise ValueError(f"frame {text!r} needs at least one row and one column")
        return Frame(k, w)
    m = _FRAME_GR.match(text)
    if m:
        return Frame.grassmannian(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"cannot parse frame {text!r}; use KxW or Gr(k,n)")


def fits_in_frame(p: Partition, f: Frame) -> bool:
    return len(p) <= f.k and (not p or p[0] <= f.w)


def check_fits(p: Partition, f: Frame) -> None:
    if not fits_in_frame(p, f):
        raise FrameError(f"partition {format_partition(p)} does not fit the {f} frame")


def partitions_in_frame(f: Frame, size: Optional[int] = None) -> Iterator[Partition]:
    """All diagrams in the frame (of the given area), in reverse lexicographic order."""

    def rec(rows_left: int, cap: int, remaining: Optional[int]) -> Iterator[Tuple[int, ...]]:
        if rows_left == 0:
            if remaining is None or remaining == 0:
                yield ()
            return
        top = cap if remaining is None else min(cap, remaining)
        for x in range(top, -1, -1):
            if remaining is not None and x * rows_left < remaining:
                break
            for rest in rec(rows_left - 1, x, None if remaining is None else remaining - x):
                yield (x,) + rest

    for p in rec(f.k, f.w, size):
        yield partition(p)


class BoundaryProfile(NamedTuple):
    """Row-group ends ``d`` and column offsets ``e`` of a diagram's boundary."""

    d: Tuple[int, ...]
    e: Tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.d)


def boundary_profile(p: Partition, f: Frame) -> BoundaryProfile:
    """Group equal rows of the k-row padded diagram.

    ``d[i]`` is the index of the last row of group i and ``e[i]`` the number of
    empty columns to its right, ``w - Lambda[d[i]]``.
    """
    check_fits(p, f)
    if f.k == 0:
        raise FrameError("boundary profile needs a frame with at least one row")
    rows = pad(p, f.k)
    d, e = [], []
    for i, x in enumerate(rows):
        if i + 1 == f.k or rows[i + 1] != x:
            d.append(i + 1)
            e.append(f.w - x)
    return BoundaryProfile(tuple(d), tuple(e))


def is_even(p: Partition, f: Frame) -> bool:
    """All boundary segments strictly inside the frame have even length."""
    d, e = boundary_profile(p, f)
    count = len(d)
    dd = (0,) + d
    if any((d[i + 1] - d[i]) % 2 for i in range(count - 2)):
        return False
    if any((e[i + 1] - e[i]) % 2 for i in range(count - 1)):
        return False
    if 0 < e[0] < f.w and d[0] % 2:
        return False
    if 0 < e[-1] < f.w and (dd[count] - dd[count - 1]) % 2:
        return False
    return True


def _is_double(p: Partition) -> bool:
    if len(p) % 2:
        return False
    return all(p[i] == p[i + 1] and p[i] % 2 == 0 for i in range(0, len(p), 2))


def is_completely_even(p: Partition, f: Frame) -> bool:
    """Every boundary segment, including those on the frame, has even length.

    Segments along the top and left edges of the frame are not part of the
    diagram's outline, so this is exactly the condition that the diagram is
    the double of a partition.
    """
    check_fits(p, f)
    return _is_double(p)


def double(p: Partition) -> Partition:
    """Replace every box by a 2 x 2 block: (a1, a2, ...) -> (2a1, 2a1, 2a2, 2a2, ...)."""
    p = partition(p)
    return tuple(2 * x for x in p for _ in range(2))


def halve_completely_even(p: Partition) -> Partition:
    p = partition(p)
    if not _is_double(p):
        raise NotDoubledError(f"{format_partition(p)} is not a doubled partition")
    return tuple(p[i] // 2 for i in range(0, len(p), 2))


class Extra(enum.Enum):
    """The non-doubled factor of an even diagram."""

    NONE = "none"
    EK = "ek"
    EPERP = "eperp"
    R = "r"

    @property
    def twist(self) -> int:
        return 1 if self in (Extra.EK, Extra.EPERP) else 0


class EvenDecomposition(NamedTuple):
    core: Partition
    extra: Extra


def core_frame(f: Frame, extra: Extra) -> Frame:
    """Frame holding the halved core of an even diagram with the given extra factor."""
    if extra is Extra.NONE:
        return Frame(f.k // 2, f.w // 2)
    if extra is Extra.EK:
        return Frame(f.k // 2, max(f.w - 1, 0) // 2)
    if extra is Extra.EPERP:
        return Frame(max(f.k - 1, 0) // 2, f.w // 2)
    return Frame(max(f.k - 1, 0) // 2, max(f.w - 1, 0) // 2)


def extra_allowed(f: Frame, extra: Extra) -> bool:
    if extra is Extra.EK:
        return f.k % 2 == 0
    if extra is Extra.EPERP:
        return f.w % 2 == 0
    if extra is Extra.R:
        return f.k % 2 == 1 and f.w % 2 == 1
    return True


def _decompositions(p: Partition, f: Frame):
    rows = pad(p, f.k)
    found = []
    if _is_double(p):
        found.append(EvenDecomposition(halve_completely_even(p), Extra.NONE))
    if f.k % 2 == 0 and rows[-1] >= 1:
        rest = partition(x - 1 for x in rows)
        if _is_double(rest):
            found.append(EvenDecomposition(halve_completely_even(rest), Extra.EK))
    if f.w % 2 == 0 and rows[0] == f.w:
        rest = partition(rows[1:])
        if _is_double(rest):
            found.append(EvenDecomposition(halve_completely_even(rest), Extra.EPERP))
    if f.k % 2 == 1 and f.w % 2 == 1 and rows[0] == f.w and rows[-1] >= 1:
        rest = partition(x - 1 for x in rows[1:])
        if _is_double(rest):
            found.append(EvenDecomposition(halve_completely_even(rest), Extra.R))
    return found


def decompose_even(p: Partition, f: Frame) -> EvenDecomposition:
    """Split an even diagram into a doubled core and one extra factor."""
    if not is_even(p, f):
        raise NotEvenError(f"{format_partition(p)} is not even in the {f} frame")
    found = _decompositions(p, f)
    if len(found) != 1:
        raise DecompositionError(
            f"{format_partition(p)} in {f} decomposes {len(found)} ways: {found}")
    return found[0]


def combine_even(dec: EvenDecomposition, f: Frame) -> Partition:
    core, extra = partition(dec.core), dec.extra
    if not extra_allowed(f, extra):
        raise FrameError(f"extra factor {extra.name} does not exist in the {f} frame")
    check_fits(core, core_frame(f, extra))
    doubled = double(core)
    if extra is Extra.NONE:
        out = doubled
    elif extra is Extra.EK:
        out = tuple(x + 1 for x in pad(doubled, f.k))
    elif extra is Extra.EPERP:
        out = (f.w,) + doubled
    else:
        out = (f.w,) + tuple(x + 1 for x in pad(doubled, f.k - 1))
    out = partition(out)
    check_fits(out, f)
    return out


def twist(p: Partition, f: Frame) -> int:
    """Twist bit of an even diagram: 1 exactly for Euler-class multiples."""
    return decompose_even(p, f).extra.twist


def complement(p: Partition, f: Frame) -> Partition:
    """The 180-degree rotated complement of the diagram inside the frame."""
    check_fits(p, f)
    rows = pad(p, f.k)
    return partition(f.w - rows[f.k - 1 - i] for i in range(f.k))


class Color(enum.Enum):
    BLACK = "black"
    WHITE = "white"


def checkerboard_color(row: int, col: int) -> Color:
    """Color of box (row, col), 1-based, with the top-left box black."""
    if row < 1 or col < 1:
        raise ValueError("box coordinates are 1-based")
    return Color.BLACK if (row + col) % 2 == 0 else Color.WHITE


def addable_boxes(p: Partition, f: Frame) -> Iterator[Tuple[int, int]]:
    """1-based (row, col) positions where one box can be added inside the frame."""
    rows = pad(p, f.k)
    for r in range(f.k):
        col = rows[r] + 1
        if col > f.w:
            continue
        if r == 0 or rows[r - 1] >= col:
            yield r + 1, col


def even_diagrams(f: Frame) -> Iterator[Partition]:
    return (p for p in partitions_in_frame(f) if is_even(p, f))


def render(p: Partition, f: Optional[Frame] = None, checkerboard: bool = False) -> str:
    """ASCII picture: one line per row, ``#`` per box or ``B``/``W`` checkerboard fill.

    With a frame, empty cells are drawn as ``.`` so the frame is visible.
    """
    rows = pad(p, f.k) if f is not None else tuple(p)
    width = f.w if f is not None else (p[0] if p else 0)
    lines = []
    for r, x in enumerate(rows, start=1):
        if checkerboard:
            cells = "".join(
                "B" if checkerboard_color(r, c) is Color.BLACK else "W" for c in range(1, x + 1))
        else:
            cells = "#" * x
        if f is not None:
            cells += "." * (width - x)
        lines.append(cells)
    return "\n".join(lines) if lines else "(empty)"
