"""Windowed integer sets on a dense bit-per-element representation.

An IntSet is an immutable set of integers inside a closed window [lo, hi].
Bit i of ``bits`` is element ``lo + i``, so shifts, intersections and unions
are single big-int operations and difference/sum sets are word-parallel OR
accumulations of shifted copies.  Operations never silently clip members:
every result window is the exact window implied by the operation, and
explicit restriction is spelled ``restrict``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import InputError

__all__ = [
    "Window",
    "IntSet",
    "make_set",
    "full_set",
    "empty_set",
    "shift_set",
    "difference_set",
    "sumset",
    "delta_set",
    "dilate",
    "quotient",
    "intersect",
    "union",
    "complement_in",
    "restrict",
    "read_set_file",
    "write_set_file",
]


@dataclass(frozen=True, order=True)
class Window:
    """Closed integer interval [lo, hi], never empty."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise InputError(f"empty window [{self.lo}, {self.hi}]")

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def shift(self, t: int) -> "Window":
        return Window(self.lo + t, self.hi + t)

    def intersect(self, other: "Window") -> "Window":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise InputError(f"windows {self} and {other} do not overlap")
        return Window(lo, hi)

    def overlaps(self, other: "Window") -> bool:
        return max(self.lo, other.lo) <= min(self.hi, other.hi)

    def hull(self, other: "Window") -> "Window":
        return Window(min(self.lo, other.lo), max(self.hi, other.hi))

    def __repr__(self) -> str:
        return f"Window({self.lo}, {self.hi})"


def _mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class IntSet:
    """Integers inside ``window``; bit i of ``bits`` is element window.lo + i.

    ``count`` is the cached population count; construction re-counts, so the
    cache can never drift from the bits.
    """

    window: Window
    bits: int
    count: int = -1

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.window.length:
            raise InputError("bits outside window")
        object.__setattr__(self, "count", self.bits.bit_count())

    # -- queries ------------------------------------------------------------

    def __contains__(self, x: int) -> bool:
        return x in self.window and (self.bits >> (x - self.window.lo)) & 1 == 1

    def __len__(self) -> int:
        return self.count

    def __bool__(self) -> bool:
        return self.count > 0

    def members(self) -> Iterator[int]:
        """Members in increasing order."""
        bits, lo = self.bits, self.window.lo
        while bits:
            low = bits & -bits
            yield lo + low.bit_length() - 1
            bits ^= low

    def __iter__(self) -> Iterator[int]:
        return self.members()

    def min(self) -> int:
        if not self.count:
            raise InputError("empty set has no min")
        return self.window.lo + (self.bits & -self.bits).bit_length() - 1

    def max(self) -> int:
        if not self.count:
            raise InputError("empty set has no max")
        return self.window.lo + self.bits.bit_length() - 1

    def density(self):
        from fractions import Fraction

        return Fraction(self.count, self.window.length)

    # -- basic transforms ---------------------------------------------------

    def shift(self, t: int) -> "IntSet":
        return IntSet(self.window.shift(t), self.bits)

    def __repr__(self) -> str:
        return f"IntSet({self.window!r}, count={self.count})"


def make_set(members: Iterable[int], window: Window) -> IntSet:
    """Build a set from members; any member outside the window is an error."""
    bits = 0
    for x in members:
        if x not in window:
            raise InputError(f"member {x} outside window {window}")
        bits |= 1 << (x - window.lo)
    return IntSet(window, bits)


def full_set(window: Window) -> IntSet:
    return IntSet(window, _mask(window.length))


def empty_set(window: Window) -> IntSet:
    return IntSet(window, 0)


def shift_set(a: IntSet, t: int) -> IntSet:
    return a.shift(t)


def _slice_onto(a: IntSet, w: Window) -> int:
    """Bits of a's members that fall inside w, in w's coordinates."""
    d = w.lo - a.window.lo
    bits = a.bits >> d if d >= 0 else a.bits << -d
    return bits & _mask(w.length)


def restrict(a: IntSet, w: Window) -> IntSet:
    """A ∩ w materialized on window w (explicit, documented clipping)."""
    return IntSet(w, _slice_onto(a, w))


def intersect(a: IntSet, b: IntSet) -> IntSet:
    """A ∩ B on the window intersection (windows must overlap)."""
    w = a.window.intersect(b.window)
    return IntSet(w, _slice_onto(a, w) & _slice_onto(b, w))


def union(a: IntSet, b: IntSet) -> IntSet:
    """A ∪ B on the window hull."""
    w = a.window.hull(b.window)
    return IntSet(w, (a.bits << (a.window.lo - w.lo)) | (b.bits << (b.window.lo - w.lo)))


def complement_in(a: IntSet, w: Window) -> IntSet:
    """w \\ A on window w; members of A outside w are ignored."""
    return IntSet(w, _slice_onto(a, w) ^ _mask(w.length))


def difference_set(a: IntSet, b: IntSet) -> IntSet:
    """{x - y : x in A, y in B} on window [A.lo - B.hi, A.hi - B.lo].

    Accumulates shifted copies of A, one OR per member of B.  Empty inputs give
    the empty set on the computed window.
    """
    w = Window(a.window.lo - b.window.hi, a.window.hi - b.window.lo)
    acc = 0
    blen = b.window.length
    bits = b.bits
    while bits:
        low = bits & -bits
        j = low.bit_length() - 1  # member b.lo + j; x - (b.lo+j) lands at offset i + (blen-1-j)
        acc |= a.bits << (blen - 1 - j)
        bits ^= low
    return IntSet(w, acc)


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """{x + y : x in A, y in B} on window [A.lo + B.lo, A.hi + B.hi]."""
    w = Window(a.window.lo + b.window.lo, a.window.hi + b.window.hi)
    acc = 0
    bits = b.bits
    while bits:
        low = bits & -bits
        acc |= a.bits << (low.bit_length() - 1)
        bits ^= low
    return IntSet(w, acc)


def delta_set(a: IntSet) -> IntSet:
    """Difference set A - A (always symmetric, contains 0 iff A nonempty)."""
    return difference_set(a, a)


def dilate(b: IntSet, h: int) -> IntSet:
    """h·B = {h*x : x in B}; h must be nonzero."""
    if h == 0:
        raise InputError("dilate requires h != 0")
    if h > 0:
        w = Window(b.window.lo * h, b.window.hi * h)
    else:
        w = Window(b.window.hi * h, b.window.lo * h)
    bits = 0
    for x in b.members():
        bits |= 1 << (x * h - w.lo)
    return IntSet(w, bits)


def quotient(b: IntSet, h: int) -> IntSet:
    """B/h = {x : h*x in B} on the scaled window.

    h = 0 is the degenerate fibre: every integer satisfies 0*x in B exactly
    when 0 is a member, so the result is the full (or empty) set on B's own
    window.  For h != 0 a scaled window with no integer points collapses to a
    single-point empty result.
    """
    if h == 0:
        return full_set(b.window) if 0 in b else empty_set(b.window)
    lo, hi = b.window.lo, b.window.hi
    if h > 0:
        qlo, qhi = -((-lo) // h), hi // h
    else:
        qlo, qhi = -((-hi) // h), lo // h  # order flips under negative division
    if qlo > qhi:
        return empty_set(Window(qlo, qlo))
    bits = 0
    for x in range(qlo, qhi + 1):
        if h * x in b:
            bits |= 1 << (x - qlo)
    return IntSet(Window(qlo, qhi), bits)


# -- file formats -----------------------------------------------------------
#
# "list": one decimal integer per line; window inferred as [min, max] unless
#         overridden by the caller.
# "bits": first line "lo=<integer>", second line a string of '0'/'1' where
#         character i is membership of lo + i.  Lossless (keeps the window).


def read_set_file(path: str | Path, window: Window | None = None) -> IntSet:
    """Parse a set file, autodetecting the format by its first line."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read set file {path}: {e}") from e
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError(f"{path}: empty set file needs an explicit window")
    if lines[0].startswith("lo="):
        try:
            lo = int(lines[0][3:])
        except ValueError as e:
            raise InputError(f"{path}: bad bits header {lines[0]!r}") from e
        if len(lines) != 2 or set(lines[1]) - {"0", "1"}:
            raise InputError(f"{path}: bits format needs one '0'/'1' line")
        row = lines[1]
        w = Window(lo, lo + len(row) - 1)
        bits = int(row[::-1], 2) if row else 0
        s = IntSet(w, bits)
        if window is not None:
            if window.lo > w.lo or window.hi < w.hi:
                raise InputError(f"{path}: override window {window} smaller than stored {w}")
            return restrict(s, window) if window != w else s
        return s
    try:
        members = [int(ln) for ln in lines]
    except ValueError as e:
        raise InputError(f"{path}: not a set file") from e
    if window is None:
        window = Window(min(members), max(members))
    return make_set(members, window)


def write_set_file(a: IntSet, path: str | Path, fmt: str = "bits") -> None:
    if fmt == "bits":
        row = "".join("1" if (a.bits >> i) & 1 else "0" for i in range(a.window.length))
        payload = f"lo={a.window.lo}\n{row}\n"
    elif fmt == "list":
        payload = "".join(f"{x}\n" for x in a.members())
    else:
        raise InputError(f"unknown set file format {fmt!r}")
    try:
        Path(path).write_text(payload)
    except OSError as e:
        raise InputError(f"cannot write set file {path}: {e}") from e
