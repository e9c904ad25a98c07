"""Finite embeddability: where do shifted copies of a pattern live inside a set.

A Pattern is a finite nonempty set of integers (kept sorted).  The shift set
of a pattern F inside Y is {t : t + F ⊆ Y}, computed word-parallel as the
intersection of the shifted copies Y - e over e in F.  The search range must
satisfy srange + F ⊆ Y's window so that absence is meaningful, never an
artifact of clipping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .density import DensityEstimate, upper_banach_est
from .errors import InputError
from .intset import IntSet, Window, empty_set, intersect, restrict

__all__ = [
    "Pattern",
    "EmbedWitness",
    "WindowEmbedReport",
    "shift_set_of",
    "embed_witness",
    "dense_embed_est",
    "window_embeddable",
    "find_ap",
    "ap_shift_density",
]


@dataclass(frozen=True)
class Pattern:
    """Finite nonempty integer configuration, elements strictly increasing."""

    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.elems:
            raise InputError("empty pattern")
        if any(a >= b for a, b in zip(self.elems, self.elems[1:])):
            raise InputError("pattern elements must be strictly increasing")

    @classmethod
    def of(cls, elems: Iterable[int]) -> "Pattern":
        return cls(tuple(sorted(set(elems))))

    @property
    def span(self) -> int:
        return self.elems[-1] - self.elems[0]

    def shift(self, t: int) -> "Pattern":
        return Pattern(tuple(e + t for e in self.elems))

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)


@dataclass(frozen=True)
class EmbedWitness:
    """A shift t with t + pattern ⊆ the target set."""

    t: int
    pattern: Pattern


def _check_srange(f: Pattern, y: IntSet, srange: Window) -> None:
    if srange.lo + f.elems[0] < y.window.lo or srange.hi + f.elems[-1] > y.window.hi:
        raise InputError(
            f"search range {srange} + pattern span exceeds target window {y.window}"
        )


def shift_set_of(f: Pattern, y: IntSet, srange: Window) -> IntSet:
    """{t in srange : t + F ⊆ Y} as an IntSet on srange."""
    _check_srange(f, y, srange)
    acc = None
    for e in f.elems:
        shifted = restrict(y.shift(-e), srange)  # t must satisfy t + e in Y
        acc = shifted if acc is None else intersect(acc, shifted)
    assert acc is not None
    return acc


def embed_witness(f: Pattern, y: IntSet, srange: Window) -> EmbedWitness | None:
    """Least shift in srange embedding F into Y, or None."""
    s = shift_set_of(f, y, srange)
    if not s:
        return None
    return EmbedWitness(s.min(), f)


def dense_embed_est(f: Pattern, y: IntSet, srange: Window, n: int) -> DensityEstimate:
    """Best length-n window density of the shift set of F inside Y."""
    return upper_banach_est(shift_set_of(f, y, srange), n)


@dataclass(frozen=True)
class WindowEmbedReport:
    ok: bool
    m: int
    checked: int
    failing_offset: int | None = None
    failing_pattern: Pattern | None = None


def window_embeddable(x: IntSet, y: IntSet, m: int, srange: Window) -> WindowEmbedReport:
    """Does every nonempty length-m trace of X embed into Y over srange?

    Traces are X ∩ [a, a+m) for every a with the trace window inside X's
    window, rebased to start at 0 (the shift absorbs the position).  Reports
    the first failing trace when not embeddable.
    """
    if not 1 <= m <= x.window.length:
        raise InputError(f"trace length {m} not in [1, {x.window.length}]")
    mask = (1 << m) - 1
    cache: dict[int, bool] = {}
    checked = 0
    for a in range(x.window.lo, x.window.hi - m + 2):
        chunk = (x.bits >> (a - x.window.lo)) & mask
        if chunk == 0:
            continue
        checked += 1
        hit = cache.get(chunk)
        if hit is None:
            pat = Pattern(tuple(i for i in range(m) if (chunk >> i) & 1))
            hit = embed_witness(pat, y, srange) is not None
            cache[chunk] = hit
        if not hit:
            pat = Pattern(tuple(i for i in range(m) if (chunk >> i) & 1))
            return WindowEmbedReport(False, m, checked, a, pat)
    return WindowEmbedReport(True, m, checked)


def find_ap(a: IntSet, k: int) -> tuple[int, int] | None:
    """Least (start, then difference) k-term arithmetic progression in A."""
    if k < 1:
        raise InputError("k must be >= 1")
    if not a:
        return None
    if k == 1:
        return (a.min(), 1)
    best: tuple[int, int] | None = None
    max_d = (a.window.length - 1) // (k - 1)
    for d in range(1, max_d + 1):
        hits = a.bits
        for j in range(1, k):
            hits &= a.bits >> (j * d)
            if not hits:
                break
        if hits:
            start = a.window.lo + (hits & -hits).bit_length() - 1
            if best is None or (start, d) < best:
                best = (start, d)
    return best


def ap_shift_density(y: IntSet, d: int, k: int, n: int) -> DensityEstimate:
    """Density of starting points of k-term APs with difference d inside Y."""
    if k < 1 or d == 0:
        raise InputError("need k >= 1 and d != 0")
    span = (k - 1) * d
    if d > 0:
        w = Window(y.window.lo, y.window.hi - span)
    else:
        w = Window(y.window.lo - span, y.window.hi)
    if w.length < 1:
        raise InputError("window too short for this progression")
    acc = None
    for j in range(k):
        shifted = restrict(y.shift(-j * d), w)
        acc = shifted if acc is None else intersect(acc, shifted)
    assert acc is not None
    return upper_banach_est(acc, n)
