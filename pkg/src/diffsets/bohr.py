"""Bohr sets from rational frequency data, and piecewise witnesses.

Membership is decided exactly: for a rational frequency p/q the distance
from (p/q)(x - shift) to the nearest integer only depends on (x - shift)
mod q, so each frequency contributes a residue table computed by integer
cross-multiplication.  Frequencies are rationals by design; an irrational
frequency would need interval arithmetic for an exact nearest-integer
distance, and rational ones cover everything this workbench generates.

The frequency suggester is a heuristic and says so: it ranks reduced
fractions by float exponential-sum magnitude.  Nothing downstream trusts the
ranking; any witness built from it is re-verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np

from .density import bit_vector, longest_run
from .errors import InputError, VerificationError
from .intset import IntSet, Window, restrict

__all__ = [
    "BohrSpec",
    "bohr_generate",
    "BohrContainment",
    "bohr_contained",
    "suggest_freqs",
    "PiecewiseBohrWitness",
    "piecewise_bohr_search",
]


@dataclass(frozen=True)
class BohrSpec:
    """Shifted rational Bohr set data: {x : all ||freq*(x-shift)|| < eps}."""

    freqs: tuple[Fraction, ...]
    eps: Fraction
    shift: int = 0

    def __post_init__(self) -> None:
        if not self.freqs:
            raise InputError("need at least one frequency")
        for r in self.freqs:
            if not 0 <= r < 1:
                raise InputError(f"frequency {r} outside [0, 1)")
        if self.eps <= 0:
            raise InputError("eps must be positive")
        # anything above 1/2 makes every x a member; accepted, but trivial

    @classmethod
    def of(cls, freqs, eps, shift: int = 0) -> "BohrSpec":
        return cls(tuple(Fraction(r) for r in freqs), Fraction(eps), shift)


def _residue_table(r: Fraction, eps: Fraction) -> np.ndarray:
    """allowed[m] iff ||r * m|| < eps, for m in [0, q)."""
    q = r.denominator
    p = r.numerator
    allowed = np.zeros(q, dtype=bool)
    for m in range(q):
        v = (p * m) % q
        # distance to nearest integer is min(v, q-v)/q; compare to eps exactly
        allowed[m] = min(v, q - v) * eps.denominator < eps.numerator * q
    return allowed


def bohr_generate(spec: BohrSpec, window: Window) -> IntSet:
    """Materialize the Bohr set on a window, membership exact per element."""
    xs = np.arange(window.lo, window.hi + 1, dtype=np.int64) - spec.shift
    keep = np.ones(window.length, dtype=bool)
    for r in spec.freqs:
        table = _residue_table(r, spec.eps)
        keep &= table[xs % r.denominator]
    bits = int.from_bytes(np.packbits(keep, bitorder="little").tobytes(), "little")
    return IntSet(window, bits)


@dataclass(frozen=True)
class BohrContainment:
    ok: bool
    checked: int
    violation_count: int
    violations: list[int]


def bohr_contained(s: IntSet, a: IntSet, interval: Window) -> BohrContainment:
    """Is S ∩ interval ⊆ A?  Lists the first few counterexamples if not."""
    for w, name in ((s.window, "candidate"), (a.window, "target")):
        if interval.lo < w.lo or interval.hi > w.hi:
            raise InputError(f"interval {interval} outside the {name} window {w}")
    s_bits = restrict(s, interval)
    bad = s_bits.bits & ~restrict(a, interval).bits
    count = bad.bit_count()
    listed: list[int] = []
    while bad and len(listed) < 10:
        low = bad & -bad
        listed.append(interval.lo + low.bit_length() - 1)
        bad ^= low
    return BohrContainment(count == 0, s_bits.count, count, listed)


def suggest_freqs(d: IntSet, k_max: int, q_max: int = 32) -> list[Fraction]:
    """Reduced fractions p/q (q <= q_max) ranked by exponential-sum magnitude.

    Only p <= q/2 is enumerated: p/q and (q-p)/q define the same Bohr set
    (the distance to the nearest integer ignores sign), and keeping both
    would leave their relative order to floating-point noise in conjugate
    sums.  Magnitudes are floats computed from residue counts mod q; ties
    break by (q, p).  Use the output as candidates only; anything built from
    them must be verified exactly downstream.
    """
    if k_max < 1:
        raise InputError("k_max must be >= 1")
    if q_max < 2:
        raise InputError("q_max must be >= 2")
    xs = np.flatnonzero(bit_vector(d)).astype(np.int64) + d.window.lo
    scored: list[tuple[float, int, int]] = []
    for q in range(2, q_max + 1):
        counts = np.bincount(xs % q, minlength=q).astype(np.float64)
        angles = 2.0 * np.pi * np.arange(q) / q
        for p in range(1, q // 2 + 1):
            if gcd(p, q) != 1:
                continue
            re = float(np.dot(counts, np.cos(p * angles)))
            im = float(np.dot(counts, np.sin(p * angles)))
            scored.append((-np.hypot(re, im), q, p))
    scored.sort()
    return [Fraction(p, q) for _, q, p in scored[:k_max]]


@dataclass(frozen=True)
class PiecewiseBohrWitness:
    spec: BohrSpec
    interval: Window
    members: int
    coverage: Fraction


def piecewise_bohr_search(
    d: IntSet,
    k_max: int,
    eps_grid,
    l_min: int,
    q_max: int = 32,
    shifts=(0,),
) -> PiecewiseBohrWitness | None:
    """Search for a Bohr set whose restriction to a long interval sits in D.

    Candidate frequencies come from the heuristic suggester; subsets are tried
    in lexicographic order of ascending size, eps values in descending order,
    then the given shifts.  For each spec the longest violation-free interval
    is found exactly; the first witness attaining the maximum interval length
    of at least l_min wins.  The winner is re-verified via bohr_contained.
    """
    if l_min < 1:
        raise InputError("l_min must be >= 1")
    eps_values = sorted({Fraction(e) for e in eps_grid}, reverse=True)
    if not eps_values or eps_values[-1] <= 0:
        raise InputError("eps grid must be positive")
    freqs = suggest_freqs(d, k_max, q_max=q_max)
    window = d.window
    full = (1 << window.length) - 1
    best: PiecewiseBohrWitness | None = None
    for size in range(1, len(freqs) + 1):
        for combo in combinations(freqs, size):
            for eps in eps_values:
                for shift in shifts:
                    spec = BohrSpec(tuple(combo), eps, shift)
                    s = bohr_generate(spec, window)
                    clean = IntSet(window, full & ~(s.bits & ~d.bits))
                    run = longest_run(clean)
                    if run is None:
                        continue
                    start, length = run
                    if length < l_min:
                        continue
                    if best is None or length > best.interval.length:
                        interval = Window(start, start + length - 1)
                        inside = restrict(s, interval).count
                        best = PiecewiseBohrWitness(
                            spec, interval, inside, Fraction(inside, length)
                        )
    if best is not None:
        check = bohr_contained(
            bohr_generate(best.spec, window), d, best.interval
        )
        if not check.ok:
            raise VerificationError("piecewise witness failed its own recount")
    return best
