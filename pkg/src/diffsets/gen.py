"""Deterministic set generators, certified at generation time.

Every kind is a pure function of its GenSpec: same spec, same bits, on any
platform.  Randomness comes from the counter-mode SplitMix64 stream in prng
(element i of the window draws stream value i), so parallel or chunked
generation cannot reorder draws.  The structured kinds (blocks, thick_triple,
chain_in_thick) re-verify their advertised postconditions on every call
rather than trusting the construction.

GenSpec JSON: {"kind": ..., "window": [lo, hi], "seed": s, ...params}.
Rational parameters travel as strings ("3/10"), never floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .density import thick_witness
from .errors import InfeasibleError, InputError, VerificationError
from .intset import (
    IntSet,
    Window,
    complement_in,
    difference_set,
    full_set,
    make_set,
    restrict,
)
from .prng import stream_block

__all__ = [
    "GenSpec",
    "gen",
    "spec_to_json",
    "spec_from_json",
    "bernoulli_set",
    "residue_set",
    "ap_union_set",
    "blocks_set",
    "thick_triple",
    "thick_triple_bounds",
    "chain_in_thick",
]

KINDS = ("bernoulli", "residues", "ap_union", "blocks", "thick_triple", "chain_in_thick")


@dataclass(frozen=True, eq=True)
class GenSpec:
    kind: str
    window: Window
    seed: int = 0
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InputError(f"unknown generator kind {self.kind!r}")


def spec_to_json(spec: GenSpec) -> dict:
    d = {"kind": spec.kind, "window": [spec.window.lo, spec.window.hi], "seed": spec.seed}
    d.update(spec.params)
    return d


def spec_from_json(data: dict) -> GenSpec:
    data = dict(data)
    try:
        kind = data.pop("kind")
        lo, hi = data.pop("window")
    except KeyError as e:
        raise InputError(f"generator spec missing field {e.args[0]!r}") from None
    except (TypeError, ValueError):
        raise InputError("generator window must be a [lo, hi] pair") from None
    seed = data.pop("seed", 0)
    return GenSpec(kind, Window(int(lo), int(hi)), int(seed), data)


def _rational(value, name: str) -> Fraction:
    """Exact rational from an int or a 'p/q' / decimal string; floats refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"{name} must be an exact rational string like '3/10', not a float")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InputError(f"cannot parse {name} = {value!r} as a rational") from None


def _take(params: dict, allowed: dict, kind: str) -> dict:
    unknown = set(params) - set(allowed)
    if unknown:
        raise InputError(f"{kind} does not accept parameter(s) {sorted(unknown)}")
    out = dict(allowed)
    out.update(params)
    return out


# -- kinds ----------------------------------------------------------------------


def bernoulli_set(window: Window, p: Fraction, seed: int) -> IntSet:
    """Each window element kept independently with probability p.

    Element at offset i is kept iff stream_value(seed, i) <= T with
    T = (p.num * 2^64 - 1) // p.den, so the inclusion probability is the
    closest achievable to p from a single 64-bit draw (exact when p has a
    power-of-two denominator).
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InputError("bernoulli probability must be in [0, 1]")
    if p == 0:
        return IntSet(window, 0)
    if p == 1:
        return full_set(window)
    threshold = (p.numerator * (1 << 64) - 1) // p.denominator
    draws = stream_block(seed, 0, window.length)
    keep = draws <= np.uint64(threshold)
    bits = int.from_bytes(np.packbits(keep, bitorder="little").tobytes(), "little")
    return IntSet(window, bits)


def residue_set(window: Window, modulus: int, classes) -> IntSet:
    if modulus < 1:
        raise InputError("modulus must be >= 1")
    cls = sorted(set(int(c) for c in classes))
    if any(not 0 <= c < modulus for c in cls):
        raise InputError(f"residue classes must lie in [0, {modulus})")
    xs = np.arange(window.lo, window.hi + 1, dtype=np.int64) % modulus
    table = np.zeros(modulus, dtype=bool)
    table[cls] = True
    bits = int.from_bytes(np.packbits(table[xs], bitorder="little").tobytes(), "little")
    return IntSet(window, bits)


def ap_union_set(window: Window, aps) -> IntSet:
    """Union of two-sided arithmetic progressions; each entry is [a, d]."""
    bits = 0
    seen_any = False
    for entry in aps:
        try:
            a, d = (int(v) for v in entry)
        except (TypeError, ValueError):
            raise InputError("each progression must be an [a, d] pair") from None
        if d < 1:
            raise InputError("progression step must be >= 1")
        seen_any = True
        first = window.lo + (a - window.lo) % d
        for x in range(first, window.hi + 1, d):
            bits |= 1 << (x - window.lo)
    if not seen_any:
        raise InputError("ap_union needs at least one progression")
    return IntSet(window, bits)


def _block_intervals(window: Window, scale: int):
    """Blocks [scale*k^3, scale*k^3 + k] clipped to the window, k = 1, 2, ..."""
    k = 1
    while True:
        lo = scale * k * k * k
        hi = lo + k
        if lo > window.hi:
            return
        if hi >= window.lo:
            yield k, max(lo, window.lo), min(hi, window.hi)
        k += 1


def blocks_set(window: Window, scale: int = 1) -> IntSet:
    """Super-increasing interval union: thick, with thick complement.

    Verified on generation: the largest block fully inside the window is
    matched by an equally long run in the complement.
    """
    if scale < 1:
        raise InputError("scale must be >= 1")
    bits = 0
    best_full = 0
    for k, lo, hi in _block_intervals(window, scale):
        bits |= ((1 << (hi - lo + 1)) - 1) << (lo - window.lo)
        if lo == scale * k * k * k and hi == scale * k * k * k + k:
            best_full = max(best_full, k + 1)
    if best_full == 0:
        raise InputError("window holds no complete block; widen it or lower the scale")
    out = IntSet(window, bits)
    if thick_witness(out, best_full) is None:
        raise VerificationError("blocks lost their own longest interval")
    if thick_witness(complement_in(out, window), best_full) is None:
        raise InfeasibleError(
            "window too tight for a thick complement at the block scale; widen it"
        )
    return out


def thick_triple_bounds(scale: int, blocks: int) -> Window:
    """Smallest window on which thick_triple(scale, blocks) can materialize."""
    g = 4 * scale * (blocks + 1)
    shift = g * 4 ** (blocks + 1)
    top_a = g * 4**blocks + scale * blocks
    lo = g * 4 - top_a - shift
    hi = shift + top_a
    return Window(lo, hi)


def thick_triple(window: Window, scale: int = 4, blocks: int = 3):
    """Three thick sets with thick complements and A - B ⊆ C, certified.

    A is a union of blocks [g*4^k, g*4^k + scale*k]; B = A + shift for a
    shift dwarfing A's span, so A - B = (A - A) - shift lands in K^2 short
    bands; C is exactly that band union.  All six thickness facts and the
    difference containment are re-verified before returning.
    """
    if scale < 1 or blocks < 2:
        raise InputError("need scale >= 1 and blocks >= 2")
    need = thick_triple_bounds(scale, blocks)
    if window.lo > need.lo or window.hi < need.hi:
        raise InputError(
            f"window {window} cannot hold the construction; need at least {need}"
        )
    g = 4 * scale * (blocks + 1)
    shift = g * 4 ** (blocks + 1)
    starts = [g * 4**k for k in range(1, blocks + 1)]
    lens = [scale * k for k in range(1, blocks + 1)]

    def interval_bits(lo: int, hi: int) -> int:
        return ((1 << (hi - lo + 1)) - 1) << (lo - window.lo)

    a_bits = 0
    for s, ln in zip(starts, lens):
        a_bits |= interval_bits(s, s + ln)
    a = IntSet(window, a_bits)
    b = IntSet(window, a_bits << shift)
    c_bits = 0
    for j in range(blocks):
        for k in range(blocks):
            lo = starts[j] - starts[k] - lens[k] - shift
            hi = starts[j] - starts[k] + lens[j] - shift
            c_bits |= interval_bits(lo, hi)
    c = IntSet(window, c_bits)

    want = scale  # every set and complement must hold an interval this long
    for s, name in ((a, "A"), (b, "B"), (c, "C")):
        if thick_witness(s, want) is None:
            raise VerificationError(f"{name} is not thick at the requested scale")
        if thick_witness(complement_in(s, window), want) is None:
            raise VerificationError(f"complement of {name} is not thick")
    diff = difference_set(a, b)
    if diff.count != restrict(diff, window).count:
        raise VerificationError("difference set escapes the window")
    if restrict(diff, window).bits & ~c.bits:
        raise VerificationError("A - B escapes C")
    return a, b, c


def chain_in_thick(t: IntSet, count: int, window: Window) -> IntSet:
    """Greedy b_1 < b_2 < ... in the window with every b_j - b_i in T.

    Picks the least viable element each round; the viability mask is the AND
    of T shifted to each chosen point.  Greedy, so it can dead-end where a
    cleverer choice survives; that raises the infeasibility error rather
    than backtracking.  Pairwise differences are re-verified by recount.
    """
    if count < 1:
        raise InputError("count must be >= 1")
    full_mask = (1 << window.length) - 1
    avail = full_mask
    chosen: list[int] = []
    while len(chosen) < count:
        if avail == 0:
            raise InfeasibleError(
                f"chain stuck after {len(chosen)} of {count} points; "
                "the thick set has no common continuation in this window"
            )
        idx = (avail & -avail).bit_length() - 1
        v = window.lo + idx
        chosen.append(v)
        offset = v + t.window.lo - window.lo
        mask = t.bits << offset if offset >= 0 else t.bits >> -offset
        avail &= mask & full_mask
        avail &= ~((1 << (idx + 1)) - 1)
    members = set(t.members())
    for i in range(len(chosen)):
        for j in range(i + 1, len(chosen)):
            if chosen[j] - chosen[i] not in members:
                raise VerificationError(
                    f"difference {chosen[j] - chosen[i]} fell outside the thick set"
                )
    return make_set(chosen, window)


# -- dispatch --------------------------------------------------------------------


def gen(spec: GenSpec):
    """Materialize a GenSpec; thick_triple yields an (A, B, C) tuple."""
    kind, window, params = spec.kind, spec.window, spec.params
    if kind == "bernoulli":
        p = _take(params, {"p": "1/2"}, kind)
        return bernoulli_set(window, _rational(p["p"], "p"), spec.seed)
    if kind == "residues":
        p = _take(params, {"modulus": None, "classes": None}, kind)
        if p["modulus"] is None or p["classes"] is None:
            raise InputError("residues needs modulus and classes")
        return residue_set(window, int(p["modulus"]), p["classes"])
    if kind == "ap_union":
        p = _take(params, {"aps": None}, kind)
        if p["aps"] is None:
            raise InputError("ap_union needs aps")
        return ap_union_set(window, p["aps"])
    if kind == "blocks":
        p = _take(params, {"scale": 1}, kind)
        return blocks_set(window, int(p["scale"]))
    if kind == "thick_triple":
        p = _take(params, {"scale": 4, "blocks": 3}, kind)
        return thick_triple(window, int(p["scale"]), int(p["blocks"]))
    if kind == "chain_in_thick":
        p = _take(params, {"count": None, "thick": None}, kind)
        if p["count"] is None:
            raise InputError("chain_in_thick needs count")
        if p["thick"] is None:
            span = max(1, window.length - 1)
            t = blocks_set(Window(1, span), 1)
        else:
            nested = spec_from_json(p["thick"])
            t = gen(nested)
            if not isinstance(t, IntSet):
                raise InputError("nested thick spec must yield a single set")
        return chain_in_thick(t, int(p["count"]), window)
    raise InputError(f"unknown generator kind {kind!r}")
