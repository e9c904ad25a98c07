"""Slow reference implementations the library must agree with.

Everything here is written the dumbest way on purpose: plain Python sets,
plain loops, Fractions.  No bit tricks, no numpy, no shared code with the
package.  Expected values frozen into the test files were produced by these
functions and checked by hand where a hand check was feasible.
"""

from fractions import Fraction


def window_counts(members, lo: int, hi: int, n: int):
    """Count of members in [x+1, x+n] for every offset x in [lo-1, hi-n]."""
    out = {}
    for x in range(lo - 1, hi - n + 1):
        out[x] = sum(1 for v in range(x + 1, x + n + 1) if v in members)
    return out


def upper_banach(members, lo: int, hi: int, n: int):
    counts = window_counts(members, lo, hi, n)
    best = max(counts.values())
    at = min(x for x, c in counts.items() if c == best)
    return Fraction(best, n), at


def lower_banach(members, lo: int, hi: int, n: int):
    counts = window_counts(members, lo, hi, n)
    worst = min(counts.values())
    at = min(x for x, c in counts.items() if c == worst)
    return Fraction(worst, n), at


def anchored_min(members, lo_i: int, hi_i: int):
    """(min of |A ∩ [1,i]| / i, least attaining i) over i in [lo_i, hi_i]."""
    best = None
    at = None
    for i in range(lo_i, hi_i + 1):
        v = Fraction(sum(1 for x in members if 1 <= x <= i), i)
        if best is None or v < best:
            best, at = v, i
    return best, at


def anchored_max(members, lo_i: int, hi_i: int):
    best = None
    at = None
    for i in range(lo_i, hi_i + 1):
        v = Fraction(sum(1 for x in members if 1 <= x <= i), i)
        if best is None or v > best:
            best, at = v, i
    return best, at


def schnirelmann(members, n: int):
    return anchored_min(members, 1, n)


def longest_run(members):
    """(start, length) of the longest interval of consecutive members."""
    if not members:
        return None
    best_start, best_len = None, 0
    for x in sorted(members):
        if x - 1 in members:
            continue
        length = 0
        while x + length in members:
            length += 1
        if length > best_len:
            best_start, best_len = x, length
    return best_start, best_len


def difference(a, b):
    return {x - y for x in a for y in b}


def sumset(a, b):
    return {x + y for x in a for y in b}


def shift_intersection(a, t: int):
    """A ∩ (A - t) as a plain set: members x with x and x + t both in A."""
    return {x for x in a if x + t in a}


def eps_delta(members, lo: int, hi: int, eps: Fraction, n: int, ts):
    """Shifts t whose intersection beats eps via the best length-n window."""
    out = set()
    for t in ts:
        inter = shift_intersection(members, t)
        wlo, whi = max(lo, lo - t), min(hi, hi - t)
        value, _ = upper_banach(inter, wlo, whi, n)
        if value > eps:
            out.add(t)
    return out


def embed_shifts(pattern, y, s_lo: int, s_hi: int):
    return {t for t in range(s_lo, s_hi + 1) if all(t + e in y for e in pattern)}


def trace(members, theta: int, n: int):
    """(C - theta) ∩ [1, n] as a sorted tuple."""
    return tuple(i for i in range(1, n + 1) if theta + i in members)


def prefix_dense(members, big: int, n: int, gamma: Fraction):
    """Offsets theta in [0, big - n] where every prefix count meets gamma*i."""
    out = set()
    for theta in range(0, big - n + 1):
        if all(
            len([v for v in members if theta < v <= theta + i]) >= gamma * i
            for i in range(1, n + 1)
        ):
            out.add(theta)
    return out


def best_alignment(c, d, big: int, nu: int):
    """(least maximizing x in [1, big], count) of |(C - x) ∩ D| over [1, nu]."""
    best_x, best_c = None, -1
    for x in range(1, big + 1):
        cnt = sum(1 for v in range(1, nu + 1) if v in d and v + x in c)
        if cnt > best_c:
            best_x, best_c = x, cnt
    return best_x, best_c


def bohr_members(freqs, eps: Fraction, shift: int, lo: int, hi: int):
    out = set()
    for x in range(lo, hi + 1):
        ok = True
        for r in freqs:
            v = (r * (x - shift)) % 1
            if min(v, 1 - v) >= eps:
                ok = False
                break
        if ok:
            out.add(x)
    return out


def fraction_floor(gamma: Fraction, n: int):
    """Largest j/i < gamma with 1 <= i <= n, 0 <= j <= i, by full enumeration."""
    best = None
    for i in range(1, n + 1):
        for j in range(0, i + 1):
            v = Fraction(j, i)
            if v < gamma and (best is None or v > best):
                best = v
    return best
