"""Shift covers certified in exact arithmetic.

The chain here is: a Cauchy-Schwarz counting inequality for finite families,
the pairwise-overlap bound it implies, and a greedy cover of a candidate shift
list X by translates of the dense-shift set
D(C, eps) = {t : |C ∩ (C - t) ∩ [1, N]| > eps * N}.  Every certificate stores
enough to be re-verified from scratch, and the re-verifier uses an independent
counting path (numpy bit vectors instead of big-int popcounts).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

import numpy as np

from .delta import _upper_est_rebased, shift_intersection
from .density import (
    DensityEstimate,
    bit_vector,
    lower_banach_est,
    thick_witness,
    upper_banach_est,
)
from .errors import InfeasibleError, InputError, VerificationError
from .intset import IntSet, Window, restrict

__all__ = [
    "CsInequality",
    "CoverCertificate",
    "ShiftCheck",
    "DeltaCoverResult",
    "CoverDensityReport",
    "QuotientCoverResult",
    "cs_family_inequality",
    "guaranteed_overlap",
    "dense_shift_count",
    "dense_shift_member",
    "greedy_shift_cover",
    "verify_cover_certificate",
    "delta_cover",
    "quotient_cover",
    "cover_density_check",
]


# -- Cauchy-Schwarz family inequality ----------------------------------------


@dataclass(frozen=True)
class CsInequality:
    """(sum |C_i|)^2 <= N * (sum |C_i| + 2 * sum_{i<j} |C_i ∩ C_j|), exact."""

    n: int
    k: int
    lhs: int
    rhs: int
    holds: bool


def _family_window(family: list[IntSet], n: int | None) -> int:
    if not family:
        raise InputError("empty family")
    hi = max(s.window.hi for s in family)
    if n is None:
        n = hi
    for s in family:
        if s.window.lo < 1 or s.window.hi > n:
            raise InputError(f"family member window {s.window} not inside [1, {n}]")
    return n


def cs_family_inequality(family: list[IntSet], n: int | None = None) -> CsInequality:
    """Exact integer check of the counting inequality for subsets of [1, n]."""
    n = _family_window(family, n)
    total = sum(s.count for s in family)
    cross = 0
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            if family[i].window.overlaps(family[j].window):
                a, b = family[i], family[j]
                w = a.window.intersect(b.window)
                d_a, d_b = w.lo - a.window.lo, w.lo - b.window.lo
                cross += ((a.bits >> d_a) & (b.bits >> d_b) & ((1 << w.length) - 1)).bit_count()
    lhs = total * total
    rhs = n * (total + 2 * cross)
    return CsInequality(n, len(family), lhs, rhs, lhs <= rhs)


def guaranteed_overlap(family: list[IntSet], n: int | None = None) -> Fraction:
    """Lower bound on the largest pairwise overlap density max |C_i ∩ C_j| / n.

    With c_i = |C_i|/n and g = min c_i, the counting inequality gives
    max_{i<j} |C_i ∩ C_j|/n >= (k^2 g^2 - sum c_i) / (k (k-1)).
    Needs k >= 2.
    """
    n = _family_window(family, n)
    k = len(family)
    if k < 2:
        raise InputError("guaranteed_overlap needs at least two sets")
    dens = [Fraction(s.count, n) for s in family]
    g = min(dens)
    return (k * k * g * g - sum(dens)) / (k * (k - 1))


# -- dense-shift membership ---------------------------------------------------


def _check_base(c: IntSet) -> int:
    if c.window.lo != 1:
        raise InputError(f"base set must live on [1, N] (got window {c.window})")
    return c.window.hi


def dense_shift_count(c: IntSet, t: int) -> int:
    """|C ∩ (C - t) ∩ [1, N]| for C ⊆ [1, N]; symmetric in the sign of t."""
    _check_base(c)
    return (c.bits & (c.bits >> abs(t))).bit_count()


def dense_shift_member(c: IntSet, t: int, eps: Fraction) -> bool:
    """Strict threshold membership: count > eps * N by cross-multiplication."""
    n = _check_base(c)
    return dense_shift_count(c, t) * eps.denominator > eps.numerator * n


# -- greedy cover -------------------------------------------------------------


def candidate_order(xs) -> list[int]:
    """Deterministic greedy order: ascending |x|, positive before negative."""
    return sorted(set(xs), key=lambda x: (abs(x), x < 0))


@dataclass(frozen=True)
class CoverCertificate:
    """Greedy cover of candidates by translates of the dense-shift set of C.

    shifts are in pick order, first one mandated by the caller.  witnesses maps
    each covered candidate x to the shift x_i used, so x - x_i passed the
    threshold.  k_bound is floor((g - eps) / (g^2 - eps)) for g = |C|/N, the
    size the greedy cannot exceed when edge losses vanish; margin = max |x|/N
    measures those losses.
    """

    shifts: list[int]
    eps: Fraction
    gamma_hat: Fraction
    k_bound: int
    margin: Fraction
    covered: bool
    uncovered: list[int]
    base_size: int
    witnesses: dict[int, int] = field(repr=False)


def greedy_shift_cover(
    c: IntSet, candidates, eps: Fraction, mandated_x: int
) -> CoverCertificate:
    """Cover candidates by D(C, eps) + F, growing F greedily from mandated_x."""
    n = _check_base(c)
    eps = Fraction(eps)
    if eps < 0:
        raise InputError("eps must be >= 0")
    order = candidate_order(candidates)
    if not order:
        raise InputError("no candidates")
    if mandated_x not in set(order):
        raise InputError(f"mandated shift {mandated_x} not among the candidates")
    bad = [x for x in order if abs(x) > n]
    if bad:
        raise InputError(f"candidate {bad[0]} exceeds the base size {n}")
    gamma = Fraction(c.count, n)
    if eps >= gamma * gamma:
        raise InfeasibleError(
            f"eps = {eps} is not below the squared base density {gamma * gamma}; "
            "the size bound is undefined"
        )
    k_bound = floor((gamma - eps) / (gamma * gamma - eps))
    margin = Fraction(max(abs(x) for x in order), n)

    memo: dict[int, bool] = {}

    def member(t: int) -> bool:
        t = abs(t)
        hit = memo.get(t)
        if hit is None:
            hit = memo[t] = dense_shift_member(c, t, eps)
        return hit

    shifts = [mandated_x]
    witnesses: dict[int, int] = {}
    uncovered: list[int] = []
    for x in order:
        if member(x - mandated_x):
            witnesses[x] = mandated_x
        else:
            uncovered.append(x)
    while uncovered:
        picked = uncovered[0]
        shifts.append(picked)
        remaining: list[int] = []
        for x in uncovered:
            if member(x - picked):
                witnesses[x] = picked
            else:
                remaining.append(x)
        if len(remaining) == len(uncovered):
            # picked did not even cover itself; impossible while eps < gamma^2
            raise VerificationError("greedy made no progress; threshold logic broken")
        uncovered = remaining
    return CoverCertificate(
        shifts=shifts,
        eps=eps,
        gamma_hat=gamma,
        k_bound=k_bound,
        margin=margin,
        covered=not uncovered,
        uncovered=uncovered,
        base_size=n,
        witnesses=witnesses,
    )


def verify_cover_certificate(c: IntSet, candidates, cert: CoverCertificate) -> bool:
    """Recheck a cover certificate with an independent counting path.

    Counts come from numpy bit vectors rather than big-int popcounts; coverage
    of every candidate is re-derived from scratch.  Raises VerificationError
    on any mismatch.
    """
    n = _check_base(c)
    arr = bit_vector(c).astype(bool)
    eps = cert.eps

    counts: dict[int, int] = {}

    def count(t: int) -> int:
        t = abs(t)
        if t not in counts:
            counts[t] = 0 if t >= n else int(np.count_nonzero(arr[: n - t] & arr[t:]))
        return counts[t]

    def member(t: int) -> bool:
        return count(t) * eps.denominator > eps.numerator * n

    order = candidate_order(candidates)
    if cert.shifts[0] not in set(order):
        raise VerificationError("mandated shift not among candidates")
    if len(set(cert.shifts)) != len(cert.shifts):
        raise VerificationError("duplicate shifts in certificate")
    uncovered_set = set(cert.uncovered)
    for x in order:
        hit = next((xi for xi in cert.shifts if member(x - xi)), None)
        if hit is None and x not in uncovered_set:
            raise VerificationError(f"candidate {x} marked covered but is not")
        if hit is not None and x in uncovered_set:
            raise VerificationError(f"candidate {x} marked uncovered but is covered")
        if hit is not None:
            wx = cert.witnesses.get(x)
            if wx is None or wx not in cert.shifts or not member(x - wx):
                raise VerificationError(f"witness for candidate {x} does not verify")
    if cert.covered != (not cert.uncovered):
        raise VerificationError("covered flag inconsistent with uncovered list")
    if dense_shift_count(c, 0) != c.count:
        raise VerificationError("count cache drifted")
    return True


# -- cover on the best window of a larger set ---------------------------------


@dataclass(frozen=True)
class ShiftCheck:
    """Membership re-verification of one used shift against the full set."""

    t: int
    value: Fraction
    ok: bool


@dataclass(frozen=True)
class DeltaCoverResult:
    """Greedy cover computed on the best n-window of A, verified against A."""

    offset: int
    base_size: int
    cert: CoverCertificate
    checks: list[ShiftCheck]
    heuristic: bool


def _rebase_best_window(a: IntSet, n: int, anchored: bool) -> tuple[IntSet, int, Fraction]:
    if anchored:
        if a.window.lo != 1:
            raise InputError("anchored variant needs a window starting at 1")
        offset = 0
    else:
        offset = upper_banach_est(a, n).at
    c = restrict(a, Window(offset + 1, offset + n)).shift(-offset)
    return c, offset, Fraction(c.count, n)


def delta_cover(
    a: IntSet,
    candidates,
    eps: Fraction,
    n: int,
    mandated_x: int = 0,
    upper: bool = False,
) -> DeltaCoverResult:
    """Cover candidates by translates of the eps-dense shift set of A.

    The greedy runs on C, the best (least-offset) length-n window of A,
    and every shift the cover actually uses is re-verified as an eps-dense
    shift of A itself at the same n.  With upper=True the initial segment
    [1, n] replaces the best window and the asymptotic proxy estimator does
    the re-verification; that variant is reported as heuristic.
    """
    eps = Fraction(eps)
    order = candidate_order(candidates)
    if not order:
        raise InputError("no candidates")
    span = order_span = max(x for x in order) - min(x for x in order)
    if n + span > a.window.length:
        raise InputError(
            f"n + candidate span = {n + order_span} exceeds window length "
            f"{a.window.length}; used shifts could not be verified"
        )
    c, offset, _ = _rebase_best_window(a, n, anchored=upper)
    cert = greedy_shift_cover(c, order, eps, mandated_x)

    used = sorted({x - xi for x, xi in cert.witnesses.items()})
    checks: list[ShiftCheck] = []
    for t in used:
        if upper:
            value = _upper_est_rebased(shift_intersection(a, t), n).value
        else:
            value = upper_banach_est(shift_intersection(a, t), n).value
        ok = value > eps
        checks.append(ShiftCheck(t, value, ok))
        if not ok:
            raise VerificationError(
                f"shift {t} passed on the window but not on the full set"
            )
    verify_cover_certificate(c, order, cert)
    return DeltaCoverResult(offset, n, cert, checks, heuristic=upper)


# -- covered-range density checks ---------------------------------------------


@dataclass(frozen=True)
class CoverDensityReport:
    """If S + F covers a range (or is thick), S itself must be dense.

    full_cover mode: premise is cover_range ⊆ S + F; the assertion is
    lower_banach_est(S ∩ cover_range, n) >= 1/k - k*span(F)/n.  Shifts are
    normalized first so the hull of F contains 0 (cover by S + F equals cover
    by (S+c) + (F-c)); in that normal form the bound is provable: any length-n
    window J of the range contains (J + f_max) ∩ (J + f_min + n-span), an
    interval I of length n - span with I - f ⊆ J for every f, so each of its
    covered points pulls back into S ∩ J, at most k landing on one point.

    thick_cover mode: premise is an interval of length L inside S + F; the
    assertion is max-window-count(n) * ceil(L/n) >= ceil(L/k), the exact
    pigeonhole form of upper_banach_est(S, n) >= 1/k for n | L.
    """

    mode: str
    premise_ok: bool
    normalize_shift: int
    threshold: Fraction
    nominal: Fraction
    estimate: DensityEstimate | None
    witness: int | None
    ok: bool


def _normalize_shifts(shifts: list[int]) -> tuple[list[int], int]:
    f_min, f_max = min(shifts), max(shifts)
    c = 0 if f_min <= 0 <= f_max else (f_min if f_min > 0 else f_max)
    return [f - c for f in shifts], c


def _or_shifts(s: IntSet, shifts: list[int], target: Window) -> IntSet:
    acc = 0
    for f in shifts:
        acc |= restrict(s.shift(f), target).bits
    return IntSet(target, acc)


def cover_density_check(
    s: IntSet,
    shifts,
    mode: str,
    n: int,
    cover_range: Window | None = None,
    thick_len: int | None = None,
) -> CoverDensityReport:
    """Check the density consequence of a shift cover (modes: full_cover, thick_cover)."""
    shifts = list(dict.fromkeys(shifts))
    if not shifts:
        raise InputError("empty shift list")
    k = len(shifts)
    norm, c = _normalize_shifts(shifts)
    s_norm = s.shift(c)
    nominal = Fraction(1, k)

    if mode == "full_cover":
        if cover_range is None:
            raise InputError("full_cover needs cover_range")
        covered = _or_shifts(s_norm, norm, cover_range)
        premise_ok = covered.count == cover_range.length
        span = max(norm) - min(norm)
        threshold = nominal - Fraction(k * span, n)
        est = lower_banach_est(restrict(s_norm, cover_range), n)
        ok = premise_ok and est.value >= threshold
        return CoverDensityReport(mode, premise_ok, c, threshold, nominal, est, None, ok)

    if mode == "thick_cover":
        if thick_len is None:
            raise InputError("thick_cover needs thick_len")
        if n > thick_len:
            raise InputError("n must not exceed the thick interval length")
        hull = Window(
            s_norm.window.lo + min(norm), s_norm.window.hi + max(norm)
        )
        covered = _or_shifts(s_norm, norm, hull)
        w = thick_witness(covered, thick_len)
        premise_ok = w is not None
        blocks = -(-thick_len // n)  # ceil(L / n)
        need = -(-thick_len // k)  # ceil(L / k)
        threshold = Fraction(need, n * blocks)
        est = upper_banach_est(s, n)
        ok = premise_ok and est.value >= threshold
        return CoverDensityReport(mode, premise_ok, c, threshold, nominal, est, w, ok)

    raise InputError(f"unknown mode {mode!r}")


# -- quotient cover -----------------------------------------------------------


@dataclass(frozen=True)
class QuotientCoverResult:
    """Cover of a base candidate list by the h-quotient of the dense-shift set."""

    h: int
    full_range: bool
    offset: int | None
    cert: CoverCertificate | None
    base_shifts: list[int] | None
    quotient_members: IntSet | None
    cover_ok: bool
    density: CoverDensityReport | None


def quotient_cover(
    a: IntSet,
    h: int,
    base_candidates,
    eps: Fraction,
    n: int,
    mandated_x: int = 0,
    density_n: int | None = None,
) -> QuotientCoverResult:
    """Cover base candidates x by {t : h*t is an eps-dense shift of A} + F/h.

    h = 0 degenerates: 0 is always an eps-dense shift when eps < density^2,
    so the quotient is everything and the report says so.
    """
    eps = Fraction(eps)
    if h == 0:
        c, offset, gamma = _rebase_best_window(a, n, anchored=False)
        if eps >= gamma * gamma:
            raise InfeasibleError(f"eps = {eps} not below squared density {gamma * gamma}")
        return QuotientCoverResult(0, True, offset, None, None, None, True, None)

    base = candidate_order(base_candidates)
    scaled = [h * x for x in base]
    res = delta_cover(a, scaled, eps, n, mandated_x=h * mandated_x)
    base_shifts = [x // h for x in res.cert.shifts]

    hull = Window(min(base), max(base))
    c = restrict(a, Window(res.offset + 1, res.offset + n)).shift(-res.offset)
    member_bits = 0
    for i, t in enumerate(range(hull.lo, hull.hi + 1)):
        if dense_shift_member(c, h * t, eps):
            member_bits |= 1 << i
    q = IntSet(hull, member_bits)

    covered = _or_shifts(q, base_shifts, hull)
    cover_ok = all(x in covered for x in base)
    dens_n = density_n if density_n is not None else max(1, hull.length // 4)
    density = cover_density_check(
        q, base_shifts, "full_cover", dens_n, cover_range=hull
    )
    return QuotientCoverResult(
        h, False, res.offset, res.cert, base_shifts, q, cover_ok, density
    )
