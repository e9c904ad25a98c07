"""Witness extraction pipelines with exact certificates.

The ladder: a pigeonhole alignment shift between two finite sets, the
prefix-dense offset region and its block-walk size bound, extraction of the
most frequent length-n trace (the finite stand-in for a limit object: we fix n
and take the modal trace class, ties to the lexicographically least pattern),
and the composed pipelines built from those parts.  Every inequality a result
claims is asserted in exact rational arithmetic; the ones the mathematics
guarantees raise VerificationError when they fail, because that means the code
is wrong, not the data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

import numpy as np

from .cover import CoverCertificate, ShiftCheck, candidate_order, dense_shift_count, greedy_shift_cover
from .delta import shift_intersection
from .density import bit_vector, longest_run, prefix_counts, upper_banach_est
from .embed import Pattern, shift_set_of
from .errors import InfeasibleError, InputError, VerificationError
from .intset import IntSet, Window, difference_set, make_set, restrict, shift_set

__all__ = [
    "PigeonholeWitness",
    "pigeonhole_shift",
    "fraction_floor",
    "prefix_dense_region",
    "WalkReport",
    "block_walk_bound",
    "ExtractionCertificate",
    "verify_extraction",
    "trace_extract",
    "PrefixCheck",
    "DensePatternResult",
    "dense_pattern_extract",
    "JointExtractResult",
    "joint_extract",
    "ChainStage",
    "ChainExtractResult",
    "chain_extract",
    "BaselineCover",
    "DifferenceCoverResult",
    "difference_cover",
    "IntersectCoverResult",
    "intersect_delta_cover",
]

TRACE_CAP = 16


def _anchored(s: IntSet, what: str) -> int:
    if s.window.lo != 1:
        raise InputError(f"{what} must live on a window starting at 1 (got {s.window})")
    return s.window.hi


# -- pigeonhole alignment ------------------------------------------------------


@dataclass(frozen=True)
class PigeonholeWitness:
    """Least x in [1, N] maximizing |(C - x) ∩ D|, with its averaging bound.

    ratio = count / nu, bound = |C|/N * |D|/nu - |D|/N; ratio >= bound always,
    because summing the count over all N shifts gives at least |D| (|C| - nu).
    """

    shift: int
    ratio: Fraction
    bound: Fraction
    base_len: int
    sub_len: int


def _spread16(arr: np.ndarray) -> int:
    # one bit per 16-bit lane, so products collect counts without carries
    return int.from_bytes(arr.astype("<u2").tobytes(), "little")


def pigeonhole_shift(c: IntSet, d: IntSet) -> PigeonholeWitness:
    """Exhaustive max of |(C - x) ∩ D| over x in [1, N], via one convolution.

    The count profile is the coefficient list of the product of the two
    indicator polynomials (D reversed), computed as a single big-int multiply
    with 16-bit lanes.  Coefficients never exceed |D|, so nu must stay below
    2^16 for the lanes not to carry.
    """
    n = _anchored(c, "first set")
    nu = _anchored(d, "second set")
    if nu >= 1 << 16:
        raise InputError("second window too long for 16-bit convolution lanes")
    prod = _spread16(bit_vector(c)) * _spread16(bit_vector(d)[::-1])
    coeffs = np.frombuffer(prod.to_bytes(2 * (n + nu), "little"), dtype="<u2")
    counts = coeffs[nu : nu + n]
    x = int(np.argmax(counts)) + 1
    ratio = Fraction(int(counts[x - 1]), nu)
    bound = Fraction(c.count * d.count, n * nu) - Fraction(d.count, n)
    if ratio < bound:
        raise VerificationError(f"alignment ratio {ratio} under the averaging bound {bound}")
    return PigeonholeWitness(x, ratio, bound, n, nu)


# -- prefix-dense offsets ------------------------------------------------------


def fraction_floor(gamma: Fraction, n: int) -> Fraction:
    """Largest j/i strictly below gamma with 1 <= i <= n, 0 <= j <= i."""
    gamma = Fraction(gamma)
    if not 0 < gamma <= 1:
        raise InputError("gamma must be in (0, 1]")
    if n < 1:
        raise InputError("n must be >= 1")
    num, den = gamma.numerator, gamma.denominator
    best = Fraction(0)
    for i in range(1, n + 1):
        j = (num * i - 1) // den
        if j > 0 and j * best.denominator > best.numerator * i:
            best = Fraction(j, i)
    return best


def prefix_dense_region(c: IntSet, n: int, gamma: Fraction) -> IntSet:
    """Offsets theta in [0, N-n] with |C ∩ [theta+1, theta+i]| >= gamma*i for all i <= n."""
    big = _anchored(c, "base set")
    if not 1 <= n < big:
        raise InputError("need 1 <= n < N")
    gamma = Fraction(gamma)
    num, den = gamma.numerator, gamma.denominator
    width = big - n + 1
    w = Window(0, big - n)
    if num <= 0:
        return IntSet(w, (1 << width) - 1)
    p = prefix_counts(c)
    if num < 1 << 31 and den < 1 << 31 and big < 1 << 26:
        good = np.ones(width, dtype=bool)
        base = p[:width]
        for i in range(1, n + 1):
            good &= (p[i : i + width] - base) * den >= num * i
        bits = int.from_bytes(np.packbits(good, bitorder="little").tobytes(), "little")
        return IntSet(w, bits)
    # huge thresholds fall back to plain integers
    pl = p.tolist()
    bits = 0
    for theta in range(width):
        if all((pl[theta + i] - pl[theta]) * den >= num * i for i in range(1, n + 1)):
            bits |= 1 << theta
    return IntSet(w, bits)


@dataclass(frozen=True)
class WalkReport:
    """Block-walk lower bound on the prefix-dense region.

    The walk starts at 0; on a region offset it advances by 1, otherwise by
    the least prefix length that misses the threshold.  A missing prefix has
    count strictly under gamma*i, hence at most gamma_floor*i since counts sit
    on the grid {j/i : i <= n}, and summing the walk's contributions against
    |C| forces visits * (1 - gamma_floor) > |C| - gamma_floor*N - n.
    """

    gamma: Fraction
    gamma_floor: Fraction
    bound: Fraction
    visits: int
    region_size: int
    base_size: int


def block_walk_bound(c: IntSet, n: int, gamma: Fraction) -> WalkReport:
    big = _anchored(c, "base set")
    gamma = Fraction(gamma)
    gn = fraction_floor(gamma, n)
    region = prefix_dense_region(c, n, gamma)
    bound = (Fraction(c.count, big) - gn - Fraction(n, big)) / (1 - gn)
    reg = bit_vector(region).view(bool)
    pl = prefix_counts(c).tolist()
    num, den = gamma.numerator, gamma.denominator
    theta, visits = 0, 0
    last = big - n
    while theta <= last:
        if reg[theta]:
            visits += 1
            theta += 1
            continue
        theta += next(
            i for i in range(1, n + 1) if (pl[theta + i] - pl[theta]) * den < num * i
        )
    if not (region.count >= visits and visits > bound * big):
        raise VerificationError("block walk failed to witness its own bound")
    return WalkReport(gamma, gn, bound, visits, region.count, big)


# -- modal trace extraction ----------------------------------------------------


@dataclass(frozen=True)
class ExtractionCertificate:
    """The modal length-n trace of a set, with its offset class.

    prefix is (C - theta) ∩ [1, n] for every theta in matches; its counting
    function dominates gamma * i at every i <= n; and matches collects at
    least a 2^-n share of the region (pigeonhole over the possible traces),
    recorded as match_bound = region_size / 2^n <= |matches|.
    """

    n: int
    gamma: Fraction
    gamma_floor: Fraction
    prefix: Pattern
    region_size: int
    matches: IntSet
    match_bound: Fraction
    base_size: int


def verify_extraction(c: IntSet, cert: ExtractionCertificate) -> bool:
    """Recheck every certificate invariant through plain Python sets."""
    big = _anchored(c, "base set")
    n = cert.n
    elems = cert.prefix.elems
    if elems[0] < 1 or elems[-1] > n:
        raise VerificationError("prefix pattern escapes [1, n]")
    num, den = cert.gamma.numerator, cert.gamma.denominator
    have = 0
    it = iter(elems)
    nxt = next(it, None)
    for i in range(1, n + 1):
        if nxt == i:
            have += 1
            nxt = next(it, None)
        if have * den < num * i:
            raise VerificationError(f"prefix counting function fails at i = {i}")
    members = set(c.members())
    pset = set(elems)
    if cert.matches.window != Window(0, big - n):
        raise VerificationError("match offsets live on the wrong window")
    if cert.matches.count == 0:
        raise VerificationError("empty match class")
    for theta in cert.matches.members():
        trace = {x - theta for x in range(theta + 1, theta + n + 1) if x in members}
        if trace != pset:
            raise VerificationError(f"offset {theta} does not reproduce the prefix")
    if cert.region_size > big - n + 1:
        raise VerificationError("region exceeds the offset range")
    if cert.matches.count * (1 << n) < cert.region_size:
        raise VerificationError("match class under the pigeonhole share")
    if cert.match_bound != Fraction(cert.region_size, 1 << n):
        raise VerificationError("stored pigeonhole bound is inconsistent")
    return True


def trace_extract(
    c: IntSet, n: int, gamma: Fraction, n_max: int = TRACE_CAP
) -> ExtractionCertificate:
    """Group the prefix-dense offsets by trace and certify the modal class."""
    big = _anchored(c, "base set")
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise InputError("gamma must be positive")
    if n > n_max:
        raise InputError(f"trace length {n} above the cap {n_max}; the 2^-n bound degrades")
    if not 1 <= n <= big - 1:
        raise InputError("need 1 <= n <= N-1")
    region = prefix_dense_region(c, n, gamma)
    if region.count == 0:
        raise InfeasibleError(
            f"no offset meets the prefix threshold {gamma}; lower gamma or grow the window"
        )
    arr = bit_vector(c)
    width = big - n + 1
    codes = np.zeros(width, dtype=np.uint32)
    for j in range(n):
        codes |= arr[j : j + width].astype(np.uint32) << np.uint32(j)
    reg = bit_vector(region).view(bool)
    freq = np.bincount(codes[reg], minlength=1 << n)
    top = int(freq.max())
    tied = np.flatnonzero(freq == top)
    members_of = lambda code: tuple(j + 1 for j in range(n) if (code >> j) & 1)
    prefix = Pattern(min(members_of(int(code)) for code in tied))
    best_code = sum(1 << (e - 1) for e in prefix.elems)
    hit = reg & (codes == np.uint32(best_code))
    matches = IntSet(
        Window(0, big - n),
        int.from_bytes(np.packbits(hit, bitorder="little").tobytes(), "little"),
    )
    cert = ExtractionCertificate(
        n=n,
        gamma=gamma,
        gamma_floor=fraction_floor(gamma, n),
        prefix=prefix,
        region_size=region.count,
        matches=matches,
        match_bound=Fraction(region.count, 1 << n),
        base_size=big,
    )
    verify_extraction(c, cert)
    return cert


# -- extraction against a larger ambient set -----------------------------------


@dataclass(frozen=True)
class PrefixCheck:
    """Shift-set density of one prefix of the extracted pattern inside A."""

    length: int
    est_value: Fraction
    floor: Fraction
    ok: bool


@dataclass(frozen=True)
class DensePatternResult:
    offset: int
    window_len: int
    alpha: Fraction
    cert: ExtractionCertificate
    checks: list[PrefixCheck]


def dense_pattern_extract(
    a: IntSet, n: int, slack: Fraction, window_len: int, n_max: int = TRACE_CAP
) -> DensePatternResult:
    """Extract the modal trace of the best window of A and tie it back to A.

    The certificate lives on C, the densest (least-offset) length-window_len
    sub-window, with gamma = density(C) - slack.  Every prefix of the extracted
    pattern then embeds into A at every match offset, so the shift set of the
    prefix inside A is at least as dense as the match class; both facts are
    asserted, the first bitwise, the second through the window estimator.
    """
    slack = Fraction(slack)
    if slack < 0:
        raise InputError("slack must be >= 0")
    est = upper_banach_est(a, window_len)
    alpha, offset = est.value, est.at
    if alpha <= slack:
        raise InfeasibleError(f"window density {alpha} does not exceed the slack {slack}")
    c = restrict(a, Window(offset + 1, offset + window_len)).shift(-offset)
    cert = trace_extract(c, n, alpha - slack, n_max=n_max)
    srange = Window(offset, offset + window_len - n)
    shifted = shift_set(cert.matches, offset)
    floor_value = Fraction(cert.matches.count, window_len)
    checks: list[PrefixCheck] = []
    for j in range(1, len(cert.prefix) + 1):
        f = Pattern(cert.prefix.elems[:j])
        s = shift_set_of(f, a, srange)
        if shifted.bits & ~s.bits:
            raise VerificationError(f"a match offset fails to embed the length-{j} prefix")
        value = upper_banach_est(s, srange.length).value
        ok = value >= floor_value
        if not ok:
            raise VerificationError(f"shift-set density {value} under the match share {floor_value}")
        checks.append(PrefixCheck(j, value, floor_value, ok))
    return DensePatternResult(offset, window_len, alpha, cert, checks)


# -- two-set pipeline ----------------------------------------------------------


@dataclass(frozen=True)
class JointExtractResult:
    """Aligned overlap of the dense windows of two sets, with extraction.

    C and D are the densest windows of A (length window_len, offset offset_a)
    and B (length sub_len, offset offset_b); zeta aligns them, and the overlap
    W = (C - zeta) ∩ D has density at least alpha*beta - sub_len/window_len.
    The certificate extracts from W.  align_shift carries a match offset square
    back into both ambient sets: align_window.lo + matches lands in
    ((A - align_shift) ∩ B) - e for every prefix element e, which is recounted
    bitwise (align_count members over align_window).
    """

    alpha: Fraction
    beta: Fraction
    offset_a: int
    offset_b: int
    pig: PigeonholeWitness
    overlap: IntSet
    gamma: Fraction
    cert: ExtractionCertificate
    align_shift: int
    align_window: Window
    align_count: int
    eps_achieved: Fraction


def joint_extract(
    a: IntSet,
    b: IntSet,
    window_len: int,
    sub_len: int,
    n: int,
    slack: Fraction,
    min_ratio: int = 10,
    n_max: int = TRACE_CAP,
) -> JointExtractResult:
    slack = Fraction(slack)
    if slack < 0:
        raise InputError("slack must be >= 0")
    if sub_len * min_ratio > window_len:
        raise InputError(
            f"sub window {sub_len} too long for window {window_len} at ratio {min_ratio}; "
            "the sub_len/window_len correction would dominate"
        )
    ea = upper_banach_est(a, window_len)
    eb = upper_banach_est(b, sub_len)
    alpha, off_a = ea.value, ea.at
    beta, off_b = eb.value, eb.at
    c = restrict(a, Window(off_a + 1, off_a + window_len)).shift(-off_a)
    d = restrict(b, Window(off_b + 1, off_b + sub_len)).shift(-off_b)
    pig = pigeonhole_shift(c, d)
    zeta = pig.shift
    w = IntSet(Window(1, sub_len), (c.bits >> zeta) & d.bits)
    if Fraction(w.count, sub_len) != pig.ratio:
        raise VerificationError("overlap count disagrees with the convolution readout")
    if Fraction(w.count, sub_len) < alpha * beta - Fraction(sub_len, window_len):
        raise VerificationError("overlap density under the pigeonhole floor")
    gamma = alpha * beta - slack - Fraction(sub_len, window_len)
    if gamma <= 0:
        raise InfeasibleError(
            f"corrected density target {gamma} is not positive; "
            "shrink sub_len, the slack, or use denser sets"
        )
    cert = trace_extract(w, n, gamma, n_max=n_max)
    align = off_a + zeta - off_b
    align_window = Window(off_b, off_b + sub_len)
    acc = (1 << align_window.length) - 1
    for e in cert.prefix:
        acc &= restrict(a.shift(-(align + e)), align_window).bits
        acc &= restrict(b.shift(-e), align_window).bits
    inter = IntSet(align_window, acc)
    shifted = shift_set(cert.matches, off_b)
    if shifted.bits & ~inter.bits:
        raise VerificationError("a match offset fails the joint alignment recount")
    if inter.count < cert.matches.count:
        raise VerificationError("alignment recount lost matches")
    return JointExtractResult(
        alpha=alpha,
        beta=beta,
        offset_a=off_a,
        offset_b=off_b,
        pig=pig,
        overlap=w,
        gamma=gamma,
        cert=cert,
        align_shift=align,
        align_window=align_window,
        align_count=inter.count,
        eps_achieved=Fraction(cert.matches.count, sub_len),
    )


# -- iterated pipeline ---------------------------------------------------------


@dataclass(frozen=True)
class ChainStage:
    index: int
    kind: str
    alpha: Fraction
    gamma: Fraction
    prefix: Pattern
    matches_count: int
    correction: Fraction


@dataclass(frozen=True)
class ChainExtractResult:
    """Left fold of the two-set pipeline across a list of sets.

    Stage 1 extracts from the first set alone at trace length n + k - 1; each
    later stage pairs the next set with the previous stage's pattern
    (materialized on its own window) and shortens the trace by one.  The final
    pattern's counting function dominates final_gamma, which in turn dominates
    floor = prod(alpha_i) - sum of per-stage corrections; both are asserted.
    delta_checks re-verify that every difference of the final pattern is a
    shared dense shift: the shift intersection of each input set is nonempty.
    """

    stages: list[ChainStage]
    final_prefix: Pattern
    final_gamma: Fraction
    nominal: Fraction
    floor: Fraction
    delta_checks: list[tuple[int, list[Fraction]]]


def chain_extract(
    sets: list[IntSet],
    n: int,
    slack: Fraction,
    window_len: int | None = None,
    min_ratio: int = 10,
    n_max: int = TRACE_CAP,
) -> ChainExtractResult:
    if not sets:
        raise InputError("need at least one set")
    slack = Fraction(slack)
    k = len(sets)
    first_n = n + k - 1
    if first_n > n_max:
        raise InputError(
            f"first-stage trace length {n + k - 1} above the cap {n_max}; "
            "fewer sets or a shorter target trace"
        )
    if window_len is None:
        window_len = min(s.window.length for s in sets)
    base = dense_pattern_extract(sets[0], first_n, slack, window_len, n_max=n_max)
    stages = [
        ChainStage(1, "base", base.alpha, base.cert.gamma, base.cert.prefix,
                   base.cert.matches.count, slack)
    ]
    prefix, cur_n = base.cert.prefix, first_n
    gamma = base.cert.gamma
    nominal = base.alpha
    floor_value = base.alpha - slack
    for i in range(1, k):
        carried = make_set(prefix.elems, Window(1, cur_n))
        res = joint_extract(
            sets[i], carried, window_len, cur_n, cur_n - 1, slack,
            min_ratio=min_ratio, n_max=n_max,
        )
        corr = slack + Fraction(cur_n, window_len)
        stages.append(
            ChainStage(i + 1, "joint", res.alpha, res.gamma, res.cert.prefix,
                       res.cert.matches.count, corr)
        )
        prefix, cur_n, gamma = res.cert.prefix, cur_n - 1, res.gamma
        # beta of this stage is the carried pattern's own density, at least
        # the previous gamma, so the floor recursion below stays provable
        floor_value = res.alpha * floor_value - corr
        nominal *= res.alpha
    if gamma < floor_value:
        raise VerificationError("final stage density target under the product floor")
    diffs = sorted({x - y for x in prefix for y in prefix if x > y})
    checks: list[tuple[int, list[Fraction]]] = []
    for t in diffs:
        vals = []
        for s in sets:
            inter = shift_intersection(s, t)
            est = upper_banach_est(inter, min(first_n, inter.window.length))
            if est.value <= 0:
                raise VerificationError(
                    f"difference {t} of the final pattern is not a dense shift of every input"
                )
            vals.append(est.value)
        checks.append((t, vals))
    return ChainExtractResult(stages, prefix, gamma, nominal, floor_value, checks)


# -- covers built from the pipeline --------------------------------------------


@dataclass(frozen=True)
class BaselineCover:
    shifts: list[int]
    covered: int
    target_len: int
    complete: bool


@dataclass(frozen=True)
class DifferenceCoverResult:
    pipeline: JointExtractResult
    cert: CoverCertificate
    expected_k: int
    covered_interval: tuple[int, int] | None
    baseline: BaselineCover


def _baseline_interval_cover(
    diff: IntSet, pool: list[int], target: Window, cap: int
) -> BaselineCover:
    """Plain marginal-gain greedy: cover target with shifts of the difference set."""
    arr = bit_vector(diff).view(bool)
    tlen = target.length
    covered = np.zeros(tlen, dtype=bool)
    shifts: list[int] = []
    while len(shifts) < cap and not covered.all():
        best_gain, best_f, best_sl = 0, None, None
        for f in pool:
            lo = target.lo - f - diff.window.lo
            sl = np.zeros(tlen, dtype=bool)
            s0, s1 = max(0, lo), min(len(arr), lo + tlen)
            if s0 < s1:
                sl[s0 - lo : s1 - lo] = arr[s0:s1]
            gain = int(np.count_nonzero(sl & ~covered))
            if gain > best_gain:
                best_gain, best_f, best_sl = gain, f, sl
        if best_f is None:
            break
        shifts.append(best_f)
        covered |= best_sl
    got = int(np.count_nonzero(covered))
    return BaselineCover(shifts, got, tlen, got == tlen)


def difference_cover(
    a: IntSet,
    b: IntSet,
    candidates,
    window_len: int,
    sub_len: int,
    n: int,
    slack: Fraction,
    min_ratio: int = 10,
    n_max: int = TRACE_CAP,
) -> DifferenceCoverResult:
    """Cover candidates by zero-threshold dense shifts of the aligned overlap.

    Runs the two-set pipeline, covers the candidate list greedily by
    D(W, 0) + F on the overlap W (the finite carrier of the extracted
    pattern: every difference of the pattern is checked to be a dense shift
    of W), then verifies on the raw data how much of an interval
    (A - B) + F actually covers, against a marginal-gain baseline.
    """
    res = joint_extract(a, b, window_len, sub_len, n, slack, min_ratio, n_max)
    ab = res.alpha * res.beta
    expected_k = floor(1 / ab)
    order = candidate_order(candidates)
    if 0 not in set(order):
        raise InputError("candidate list must contain 0")
    cert = greedy_shift_cover(res.overlap, order, Fraction(0), 0)
    for t in sorted({x - y for x in res.cert.prefix for y in res.cert.prefix if x > y}):
        if dense_shift_count(res.overlap, t) == 0:
            raise VerificationError(
                f"pattern difference {t} missing from the overlap's dense shifts"
            )
    diff = difference_set(a, b)
    hull = Window(diff.window.lo + min(cert.shifts), diff.window.hi + max(cert.shifts))
    acc = 0
    for f in cert.shifts:
        acc |= restrict(diff.shift(f), hull).bits
    covered_interval = longest_run(IntSet(hull, acc))
    target = Window(min(order), max(order))
    baseline = _baseline_interval_cover(diff, order, target, cap=max(2 * expected_k, 8))
    return DifferenceCoverResult(res, cert, expected_k, covered_interval, baseline)


@dataclass(frozen=True)
class IntersectCoverResult:
    pipeline: JointExtractResult
    cert: CoverCertificate
    expected_k: int
    checks_a: list[ShiftCheck]
    checks_b: list[ShiftCheck]


def intersect_delta_cover(
    a: IntSet,
    b: IntSet,
    eps: Fraction,
    candidates,
    window_len: int,
    sub_len: int,
    n: int,
    slack: Fraction,
    mandated_x: int = 0,
    min_ratio: int = 10,
    n_max: int = TRACE_CAP,
) -> IntersectCoverResult:
    """Cover candidates by shifts that are eps-dense for both sets at once.

    The greedy runs on the aligned overlap W; any shift it uses therefore has
    |W ∩ (W - t)| > eps * sub_len, and each witnessing pair sits inside one
    length-sub_len window of A (through C) and of B (through D), so the
    per-shift re-verifications against the full sets are guaranteed to pass.
    """
    eps = Fraction(eps)
    order = candidate_order(candidates)
    if not order:
        raise InputError("no candidates")
    span = max(order) - min(order)
    for s, name in ((a, "first"), (b, "second")):
        if sub_len + span > s.window.length:
            raise InputError(
                f"sub_len + candidate span = {sub_len + span} exceeds the "
                f"{name} set's window length {s.window.length}"
            )
    res = joint_extract(a, b, window_len, sub_len, n, slack, min_ratio, n_max)
    ab = res.alpha * res.beta
    if eps >= ab * ab:
        raise InfeasibleError(f"eps = {eps} not below the squared joint density {ab * ab}")
    expected_k = floor((ab - eps) / (ab * ab - eps))
    cert = greedy_shift_cover(res.overlap, order, eps, mandated_x)
    used = sorted({x - xi for x, xi in cert.witnesses.items()})
    checks_a: list[ShiftCheck] = []
    checks_b: list[ShiftCheck] = []
    for t in used:
        va = upper_banach_est(shift_intersection(a, t), sub_len).value
        vb = upper_banach_est(shift_intersection(b, t), sub_len).value
        if va <= eps or vb <= eps:
            raise VerificationError(f"used shift {t} failed re-verification on the full sets")
        checks_a.append(ShiftCheck(t, va, va > eps))
        checks_b.append(ShiftCheck(t, vb, vb > eps))
    return IntersectCoverResult(res, cert, expected_k, checks_a, checks_b)
