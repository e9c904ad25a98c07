"""Delta sets with a density threshold: which shifts t leave A ∩ (A - t) dense.

Membership is strict: t qualifies when the chosen estimator of A ∩ (A - t)
exceeds eps, compared by integer cross-multiplication.  Shift safety is a hard
precondition: every t in the requested range must satisfy
n + |t| <= window length, so the estimator never scans a silently truncated
intersection; violations raise an input error naming the offending t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import par
from .density import DensityEstimate, syndetic_gap, upper_asymptotic_est, upper_banach_est
from .errors import InputError
from .intset import IntSet, Window, intersect, make_set

__all__ = [
    "EpsDeltaResult",
    "shift_intersection",
    "eps_delta_banach",
    "eps_delta_upper",
    "delta_syndetic_check",
]


@dataclass(frozen=True)
class EpsDeltaResult:
    """Shifts whose intersection density clears eps, over a shift range."""

    eps: Fraction
    n: int
    trange: Window
    members: IntSet
    per_t: dict[int, Fraction]
    kind: str


def shift_intersection(a: IntSet, t: int) -> IntSet:
    """A ∩ (A - t) on the exact overlap window."""
    return intersect(a, a.shift(-t))


def _check_shift_safety(a: IntSet, n: int, trange: Window) -> None:
    worst = max(abs(trange.lo), abs(trange.hi))
    if n + worst > a.window.length:
        t = trange.lo if abs(trange.lo) == worst else trange.hi
        raise InputError(
            f"shift t={t} unsafe: n + |t| = {n + worst} exceeds window length "
            f"{a.window.length}; shrink the shift range or n"
        )


def _sweep(a: IntSet, eps: Fraction, n: int, trange: Window, est, kind: str) -> EpsDeltaResult:
    def one(t: int) -> Fraction:
        return est(shift_intersection(a, t), n).value

    ts = list(range(trange.lo, trange.hi + 1))
    values = par.ordered_map(one, ts)
    per_t = dict(zip(ts, values))
    members = make_set([t for t, v in per_t.items() if v > eps], trange)
    return EpsDeltaResult(eps, n, trange, members, per_t, kind)


def eps_delta_banach(a: IntSet, eps: Fraction, n: int, trange: Window) -> EpsDeltaResult:
    """Shifts t in trange with best-window density of A ∩ (A - t) > eps."""
    if eps < 0:
        raise InputError("eps must be >= 0")
    _check_shift_safety(a, n, trange)
    return _sweep(a, Fraction(eps), n, trange, upper_banach_est, "banach")


def _upper_est_rebased(s: IntSet, m: int) -> DensityEstimate:
    # the intersection window may start above 1; embed it back to lo=1
    if s.window.lo != 1:
        s = IntSet(Window(1, s.window.hi), s.bits << (s.window.lo - 1))
    return upper_asymptotic_est(s, m)


def eps_delta_upper(a: IntSet, eps: Fraction, m: int, trange: Window) -> EpsDeltaResult:
    """Same sweep with the upper asymptotic proxy (window anchored at 1)."""
    if a.window.lo != 1:
        raise InputError("eps_delta_upper needs a window anchored at 1; rebase first")
    if eps < 0:
        raise InputError("eps must be >= 0")
    _check_shift_safety(a, m, trange)
    return _sweep(a, Fraction(eps), m, trange, _upper_est_rebased, "upper")


def delta_syndetic_check(a: IntSet, n: int, g: int, trange: Window) -> dict:
    """Does the 0-threshold delta set over trange have gaps <= g?"""
    if upper_banach_est(a, n).value <= 0:
        raise InputError("set has no members in any sub-window; delta set is trivial")
    res = eps_delta_banach(a, Fraction(0), n, trange)
    gap = syndetic_gap(res.members) if res.members.count >= 2 else None
    return {
        "members": res.members,
        "gap": gap,
        "bound": g,
        "ok": gap is not None and gap <= g,
    }
