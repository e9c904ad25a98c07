"""Pattern embedding, shift sets, and AP search against exhaustive scans."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import brute
from diffsets import (
    InputError,
    IntSet,
    Pattern,
    Window,
    ap_shift_density,
    delta_set,
    dense_embed_est,
    embed_witness,
    find_ap,
    make_set,
    restrict,
    shift_set_of,
    window_embeddable,
)


def residues(classes, modulus, lo, hi):
    return make_set([x for x in range(lo, hi + 1) if x % modulus in classes], Window(lo, hi))


@st.composite
def embed_instances(draw, max_len=60, max_span=8):
    length = draw(st.integers(max_span + 2, max_len))
    y_bits = draw(st.integers(0, (1 << length) - 1))
    y = IntSet(Window(0, length - 1), y_bits)
    k = draw(st.integers(1, 4))
    elems = draw(
        st.lists(st.integers(0, max_span), min_size=k, max_size=k, unique=True)
    )
    f = Pattern(tuple(sorted(elems)))
    s_hi = length - 1 - f.elems[-1]
    s_lo = draw(st.integers(0, s_hi))
    return f, y, Window(s_lo, s_hi)


def test_pattern_validation():
    with pytest.raises(InputError):
        Pattern(())
    with pytest.raises(InputError):
        Pattern((3, 3))
    with pytest.raises(InputError):
        Pattern((5, 2))
    assert Pattern((0, 4, 9)).elems == (0, 4, 9)


@given(embed_instances())
def test_shift_set_matches_brute(inst):
    f, y, srange = inst
    got = shift_set_of(f, y, srange)
    want = brute.embed_shifts(f.elems, set(y.members()), srange.lo, srange.hi)
    assert set(got.members()) == want
    assert got.window == srange


@given(embed_instances())
def test_embed_witness_is_least(inst):
    f, y, srange = inst
    w = embed_witness(f, y, srange)
    shifts = brute.embed_shifts(f.elems, set(y.members()), srange.lo, srange.hi)
    if w is None:
        assert not shifts
    else:
        assert w.t == min(shifts)
        assert all(w.t + e in y for e in f.elems)


@given(embed_instances())
def test_singleton_pattern_is_shifted_target(inst):
    _, y, srange = inst
    e = y.window.hi - srange.hi  # largest element a singleton may carry here
    got = shift_set_of(Pattern((e,)), y, srange)
    assert set(got.members()) == set(restrict(y.shift(-e), srange).members())


def test_srange_overflow_rejected():
    y = residues({0}, 2, 0, 99)
    with pytest.raises(InputError):
        shift_set_of(Pattern((0, 4)), y, Window(0, 96))
    with pytest.raises(InputError):
        shift_set_of(Pattern((-1, 0)), y, Window(0, 10))
    # exact fit is fine
    shift_set_of(Pattern((0, 4)), y, Window(0, 95))


def test_shift_set_frozen_examples():
    y = residues({0, 1}, 5, 0, 4999)
    srange = Window(0, 4000)
    s = shift_set_of(Pattern((0, 5)), y, srange)
    assert set(s.members()) == set(restrict(y, srange).members())
    assert dense_embed_est(Pattern((0, 5)), y, srange, 500).value == Fraction(2, 5)

    evens = residues({0}, 2, 0, 999)
    assert embed_witness(Pattern((0, 2)), evens, Window(0, 900)).t == 0
    assert embed_witness(Pattern((0, 1)), evens, Window(0, 900)) is None
    assert dense_embed_est(Pattern((0, 1)), evens, Window(0, 900), 100).value == 0
    assert not shift_set_of(Pattern((0, 1, 2, 3)), evens, Window(0, 900))


@given(embed_instances(), st.integers(1, 20))
def test_dense_embed_matches_direct_estimate(inst, n):
    f, y, srange = inst
    s = shift_set_of(f, y, srange)
    if n > srange.length:
        with pytest.raises(InputError):
            dense_embed_est(f, y, srange, n)
        return
    got = dense_embed_est(f, y, srange, n)
    want = brute.upper_banach(set(s.members()), srange.lo, srange.hi, n)
    assert (got.value, got.at) == want


# ---------------------------------------------------------------------------
# window embeddability


@given(st.data())
def test_subset_always_window_embeddable(data):
    length = data.draw(st.integers(5, 50))
    y_bits = data.draw(st.integers(1, (1 << length) - 1))
    y = IntSet(Window(0, length - 1), y_bits)
    x_bits = y_bits & data.draw(st.integers(0, (1 << length) - 1))
    x = IntSet(y.window, x_bits)
    m = data.draw(st.integers(1, length))
    rep = window_embeddable(x, y, m, Window(0, length - m))
    assert rep.ok


@given(st.data())
def test_window_embeddable_matches_per_trace_scan(data):
    length = data.draw(st.integers(4, 28))
    x = IntSet(Window(0, length - 1), data.draw(st.integers(0, (1 << length) - 1)))
    y = IntSet(Window(0, length - 1), data.draw(st.integers(0, (1 << length) - 1)))
    m = data.draw(st.integers(1, min(6, length)))
    srange = Window(0, length - m)
    rep = window_embeddable(x, y, m, srange)
    ymem = set(y.members())
    failures = []
    for a in range(0, length - m + 1):
        pat = tuple(e - a for e in x.members() if a <= e < a + m)
        if pat and not brute.embed_shifts(pat, ymem, srange.lo, srange.hi):
            failures.append((a, pat))
    if rep.ok:
        assert not failures
    else:
        assert failures and (rep.failing_offset, rep.failing_pattern.elems) == failures[0]


def test_window_embeddable_frozen():
    odds = residues({1}, 2, 0, 199)
    evens = residues({0}, 2, 0, 199)
    assert window_embeddable(odds, evens, 1, Window(0, 150)).ok
    assert window_embeddable(odds, evens, 5, Window(0, 150)).ok

    pair = make_set([0, 1], Window(0, 99))
    rep = window_embeddable(pair, evens, 2, Window(0, 99))
    assert not rep.ok
    assert rep.failing_offset == 0
    assert rep.failing_pattern.elems == (0, 1)

    with pytest.raises(InputError):
        window_embeddable(pair, evens, 0, Window(0, 10))


@given(st.data())
def test_delta_monotone_under_pair_embedding(data):
    # every 2-point trace of X embeds into Y  =>  small differences of X are
    # differences of Y
    length = data.draw(st.integers(6, 30))
    x = IntSet(Window(0, length - 1), data.draw(st.integers(0, (1 << length) - 1)))
    y = IntSet(Window(0, 2 * length - 1), data.draw(st.integers(0, (1 << (2 * length)) - 1)))
    m = data.draw(st.integers(2, min(8, length)))
    srange = Window(0, y.window.hi - (m - 1))
    rep = window_embeddable(x, y, m, srange)
    if not rep.ok:
        return
    dx = set(delta_set(x).members())
    dy = set(delta_set(y).members())
    small = {d for d in dx if 0 < d < m}
    assert small <= dy


# ---------------------------------------------------------------------------
# arithmetic progressions


def brute_ap(members, lo, hi, k):
    found = []
    for start in sorted(members):
        for d in range(1, (hi - start) // max(k - 1, 1) + 1):
            if all(start + j * d in members for j in range(k)):
                found.append((start, d))
    return min(found) if found else None


@given(st.data())
def test_find_ap_matches_brute(data):
    length = data.draw(st.integers(3, 30))
    a = IntSet(Window(0, length - 1), data.draw(st.integers(0, (1 << length) - 1)))
    k = data.draw(st.integers(2, 5))
    got = find_ap(a, k)
    want = brute_ap(set(a.members()), 0, length - 1, k)
    assert got == want


def test_find_ap_frozen():
    evens = residues({0}, 2, 0, 99)
    assert find_ap(evens, 5) == (0, 2)
    block = make_set(list(range(7)), Window(0, 20))
    assert find_ap(block, 7) == (0, 1)
    assert find_ap(make_set([0, 1], Window(0, 10)), 3) is None
    assert find_ap(IntSet(Window(3, 9), 0), 2) is None
    # lexicographic tie rule: least start wins before least difference
    a = make_set([0, 2, 3, 4, 6], Window(0, 6))
    assert find_ap(a, 3) == (0, 2)


def test_ap_shift_density_frozen():
    y = residues({0, 1}, 5, 0, 4999)
    assert ap_shift_density(y, 5, 3, 500).value == Fraction(2, 5)
    evens = residues({0}, 2, 0, 999)
    assert ap_shift_density(evens, 1, 2, 100).value == 0
    full = IntSet(Window(0, 99), (1 << 100) - 1)
    assert ap_shift_density(full, 3, 4, 10).value == 1
    with pytest.raises(InputError):
        ap_shift_density(evens, 0, 3, 10)


def test_ap_preserved_by_embedding():
    # X has a 3-term AP of span 4 inside every length-5 trace rule; if every
    # trace embeds, Y must contain the progression too
    x = make_set([10, 12, 14], Window(10, 14))
    y = residues({0}, 2, 0, 199)
    rep = window_embeddable(x, y, 5, Window(0, 195))
    assert rep.ok
    assert find_ap(x, 3) is not None
    assert find_ap(y, 3) is not None
