import pytest
from hypothesis import given
from hypothesis import strategies as st

import brute
from diffsets import (
    InputError,
    IntSet,
    Window,
    complement_in,
    delta_set,
    difference_set,
    dilate,
    empty_set,
    full_set,
    intersect,
    make_set,
    quotient,
    read_set_file,
    restrict,
    sumset,
    union,
    write_set_file,
)

windows = st.builds(
    lambda lo, length: Window(lo, lo + length),
    st.integers(-50, 50),
    st.integers(0, 60),
)


@st.composite
def intsets(draw, window=None):
    w = draw(windows) if window is None else window
    bits = draw(st.integers(0, (1 << w.length) - 1))
    return IntSet(w, bits)


def test_window_basics():
    w = Window(-3, 4)
    assert w.length == 8
    assert -3 in w and 4 in w and 5 not in w
    assert w.shift(10) == Window(7, 14)
    assert w.intersect(Window(0, 99)) == Window(0, 4)
    assert w.hull(Window(10, 11)) == Window(-3, 11)
    assert w.overlaps(Window(4, 9))
    assert not w.overlaps(Window(5, 9))


def test_window_rejects_empty():
    with pytest.raises(InputError):
        Window(3, 2)


def test_window_intersect_disjoint_raises():
    with pytest.raises(InputError):
        Window(0, 3).intersect(Window(5, 9))


def test_make_set_membership():
    s = make_set([1, 4, 7], Window(0, 10))
    assert sorted(s) == [1, 4, 7]
    assert 4 in s and 5 not in s and 100 not in s
    assert len(s) == 3 and s.min() == 1 and s.max() == 7
    assert bool(s)
    assert not empty_set(Window(0, 3))


def test_make_set_outside_window_raises():
    with pytest.raises(InputError):
        make_set([11], Window(0, 10))


def test_full_and_complement():
    w = Window(2, 6)
    assert sorted(full_set(w)) == [2, 3, 4, 5, 6]
    s = make_set([3, 5], w)
    assert sorted(complement_in(s, w)) == [2, 4, 6]
    # members of A outside the target window are ignored
    assert sorted(complement_in(s, Window(4, 6))) == [4, 6]


@given(intsets(), st.integers(-30, 30))
def test_shift_relabels_members(a, t):
    assert sorted(a.shift(t)) == [x + t for x in sorted(a)]


@given(intsets())
def test_restrict_clips(a):
    w = Window(a.window.lo + a.window.length // 3, a.window.hi)
    r = restrict(a, w)
    assert set(r) == {x for x in a if x in w}
    assert r.window == w


def test_restrict_disjoint_is_empty():
    a = make_set([1, 2], Window(0, 5))
    r = restrict(a, Window(10, 12))
    assert r.window == Window(10, 12) and not r


@given(intsets(), intsets())
def test_union_matches_sets(a, b):
    u = union(a, b)
    assert set(u) == set(a) | set(b)
    assert u.window == a.window.hull(b.window)


@given(intsets(), intsets())
def test_intersect_matches_sets(a, b):
    if not a.window.overlaps(b.window):
        with pytest.raises(InputError):
            intersect(a, b)
        return
    assert set(intersect(a, b)) == set(a) & set(b)


@given(intsets(), intsets())
def test_difference_set_matches_brute(a, b):
    d = difference_set(a, b)
    assert set(d) == brute.difference(set(a), set(b))
    assert d.window == Window(a.window.lo - b.window.hi, a.window.hi - b.window.lo)


@given(intsets(), intsets())
def test_sumset_matches_brute(a, b):
    assert set(sumset(a, b)) == brute.sumset(set(a), set(b))


@given(intsets())
def test_delta_set_symmetric_with_zero(a):
    d = delta_set(a)
    assert set(d) == {x - y for x in a for y in a}
    if a:
        assert 0 in d
        assert all(-x in d for x in d)


def test_difference_set_small_example():
    a = make_set([0, 1, 5], Window(0, 5))
    b = make_set([2, 3], Window(2, 3))
    assert sorted(difference_set(a, b)) == [-3, -2, -1, 2, 3]


@given(intsets(), st.integers(-3, 3).filter(lambda h: h != 0))
def test_dilate_matches_brute(a, h):
    assert set(dilate(a, h)) == {h * x for x in a}


def test_dilate_zero_raises():
    with pytest.raises(InputError):
        dilate(make_set([1], Window(0, 2)), 0)


@given(intsets(), st.integers(-4, 4))
def test_quotient_matches_brute(a, h):
    q = quotient(a, h)
    if h == 0:
        # degenerate fibre: everything or nothing depending on 0 in A
        expect_full = 0 in a
        assert (set(q) == set(range(a.window.lo, a.window.hi + 1))) == expect_full
        if not expect_full:
            assert not q
        return
    lo, hi = a.window.lo, a.window.hi
    want = {x for x in range(-200, 201) if lo <= h * x <= hi and h * x in a}
    assert set(q) == want


@given(intsets())
def test_file_roundtrip_bits(tmp_path_factory, a):
    path = tmp_path_factory.mktemp("sets") / "a.set"
    write_set_file(a, path, "bits")
    back = read_set_file(path)
    assert back.window == a.window and back.bits == a.bits


def test_file_roundtrip_list(tmp_path):
    a = make_set([-3, 0, 7], Window(-5, 10))
    path = tmp_path / "a.set"
    write_set_file(a, path, "list")
    back = read_set_file(path)
    # list format loses the window; it is inferred from the members
    assert sorted(back) == [-3, 0, 7]
    assert back.window == Window(-3, 7)


def test_read_set_file_rejects_garbage(tmp_path):
    p = tmp_path / "bad.set"
    p.write_text("not a number\n")
    with pytest.raises(InputError):
        read_set_file(p)
    p.write_text("")
    with pytest.raises(InputError):
        read_set_file(p)


def test_read_bits_window_override(tmp_path):
    a = make_set([2, 4], Window(1, 5))
    p = tmp_path / "a.set"
    write_set_file(a, p, "bits")
    wider = read_set_file(p, Window(0, 9))
    assert wider.window == Window(0, 9) and sorted(wider) == [2, 4]
    with pytest.raises(InputError):
        read_set_file(p, Window(2, 4))


def test_intset_rejects_bits_outside_window():
    with pytest.raises(InputError):
        IntSet(Window(0, 2), 0b1000)
    with pytest.raises(InputError):
        IntSet(Window(0, 2), -1)
