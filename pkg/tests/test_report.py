"""Report serialization rules and the thread plumbing."""

import json
import os
import subprocess
import sys
from dataclasses import dataclass
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diffsets import (
    InputError,
    IntSet,
    Pattern,
    Report,
    Window,
    make_set,
    parse_fraction,
    render,
    to_jsonable,
)
from diffsets.par import ENV_VAR, ordered_map, thread_count
from diffsets.report import MEMBER_LIST_CUTOFF, frac_str, set_to_json, write_csv


@given(st.fractions(max_denominator=10**6))
def test_fraction_string_roundtrip(f):
    assert parse_fraction(frac_str(f)) == f


def test_parse_fraction_rejects_garbage():
    with pytest.raises(InputError):
        parse_fraction("one half")
    with pytest.raises(InputError):
        parse_fraction("1/0")
    assert parse_fraction(" 3/10 ") == Fraction(3, 10)
    assert parse_fraction("2") == 2


def test_set_to_json_small_lists_members():
    a = make_set([0, 2, 5], Window(0, 9))
    d = set_to_json(a)
    assert d == {"window": [0, 9], "count": 3, "members": [0, 2, 5]}


def test_set_to_json_large_goes_hex():
    w = Window(1, MEMBER_LIST_CUTOFF + 10)
    a = IntSet(w, (1 << w.length) - 1)
    d = set_to_json(a)
    assert "members" not in d
    assert int(d["bits_hex"], 16) == a.bits
    assert d["count"] == w.length


def test_to_jsonable_shapes():
    assert to_jsonable(Fraction(3, 10)) == "3/10"
    assert to_jsonable(Fraction(2)) == "2"
    assert to_jsonable(Window(-5, 5)) == [-5, 5]
    assert to_jsonable(Pattern((1, 4))) == [1, 4]
    assert to_jsonable({1: Fraction(1, 2)}) == {"1": "1/2"}
    assert to_jsonable((1, "x", None, True)) == [1, "x", None, True]

    @dataclass
    class Leaf:
        value: Fraction
        tag: str

    assert to_jsonable(Leaf(Fraction(1, 3), "t")) == {"value": "1/3", "tag": "t"}

    with pytest.raises(InputError):
        to_jsonable(object())


def test_render_is_canonical():
    rep = Report("analyze", "0.1.0", results={"b": Fraction(1, 2), "a": 1})
    text = render(rep)
    assert text.endswith("\n")
    parsed = json.loads(text)
    assert parsed["results"] == {"a": 1, "b": "1/2"}
    keys = list(parsed.keys())
    assert keys == sorted(keys)
    # canonical form: same report renders to identical bytes
    assert text == render(Report("analyze", "0.1.0", results={"b": Fraction(1, 2), "a": 1}))


def test_write_csv_formats_fractions(tmp_path):
    path = tmp_path / "out.csv"
    write_csv(str(path), ["t", "density"], [(0, Fraction(2, 5)), (1, Fraction(1, 5))])
    rows = path.read_text().strip().splitlines()
    assert rows[0] == "t,density"
    assert rows[1] == "0,2/5"
    assert rows[2] == "1,1/5"


# ---------------------------------------------------------------------------
# thread plumbing


def test_ordered_map_preserves_order():
    items = list(range(37))
    assert ordered_map(lambda x: x * x, items) == [x * x for x in items]


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv(ENV_VAR, "3")
    assert thread_count() == 3
    monkeypatch.setenv(ENV_VAR, "0")
    assert thread_count() == 1
    monkeypatch.setenv(ENV_VAR, "not a number")
    assert thread_count() == 1
    monkeypatch.delenv(ENV_VAR)
    assert thread_count() >= 1


def test_ordered_map_identical_across_thread_counts():
    code = (
        "from diffsets import eps_delta_banach, Window\n"
        "from diffsets.gen import bernoulli_set\n"
        "from fractions import Fraction\n"
        "a = bernoulli_set(Window(0, 4999), Fraction(1, 2), 11)\n"
        "r = eps_delta_banach(a, Fraction(1, 5), 500, Window(-40, 40))\n"
        "print(sorted(r.members.members()))\n"
    )
    outs = []
    for threads in ("1", "8"):
        env = dict(os.environ, **{ENV_VAR: threads})
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        assert out.returncode == 0, out.stderr
        outs.append(out.stdout)
    assert outs[0] == outs[1]
