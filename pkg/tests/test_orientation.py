import pytest

from kakimizu.errors import NotASink, NTooLarge
from kakimizu.orientation import (
    LinearTree,
    Orientation,
    all_orientations,
    apply_sink_reversal,
    lex_rank_table,
    sinks,
    weight,
)

O = Orientation.from_string


def test_linear_tree():
    t = LinearTree(4)
    assert t.edges == [(1, 2), (2, 3), (3, 4)]
    assert list(t.vertices) == [1, 2, 3, 4]


def test_string_round_trip():
    for n in range(1, 7):
        for rho in all_orientations(n):
            assert O(str(rho)) == rho
    assert O("+−") == O("+-")
    with pytest.raises(ValueError):
        O("+x")


def test_all_orientations():
    assert len(all_orientations(4)) == 8
    assert [str(r) for r in all_orientations(1)] == [""]
    assert [str(r) for r in all_orientations(3)] == ["++", "+-", "-+", "--"]
    with pytest.raises(NTooLarge):
        all_orientations(13)
    assert len(all_orientations(13, cap=13)) == 2**12


@pytest.mark.parametrize("n", range(1, 10))
def test_all_orientations_distinct_sorted(n):
    labels = [str(r) for r in all_orientations(n)]
    assert len(set(labels)) == 2 ** (n - 1)
    assert labels == sorted(labels)
    rank = lex_rank_table(n)
    assert [rank[r.bits] for r in all_orientations(n)] == list(range(2 ** (n - 1)))


@pytest.mark.parametrize(
    "text,expected",
    [("-", {1}), ("+", {2}), ("+-", {2}), ("-+", {1, 3}), ("", {1}), ("++", {3}), ("--", {1})],
)
def test_sinks(text, expected):
    assert sinks(O(text)) == expected


def test_sink_reversal_examples():
    assert str(apply_sink_reversal(O("+-"), 2)) == "-+"
    assert str(apply_sink_reversal(O("-"), 1)) == "+"
    assert apply_sink_reversal(O(""), 1) == O("")
    with pytest.raises(NotASink) as info:
        apply_sink_reversal(O("++"), 2)
    assert info.value.j == 2
    with pytest.raises(NotASink):
        apply_sink_reversal(O("++"), 7)


def test_weight_examples():
    assert weight(Orientation.all_minus(5)) == 0
    assert weight(Orientation.all_plus(4)) == 3
    assert weight(O("++-")) == 2


def _sinks_by_definition(text):
    n = len(text) + 1
    out = set()
    for j in range(1, n + 1):
        incident = []
        if j > 1:
            incident.append(text[j - 2] == "+")  # e_{j-1} points to v_j iff '+'
        if j < n:
            incident.append(text[j - 1] == "-")  # e_j points to v_j iff '-'
        if all(incident):
            out.add(j)
    return out


@pytest.mark.parametrize("n", range(1, 9))
def test_sink_properties_exhaustive(n):
    for rho in all_orientations(n):
        s = sinks(rho)
        assert s, "every orientation of a finite tree has a sink"
        assert s == _sinks_by_definition(str(rho))
        for j in s:
            image = apply_sink_reversal(rho, j)
            delta = weight(image) - weight(rho)
            if n == 1:
                assert delta == 0
            elif j == 1:
                assert delta == 1
            elif j == n:
                assert delta == -1
            else:
                assert delta == 0
                assert j not in sinks(image)
            changed = [i for i in range(n - 1) if str(image)[i] != str(rho)[i]]
            assert changed == [i for i in (j - 2, j - 1) if 0 <= i < n - 1]
