import itertools

import pytest
from hypothesis import given

from bpdmonk.perm import Permutation, all_perms, parse_perm

from conftest import brute_length, permutations


def test_from_one_line():
    pi = Permutation.from_one_line([2, 3, 5, 1, 4])
    assert pi.values == (2, 3, 5, 1, 4)
    assert pi(3) == 5
    assert Permutation.from_one_line([1]).n == 1


@pytest.mark.parametrize("bad", [[1, 1, 2], [0, 1], [1, 3], []])
def test_from_one_line_rejects(bad):
    with pytest.raises(ValueError):
        Permutation.from_one_line(bad)


def test_parse_perm_separators():
    assert parse_perm("2 3 5 1 4") == parse_perm("2,3,5,1,4") == parse_perm(["2", "3", "5", "1", "4"])
    with pytest.raises(ValueError):
        parse_perm("1 a")


@pytest.mark.parametrize("text,expected", [("1 2", 0), ("3 2 1", 3), ("2 3 5 1 4", 4)])
def test_length(text, expected):
    pi = parse_perm(text)
    assert pi.length() == expected == brute_length(pi.values)


def test_apply_t():
    assert parse_perm("1 2 4 3").apply_t(1, 2) == parse_perm("2 1 4 3")
    assert parse_perm("2 3 1").apply_t(1, 3) == parse_perm("1 3 2")
    with pytest.raises(ValueError):
        parse_perm("1 2").apply_t(2, 1)
    with pytest.raises(ValueError):
        parse_perm("1 2").apply_t(1, 3)


@given(permutations(min_n=2))
def test_apply_t_involution(pi):
    for a, b in itertools.combinations(range(1, pi.n + 1), 2):
        assert pi.apply_t(a, b).apply_t(a, b) == pi


def test_is_cover_examples():
    assert parse_perm("1 2").is_cover_t(1, 2)
    assert not parse_perm("3 2 1").is_cover_t(1, 3)
    # 4213 has length 4, not 1243's length + 1
    assert brute_length((4, 2, 1, 3)) == 4
    assert not parse_perm("1 2 4 3").is_cover_t(1, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_cover_agrees_with_length_criterion(n):
    for pi in all_perms(n):
        base = brute_length(pi.values)
        for a, b in itertools.combinations(range(1, n + 1), 2):
            swapped = pi.apply_t(a, b)
            diff = brute_length(swapped.values) - base
            assert diff % 2 == 1
            assert pi.is_cover_t(a, b) == (diff == 1)


def test_monk_targets_examples():
    t = parse_perm("1 3 2").monk_targets(1)
    assert (t.ks, t.ls) == ((), (2, 3)) and t.precondition
    t = parse_perm("1 2").monk_targets(1)
    assert (t.ks, t.ls) == ((), (2,))
    t = parse_perm("2 1").monk_targets(1)
    assert (t.ks, t.ls) == ((), ()) and not t.precondition
    with pytest.raises(ValueError):
        parse_perm("2 1").monk_targets(2)


@pytest.mark.parametrize("n", range(2, 7))
def test_monk_precondition_iff_larger_value_to_the_right(n):
    for pi in all_perms(n):
        for alpha in range(1, n):
            brute = any(
                brute_length(pi.apply_t(alpha, l).values) == brute_length(pi.values) + 1
                for l in range(alpha + 1, n + 1))
            larger = any(pi(m) > pi(alpha) for m in range(alpha + 1, n + 1))
            assert pi.monk_targets(alpha).precondition == brute == larger


@given(permutations())
def test_inverse(pi):
    inv = pi.inverse()
    assert all(inv(pi(i)) == i for i in range(1, pi.n + 1))
