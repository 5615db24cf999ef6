import itertools

import pytest
from hypothesis import strategies as st

from bpdmonk.grid import validate
from bpdmonk.perm import Permutation, all_perms


@st.composite
def permutations(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


def monk_cases(n):
    """(pi, alpha) pairs in S_n satisfying the Monk precondition."""
    return [
        (pi, a) for pi in all_perms(n) for a in range(1, n)
        if pi.monk_targets(a).precondition
    ]


def brute_length(values):
    return sum(1 for a, b in itertools.combinations(values, 2) if a > b)


@pytest.fixture
def identity2():
    return validate(["r-", "|r"])


@pytest.fixture
def bpd21():
    return validate([".r", "r+"])


@pytest.fixture
def almost21():
    return validate([".r", "rb"])
