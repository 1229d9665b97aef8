import itertools

import pytest
from hypothesis import strategies as st


def naive_total(lst, seq, decide, full=True):
    """Reference cost simulation over a plain Python list.

    `decide(j, position)` says whether request j (0-based) moves to front.
    """
    lst = list(lst)
    total = 0
    for j, s in enumerate(seq):
        i = lst.index(s) + 1
        total += i if full else i - 1
        if decide(j, i):
            lst.remove(s)
            lst.insert(0, s)
    return total


def enumerate_min(lst, seq, full=True):
    """Minimum over every move/stay vector, by plain enumeration."""
    return min(
        naive_total(lst, seq, lambda j, i, d=d: d[j], full)
        for d in itertools.product((False, True), repeat=len(seq))
    )


@st.composite
def instances(draw, max_l=6, max_n=20, min_n=0):
    l = draw(st.integers(1, max_l))
    lst = list(range(1, l + 1))
    seq = draw(st.lists(st.sampled_from(lst), min_size=min_n, max_size=max_n))
    order = draw(st.permutations(lst))
    return list(order), seq


@pytest.fixture
def worked_list():
    return [1, 2, 3]
