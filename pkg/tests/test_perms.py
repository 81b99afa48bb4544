import pytest

from duckwords.errors import InvalidInput
from duckwords.perms import (
    avoids,
    avoids_312,
    check_permutation,
    contains_pattern,
    descent_table,
    enumerate_av312,
    format_permutation,
    left_to_right_maxima,
    normalize,
    parse_permutation,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_normalize():
    assert normalize([3, 1, 7]) == (2, 1, 3)
    assert normalize([]) == ()
    assert normalize([10, 20, 15]) == (1, 3, 2)


def test_normalize_rejects_ties():
    with pytest.raises(InvalidInput):
        normalize([1, 1, 2])


def test_check_permutation():
    assert check_permutation([2, 1, 3]) == (2, 1, 3)
    for bad in ([0, 1], [1, 3], [1, 1]):
        with pytest.raises(InvalidInput):
            check_permutation(bad)


def test_parse_and_format():
    assert parse_permutation("3 2 4 1") == (3, 2, 4, 1)
    assert parse_permutation("3241") == (3, 2, 4, 1)
    assert format_permutation((3, 2, 4, 1)) == "3 2 4 1"
    assert parse_permutation(format_permutation((10, 2, 1, 3, 4, 5, 6, 7, 8, 9))) == (
        10, 2, 1, 3, 4, 5, 6, 7, 8, 9)
    with pytest.raises(InvalidInput):
        parse_permutation("1 2 x")


def test_descent_table():
    t = descent_table((3, 2, 4, 1, 7, 8, 6, 9, 10, 11, 5, 12))
    assert t.descents == ((1, 2), (3, 4), (6, 7), (10, 11))
    assert t.top_heights == (3, 4, 8, 11)
    assert t.bottom_height_set == frozenset({2, 1, 6, 5})


def test_left_to_right_maxima():
    assert left_to_right_maxima((3, 2, 4, 1, 7)) == {1, 3, 5}
    assert left_to_right_maxima(()) == set()


def test_contains_pattern():
    assert contains_pattern((3, 1, 2), (3, 1, 2))
    assert contains_pattern((4, 1, 3, 2), (3, 1, 2))
    assert not contains_pattern((1, 2, 3), (2, 1))
    assert contains_pattern((1, 2, 3), ())


def test_avoids_312_matches_pattern_search():
    import itertools
    for n in range(7):
        for pi in itertools.permutations(range(1, n + 1)):
            assert avoids_312(pi) == avoids(pi, (3, 1, 2))


def test_enumerate_av312_counts_catalan():
    for n in range(8):
        perms = list(enumerate_av312(n))
        assert len(perms) == CATALAN[n]
        assert perms == sorted(perms)  # lexicographic, duplicate-free
        assert all(avoids_312(p) for p in perms)
