from hypothesis import given, strategies as st

from conesigma.pairing import PairPoint, pair_index, unpair_index


def enumerate_antidiagonals(count):
    """Oracle: walk anti-diagonals x+y = 0, 1, 2, ... with y increasing."""
    out = []
    s = 0
    while len(out) < count:
        for y in range(s + 1):
            out.append((s - y, y))
        s += 1
    return out[:count]


ORDER = enumerate_antidiagonals(200)


def test_examples_against_enumeration():
    assert pair_index(0, 0) == 0 == ORDER.index((0, 0))
    assert pair_index(1, 0) == 1 == ORDER.index((1, 0))
    assert pair_index(0, 2) == 5 == ORDER.index((0, 2))
    assert unpair_index(0) == (0, 0)
    assert unpair_index(4) == (1, 1) == ORDER[4]
    assert unpair_index(9) == (0, 3) == ORDER[9]


def test_first_six():
    assert [tuple(unpair_index(n)) for n in range(6)] == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert isinstance(unpair_index(3), PairPoint)


def test_agrees_with_enumeration():
    assert [tuple(unpair_index(n)) for n in range(200)] == ORDER


def test_exhaustive_roundtrips():
    assert all(pair_index(*unpair_index(n)) == n for n in range(10**6))
    assert all(unpair_index(pair_index(x, y)) == (x, y) for x in range(1000) for y in range(1000))


@given(st.integers(0, 10**30), st.integers(0, 10**30))
def test_roundtrip_huge(x, y):
    assert unpair_index(pair_index(x, y)) == (x, y)
