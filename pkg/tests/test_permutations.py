import random
from itertools import combinations

import pytest

from heckelab.permutations import (NotSmoothError, Perm, all_perms, bruhat_leq,
                                   catalan, codominant_of_hessenberg,
                                   coessential_set, enumerate_hessenberg,
                                   hessenberg_of_smooth, is_hessenberg,
                                   parse_hessenberg, parse_perm, perm_to_str,
                                   simple_reflection, transpositions_below)


def brute_length(w):
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])


def subword_interval(w):
    """All z <= w via subwords of one fixed reduced expression: the oracle."""
    word = w.reduced_word()
    n = len(w)
    out = set()
    for bits in range(1 << len(word)):
        z = Perm.identity(n)
        for k, i in enumerate(word):
            if bits >> k & 1:
                z = z * simple_reflection(i, n)
        out.add(z)
    return out


def coessential_scan(w):
    """Direct scan of the defining inequalities (infinity convention)."""
    n = len(w)
    winv = w.inverse()
    big = n + 1

    def wv(i):
        return w[i - 1] if i <= n else big

    def iv(j):
        return winv[j - 1] if j <= n else big

    return frozenset(
        (i, j) for i in range(1, n + 1) for j in range(1, n + 1)
        if wv(i) <= j < wv(i + 1) and iv(j) <= i < iv(j + 1))


def test_length_examples():
    assert Perm.identity(5).length() == 0
    w = parse_perm("245361")
    assert w.length() == 7 == brute_length(w)
    assert Perm((2, 1)).length() == 1


def test_length_random_vs_brute():
    rng = random.Random(2)
    for _ in range(30):
        word = rng.sample(range(1, 9), 8)
        w = Perm(word)
        assert w.length() == brute_length(w)
        assert w.length() == w.inverse().length()


def test_compose_convention():
    w = parse_perm("26754381")
    # right multiplication by s_1 swaps positions 1 and 2
    assert w * simple_reflection(1, 8) == parse_perm("62754381")
    assert w.times_simple(1) == parse_perm("62754381")
    # left multiplication by s_1 swaps the values 1 and 2
    assert simple_reflection(1, 8) * w == parse_perm("16754382")
    e = Perm.identity(8)
    assert w * e == w
    assert w * w.inverse() == e


def test_length_times_simple():
    rng = random.Random(9)
    for _ in range(30):
        w = Perm(rng.sample(range(1, 8), 7))
        for i in range(1, 7):
            assert abs(w.times_simple(i).length() - w.length()) == 1


def test_rank():
    e = Perm.identity(4)
    for i in range(1, 5):
        for j in range(1, 5):
            assert e.rank(i, j) == min(i, j)
    w = parse_perm("3142")
    assert w.rank(2, 1) == 1
    assert w.rank(2, 3) == 2
    with pytest.raises(ValueError):
        w.rank(0, 2)
    with pytest.raises(ValueError):
        w.rank(1, 5)


def test_bruhat_examples():
    assert bruhat_leq(Perm.identity(4), parse_perm("4321"))
    assert bruhat_leq(parse_perm("2134"), parse_perm("2314"))
    assert not bruhat_leq(parse_perm("2134"), parse_perm("1243"))
    with pytest.raises(ValueError):
        bruhat_leq(Perm.identity(3), Perm.identity(4))


@pytest.mark.parametrize("n", [3, 4])
def test_bruhat_vs_subword_oracle_exhaustive(n):
    perms = list(all_perms(n))
    for w in perms:
        below = subword_interval(w)
        for z in perms:
            assert bruhat_leq(z, w) == (z in below), (z, w)


def test_bruhat_vs_subword_oracle_s5():
    perms = list(all_perms(5))
    rng = random.Random(17)
    for w in rng.sample(perms, 25):
        below = subword_interval(w)
        for z in perms:
            assert bruhat_leq(z, w) == (z in below), (z, w)


def test_lower_covers():
    assert Perm.identity(4).lower_covers() == set()
    assert Perm((2, 3, 1)).lower_covers() == {Perm((2, 1, 3)), Perm((1, 3, 2))}
    assert Perm((2, 1)).lower_covers() == {Perm((1, 2))}
    # every cover is one length down and Bruhat-below
    rng = random.Random(3)
    for _ in range(10):
        w = Perm(rng.sample(range(1, 7), 6))
        for z in w.lower_covers():
            assert z.length() == w.length() - 1
            assert bruhat_leq(z, w)


def test_patterns():
    assert parse_perm("3412").contains_pattern((3, 4, 1, 2))
    assert parse_perm("62754381").contains_pattern((4, 2, 3, 1))
    assert not parse_perm("245361").contains_pattern((3, 1, 2))
    assert not Perm.identity(6).contains_pattern((2, 1))
    assert parse_perm("12453").contains_pattern((1, 3, 2))


def test_patterns_vs_brute():
    rng = random.Random(31)
    pats = [(3, 1, 2), (3, 4, 1, 2), (4, 2, 3, 1), (2, 1, 3)]
    for _ in range(40):
        w = Perm(rng.sample(range(1, 8), 7))
        for p in pats:
            brute = any(
                all((p[a] < p[b]) == (w[pos[a]] < w[pos[b]])
                    for a in range(len(p)) for b in range(a + 1, len(p)))
                for pos in combinations(range(7), len(p)))
            assert w.contains_pattern(p) == brute, (w, p)


def test_classify():
    assert parse_perm("245361").classify() == {"smooth": True, "codominant": True}
    assert parse_perm("62754381").classify() == {"smooth": False, "codominant": False}
    assert parse_perm("3142").classify() == {"smooth": True, "codominant": False}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_codominant_implies_smooth(n):
    for w in all_perms(n):
        if w.is_codominant():
            assert w.is_smooth(), w


def test_coessential_set_matches_scan():
    # the dot-diagram example: Coess(245361) = {(1,2),(2,4),(4,5),(6,6)}
    w = parse_perm("245361")
    assert coessential_set(w) == frozenset({(1, 2), (2, 4), (4, 5), (6, 6)})
    # scan of the defining inequalities is the oracle everywhere
    rng = random.Random(12)
    for n in (1, 2, 3, 4):
        for w in all_perms(n):
            assert coessential_set(w) == coessential_scan(w), w
    for _ in range(25):
        w = Perm(rng.sample(range(1, 8), 7))
        assert coessential_set(w) == coessential_scan(w), w
    # the scan keeps the trailing (4,4) pair for 3142 and the diagonal for e
    assert coessential_set(parse_perm("3142")) == frozenset(
        {(2, 1), (2, 3), (4, 4)})
    assert coessential_set(Perm.identity(4)) == frozenset(
        {(1, 1), (2, 2), (3, 3), (4, 4)})


def test_hessenberg_of_smooth():
    assert hessenberg_of_smooth(parse_perm("245361")) == (2, 4, 5, 5, 6, 6)
    assert hessenberg_of_smooth(parse_perm("3142")) == (2, 3, 4, 4)
    assert hessenberg_of_smooth(Perm.identity(5)) == (1, 2, 3, 4, 5)
    with pytest.raises(NotSmoothError):
        hessenberg_of_smooth(parse_perm("4231"))
    with pytest.raises(NotSmoothError):
        hessenberg_of_smooth(parse_perm("3412"))


def test_codominant_of_hessenberg():
    assert codominant_of_hessenberg((2, 4, 5, 5, 6, 6)) == parse_perm("245361")
    assert codominant_of_hessenberg((2, 6, 7, 7, 7, 7, 8, 8)) == parse_perm("26754381")
    assert codominant_of_hessenberg(tuple(range(1, 7))) == Perm.identity(6)
    with pytest.raises(ValueError):
        codominant_of_hessenberg((2, 1, 3))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_codominant_round_trip(n):
    for m in enumerate_hessenberg(n):
        w = codominant_of_hessenberg(m)
        assert w.is_codominant()
        assert hessenberg_of_smooth(w) == m
    for w in all_perms(n):
        if w.is_codominant():
            assert codominant_of_hessenberg(hessenberg_of_smooth(w)) == w


def test_transpositions_below():
    assert transpositions_below(Perm((2, 1))) == frozenset({(1, 2)})
    assert transpositions_below(Perm.identity(4)) == frozenset()
    w = parse_perm("245361")
    ts = transpositions_below(w)
    assert ts == frozenset(
        {(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6)})
    assert len(ts) == w.length()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_lemma22_smooth(n):
    # transpositions below smooth w are exactly (i, j) with j <= m_w(i),
    # and there are l(w) of them
    for w in all_perms(n):
        if not w.is_smooth():
            continue
        m = hessenberg_of_smooth(w)
        expected = frozenset((i, j) for i in range(1, n + 1)
                             for j in range(i + 1, m[i - 1] + 1))
        got = transpositions_below(w)
        assert got == expected, w
        assert len(got) == w.length()


def test_enumerate_hessenberg():
    assert enumerate_hessenberg(1) == [(1,)]
    assert len(enumerate_hessenberg(4)) == 14
    assert len(enumerate_hessenberg(8)) == 1430
    for n in range(1, 11):
        ms = enumerate_hessenberg(n)
        assert len(ms) == catalan(n)
        assert ms == sorted(ms)
        assert all(is_hessenberg(m) for m in ms)


def test_reduced_word():
    rng = random.Random(8)
    for _ in range(25):
        w = Perm(rng.sample(range(1, 9), 8))
        word = w.reduced_word()
        assert len(word) == w.length()
        u = Perm.identity(8)
        for i in word:
            u = u.times_simple(i)
        assert u == w


def test_serialization():
    assert perm_to_str(parse_perm("62754381")) == "62754381"
    w = Perm(tuple(range(1, 12)))
    assert parse_perm(perm_to_str(w)) == w
    assert parse_perm("e", 4) == Perm.identity(4)
    assert parse_perm("2,4,1,3") == parse_perm("2413")
    with pytest.raises(ValueError):
        parse_perm("e")
    with pytest.raises(ValueError):
        parse_perm("1123")
    with pytest.raises(ValueError):
        parse_hessenberg("2,1,3")
    assert parse_hessenberg("2,3,3") == (2, 3, 3)
