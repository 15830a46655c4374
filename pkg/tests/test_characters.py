import random

import pytest

from heckelab.characters import (InterpolationError, chi, chi_element,
                                 character_table, cycle_type, frobenius_ch,
                                 frobenius_cprime, min_class_rep,
                                 murnaghan_nakayama, standard_tableaux,
                                 _chi_poly_from_word)
from heckelab.hecke import HeckeElement, cprime, cprime_normalized
from heckelab.permutations import Perm, all_perms, parse_perm
from heckelab.qpoly import LaurentQ
from heckelab.symfunc import (SymmetricFunction, num_syt, partitions,
                              q_factorial_partition)

Q = LaurentQ.q()


def alternate_word(w):
    """Reduced word built by rightmost descents; differs from the canonical
    leftmost-descent word in general."""
    w = list(w)
    rev = []
    while True:
        descents = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not descents:
            break
        i = descents[-1]
        w[i], w[i + 1] = w[i + 1], w[i]
        rev.append(i + 1)
    return tuple(reversed(rev))


def test_standard_tableaux():
    assert len(standard_tableaux((2, 1))) == 2
    assert len(standard_tableaux((3, 2, 1))) == num_syt((3, 2, 1))
    assert standard_tableaux((2,)) == (((1, 2),),)


def test_one_dimensional_characters():
    rng = random.Random(1)
    for n in (3, 4, 5):
        for _ in range(5):
            w = Perm(rng.sample(range(1, n + 1), n))
            assert chi((n,), w) == Q ** w.length()
            assert chi((1,) * n, w) == LaurentQ.integer((-1) ** w.length())


def test_n2_explicit():
    s = Perm((2, 1))
    assert chi((2,), s) == Q
    assert chi((1, 1), s) == LaurentQ.integer(-1)


def test_trace_of_identity():
    for n in (3, 4, 5):
        e = Perm.identity(n)
        for lam in partitions(n):
            assert chi(lam, e) == LaurentQ.integer(num_syt(lam))


def test_degree_bound():
    rng = random.Random(3)
    for _ in range(10):
        w = Perm(rng.sample(range(1, 6), 5))
        for lam in partitions(5):
            c = chi(lam, w)
            hi = c.max_half_exponent()
            assert hi is None or hi <= 2 * w.length()
            assert c.is_integer_powers()


def test_reduced_word_independence():
    rng = random.Random(19)
    pairs = []
    for n in (3, 4, 5):
        perms = list(all_perms(n))
        for _ in range(30):
            pairs.append((rng.choice(partitions(n)), rng.choice(perms)))
    perms6 = list(all_perms(6))
    for _ in range(10):
        pairs.append((rng.choice(partitions(6)), rng.choice(perms6)))
    checked = 0
    for lam, w in pairs:
        first = _chi_poly_from_word(lam, w.reduced_word())
        second = _chi_poly_from_word(lam, alternate_word(w))
        assert first == second, (lam, w)
        checked += 1
    assert checked == 100


def test_chi_element_examples():
    for lam in partitions(4):
        assert chi_element(lam, HeckeElement.unit(4)) == \
            LaurentQ.integer(num_syt(lam))
    b = cprime(Perm((2, 1)))  # q^(1/2) C'_s in the scaled form T_e + T_s
    assert chi_element((2,), b) == 1 + Q
    assert chi_element((1, 1), b) == LaurentQ.zero()
    # the same through the normalized element with its half-power prefactor
    half = LaurentQ.q_half(1)
    normalized = cprime_normalized(Perm((2, 1))).scale(half)
    assert chi_element((2,), normalized) == 1 + Q


def test_frobenius_examples():
    assert frobenius_ch(HeckeElement.unit(3)) == \
        SymmetricFunction.basis_element("h", (1, 1, 1))
    assert frobenius_ch(cprime(Perm((2, 1)))) == \
        SymmetricFunction.basis_element("h", (2,)).scale(1 + Q)
    assert frobenius_ch(cprime(Perm((3, 2, 1)))) == \
        SymmetricFunction.basis_element("h", (3,)).scale(
            q_factorial_partition((3,)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_frobenius_cprime_matches_general_path(n):
    for w in all_perms(n):
        assert frobenius_cprime(w) == frobenius_ch(cprime(w)), w


def test_character_table_consistency():
    table = character_table(4)
    for lam in partitions(4):
        for w in all_perms(4):
            from heckelab.hecke import poly_to_laurent
            assert poly_to_laurent(table[lam][w]) == chi(lam, w)


def test_character_table_cap():
    with pytest.raises(ValueError):
        character_table(7)


def test_character_table_disk_cache(tmp_path):
    from heckelab.cache import Cache
    from heckelab.characters import _tables
    cache = Cache(str(tmp_path))
    table = character_table(3, cache=cache)
    _tables.pop(3)
    reloaded = character_table(3, cache=cache)
    assert reloaded == table


def test_interpolation_spare_point_guard():
    # tampering with a trace must be caught by the spare sample point
    from heckelab.characters import _interpolate, _poly_eval
    xs = [2, 3, 4, 5]
    poly = (1, 2)  # 1 + 2q
    ys = [_poly_eval(poly, x) for x in xs]
    assert _interpolate(xs[:2], ys[:2]) == poly
    ys[3] += 1
    got = _interpolate(xs[:3], ys[:3])
    assert _poly_eval(got, xs[3]) != ys[3]


def test_cycle_type_and_class_reps():
    assert cycle_type(Perm((2, 3, 1, 5, 4))) == (3, 2)
    assert cycle_type(Perm.identity(4)) == (1, 1, 1, 1)
    for n in (3, 4, 5, 6):
        for mu in partitions(n):
            rep = min_class_rep(mu)
            assert cycle_type(rep) == mu
            assert rep.length() == sum(p - 1 for p in mu)


def test_murnaghan_nakayama_basics():
    assert murnaghan_nakayama((3,), (1, 1, 1)) == 1
    assert murnaghan_nakayama((1, 1, 1), (3,)) == 1
    assert murnaghan_nakayama((2, 1), (1, 1, 1)) == 2
    assert murnaghan_nakayama((2, 1), (3,)) == -1
    # column orthogonality at the identity class: sum f^lam^2 = n!
    import math
    for n in (4, 5, 6):
        assert sum(murnaghan_nakayama(lam, (1,) * n) ** 2
                   for lam in partitions(n)) == math.factorial(n)
    # sign character
    for n in (4, 5):
        for mu in partitions(n):
            assert murnaghan_nakayama((1,) * n, mu) == (-1) ** (n - len(mu))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_q1_matches_murnaghan_nakayama(n):
    table = character_table(n)
    for lam in partitions(n):
        for w in all_perms(n):
            value = sum(table[lam][w])
            assert value == murnaghan_nakayama(lam, cycle_type(w)), (lam, w)


def test_haiman_unimodality_spot():
    # chi^lam(q^(l/2) C'_w) is nonnegative, palindromic, unimodal
    for w in all_perms(4):
        b = cprime(w)
        for lam in partitions(4):
            props = chi_element(lam, b).props()
            assert props.nonnegative and props.palindromic and props.unimodal


def test_partition_size_guard():
    with pytest.raises(ValueError):
        chi((2, 1), Perm.identity(4))
