import pytest

from heckelab.csf import (IndifferenceGraph, csf, csf_batch, csf_index,
                          csf_key, csf_oracle, edge_count, indifference_graph)
from heckelab.permutations import (Perm, codominant_of_hessenberg,
                                   enumerate_hessenberg, parse_perm)
from heckelab.qpoly import LaurentQ, q_factorial
from heckelab.symfunc import SymmetricFunction, q_factorial_partition

Q = LaurentQ.q()


def test_indifference_graph():
    g = indifference_graph((1, 2, 3, 4))
    assert g.edges == frozenset()
    g = indifference_graph((4, 4, 4, 4))
    assert len(g.edges) == 6
    g = indifference_graph((2, 6, 7, 7, 7, 7, 8, 8))
    assert len(g.edges) == 16
    # edge count equals sum(m(i) - i) equals l(w_m), by the inversion oracle
    assert edge_count((2, 6, 7, 7, 7, 7, 8, 8)) == 16
    assert parse_perm("26754381").length() == 16
    with pytest.raises(ValueError):
        indifference_graph((2, 1, 3))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_edges_match_length_of_codominant(n):
    for m in enumerate_hessenberg(n):
        g = indifference_graph(m)
        assert len(g.edges) == edge_count(m) == codominant_of_hessenberg(m).length()
        assert g.edges == frozenset(
            (i, j) for i in range(1, n + 1) for j in range(i + 1, m[i - 1] + 1))


def test_csf_examples():
    f = csf((1, 2, 3))
    assert f.coeffs == {(1, 1, 1): LaurentQ.integer(6),
                        (2, 1): LaurentQ.integer(3),
                        (3,): LaurentQ.one()}
    assert csf((2, 2)) == SymmetricFunction.basis_element("e", (2,)).scale(1 + Q)
    assert csf((3, 3, 3)) == \
        SymmetricFunction.basis_element("e", (3,)).scale(q_factorial(3))
    assert csf((2, 2)).basis == "m"


def test_csf_oracle_examples():
    assert csf_oracle((2, 2)).coeffs == {(1, 1): 1 + Q}
    assert csf_oracle((1, 2)).coeffs == {(2,): LaurentQ.one(),
                                         (1, 1): LaurentQ.integer(2)}
    with pytest.raises(ValueError):
        csf_oracle((1,) + tuple(range(2, 8)))  # n = 7 beyond the oracle cap


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_csf_matches_oracle_exhaustive(n):
    for m in enumerate_hessenberg(n):
        assert csf(m) == csf_oracle(m), m


def test_csf_top_degree_and_constant_term():
    for m in enumerate_hessenberg(5):
        f = csf(m)
        top = max(c.max_half_exponent() for c in f.coeffs.values())
        assert top == 2 * edge_count(m)
        assert any(c.coefficient_q(0) for c in f.coeffs.values())


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_disjoint_cliques_factorial(n):
    # build the clique Hessenberg function for each partition of n
    from heckelab.symfunc import partitions
    for lam in partitions(n):
        m = []
        start = 1
        for part in lam:
            m.extend([start + part - 1] * part)
            start += part
        m = tuple(m)
        expected = SymmetricFunction.basis_element("e", lam).scale(
            q_factorial_partition(lam))
        assert csf(m) == expected, lam


def test_batch_and_index(tmp_path):
    from heckelab.cache import Cache
    from heckelab.csf import clear_batch_cache
    cache = Cache(str(tmp_path))
    batch = csf_batch(4, cache=cache)
    assert len(batch) == 14
    for m, coeffs in batch.items():
        from heckelab.hecke import poly_to_laurent
        assert SymmetricFunction(
            "m", 4, {lam: poly_to_laurent(p) for lam, p in coeffs.items()}) \
            == csf(m)
    # reload through the disk cache
    clear_batch_cache(4)
    batch2 = csf_batch(4, cache=cache)
    assert batch2 == batch
    index = csf_index(4, cache=cache)
    for m, coeffs in batch.items():
        assert m in index[csf_key(coeffs)]
    # isomorphic embeddings share a csf: the single-edge graphs at n = 4
    assert sorted(index[csf_key(batch[(1, 2, 4, 4)])]) == \
        [(1, 2, 4, 4), (1, 3, 3, 4), (2, 2, 3, 4)]


def test_batch_threads_small():
    from heckelab.csf import clear_batch_cache
    clear_batch_cache(3)
    parallel = csf_batch(3, threads=2)
    clear_batch_cache(3)
    serial = csf_batch(3)
    assert parallel == serial
