import pytest

from heckelab.characters import frobenius_cprime
from heckelab.csf import csf, edge_count
from heckelab.lab import (InternalContradictionError, MomentGraph,
                          PreconditionError, check_suite,
                          counterexample_search, decompose_codominant,
                          modular_relation, modular_triples, moment_graph,
                          smooth_perms, smooth_reduce, verify_decomposition)
from heckelab.permutations import (NotSmoothError, Perm, all_perms,
                                   enumerate_hessenberg, parse_perm)
from heckelab.qpoly import LaurentQ
from heckelab.symfunc import omega

Q = LaurentQ.q()


def test_smooth_reduce_examples():
    assert smooth_reduce(parse_perm("3142")) == parse_perm("2341")
    w = parse_perm("245361")
    assert smooth_reduce(w) == w
    with pytest.raises(NotSmoothError):
        smooth_reduce(parse_perm("4231"))


def test_smooth_counts():
    # in S4 exactly the two singular patterns themselves are singular
    assert len(smooth_perms(4)) == 22


def test_moment_graph():
    assert moment_graph(Perm((2, 1))) == MomentGraph(2, frozenset({(1, 2)}))
    assert moment_graph(Perm.identity(3)).transpositions == frozenset()
    assert moment_graph(parse_perm("3142")) == moment_graph(parse_perm("2341"))
    # fast and slow paths agree on smooth permutations
    for w in all_perms(4):
        if w.is_smooth():
            assert moment_graph(w, use_hessenberg=True) == \
                moment_graph(w, use_hessenberg=False)


def test_modular_relation_examples():
    rel = modular_relation(Perm((2, 3, 1)), 1)
    assert rel.case == "smooth" and rel.z == Perm((2, 1, 3))
    assert rel.verified is True
    rel = modular_relation(Perm((3, 1, 2)), 2)
    assert rel.case == "smooth" and rel.z == Perm((1, 3, 2))
    rel = modular_relation(parse_perm("26754381"), 1)
    assert rel.case == "singular"
    assert rel.ws == parse_perm("62754381")
    assert rel.verified is None  # asserted by the theorem at this rank
    assert "ch(C'[62754381])" in rel.identity()


def test_modular_relation_preconditions():
    with pytest.raises(PreconditionError):
        modular_relation(parse_perm("4231"), 1)  # singular w
    with pytest.raises(PreconditionError):
        modular_relation(Perm((2, 3, 1)), 2)  # ws < w
    with pytest.raises(PreconditionError):
        modular_relation(Perm.identity(3), 1)  # sw > w


@pytest.mark.parametrize("n", [3, 4, 5])
def test_modular_relation_exhaustive(n):
    pairs = 0
    for w in smooth_perms(n):
        winv = w.inverse()
        for i in range(1, n):
            if w[i - 1] < w[i] and winv[i - 1] > winv[i]:
                rel = modular_relation(w, i)
                assert rel.verified is True
                pairs += 1
    assert pairs > 0


def test_prop31_dichotomy_n7():
    (rep,) = check_suite(7, ["prop31"])
    assert rep.status == "pass"


def test_modular_triples():
    triples = modular_triples(3)
    assert ((1, 3, 3), (2, 3, 3), (3, 3, 3), 1) in triples
    for m0, m1, m2, i in modular_triples(5):
        lhs = csf(m1).scale(1 + Q)
        rhs = csf(m2) + csf(m0).scale(Q)
        assert lhs == rhs, (m0, m1, m2)


def test_counterexample_positive_control():
    res = counterexample_search((2, 3, 3))
    assert res is not None
    assert res.m0 == (1, 3, 3) and res.m2 == (3, 3, 3) and res.shift == 1
    # the found pair really satisfies the modular identity
    lhs = csf((2, 3, 3)).scale(1 + Q)
    assert lhs == csf(res.m2) + csf(res.m0).scale(Q)


def test_counterexample_edgeless():
    assert counterexample_search((1, 2, 3)) is None


def test_counterexample_every_triple_found():
    for n in (4, 5, 6):
        for m0, m1, m2, i in modular_triples(n):
            assert counterexample_search(m1) is not None, m1


def test_counterexample_general_excludes_degenerate():
    # the trivial (a, m0, m2) = (1, m1, m1) solution must not be reported
    res = counterexample_search((1, 2, 3), general=True)
    assert res is None or (res.m0, res.m2) != ((1, 2, 3), (1, 2, 3))


def test_decompose_smooth():
    d = decompose_codominant(parse_perm("3142"))
    assert d == {parse_perm("2341"): LaurentQ.one()}
    e = Perm.identity(3)
    assert decompose_codominant(e) == {e: LaurentQ.one()}


def test_decompose_singular_s4():
    for w in all_perms(4):
        if w.is_smooth():
            continue
        d = decompose_codominant(w)
        assert d is not None
        assert verify_decomposition(w, d), (w, d)
        assert all(u.is_codominant() for u in d)
        for c in d.values():
            assert all(v > 0 for _, v in c.items())
            assert c.min_half_exponent() >= 0


def test_decompose_s8_counterexample_w():
    w = parse_perm("62754381")
    d = decompose_codominant(w)
    assert d == {parse_perm("26754381"): 1 + Q}


def test_decompose_honest_solver_matches():
    from heckelab.lab import _positive_solve
    for w in all_perms(4):
        if not w.is_smooth():
            sol = _positive_solve(frobenius_cprime(w), 4)
            assert sol is not None and verify_decomposition(w, sol), w


@pytest.mark.parametrize("n", [3, 4])
def test_thm15_and_cor44_small(n):
    for name in ("thm15", "momentgraph", "cor44"):
        (rep,) = check_suite(n, [name])
        assert rep.status == "pass", rep


def test_check_suite_unknown_name():
    with pytest.raises(ValueError):
        check_suite(3, ["nope"])
    with pytest.raises(ValueError):
        check_suite(9, ["hpos"])


def test_report_json():
    (rep,) = check_suite(3, ["cor44"])
    data = rep.to_json()
    assert data["check"] == "cor44" and data["status"] == "pass"
    assert data["witnesses"] == []
    assert "n" in data
