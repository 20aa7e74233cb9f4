import math

import networkx as nx
import pytest

from sombor import families as fam
from sombor.canon import are_isomorphic, canonical_code
from sombor.errors import ParameterError
from sombor.index import RadicalSum, sombor_exact, sombor_index, theta

from conftest import family_cases, to_nx


def test_basic_graphs():
    assert fam.cycle(3) == fam.complete(3)
    assert fam.path(2).edges() == [(0, 1)]
    assert sombor_index(fam.path(5)) == pytest.approx(10.12899020449, abs=1e-10)
    with pytest.raises(ParameterError):
        fam.cycle(2)
    with pytest.raises(ParameterError):
        fam.path(0)


# -- star-like trees ---------------------------------------------------------------------

def test_star_like_case_i_example():
    T = fam.star_like_tree(fam.StarLikeSpec(8, 3, 0, (3, 2, 2)))
    assert T.is_tree() and T.max_degree() == 3
    assert sombor_exact(T) == fam.min_so_delta_bound_exact(8, 3)


def test_star_like_case_ii_example():
    T = fam.star_like_tree(fam.StarLikeSpec(6, 4, 3, (2,)))
    assert sorted(T.degrees()) == [1, 1, 1, 1, 2, 4]
    assert sombor_exact(T) == fam.min_so_delta_bound_exact(6, 4)


def test_star_like_generic_spec():
    T = fam.star_like_tree(fam.StarLikeSpec(7, 3, 1, (2, 3)))
    assert T.n == 7 and T.degree(0) == 3 and len(T.pendent_paths()) == 3


@pytest.mark.parametrize("args", [
    (6, 4, 1, (3, 2, 2)),   # branch lengths overshoot n-1
    (7, 3, 1, (1, 4)),      # branch shorter than 2
    (7, 2, 0, (3, 3)),      # hub degree below 3
    (7, 3, 0, (3, 3)),      # wrong number of branches
])
def test_star_like_spec_rejects(args):
    with pytest.raises(ParameterError):
        fam.StarLikeSpec(*args)


def test_star_like_so_examples():
    assert fam.star_like_so(8, 3, 0) == pytest.approx(20.35328488364, abs=1e-10)
    expected = 3 * (theta(2) - theta(4)) + 4 * (math.sqrt(20) + math.sqrt(5)) - 6 * math.sqrt(2)
    assert fam.star_like_so(6, 4, 3) == pytest.approx(expected, rel=1e-12)
    with pytest.raises(ParameterError):
        fam.star_like_so(6, 4, 1)


def test_min_delta_bound_examples():
    assert fam.min_so_delta_bound(8, 3) == pytest.approx(20.35328488364, abs=1e-10)
    assert fam.min_so_delta_bound(6, 4) == pytest.approx(19.07752080935, abs=1e-10)
    # 2*delta == n-1: the two cases coincide
    n, d = 7, 3
    case_i = d * (math.sqrt(d * d + 4) + math.sqrt(5)) + 2 * (n - 2 * d - 1) * math.sqrt(2)
    case_ii = (n - 1 - d) * (math.sqrt(d * d + 4) + math.sqrt(5)) + (2 * d - n + 1) * math.sqrt(d * d + 1)
    assert case_i == pytest.approx(case_ii) == pytest.approx(fam.min_so_delta_bound(n, d))
    with pytest.raises(ParameterError):
        fam.min_so_delta_bound(5, 2)
    with pytest.raises(ParameterError):
        fam.min_so_delta_bound(4, 4)


def test_star_like_so_depends_only_on_n_delta_k():
    for n in range(4, 11):
        for delta in range(3, n):
            for k in range(max(0, 2 * delta - n + 1), delta + 1):
                try:
                    specs = list(fam.star_like_specs(n, delta, k))
                except ParameterError:
                    continue
                closed = fam.star_like_so_exact(n, delta, k)
                for spec in specs:
                    assert sombor_exact(fam.star_like_tree(spec)) == closed
                assert float(closed) == pytest.approx(fam.star_like_so(n, delta, k), rel=1e-12)


def test_star_like_specs_distinct_trees():
    specs = list(fam.star_like_specs(10, 3, 0))
    assert [s.branch_lengths for s in specs] == [(5, 2, 2), (4, 3, 2), (3, 3, 3)]
    codes = {canonical_code(fam.star_like_tree(s)) for s in specs}
    assert len(codes) == len(specs)


def test_case_ii_class_is_a_single_tree():
    for n in range(4, 13):
        for delta in range(3, n):
            if 2 * delta > n - 1:
                specs = list(fam.star_like_specs(n, delta, 2 * delta - n + 1))
                assert len(specs) == 1
                assert all(L == 2 for L in specs[0].branch_lengths)


def test_min_delta_bound_is_star_like_value():
    for n in range(4, 13):
        for delta in range(3, n):
            k = max(0, 2 * delta - n + 1)
            assert fam.min_so_delta_bound_exact(n, delta) == fam.star_like_so_exact(n, delta, k)


# -- unicyclic families --------------------------------------------------------------------

def test_lollipop():
    L = fam.lollipop(7, 4)
    assert L.is_unicyclic() and L.girth() == 4 and L.degrees().count(3) == 1
    assert sombor_index(fam.lollipop(8, 3)) == pytest.approx(24.36643030288, abs=1e-10)
    assert sombor_exact(fam.lollipop(8, 3)) == sombor_exact(fam.lollipop(8, 5)) == fam.lollipop_so_exact(8)
    with pytest.raises(ParameterError):
        fam.lollipop(7, 6)
    with pytest.raises(ParameterError):
        fam.lollipop(7, 2)


def test_cycle_with_pendant():
    paw = fam.cycle_with_pendant(4)
    assert sorted(paw.degrees()) == [1, 2, 2, 3] and paw.girth() == 3
    for n in range(4, 13):
        G = fam.cycle_with_pendant(n)
        assert G.girth() == n - 1
        assert sombor_index(G) == pytest.approx(
            2 * math.sqrt(2) * (n - 3) + 2 * math.sqrt(13) + math.sqrt(10), rel=1e-12)
    with pytest.raises(ParameterError):
        fam.cycle_with_pendant(3)


def test_u_n_g():
    assert are_isomorphic(fam.u_n_g(6, 6), fam.cycle(6))
    assert fam.u_n_g(8, 4).degree(0) == 6
    for n in range(3, 13):
        for g in range(3, n + 1):
            U = fam.u_n_g(n, g)
            assert U.is_unicyclic() and U.girth() == g
    with pytest.raises(ParameterError):
        fam.u_n_g(5, 6)


def test_max_so_unicyclic_examples():
    assert fam.max_so_unicyclic(8, 4) == pytest.approx(42.63701501136, abs=1e-10)
    assert fam.max_so_unicyclic(8, 4) == pytest.approx(sombor_index(fam.u_n_g(8, 4)), rel=1e-12)
    expected = 2 * math.sqrt(40) + 4 * math.sqrt(37) + 2 * math.sqrt(2)
    assert fam.max_so_unicyclic(7, 3) == pytest.approx(expected, rel=1e-12)
    for n in range(3, 30):
        assert fam.max_so_unicyclic_exact(n, n) == RadicalSum({2: 2 * n})


# -- clique with pendants -------------------------------------------------------------------

def test_kite():
    K = fam.kite_with_pendants(7, 3)
    assert sorted(K.degrees(), reverse=True) == [6, 3, 3, 3, 1, 1, 1]
    T = fam.kite_with_pendants(6, 3)
    assert T.degree(0) == 5 and T.size == 6
    for n in range(4, 10):
        for k in range(1, n - 2):
            G = fam.kite_with_pendants(n, k)
            assert max(len(c) for c in nx.find_cliques(to_nx(G))) == n - k
            assert G.max_degree() == n - 1
    with pytest.raises(ParameterError):
        fam.kite_with_pendants(6, 4)


def test_max_so_pendent_examples():
    assert fam.max_so_pendent(7, 3) == pytest.approx(51.10082144975, abs=1e-10)
    # triangle with n-3 pendants at one vertex, by hand
    for n in range(4, 12):
        k = n - 3
        by_hand = k * math.sqrt((n - 1) ** 2 + 1) + 2 * math.sqrt((n - 1) ** 2 + 4) + math.sqrt(8)
        assert fam.max_so_pendent(n, k) == pytest.approx(by_hand, rel=1e-12)


def test_formula_equals_construction_up_to_12():
    count = 0
    for G, closed in family_cases(12):
        assert sombor_exact(G) == closed
        assert float(closed) == pytest.approx(sombor_index(G), rel=1e-12)
        count += 1
    assert count == 363
