import pytest

from rcpoly.catalog import load_connected_catalog
from rcpoly.engine import brute_count, rcp_delcon
from rcpoly.extremal import (
    FIGURE_DIFF,
    FIGURE_R1,
    FIGURE_R2,
    alternating_variants,
    chromatic_number,
    check_conjecture_bipartite,
    eventual_ranking,
    extremal_restraints,
    figure_matches,
    is_minimal_colouring,
    labelled_trees,
    lemma_restraints,
    parallel_map,
    survey_non_minimal_maximizers,
    verify_lemma_trees,
    verify_min_is_constant,
    verify_theorem1,
    verify_theorem2,
)
from rcpoly.graph import Graph, complete, cycle, is_tree, parse_graph6, path, tree_from_pruefer
from rcpoly.poly import IntPoly
from rcpoly.restraints import make_restraint as R


@pytest.fixture(scope="module")
def catalog():
    return load_connected_catalog(6)


class TestChromatic:
    def test_values(self):
        assert chromatic_number(complete(4)) == 4
        assert chromatic_number(cycle(6)) == 2
        assert chromatic_number(path(5)) == 2
        assert chromatic_number(cycle(5)) == 3
        assert chromatic_number(Graph(3)) == 1

    def test_minimal(self):
        assert is_minimal_colouring(complete(3), R([1, 2, 3]))
        assert not is_minimal_colouring(complete(3), R([1, 1, 2]))
        assert not is_minimal_colouring(cycle(4), R([1, 2, 3, 2]))
        assert is_minimal_colouring(cycle(4), (0, 1, 0, 1))


class TestExtremal:
    def test_k3_max(self):
        rep = extremal_restraints(complete(3), "max")
        assert (0, 1, 2) in rep.winner_rgs
        assert rep.search_space == 5

    @pytest.mark.parametrize("g", [complete(3), cycle(5), path(4), parse_graph6("E{CW")])
    def test_min_is_constant(self, g):
        assert (0,) * g.n in extremal_restraints(g, "min").winner_rgs

    def test_p3_max(self):
        rep = extremal_restraints(path(3), "max")
        assert rep.winner_rgs == [(0, 1, 0)]
        w = rep.winners[0]
        assert w.is_alternating and w.is_minimal_colouring and w.colours_used == 2

    def test_witness_bound_confirms(self):
        g = cycle(5)
        rep = extremal_restraints(g, "max")
        best = rep.winners[0].poly.poly
        for p in rep.polys.values():
            if p != best:
                assert best(rep.witness_bound) > p(rep.witness_bound)

    def test_bad_args(self):
        with pytest.raises(ValueError):
            extremal_restraints(path(3), "sideways")
        with pytest.raises(ValueError):
            extremal_restraints(path(9), "max")

    def test_c3_ranking(self):
        polys = extremal_restraints(complete(3)).polys
        order = eventual_ranking(polys)
        assert order[0] == (0, 0, 0) and order[-1] == (0, 1, 2)

    def test_json_shape(self):
        d = extremal_restraints(path(3)).to_json()
        assert d["winners"][0]["poly"]["coeffs"] == [-7, 10, -5, 1]
        assert d["winners"][0]["rgs"] == [0, 1, 0]


class TestTheorem1:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_holds(self, n):
        v = verify_theorem1(n)
        assert v.holds and v.checked > 0 and not v.counterexamples

    def test_k2_difference(self):
        g = complete(2)
        d = rcp_delcon(g, R([1, 2])).poly - rcp_delcon(g, R([1, 1])).poly
        assert d == IntPoly([1])


class TestTrees:
    def test_labelled_tree_counts(self):
        for n in range(1, 6):
            trees = list(labelled_trees(n))
            assert len(trees) == (1 if n == 1 else n ** (n - 2))
            assert all(is_tree(t) for t in trees)
            assert len({t.edges for t in trees}) == len(trees)

    def test_lemma_path_example(self):
        assert brute_count(path(3), R([{1, 2}, 3, 1]), 3) > 0

    def test_lemma_restraints(self):
        rs = lemma_restraints(3)
        assert all(sum(len(s) == 2 for s in r) <= 1 and all(len(s) <= 2 for s in r) for r in rs)
        assert all(max((max(s) for s in r if s), default=0) <= 3 for r in rs)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_lemma(self, n):
        assert verify_lemma_trees(n).holds

    def test_theorem2_base(self):
        v = verify_theorem2(2)
        assert v.holds and v.checked == 2
        e = complete(2)
        assert rcp_delcon(e, R([1, 2])).poly - rcp_delcon(e, R([1, 1])).poly == IntPoly([1])

    def test_theorem2_star(self):
        star = tree_from_pruefer([0, 0])
        rep = extremal_restraints(star, "max")
        assert rep.winner_rgs == [(0, 1, 1, 1)]

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_theorem2(self, n):
        assert verify_theorem2(n).holds

    def test_jobs_do_not_change_result(self):
        a = verify_theorem2(4, jobs=1).to_json()
        b = verify_theorem2(4, jobs=2).to_json()
        assert a == b


class TestConjecture:
    def test_edge_and_c6(self):
        assert check_conjecture_bipartite([complete(2), cycle(6)]).holds

    def test_rejects_odd_cycle(self):
        with pytest.raises(ValueError):
            check_conjecture_bipartite([complete(3)])

    def test_disconnected_variants(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert alternating_variants(g) == [(0, 1, 0, 1), (0, 1, 1, 0)]
        assert check_conjecture_bipartite([g]).holds
        assert alternating_variants(complete(3)) == []


class TestSurvey:
    def test_trees_and_complete(self, catalog):
        trees = [g for g in catalog if is_tree(g)]
        assert survey_non_minimal_maximizers(trees) == []
        assert survey_non_minimal_maximizers([complete(n) for n in range(1, 7)]) == []

    def test_min_constant_small(self, catalog):
        assert verify_min_is_constant([g for g in catalog if g.n <= 4]).holds


class TestFigure:
    def test_bowtie(self):
        bowtie = parse_graph6("E{CW")
        ms = figure_matches([bowtie])
        assert ms
        for m in ms:
            h = parse_graph6(m.labelled_graph6)
            assert h == bowtie.relabel(m.labelling)
            assert rcp_delcon(h, FIGURE_R1).poly - rcp_delcon(h, FIGURE_R2).poly == FIGURE_DIFF

    def test_skips_non_candidates(self):
        assert figure_matches([complete(3), cycle(6)]) == []


def test_parallel_map_order():
    assert parallel_map(abs, [-3, 2, -1], jobs=2) == [3, 2, 1]
    with pytest.raises(ValueError):
        parallel_map(abs, [1], jobs=0)
