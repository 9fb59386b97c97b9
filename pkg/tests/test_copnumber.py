import pytest

from copwin.copnumber import BOUNDED, COMPLETE, INCONCLUSIVE, cop_number, cop_number_by_components
from copwin.graph import Graph, generate
from copwin.oracle import oracle_simultaneous
from support import gnp_corpus, prufer_tree


def disjoint(*graphs):
    edges, off = [], 0
    for g in graphs:
        edges += [(u + off, v + off) for u, v in g.edges()]
        off += g.n
    return Graph.from_edges(off, edges)


@pytest.mark.parametrize("n", range(1, 9))
def test_trees(n):
    for seed in range(3):
        assert cop_number(prufer_tree(n, seed)).cop_number == 1


@pytest.mark.parametrize("n", range(4, 9))
def test_cycles(n):
    g = generate("cycle", n)
    rep = cop_number(g)
    assert rep.cop_number == 2
    assert [d.copwin for d in rep.decisions] == [False, True]
    assert not oracle_simultaneous(g, 1) and oracle_simultaneous(g, 2)


def test_petersen():
    rep = cop_number(generate("petersen"))
    assert rep.cop_number == 3 and rep.status == COMPLETE
    assert rep.proven_false == [1, 2]
    assert rep.witness == (0, 0, 0)


def test_single_vertex():
    rep = cop_number(generate("path", 1))
    assert rep.cop_number == 1 and rep.decisions[0].states_total == 0


def test_two_triangles():
    g = disjoint(generate("complete", 3), generate("complete", 3))
    assert cop_number_by_components(g).cop_number == 2
    assert cop_number(g).cop_number == 2


def test_triangle_plus_c4():
    g = disjoint(generate("complete", 3), generate("cycle", 4))
    rep = cop_number_by_components(g)
    assert rep.cop_number == 3
    assert cop_number(g).cop_number == 3
    assert len(rep.witness) == 3


def test_components_match_whole_graph():
    for g in gnp_corpus(25):
        if g.n <= 7:
            assert cop_number_by_components(g).cop_number == cop_number(g).cop_number


def test_single_component_identical():
    g = generate("petersen")
    assert cop_number_by_components(g).cop_number == cop_number(g).cop_number


def test_zombie_cycle():
    assert cop_number(generate("cycle", 6), "zombie").cop_number == 2


def test_inconclusive_on_cap():
    rep = cop_number(generate("petersen"), max_states=5000)
    assert rep.status == INCONCLUSIVE and rep.cop_number is None
    assert rep.proven_false == [1, 2]
    assert "40000" in rep.error


def test_k_max_bound():
    rep = cop_number(generate("petersen"), k_max=2)
    assert rep.status == BOUNDED and rep.cop_number is None
    with pytest.raises(ValueError):
        cop_number(generate("petersen"), k_max=11)
