import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copwin.graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    GraphParseError,
    SelfLoopError,
    VertexRangeError,
    apsp,
    bfs_distances,
    generate,
    is_dismantlable,
    parse_dimacs,
    parse_edge_list,
    parse_generator_spec,
)
from support import prufer_tree, small_corpus


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_edge_list_single_edge():
    g = parse_edge_list("n 2\n1 2")
    assert g.n == 2
    assert list(g.edges()) == [(0, 1)]


def test_edge_list_collapses_duplicates():
    g = parse_edge_list("1 2\n2 1\n1 2")
    assert g.edge_count == 1


def test_edge_list_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        parse_edge_list("1 1")


def test_edge_list_comments_and_isolated_vertices():
    g = parse_edge_list("# header comment\nn 5\n1 2  # trailing\n\n2 3\n")
    assert g.n == 5
    assert g.adjacency[3] == () and g.adjacency[4] == ()


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list("1 2\n2 x\n")
    assert exc.value.line == 2
    with pytest.raises(VertexRangeError) as exc:
        parse_edge_list("n 3\n1 2\n3 4\n")
    assert exc.value.line == 3
    with pytest.raises(GraphParseError):
        parse_edge_list("1 2 3")
    with pytest.raises(VertexRangeError):
        parse_edge_list("0 1")


def test_dimacs_triangle():
    g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3")
    assert g == generate("complete", 3)


def test_dimacs_with_comment():
    g = parse_dimacs("c x\np edge 2 1\ne 1 2")
    assert g.n == 2 and list(g.edges()) == [(0, 1)]


@pytest.mark.parametrize(
    "text",
    ["e 1 2", "c only comments\n", "p edge 2 1\ne 1 3", "p edge 2 1\ne 1 1", "p edge 2 1\np edge 2 1"],
)
def test_dimacs_errors(text):
    with pytest.raises(GraphParseError):
        parse_dimacs(text)


def test_dimacs_edge_count_mismatch_warns(caplog):
    g = parse_dimacs("p edge 3 5\ne 1 2\ne 2 1")
    assert g.edge_count == 1
    assert "declares 5 edges" in caplog.text


def test_generate_cycle4():
    assert list(generate("cycle", 4).edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_petersen_is_cubic_on_ten_vertices():
    g = generate("petersen")
    assert (g.n, g.edge_count) == (10, 15)
    assert all(g.degree(v) == 3 for v in range(10))
    # girth 5: no triangles and no 4-cycles
    adj = [set(a) for a in g.adjacency]
    assert not any(adj[u] & adj[v] for u, v in g.edges())
    assert all(len(adj[u] & adj[w]) <= 1 for u in range(10) for w in range(u + 1, 10))


def test_grid_2x2_is_c4():
    g = generate("grid", 2, 2)
    assert g.n == 4 and g.edge_count == 4
    assert all(g.degree(v) == 2 for v in range(4)) and g.is_connected()


def test_generator_errors():
    with pytest.raises(GraphError):
        generate("cycle", 2)
    with pytest.raises(GraphError):
        generate("random_gnp", 5, 0.5)
    with pytest.raises(GraphError):
        generate("random_gnp", 5, 1.5, seed=1)
    with pytest.raises(GraphError):
        generate("hypercube", 3)


def test_random_gnp_reproducible():
    a = generate("random_gnp", 8, 0.4, seed=7)
    assert a == generate("random_gnp", 8, 0.4, seed=7)
    assert generate("random_gnp", 6, 0.0, seed=1).edge_count == 0
    assert generate("random_gnp", 6, 1.0, seed=1) == generate("complete", 6)


def test_generator_spec_strings():
    assert parse_generator_spec("grid:2x3") == generate("grid", 2, 3)
    assert parse_generator_spec("cycle:5") == generate("cycle", 5)
    assert parse_generator_spec("random_gnp:6:0.5", seed=3) == generate("random_gnp", 6, 0.5, seed=3)
    with pytest.raises(GraphError):
        parse_generator_spec("cycle:abc")


def test_apsp_cycle4():
    d = apsp(generate("cycle", 4))
    assert d[0, 2] == 2 and d[0, 1] == 1


def test_apsp_unreachable_across_components():
    d = apsp(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert d[0, 2] == UNREACHABLE and d[1, 3] == UNREACHABLE
    assert UNREACHABLE >= 4


def test_petersen_diameter_two():
    g = generate("petersen")
    assert max(max(bfs_distances(g, v)) for v in range(g.n)) == 2
    assert apsp(g).diameter() == 2


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_graph_properties(g):
    g.validate()
    assert parse_edge_list(g.to_edge_list()) == g
    assert parse_dimacs(g.to_dimacs()) == g
    d = apsp(g)
    for v in range(g.n):
        assert list(d.rows[v]) == bfs_distances(g, v)
    for u in range(g.n):
        assert d[u, u] == 0
        for v in range(g.n):
            assert d[u, v] == d[v, u]
            assert (d[u, v] == 1) == g.has_edge(u, v)
            for w in range(g.n):
                if UNREACHABLE not in (d[u, w], d[w, v]):
                    assert d[u, v] <= d[u, w] + d[w, v]


def test_corpus_validates():
    for g in small_corpus():
        g.validate()


def test_validate_catches_asymmetry():
    with pytest.raises(GraphError):
        Graph(2, ((1,), ()), 1).validate()


@pytest.mark.parametrize("n", range(1, 11))
def test_trees_are_dismantlable(n):
    for seed in range(5):
        flag, order = is_dismantlable(prufer_tree(n, seed))
        assert flag and len(order) == n - 1


def test_c4_not_dismantlable():
    # no vertex of C_4 has its closed neighbourhood inside a neighbour's
    g = generate("cycle", 4)
    closed = [set(g.adjacency[v]) | {v} for v in range(4)]
    assert not any(closed[u] <= closed[v] for u in range(4) for v in g.adjacency[u])
    assert is_dismantlable(g) == (False, None)


def test_complete_dismantlable():
    assert is_dismantlable(generate("complete", 5))[0]


def test_dismantlable_rejects_disconnected():
    with pytest.raises(GraphError):
        is_dismantlable(Graph.from_edges(4, [(0, 1), (2, 3)]))
