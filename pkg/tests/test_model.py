from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import strategies as own
from parapath import (
    CostLine,
    DualWeightGraph,
    GraphStructureError,
    LambdaRangeError,
    MalformedPathError,
    Path,
    WeightDomainError,
    as_rational,
    cost_line,
    eval_cost,
    interpolate_weight,
    make_path,
    path_vertices,
    validate_graph,
)


class TestRationalConversion:
    def test_decimal_strings_are_exact(self):
        assert as_rational("0.25") == F(1, 4)
        assert as_rational("3.5") == F(7, 2)
        assert as_rational("1") == F(1)

    def test_ratio_strings(self):
        assert as_rational("1/3") == F(1, 3)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            as_rational(0.1)


@pytest.mark.parametrize(
    "w0, w1, lam, expected",
    [
        (2, 4, F(0), F(2)),
        (2, 4, F(1, 2), F(3)),
        (1, 3, F(1, 4), F(3, 2)),
    ],
)
def test_interpolate_weight(w0, w1, lam, expected):
    graph = DualWeightGraph.build(2, [(0, 1, w0, w1)])
    assert interpolate_weight(graph, 0, lam) == expected


def test_interpolate_weight_domain_errors():
    graph = DualWeightGraph.build(2, [(0, 1, 1, 1)])
    with pytest.raises(LambdaRangeError):
        interpolate_weight(graph, 0, F(-1, 10))
    with pytest.raises(LambdaRangeError):
        interpolate_weight(graph, 0, F(11, 10))
    with pytest.raises(GraphStructureError):
        interpolate_weight(graph, 1, F(0))


def test_edge_drift_is_weight_difference():
    graph = DualWeightGraph.build(2, [(0, 1, 1, 3), (1, 0, 3, 1)])
    assert graph.edges[0].drift == F(2)
    assert graph.edges[1].drift == F(-2)


class TestCostLine:
    def test_empty_path(self):
        graph = DualWeightGraph.build(2, [(0, 1, 1, 1)])
        assert cost_line(graph, Path(())) == CostLine(F(0), F(0))

    def test_single_edge(self):
        graph = DualWeightGraph.build(2, [(0, 1, 1, 3)])
        assert cost_line(graph, Path((0,))) == CostLine(F(1), F(3))

    def test_two_edges_sum_componentwise(self):
        graph = DualWeightGraph.build(3, [(0, 1, 1, 3), (1, 2, 2, 2)])
        assert cost_line(graph, Path((0, 1))) == CostLine(F(3), F(5))

    def test_noncontiguous_sequence_rejected(self):
        graph = DualWeightGraph.build(4, [(0, 1, 1, 1), (2, 3, 1, 1)])
        with pytest.raises(MalformedPathError):
            cost_line(graph, Path((0, 1)))

    def test_repeated_vertex_rejected(self):
        graph = DualWeightGraph.build(2, [(0, 1, 1, 1), (1, 0, 1, 1)])
        with pytest.raises(MalformedPathError):
            make_path(graph, (0, 1))


@pytest.mark.parametrize(
    "line, lam, expected",
    [
        (CostLine(F(1), F(3)), F(0), F(1)),
        (CostLine(F(1), F(3)), F(1, 2), F(2)),
        (CostLine(F(3), F(1)), F(3, 4), F(3, 2)),
    ],
)
def test_eval_cost(line, lam, expected):
    assert eval_cost(line, lam) == expected


class TestValidateGraph:
    def test_positive_weights_accepted(self):
        validate_graph(DualWeightGraph.build(2, [(0, 1, "0.01", "10")]))

    def test_zero_weight_rejected(self):
        graph = DualWeightGraph.build(2, [(0, 1, 0, 1)])
        with pytest.raises(WeightDomainError, match="edge 0"):
            validate_graph(graph)

    def test_out_of_range_head_rejected(self):
        graph = DualWeightGraph.build(2, [(0, 2, 1, 1)])
        with pytest.raises(GraphStructureError):
            validate_graph(graph)


def test_path_vertices_requires_source_when_empty():
    graph = DualWeightGraph.build(2, [(0, 1, 1, 1)])
    assert path_vertices(graph, Path(()), source=1) == (1,)
    with pytest.raises(MalformedPathError):
        path_vertices(graph, Path(()))
    assert path_vertices(graph, Path((0,))) == (0, 1)


@given(own.chain_with_path(), own.lambdas)
@settings(max_examples=80, deadline=None)
def test_line_value_matches_edgewise_interpolation(graph_and_path, lam):
    graph, edge_ids = graph_and_path
    path = make_path(graph, edge_ids)
    line = cost_line(graph, path)
    total = sum(
        (interpolate_weight(graph, eid, lam) for eid in edge_ids), start=F(0)
    )
    assert eval_cost(line, lam) == total


@given(own.chain_with_path(max_links=4), st.integers(min_value=0, max_value=4))
@settings(max_examples=60, deadline=None)
def test_cost_line_additive_under_concatenation(graph_and_path, cut):
    graph, edge_ids = graph_and_path
    cut = min(cut, len(edge_ids))
    whole = cost_line(graph, Path(tuple(edge_ids)))
    front = cost_line(graph, Path(tuple(edge_ids[:cut])))
    back = cost_line(graph, Path(tuple(edge_ids[cut:])))
    assert front + back == whole


@given(own.chain_with_path(), own.lambdas)
@settings(max_examples=60, deadline=None)
def test_nonempty_path_cost_strictly_positive(graph_and_path, lam):
    graph, edge_ids = graph_and_path
    if not edge_ids:
        return
    line = cost_line(graph, Path(tuple(edge_ids)))
    assert eval_cost(line, lam) > 0
