import pytest

from ambigraph.core import Element, make_element
from ambigraph.diagram import (
    StepType,
    closed_path,
    export_dot,
    orbit_members,
    partition_graph,
    successor,
)
from ambigraph.enumeration import enumerate_ambiguous
from ambigraph.errors import UnknownOrbit


def test_successor_examples():
    e, tag = successor(Element(0, -5, 1, 5))
    assert e.triple == (1, -4, 1) and tag is StepType.YX
    e, tag = successor(make_element(1, 2, 5))
    assert e.triple == (-1, -2, 2) and tag is StepType.YYX
    e, tag = successor(make_element(11, 2, 125))
    assert e.triple == (9, -2, 22) and tag is StepType.YYX


def test_closed_path_sqrt5():
    path = closed_path(make_element(0, 1, 5))
    assert [v.triple for v in path.vertices] == [
        (0, -5, 1), (1, -4, 1), (2, -1, 1), (1, -1, 4),
        (0, -1, 5), (-1, -1, 4), (-2, -1, 1), (-1, -4, 1),
    ]
    assert list(path.step_types) == [
        StepType.YX, StepType.YX, StepType.YYX, StepType.YYX,
        StepType.YYX, StepType.YYX, StepType.YX, StepType.YX,
    ]


def test_closed_path_golden():
    path = closed_path(make_element(1, 2, 5))
    assert [v.triple for v in path.vertices] == [(1, -2, 2), (-1, -2, 2)]
    assert list(path.step_types) == [StepType.YYX, StepType.YX]


def test_closed_path_125_runs():
    # anchored at (1+sqrt(125))/2 the runs read 5, 11, 6
    path = closed_path(make_element(1, 2, 125))
    runs = []
    for t in path.step_types:
        if runs and runs[-1][0] is t:
            runs[-1][1] += 1
        else:
            runs.append([t, 1])
    assert [(t.value, m) for t, m in runs] == [("yx", 5), ("y2x", 11), ("yx", 6)]


def test_orbit_members_counts():
    p8 = closed_path(make_element(0, 1, 5))
    p2 = closed_path(make_element(1, 2, 5))
    assert len(orbit_members(p8)) == 16
    assert len(orbit_members(p2)) == 4
    assert 16 + 4 == len(enumerate_ambiguous(5))


def test_partition_graph_counts():
    assert partition_graph(5).sizes() == [4, 16]
    p125 = partition_graph(125)
    assert len(p125) == 2
    i0 = p125.orbit_of(Element(0, -125, 1, 125))
    i1 = p125.orbit_of(Element(1, -62, 2, 125))
    assert i0 is not None and i1 is not None and i0 != i1
    assert len(partition_graph(216)) == 4


def test_partition_lengths_sum():
    for n in (5, 8, 54, 125, 216, 243):
        partition = partition_graph(n)
        assert sum(len(o.members) for o in partition.orbits) == len(
            enumerate_ambiguous(n)
        )


def test_successor_is_bijective_on_path():
    path = closed_path(make_element(0, 1, 243))
    vertices = {v.triple for v in path.vertices}
    images = {successor(v)[0].triple for v in path.vertices}
    assert images == vertices


def test_export_dot():
    partition = partition_graph(5)
    text = export_dot(partition, 1, 2)
    assert text == export_dot(partition, 1, 2)  # byte determinism
    nodes = [ln for ln in text.splitlines() if ln.endswith('";')]
    directed = [ln for ln in text.splitlines() if "label=" in ln]
    dashed = [ln for ln in text.splitlines() if "dashed" in ln]
    assert len(nodes) == 4 and len(directed) == 4 and len(dashed) == 2
    with pytest.raises(UnknownOrbit):
        export_dot(partition, 99, 1)


def test_export_dot_node_count_equals_length():
    partition = partition_graph(125)
    for o in partition.orbits:
        rep = o.representative
        text = export_dot(partition, rep.a, rep.c)
        nodes = [ln for ln in text.splitlines() if ln.endswith('";')]
        assert len(nodes) == o.ambiguous_length
