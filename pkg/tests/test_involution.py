import pytest
from hypothesis import given

from conftest import moduli, partitions, slopes
from corespan.abacus import core
from corespan.errors import NotRealizable, NotSpanning, VertexAbsent
from corespan.involution import (
    ArrivalFamily,
    VertexClass,
    classify,
    distance_steps_ok,
    first_arrival_tree,
    involute,
    involute_reference,
    involuted_family,
    reconstruct,
    tree_distance,
    walk_distances,
)
from corespan.multigraph import build_tour, canonical_k, lambda_rsk, multigraph_key
from corespan.partition import Partition, partitions_up_to
from corespan.statistics import crit_minus, crit_plus, mid
from corespan.verify import WORKED_PARTITION, WORKED_TABLE, worked_family

MU = (12, 12, 10, 8, 7, 4, 1, 1, 1)
CLASS = [(6, 1), (4, 3), (4, 1, 1, 1), (2, 2, 2, 1), (2, 1, 1, 1, 1, 1)]


def _classes(lam, r, s, c, k=None):
    labels = classify(build_tour(lam, r, s, c, k))
    out = {cls: set() for cls in VertexClass}
    for vx, cls in labels.items():
        out[cls].add(tuple(vx))
    return out


def test_tree_of_six_one():
    t = build_tour((6, 1), 3, 1, 2)
    tree = first_arrival_tree(t)
    assert len(tree.nodes) == len(t.vertices())
    assert len(tree.edges()) == len(tree.nodes) - 1
    assert tree_distance(tree, t.root) == 0
    with pytest.raises(VertexAbsent):
        tree_distance(tree, (1, 1))


def test_classification_of_six_one():
    got = _classes((6, 1), 3, 1, 2)
    assert not got[VertexClass.SWITCH]
    assert {(7, 1), (5, 1), (8, 0), (10, 0), (11, 1)} <= got[VertexClass.EASTERN]
    assert {(6, 0), (9, 1), (4, 0), (12, 0)} <= got[VertexClass.SOUTHERN]


def test_classification_of_mu_matches_the_coloured_figure():
    got = _classes(MU, 3, 2, 2, 36)
    assert got[VertexClass.SWITCH] == {(26, 0), (26, 1)}
    assert got[VertexClass.EASTERN] == {
        (22, 0), (24, 1), (25, 0), (27, 0), (28, 0), (28, 1), (29, 0), (29, 1), (30, 1),
        (32, 0), (34, 1)}
    assert got[VertexClass.SOUTHERN] == {
        (20, 1), (23, 0), (23, 1), (24, 0), (25, 1), (27, 1), (30, 0), (33, 1), (36, 0)}


@pytest.mark.parametrize("r,s,c", [(1, 1, 1), (3, 2, 2), (2, 1, 3), (1, 3, 2)])
def test_staircases_have_no_switches(r, s, c):
    for mult in range(1, 5):
        k = mult * r * s * c
        got = _classes(lambda_rsk(r, s, k), r, s, c, k)
        assert not got[VertexClass.SWITCH]


def test_worked_reconstruction():
    assert reconstruct(worked_family()) == WORKED_PARTITION
    assert reconstruct(ArrivalFamily.from_tour(build_tour(MU, 3, 2, 2))) == MU


def test_the_literal_table_is_not_realizable():
    # as printed, with (29,[0]) = SS, (26,[0]) = SE and (27,[1]) = SSE
    literal = {**WORKED_TABLE, (29, 0): "SS", (26, 0): "SE", (27, 1): "SSE"}
    with pytest.raises(NotRealizable):
        reconstruct(ArrivalFamily.from_table(3, 2, 2, literal, generic_above=30))


def test_all_generic_family_is_empty():
    # generic words hold for every v > 0; the origin is only entered from the north
    f = ArrivalFamily.from_table(2, 3, 2, {(0, 0): "S"}, generic_above=0)
    assert reconstruct(f) == ()


def test_root_must_be_reached_from_the_north():
    bad = ArrivalFamily.from_table(1, 1, 1, {(1, 0): "ES"}, generic_above=1)
    with pytest.raises(NotSpanning):
        first_arrival_tree(bad)
    with pytest.raises(NotRealizable):
        reconstruct(bad)


def test_extended_example_images():
    assert involute((6, 1), 3, 1, 2) == (4, 3)
    assert involute((4, 3), 1, 1, 2) == (2, 2, 2, 1)
    assert involute((2, 2, 2, 1), 1, 3, 2) == (2, 1, 1, 1, 1, 1)
    for r, s in ((3, 1), (1, 1), (1, 3)):
        assert involute((4, 1, 1, 1), r, s, 2) == (4, 1, 1, 1)


def test_involution_of_mu():
    assert involute(MU, 3, 2, 2) == (13, 10, 7, 7, 7, 6, 4, 2)


@given(partitions(), slopes, moduli)
def test_involution_properties(lam, rs, c):
    r, s = rs
    lam = Partition(lam)
    image = involute(lam, r, s, c)
    assert involute(image, r, s, c) == lam
    assert image.size == lam.size
    assert core(image, c) == core(lam, c)
    assert mid(image, r, s, c) == mid(lam, r, s, c)
    assert crit_plus(image, r, s, c) == crit_minus(lam, r, s, c)
    assert crit_minus(image, r, s, c) == crit_plus(lam, r, s, c)
    k = max(canonical_k(lam, r, s, c), canonical_k(image, r, s, c))
    assert multigraph_key(lam, r, s, c, k) == multigraph_key(image, r, s, c, k)


@given(partitions(), slopes, moduli)
def test_fast_path_matches_object_composition(lam, rs, c):
    assert involute(lam, *rs, c) == involute_reference(lam, *rs, c)


@given(partitions(), slopes, moduli)
def test_involuted_family_keeps_word_contents(lam, rs, c):
    f = ArrivalFamily.from_tour(build_tour(Partition(lam), *rs, c))
    g = involuted_family(f)
    assert set(f.words) == set(g.words)
    for vx in f.words:
        assert sorted(f.words[vx]) == sorted(g.words[vx])


@pytest.mark.parametrize("r,s,c", [(1, 1, 2), (3, 2, 2), (2, 1, 3), (1, 3, 1)])
def test_round_trip_through_tours(r, s, c):
    for lam in partitions_up_to(12):
        assert reconstruct(ArrivalFamily.from_tour(build_tour(lam, r, s, c))) == lam


@pytest.mark.parametrize("r,s,c", [(1, 1, 1), (3, 2, 2), (2, 1, 3), (1, 3, 2)])
def test_tree_distance_steps(r, s, c):
    for lam in partitions_up_to(9):
        assert distance_steps_ok(build_tour(lam, r, s, c))


def test_walk_distances_start_at_the_axis_end():
    t = build_tour((6, 1), 3, 1, 2)
    dist = walk_distances(t)
    assert len(dist) == len(t.walk)
    assert dist[0] == 0  # the walk starts at the root (k, [0]) on the y axis
