from collections import Counter

import pytest
from hypothesis import given

from conftest import isc_params
from iscwiener.cuts import (
    _partition_from_index_classes,
    CutRecord,
    cuts_to_csv,
    geometric_cuts,
    geometric_partition,
    table_cuts,
    theta_star_partition,
    wiener_from_cuts,
)
from iscwiener.distances import wiener_bfs
from iscwiener.errors import NotTwoComponents
from iscwiener.lattice import build, build_isc
from iscwiener.params import ISCParams, validate_params


def sizes(partition):
    return sorted(len(c) for c in partition.classes)


def test_theta_c4():
    part = theta_star_partition(build(1, 1, 1, 1))
    assert sizes(part) == [2, 2]
    for cls in part.classes:
        (a, b), (c, d) = sorted(cls)
        # opposite edges share no endpoint
        assert not {a, b} & {c, d}


def test_theta_hexagon():
    part = theta_star_partition(build(2, 2, 1, 4))
    assert len(part) == 7
    horizontal = sorted(len(c) for c in part.classes if all(a[0] == b[0] for a, b in c))
    vertical = sorted(len(c) for c in part.classes if all(a[1] == b[1] for a, b in c))
    assert horizontal == [3, 3, 5]
    assert vertical == [2, 2, 4, 4]


def test_theta_ladder():
    assert sizes(theta_star_partition(build(2, 2, 1, 2))) == [2, 2, 3]


def test_bogus_class_rejected():
    # a single edge of C4 is not a cut
    g = build(1, 1, 1, 1)
    with pytest.raises(NotTwoComponents):
        _partition_from_index_classes(g, [[g.edge_indices[0]]])


def test_geometric_cuts_c4():
    cuts = geometric_cuts(build(1, 1, 1, 1))
    assert [(c.f_small, c.f_comp) for c in cuts] == [(2, 2), (2, 2)]
    assert [c.edges for c in cuts] == [2, 2]


def test_geometric_cuts_hexagon():
    params = validate_params(2, 2, 1, 4)
    cuts = geometric_cuts(build_isc(params), params)
    h = [(c.f_small, c.f_comp) for c in cuts if c.family.startswith("H")]
    v = [(c.f_small, c.f_comp) for c in cuts if c.family.startswith("V")]
    assert h == [(3, 13), (8, 8), (13, 3)]
    assert v == [(2, 14), (6, 10), (10, 6), (14, 2)]
    assert [(c.family, c.k) for c in cuts] == [
        ("H1", 1), ("H2", 1), ("H3", 1), ("V1", 1), ("V3", 1), ("V3", 2), ("V5", 1)]


def test_geometric_cuts_ladder():
    cuts = geometric_cuts(build(2, 2, 1, 2))
    assert [(c.f_small, c.f_comp) for c in cuts] == [(3, 3), (2, 4), (4, 2)]


def test_table_entries():
    tab = table_cuts(validate_params(2, 2, 1, 4))
    assert [c.f_small for c in tab if c.family == "H1"] == [3]
    assert [c.f_small for c in tab if c.family == "V3"] == [6, 10]
    case2 = table_cuts(validate_params(1, 1, 3, 3))
    assert [c.f_small for c in case2 if c.family == "V1"] == [2]


@pytest.mark.parametrize("tup, w", [((1, 1, 1, 1), 8), ((2, 2, 1, 4), 318), ((2, 2, 1, 2), 25)])
def test_wiener_from_cuts(tup, w):
    params = validate_params(*tup)
    assert wiener_from_cuts(geometric_cuts(build_isc(params), params)) == w
    assert wiener_from_cuts(table_cuts(params)) == w


def test_hexagon_cut_sums_split():
    params = validate_params(2, 2, 1, 4)
    cuts = geometric_cuts(build_isc(params), params)
    assert wiener_from_cuts(c for c in cuts if c.family[0] == "H") == 142
    assert wiener_from_cuts(c for c in cuts if c.family[0] == "V") == 176


def test_cut_csv():
    params = validate_params(2, 2, 1, 2)
    text = cuts_to_csv(geometric_cuts(build_isc(params), params))
    assert text.splitlines()[0] == "family,k,edge_count,f_small,f_comp"
    assert text.splitlines()[1] == "H2,1,3,3,3"
    assert cuts_to_csv([CutRecord("V1", 1, 2, 4)]).splitlines()[1] == "V1,1,,2,4"


@given(isc_params(max_n=14, max_m=6))
def test_tables_match_geometry_in_order(params):
    geo = geometric_cuts(build_isc(params), params)
    tab = table_cuts(params)
    assert [(c.family, c.k, c.f_small, c.f_comp) for c in geo] == \
           [(c.family, c.k, c.f_small, c.f_comp) for c in tab]


@given(isc_params(max_n=14, max_m=6))
def test_cut_count_identities(params):
    g = build_isc(params)
    geo = geometric_cuts(g, params)
    tab = table_cuts(params)
    for cuts in (geo, tab):
        assert sum(c.family[0] == "V" for c in cuts) == params.n + params.m - 1
        assert sum(c.family[0] == "H" for c in cuts) == params.t + params.m + params.s
        assert all(1 <= c.f_small <= g.num_vertices - 1 for c in cuts)
        assert all(c.f_small + c.f_comp == g.num_vertices for c in cuts)
    assert sum(c.edges for c in geo) == g.num_edges


@given(isc_params(max_n=8, max_m=3))
def test_theta_equals_strips(params):
    g = build_isc(params)
    theta = theta_star_partition(g)
    strips = geometric_partition(g)
    assert theta.canonical() == strips.canonical()
    assert Counter(tuple(sorted(s)) for s in theta.component_sizes) == Counter(
        c.pair for c in geometric_cuts(g))


@given(isc_params(max_n=10, max_m=4))
def test_all_cut_routes_equal_bfs(params):
    g = build_isc(params)
    w = wiener_bfs(g)[0]
    assert wiener_from_cuts(geometric_cuts(g, params)) == w
    assert wiener_from_cuts(table_cuts(params)) == w


def test_labels_require_matching_graph():
    with pytest.raises(ValueError):
        geometric_cuts(build(1, 1, 1, 1), ISCParams(2, 2, 1, 4))
