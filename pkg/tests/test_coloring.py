import random

import pytest

from cubicspec import (
    BudgetExceededError,
    Graph,
    StructureError,
    catalog,
    chromatic_index,
    chromatic_index_of_truncation,
    chromatic_number_cubic,
    chromatic_number_small,
    disjoint_union,
    bipartite_double,
    lift_coloring,
    line_graph,
    restrict_coloring,
    truncate_full,
    truncate_full_traced,
    validate_edge_coloring,
)

from oracles import brute_chromatic_number, brute_edge_chromatic3, random_max_degree3


def test_known_chromatic_indices():
    assert chromatic_index(catalog("K4")).value == 3
    assert chromatic_index(catalog("K33")).value == 3
    assert chromatic_index(catalog("prism")).value == 3
    assert chromatic_index(catalog("petersen")).value == 4
    assert chromatic_index(catalog("Fdoubleprime")).value == 4


def test_class2_results_are_exhausted_searches():
    res = chromatic_index(catalog("petersen"))
    assert res.value == 4 and res.exhausted and res.method == "search"
    validate_edge_coloring(catalog("petersen"), res.witness, colors=4)


def test_class1_witness_is_three_perfect_matchings(k4):
    res = chromatic_index(k4)
    classes = {}
    for edge, color in res.witness.items():
        classes.setdefault(color, []).append(edge)
    assert len(classes) == 3
    for edges in classes.values():
        covered = sorted(v for e in edges for v in e)
        assert covered == list(range(k4.n))


def test_non_cubic_rejected():
    with pytest.raises(StructureError):
        chromatic_index(Graph(3, [(0, 1), (1, 2)]))


def test_matches_plain_enumeration(small_corpora):
    for n in (4, 6, 8):
        for g in small_corpora[n]:
            expected = 3 if brute_edge_chromatic3(g) else 4
            assert chromatic_index(g).value == expected


def test_lift_and_restrict_roundtrip(small_corpora):
    for n in (4, 6, 8):
        for g in small_corpora[n]:
            base = chromatic_index(g)
            if base.value != 3:
                continue
            t, trace = truncate_full_traced(g)
            lifted = lift_coloring(g, base.witness, trace)
            validate_edge_coloring(t, lifted, colors=3)
            assert restrict_coloring(g, trace, lifted) == base.witness


def test_lift_rejects_bad_inputs(k4, petersen):
    t, trace = truncate_full_traced(k4)
    good = chromatic_index(k4).witness
    bad = dict(good)
    first = next(iter(bad))
    bad[first] = (bad[first] + 1) % 3
    with pytest.raises(StructureError):
        lift_coloring(k4, bad, trace)
    # partial-truncation traces are not accepted
    from cubicspec import truncate_set
    _, partial = truncate_set(petersen, (0, 1, 2))
    with pytest.raises(StructureError):
        lift_coloring(petersen, {}, partial)


def test_truncation_chromatic_certification(k4, petersen):
    t, trace = truncate_full_traced(k4)
    res = chromatic_index_of_truncation(t, k4, chromatic_index(k4), trace)
    assert res.value == 3 and res.method == "lift"
    validate_edge_coloring(t, res.witness, colors=3)

    tp, trace_p = truncate_full_traced(petersen)
    res = chromatic_index_of_truncation(tp, petersen,
                                        chromatic_index(petersen), trace_p)
    assert res.value == 4 and res.method == "restriction"
    validate_edge_coloring(tp, res.witness, colors=4)
    assert chromatic_index(tp).value == 4  # direct search agrees


def test_chromatic_number_cubic():
    assert chromatic_number_cubic(catalog("K4")) == 4
    assert chromatic_number_cubic(catalog("K33")) == 2
    assert chromatic_number_cubic(catalog("prism")) == 3
    tk4 = truncate_full(catalog("K4"))
    a = disjoint_union(catalog("cube"), tk4, tk4)
    b = disjoint_union(catalog("K4"), catalog("K4"), bipartite_double(tk4))
    assert chromatic_number_cubic(a) == 3
    assert chromatic_number_cubic(b) == 4
    with pytest.raises(StructureError):
        chromatic_number_cubic(Graph(2, [(0, 1)]))


def test_chromatic_number_small():
    five_cycle = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert chromatic_number_small(five_cycle) == 3
    six_cycle = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert chromatic_number_small(six_cycle) == 2
    assert chromatic_number_small(line_graph(catalog("K4"))) == 3
    assert chromatic_number_small(line_graph(catalog("petersen"))) == 4
    assert chromatic_number_small(Graph(3)) == 1
    assert chromatic_number_small(Graph(0)) == 0
    with pytest.raises(BudgetExceededError):
        chromatic_number_small(Graph(25))


def test_chromatic_number_small_matches_plain_search():
    rng = random.Random(60)
    for _ in range(30):
        g = random_max_degree3(rng.randrange(1, 9), rng)
        assert chromatic_number_small(g) == brute_chromatic_number(g)


def test_chromatic_number_agrees_with_cubic_rule(small_corpora):
    for g in small_corpora[6] + small_corpora[8]:
        assert chromatic_number_small(g) == chromatic_number_cubic(g)


def test_line_graph_chromatic_equals_chromatic_index(small_corpora):
    for n in (4, 6, 8):
        for g in small_corpora[n]:
            assert chromatic_number_small(line_graph(g)) == chromatic_index(g).value


def test_class1_iff_perfect_matching_union(small_corpora):
    from cubicspec import has_perfect_matching
    for n in (4, 6, 8, 10):
        for g in small_corpora[n]:
            if chromatic_index(g).value == 3:
                assert has_perfect_matching(g)
