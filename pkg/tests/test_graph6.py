import random

import pytest

from cubicspec import Graph, GraphFormatError, catalog, parse_graph6, write_graph6
from cubicspec.graph6 import parse_edge_list, write_edge_list

from oracles import random_graph


def test_k4_both_ways():
    k4 = catalog("K4")
    assert write_graph6(k4) == "C~"
    assert parse_graph6("C~") == k4


def test_single_vertex():
    assert write_graph6(Graph(1)) == "@"
    assert parse_graph6("@") == Graph(1)


def test_header_stripped():
    assert parse_graph6(">>graph6<<C~") == catalog("K4")


def test_empty_input_rejected():
    with pytest.raises(GraphFormatError):
        parse_graph6("")


def test_nonprintable_rejected_with_offset():
    with pytest.raises(GraphFormatError) as err:
        parse_graph6("C~\x01")
    assert err.value.offset == 2


def test_wrong_length_rejected():
    with pytest.raises(GraphFormatError):
        parse_graph6("C~~")  # one byte too many for order 4
    with pytest.raises(GraphFormatError):
        parse_graph6("I")  # order 10 with no adjacency bytes


def test_nonzero_padding_rejected():
    # order 2 needs one adjacency byte with 5 padding bits
    good = parse_graph6("A_")  # single edge
    assert good.edges == ((0, 1),)
    with pytest.raises(GraphFormatError):
        parse_graph6("A`")  # padding bit set


def test_non_minimal_long_header_rejected():
    # order 4 illegally written in the 3-byte form
    with pytest.raises(GraphFormatError):
        parse_graph6("~??C" + "?" * 1)


def test_roundtrip_random_graphs():
    rng = random.Random(42)
    for _ in range(500):
        n = rng.randrange(0, 24)
        g = random_graph(n, rng.random(), rng)
        assert parse_graph6(write_graph6(g)) == g


def test_roundtrip_long_form():
    rng = random.Random(7)
    for n in (63, 64, 100):
        g = random_graph(n, 0.1, rng)
        line = write_graph6(g)
        assert line.startswith("~")
        assert parse_graph6(line) == g


def test_write_is_canonical_fixed_point(small_corpora):
    # write o parse is the identity on valid canonical-form lines
    for g in small_corpora[8]:
        line = write_graph6(g)
        assert write_graph6(parse_graph6(line)) == line


def test_catalog_lines_stable():
    # encodings of the named graphs are byte-stable
    assert write_graph6(catalog("petersen")) == "IheA@GUAo"
    assert write_graph6(catalog("cube")) == "Gr`HOk"
    assert write_graph6(catalog("F")) == "D^o"


def test_edge_list_roundtrip():
    g = catalog("F")
    assert parse_edge_list(write_edge_list(g)) == g
    assert parse_edge_list("0 1\n1 2", n=4) == Graph(4, [(0, 1), (1, 2)])
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 1 2")
    with pytest.raises(GraphFormatError):
        parse_edge_list("a b")
