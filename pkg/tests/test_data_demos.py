"""Integrity checks for the demo graphs shipped under data/.

The two JSON files are reconstructions of a drawn example and are not
oracles; these tests only pin the documented properties of the files as
shipped, so that silent edits to the data can't drift away from their
own "comment" fields.
"""

import json
from pathlib import Path

from graphbraid.complexes import build_uc
from graphbraid.graphs import check_subdivision, parse_graph
from graphbraid.homology import homology
from graphbraid.hyperplanes import hyperplanes
from graphbraid.presentation import Presentation, abelianization

DATA = Path(__file__).resolve().parents[1] / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_delta_prime_demo():
    data = load("delta_prime.json")
    assert "reconstructed" in data["comment"]
    g = parse_graph(data)
    assert len(g.vertices) == 9
    assert g.cycle_rank() == 3
    assert check_subdivision(g, 2).ok

    res = homology(build_uc(g, 2))
    assert res.betti == (1, 7, 3)
    assert res.torsion == ((), (), ())

    # documented group shape: seven generators, three commuting pairs
    comm = lambda i, j: (i, j, -i, -j)
    pres = Presentation(tuple("abcdefg"), (comm(1, 2), comm(2, 3), comm(3, 4)))
    assert abelianization(pres) == (res.betti[1], res.torsion[1])


def test_delta_demo_extends_delta_prime_by_one_edge():
    small = parse_graph(load("delta_prime.json"))
    data = load("delta.json")
    assert "reconstructed" in data["comment"]
    g = parse_graph(data)

    e = g.normalize_edge(("v1", "v9"))
    assert sorted(g.remove_open_edge(e).edges) == sorted(small.edges)

    closed = g.remove_closed_edge(e)
    assert closed.is_connected()
    assert closed.cycle_rank() == 1  # edge group Z

    cc = build_uc(g, 2)
    assert sum(1 for h in hyperplanes(cc) if h.label == e) == 1
    res = homology(cc)
    assert res.betti == (1, 7, 3)
    assert res.torsion == ((), (), ())
