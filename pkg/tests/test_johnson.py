import itertools
from math import comb

import numpy as np
import pytest

from lightcodes.johnson import (
    InducedSubgraph,
    JohnsonGraph,
    build_induced,
    count_w_light,
    eulerian_orientation,
    min_max_outdegree,
    orientation_feasible,
    outdegree,
    random_orientation,
    read_orientation_file,
    write_orientation_file,
)
from lightcodes.words import Word, enumerate_words


def brute_force_feasible(g: InducedSubgraph, W: int) -> bool:
    """Try all 2^|E| orientations; independent of the flow solver."""
    verts = sorted(g.vertices)
    for choice in itertools.product((0, 1), repeat=len(g.edges)):
        outdeg = {v: 0 for v in verts}
        for (a, b), c in zip(g.edges, choice):
            outdeg[a if c == 0 else b] += 1
        if max(outdeg.values(), default=0) <= W:
            return True
    return False


def test_full_graph_counts():
    g = JohnsonGraph(4, 2)
    assert g.num_vertices == 6
    assert g.degree == 4
    assert g.num_edges == 12
    full = g.full_subgraph()
    assert len(full.edges) == 12
    assert all(d == 4 for d in full.degrees().values())


def test_build_induced():
    g = JohnsonGraph(4, 2)
    full = build_induced(g, enumerate_words(4, 2))
    assert len(full.vertices) == 6 and len(full.edges) == 12
    single = build_induced(g, [Word.from_string("1100")])
    assert len(single.edges) == 0
    distant = build_induced(g, [Word.from_string("1100"), Word.from_string("0011")])
    assert len(distant.edges) == 0
    with pytest.raises(ValueError):
        build_induced(g, [Word.from_string("110")])


def test_eulerian_triangle():
    g = JohnsonGraph(3, 1)  # K3
    o = eulerian_orientation(g.full_subgraph())
    assert sorted(o._outdeg.values()) == [1, 1, 1]


def test_eulerian_full_j42():
    o = eulerian_orientation(JohnsonGraph(4, 2).full_subgraph())
    assert all(outdegree(o, v) == 2 for v in range(6))


def test_eulerian_odd_degrees():
    # Star-ish subgraph of J(5,1) = K5: degrees 3,1,1,1 after inducing on a path.
    g = JohnsonGraph(5, 1)
    sub = build_induced(g, [0, 1, 2, 3])  # K4: all degrees odd (3)
    o = eulerian_orientation(sub)
    deg = sub.degrees()
    for v in sub.vertices:
        assert outdegree(o, v) <= (deg[v] + 1) // 2


def test_eulerian_ceiling_bound_random_subgraphs():
    rng = np.random.default_rng(0)
    g = JohnsonGraph(5, 2)
    for _ in range(20):
        size = rng.integers(2, 9)
        verts = rng.choice(10, size=size, replace=False)
        sub = build_induced(g, [int(v) for v in verts])
        o = eulerian_orientation(sub)
        deg = sub.degrees()
        for v in sub.vertices:
            assert outdegree(o, v) <= (deg[v] + 1) // 2


def test_orientation_feasible_examples():
    full = JohnsonGraph(4, 2).full_subgraph()
    ok, witness = orientation_feasible(full, 2)
    assert ok and witness is not None
    assert witness.max_outdegree() <= 2
    assert set(witness.direction) == set(full.edges)
    ok1, w1 = orientation_feasible(full, 1)
    assert not ok1 and w1 is None
    empty = build_induced(JohnsonGraph(4, 2), [0])
    assert orientation_feasible(empty, 0)[0]


def test_feasible_matches_brute_force():
    rng = np.random.default_rng(1)
    g = JohnsonGraph(5, 2)
    for trial in range(15):
        size = rng.integers(2, 7)
        verts = [int(v) for v in rng.choice(10, size=size, replace=False)]
        sub = build_induced(g, verts)
        if len(sub.edges) > 12:
            continue
        for W in range(0, 3):
            got, witness = orientation_feasible(sub, W)
            assert got == brute_force_feasible(sub, W)
            if got:
                assert witness.max_outdegree() <= W


def test_fact_low_degree_always_feasible():
    # Max degree <= 2W guarantees a W-light orientation of all vertices.
    rng = np.random.default_rng(2)
    g = JohnsonGraph(5, 2)
    for _ in range(10):
        verts = [int(v) for v in rng.choice(10, size=6, replace=False)]
        sub = build_induced(g, verts)
        W = (sub.max_degree() + 1) // 2
        ok, witness = orientation_feasible(sub, W)
        assert ok and witness.max_outdegree() <= W


def test_min_max_outdegree():
    g = JohnsonGraph(4, 2)
    assert min_max_outdegree(g.full_subgraph()) == 2
    assert min_max_outdegree(build_induced(g, [0])) == 0
    assert min_max_outdegree(build_induced(g, [0, 1])) == 1


def test_min_max_outdegree_matches_density():
    # Threshold equals max over sub-subsets of ceil(|E|/|V|); brute on small graphs.
    rng = np.random.default_rng(3)
    g = JohnsonGraph(5, 2)
    for _ in range(10):
        verts = [int(v) for v in rng.choice(10, size=6, replace=False)]
        sub = build_induced(g, verts)
        got = min_max_outdegree(sub)
        best = 0
        vlist = sorted(sub.vertices)
        for r in range(1, len(vlist) + 1):
            for subset in itertools.combinations(vlist, r):
                sset = set(subset)
                e = sum(1 for a, b in sub.edges if a in sset and b in sset)
                best = max(best, -(e // -len(sset)))
        assert got == best


def test_random_orientation_deterministic():
    a = random_orientation(JohnsonGraph(4, 2), seed=5)
    b = random_orientation(JohnsonGraph(4, 2), seed=5)
    assert a.direction == b.direction
    c = random_orientation(JohnsonGraph(4, 2), seed=6)
    assert len(c.arcs()) == 12


def test_random_orientation_handshake():
    for seed in (0, 1, 2):
        o = random_orientation(JohnsonGraph(5, 2), seed=seed)
        total = sum(o._outdeg.values())
        assert total == comb(5, 2) * 2 * 3 // 2


def test_count_w_light():
    o = eulerian_orientation(JohnsonGraph(4, 2).full_subgraph())
    assert count_w_light(o, 2) == 6
    assert count_w_light(o, 1) == 0
    assert count_w_light(o, 4) == 6
    partial = eulerian_orientation(build_induced(JohnsonGraph(4, 2), [0, 1]))
    with pytest.raises(ValueError):
        count_w_light(partial, 1)


def test_outdegree_errors():
    o = eulerian_orientation(build_induced(JohnsonGraph(4, 2), [0, 1]))
    assert outdegree(o, 0) + outdegree(o, 1) == 1
    with pytest.raises(ValueError):
        outdegree(o, 5)


def test_orientation_file_roundtrip(tmp_path):
    o = eulerian_orientation(JohnsonGraph(4, 2).full_subgraph())
    path = tmp_path / "wit.txt"
    write_orientation_file(path, o)
    n, w, arcs = read_orientation_file(path)
    assert (n, w) == (4, 2)
    assert len(arcs) == 12
    first = path.read_text().splitlines()
    assert first[0] == "4 2"
    assert "->" in first[1]
