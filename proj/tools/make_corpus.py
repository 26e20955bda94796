#!/usr/bin/env python3
"""Regenerate corpus/*.g6 from networkx constructions and LCF notation.

Usage: python3 tools/make_corpus.py [outdir]
"""
import itertools
import os
import sys

import networkx as nx


def lcf(n, shifts, repeats):
    return nx.LCF_graph(n, shifts, repeats)


def generalized_petersen(n, k):
    g = nx.Graph()
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
        g.add_edge(i, n + i)
        g.add_edge(n + i, n + (i + k) % n)
    return g


def coxeter():
    # 3-subsets of a 7-set that are not lines of the Fano plane, adjacent when disjoint.
    fano = [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}]
    vs = [frozenset(t) for t in itertools.combinations(range(7), 3) if set(t) not in fano]
    g = nx.Graph()
    g.add_nodes_from(range(len(vs)))
    for i, j in itertools.combinations(range(len(vs)), 2):
        if not vs[i] & vs[j]:
            g.add_edge(i, j)
    return g


def gosset():
    # Two copies of the pairs of an 8-set; same copy adjacent when meeting in
    # one point, different copies adjacent when disjoint.
    pairs = list(itertools.combinations(range(8), 2))
    vs = [(p, 0) for p in pairs] + [(p, 1) for p in pairs]
    g = nx.Graph()
    g.add_nodes_from(range(len(vs)))
    for i, j in itertools.combinations(range(len(vs)), 2):
        (a, ca), (b, cb) = vs[i], vs[j]
        meet = len(set(a) & set(b))
        if (ca == cb and meet == 1) or (ca != cb and meet == 0):
            g.add_edge(i, j)
    return g


def tietze():
    # Petersen graph with one vertex replaced by a triangle.
    p = nx.petersen_graph()
    nb = sorted(p.neighbors(0))
    p.remove_node(0)
    p.add_edges_from([("x", "y"), ("y", "z"), ("z", "x"), ("x", nb[0]), ("y", nb[1]), ("z", nb[2])])
    return nx.convert_node_labels_to_integers(p)


BALABAN_10 = [
    -9, -25, -19, 29, 13, 35, -13, -29, 19, 25, 9, -29, 29, 17, 33, 21, 9, -13, -31, -9,
    25, 17, 9, -31, 27, -9, 17, -19, -29, 27, -17, -9, -29, 33, -25, 25, -21, 17, -17, 29,
    35, -29, 17, -17, 21, -25, 25, -33, 29, 9, 17, -27, 29, 19, -17, 9, -27, 31, -9, -17,
    -25, 9, 31, 13, -9, -21, -33, -17, -29, 29,
]

TUTTE_12 = [17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17]

GRAPHS = {
    "petersen": (nx.petersen_graph, 10, 5),
    "heawood": (nx.heawood_graph, 14, 6),
    "pappus": (nx.pappus_graph, 18, 6),
    "desargues": (nx.desargues_graph, 20, 6),
    "moebius_kantor": (nx.moebius_kantor_graph, 16, 6),
    "nauru": (lambda: generalized_petersen(12, 5), 24, 6),
    "durer": (lambda: generalized_petersen(6, 2), 12, 3),
    "bidiakis_cube": (lambda: lcf(12, [6, 4, -4], 4), 12, 4),
    "franklin": (lambda: lcf(12, [5, -5], 6), 12, 4),
    "tietze": (tietze, 12, 3),
    "coxeter": (coxeter, 28, 7),
    "gray": (lambda: lcf(54, [-25, 7, -7, 13, -13, 25], 9), 54, 8),
    "frucht": (nx.frucht_graph, 12, 3),
    "hexahedron": (nx.cubical_graph, 8, 4),
    "dodecahedron": (nx.dodecahedral_graph, 20, 5),
    "icosahedron": (nx.icosahedral_graph, 12, 3),
    "truncated_tetrahedron": (nx.truncated_tetrahedron_graph, 12, 3),
    "dyck": (lambda: lcf(32, [5, -5, 13, -13], 8), 32, 6),
    "tutte_coxeter": (lambda: lcf(30, [-13, -9, 7, -7, 9, 13], 5), 30, 8),
    "foster": (lambda: lcf(90, [17, -9, 37, -37, 9, -17], 15), 90, 10),
    "folkman": (lambda: lcf(20, [5, -7, -7, 5], 5), 20, 4),
    "mcgee": (lambda: lcf(24, [12, 7, -7], 8), 24, 7),
    "tutte_12cage": (lambda: lcf(126, TUTTE_12, 7), 126, 12),
    "tutte": (nx.tutte_graph, 46, 4),
    "gosset": (gosset, 56, 3),
    "harries": (lambda: lcf(70, [-29, -19, -13, 13, 21, -27, 27, 33, -13, 13, 19, -21, -33, 29], 5), 70, 10),
    "balaban_10cage": (lambda: lcf(70, BALABAN_10, 1), 70, 10),
}


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "corpus")
    os.makedirs(outdir, exist_ok=True)
    for name, (build, order, girth) in GRAPHS.items():
        g = nx.convert_node_labels_to_integers(build(), ordering="sorted" if name not in ("tietze",) else "default")
        degs = {d for _, d in g.degree()}
        assert g.number_of_nodes() == order, name
        assert len(degs) == 1, name
        assert nx.is_connected(g), name
        assert nx.girth(g) == girth, (name, nx.girth(g))
        text = nx.to_graph6_bytes(g, header=False).decode().strip()
        with open(os.path.join(outdir, name + ".g6"), "w", newline="\n") as f:
            f.write(text + "\n")
        print(f"{name}: n={order} degree={degs.pop()} girth={girth}")


if __name__ == "__main__":
    main()
