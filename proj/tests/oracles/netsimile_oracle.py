"""Reference NetSimile signature and Canberra distance, built on networkx/scipy.

Used once to freeze the expected values in tests/test_distances.cpp. Conventions:
sample standard deviation (ddof=1, 0 for a single vertex), biased skewness,
biased excess kurtosis, and 0 for skewness/kurtosis of constant columns.
"""
import sys

import networkx as nx
import numpy as np
from scipy import stats


def features(g):
    rows = []
    clustering = nx.clustering(g)
    for v in sorted(g.nodes()):
        nbrs = list(g.neighbors(v))
        deg = len(nbrs)
        mean_nbr_deg = np.mean([g.degree(u) for u in nbrs]) if nbrs else 0.0
        mean_nbr_clust = np.mean([clustering[u] for u in nbrs]) if nbrs else 0.0
        ego = set(nbrs) | {v}
        ego_edges = g.subgraph(ego).number_of_edges()
        out_edges = sum(1 for a in ego for b in g.neighbors(a) if b not in ego)
        out_verts = len({b for a in ego for b in g.neighbors(a) if b not in ego})
        rows.append([deg, clustering[v], mean_nbr_deg, mean_nbr_clust,
                     ego_edges, out_edges, out_verts])
    return np.array(rows, dtype=float)


def aggregate(col):
    const = np.all(col == col[0])
    std = float(np.std(col, ddof=1)) if len(col) > 1 else 0.0
    skew = 0.0 if const else float(stats.skew(col))
    kurt = 0.0 if const else float(stats.kurtosis(col))
    return [float(np.mean(col)), float(np.median(col)), std, skew, kurt]


def signature(g):
    f = features(g)
    return np.array([x for j in range(f.shape[1]) for x in aggregate(f[:, j])])


def canberra(x, y):
    total = 0.0
    for a, b in zip(x, y):
        den = abs(a) + abs(b)
        if den > 0:
            total += abs(a - b) / den
    return total


if __name__ == "__main__":
    k3 = nx.complete_graph(3)
    star = nx.star_graph(3)
    np.set_printoptions(precision=17)
    print("sig(K3)   =", repr(signature(k3)))
    print("sig(star) =", repr(signature(star)))
    print("canberra(K3, star) = %.17g" % canberra(signature(k3), signature(star)))
    p4 = nx.path_graph(4)
    print("canberra(star, P4) = %.17g" % canberra(signature(star), signature(p4)))
    sys.exit(0)
