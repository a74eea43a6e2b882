#!/usr/bin/env python3
"""Brute-force reference computations for the C++ test suites.

Everything here is deliberately naive: graphs are edge masks, bridges are
found by delete-and-recount, and distributions are exact Fractions. The
numbers printed by this script are frozen into the C++ tests as expected
values, so keep this file independent of the C++ implementation.

Run:  python3 tests/oracle/reference_counts.py
"""

import itertools
import json
import sys
from fractions import Fraction
from math import comb


def pairs(n):
    return [(i, j) for j in range(1, n) for i in range(j)]


def mask_edges(n, mask):
    ps = pairs(n)
    return [ps[b] for b in range(len(ps)) if mask >> b & 1]


def components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    blocks = {}
    for v in range(n):
        blocks.setdefault(find(v), []).append(v)
    return sorted(blocks.values(), key=len, reverse=True)


def kappa(n, edges):
    return len(components(n, edges))


def bridges(n, edges):
    k = kappa(n, edges)
    out = []
    for i, e in enumerate(edges):
        rest = edges[:i] + edges[i + 1:]
        if kappa(n, rest) == k + 1:
            out.append(e)
    return out


def frag(n, edges):
    return n - len(components(n, edges)[0])


def cross(n, edges):
    comps = components(n, edges)
    total = 0
    for a, b in itertools.combinations(comps, 2):
        total += len(a) * len(b)
    return total


def is_forest(n, edges):
    return len(edges) == n - kappa(n, edges)


def is_pseudoforest(n, edges):
    for comp in components(n, edges):
        cs = set(comp)
        ce = sum(1 for u, v in edges if u in cs and v in cs)
        if ce > len(comp):
            return False
    return True


def is_block_clique(n, edges):
    import networkx as nx
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    for block in nx.biconnected_components(g):
        for u, v in itertools.combinations(block, 2):
            if not g.has_edge(u, v):
                return False
    return True


def is_planar(n, edges):
    import networkx as nx
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    ok, _ = nx.check_planarity(g)
    return ok


CLASSES = {
    "all_graphs": lambda n, e: True,
    "forests": is_forest,
    "pseudoforests": is_pseudoforest,
    "block_clique": is_block_clique,
    "planar": is_planar,
}


def enumerate_class(name, n):
    pred = CLASSES[name]
    for mask in range(1 << comb(n, 2)):
        edges = mask_edges(n, mask)
        if pred(n, edges):
            yield edges


def tau(n, edges, lam, nu, cluster=False):
    e0 = len(bridges(n, edges))
    k = kappa(n, edges)
    if cluster:
        return lam ** len(edges) * nu ** k
    return lam ** e0 * nu ** k


def class_pmfs(name, n, lam=Fraction(1), nu=Fraction(1), cluster=False):
    """Exact pmfs of kappa / frag / bridge-count plus expectations."""
    by_k, by_f, by_b = {}, {}, {}
    total = Fraction(0)
    count = 0
    for edges in enumerate_class(name, n):
        t = tau(n, edges, lam, nu, cluster)
        total += t
        count += 1
        by_k[kappa(n, edges)] = by_k.get(kappa(n, edges), Fraction(0)) + t
        by_f[frag(n, edges)] = by_f.get(frag(n, edges), Fraction(0)) + t
        b = len(bridges(n, edges))
        by_b[b] = by_b.get(b, Fraction(0)) + t
    norm = lambda d: {k: v / total for k, v in sorted(d.items())}
    return {
        "count": count,
        "tau_total": total,
        "kappa": norm(by_k),
        "frag": norm(by_f),
        "bridges": norm(by_b),
        "e_kappa": sum(Fraction(k) * v for k, v in norm(by_k).items()),
        "e_frag": sum(Fraction(k) * v for k, v in norm(by_f).items()),
    }


def rooted_pmf_kappa(name, n, lam=Fraction(1), nu=Fraction(1)):
    """kappa pmf when each graph is weighted by tau times the product of
    component sizes (one root choice per component)."""
    by_k = {}
    total = Fraction(0)
    for edges in enumerate_class(name, n):
        t = tau(n, edges, lam, nu)
        mult = 1
        for c in components(n, edges):
            mult *= len(c)
        t *= mult
        total += t
        by_k[kappa(n, edges)] = by_k.get(kappa(n, edges), Fraction(0)) + t
    return {k: v / total for k, v in sorted(by_k.items())}


# --- counting DP route for forests (independent of enumeration) ---

def tree_count(k):
    return 1 if k == 1 else k ** (k - 2)


def forest_dp(n, lam=Fraction(1), nu=Fraction(1), rooted=False, max_size=None):
    """Total weight of forests on [n] with all component sizes <= max_size.

    Component of size j carries weight t_j * lam^(j-1) * nu, where t_j is
    the number of (rooted) trees on j labelled vertices.
    """
    if max_size is None:
        max_size = n
    comp_w = {}
    for j in range(1, n + 1):
        t = j ** (j - 1) if rooted else tree_count(j)
        comp_w[j] = Fraction(t) * lam ** (j - 1) * nu
    memo = {0: Fraction(1)}

    def rec(m):
        if m in memo:
            return memo[m]
        # the component containing the smallest remaining label has size j
        acc = Fraction(0)
        for j in range(1, min(m, max_size) + 1):
            acc += comb(m - 1, j - 1) * comp_w[j] * rec(m - j)
        memo[m] = acc
        return acc

    return rec(n)


def forest_dp_by_kappa(n, lam=Fraction(1), nu=Fraction(1), rooted=False):
    comp_w = {}
    for j in range(1, n + 1):
        t = j ** (j - 1) if rooted else tree_count(j)
        comp_w[j] = Fraction(t) * lam ** (j - 1) * nu
    # table[m][k] = weight of forests on m labelled vertices with k components
    table = [dict() for _ in range(n + 1)]
    table[0] = {0: Fraction(1)}
    for m in range(1, n + 1):
        for j in range(1, m + 1):
            for k, w in table[m - j].items():
                cur = table[m].get(k + 1, Fraction(0))
                table[m][k + 1] = cur + comb(m - 1, j - 1) * comp_w[j] * w
    return table[n]


def forest_e_frag_dp(n, lam=Fraction(1), nu=Fraction(1), rooted=False):
    total = forest_dp(n, lam, nu, rooted)
    e = Fraction(0)
    prev = Fraction(0)
    for s in range(1, n + 1):
        cur = forest_dp(n, lam, nu, rooted, max_size=s)
        e += Fraction(n - s) * (cur - prev)
        prev = cur
    return e / total


def fmt(d):
    if isinstance(d, dict):
        return {k: fmt(v) for k, v in d.items()}
    if isinstance(d, Fraction):
        return f"{d.numerator}/{d.denominator}"
    return d


def main():
    out = {}

    out["class_counts"] = {}
    for name, cap in [("all_graphs", 5), ("forests", 7), ("pseudoforests", 6),
                      ("block_clique", 6), ("planar", 6)]:
        out["class_counts"][name] = {
            n: sum(1 for _ in enumerate_class(name, n)) for n in range(1, cap + 1)
        }

    out["uniform"] = {}
    for name, n in [("all_graphs", 3), ("all_graphs", 4), ("all_graphs", 5),
                    ("forests", 4), ("forests", 5), ("forests", 6),
                    ("pseudoforests", 5)]:
        out["uniform"][f"{name}/{n}"] = fmt(class_pmfs(name, n))

    out["weighted"] = {
        "forests/3/lam1nu2": fmt(class_pmfs("forests", 3, Fraction(1), Fraction(2))),
        "forests/4/lam2nu1": fmt(class_pmfs("forests", 4, Fraction(2), Fraction(1))),
        "forests/4/lam1/2nu3": fmt(class_pmfs("forests", 4, Fraction(1, 2), Fraction(3))),
        "all_graphs/4/cluster_p1/2nu2": fmt(class_pmfs("all_graphs", 4,
                                                       Fraction(1), Fraction(2), cluster=True)),
    }

    out["rooted"] = {
        "forests/2": fmt(rooted_pmf_kappa("forests", 2)),
        "forests/4": fmt(rooted_pmf_kappa("forests", 4)),
        "all_graphs/2": fmt(rooted_pmf_kappa("all_graphs", 2)),
        "all_graphs/4": fmt(rooted_pmf_kappa("all_graphs", 4)),
    }

    # DP totals must match enumeration and give the large-n regression values
    out["forest_dp"] = {
        "totals": {n: str(forest_dp(n)) for n in range(1, 10)},
        "rooted_totals": {n: str(forest_dp(n, rooted=True)) for n in range(1, 10)},
        "kappa_n6": fmt(forest_dp_by_kappa(6)),
        "p_connected": {n: str(Fraction(tree_count(n)) / forest_dp(n)) for n in range(2, 10)},
        "e_frag": {n: str(forest_e_frag_dp(n)) for n in range(2, 10)},
        "rooted_e_frag": {n: str(forest_e_frag_dp(n, rooted=True)) for n in range(2, 10)},
        "rooted_p_connected": {
            n: str(Fraction(n ** (n - 1)) / forest_dp(n, rooted=True)) for n in range(2, 9)
        },
    }

    json.dump(out, sys.stdout, indent=1, default=str)
    print()


if __name__ == "__main__":
    main()
