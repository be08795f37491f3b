"""Independent reference corpus of connected cubic graphs for the test suite.

Enumerates labelled cubic graphs with N(0) = {1, 2, 3} by backtracking (an
untouched vertex is only joined when it is the least untouched one),
keeps the connected ones and removes isomorphic copies with networkx. Each
output line is "<graph6>\t<u-v edge list>", graph6 written by networkx.
"""
import sys

import networkx as nx


def cubic_graphs(n):
    deg = [0] * n
    adj = [set() for _ in range(n)]

    def add(u, v):
        adj[u].add(v); adj[v].add(u); deg[u] += 1; deg[v] += 1

    def remove(u, v):
        adj[u].discard(v); adj[v].discard(u); deg[u] -= 1; deg[v] -= 1

    for v in (1, 2, 3):
        add(0, v)

    def rec(u, lo):
        if u == n:
            yield [(a, b) for a in range(n) for b in adj[a] if a < b]
            return
        if deg[u] == 3:
            yield from rec(u + 1, u + 2)
            return
        fresh_seen = False
        for v in range(max(lo, u + 1), n):
            if deg[v] == 0:
                # untouched vertices are interchangeable: only try the first
                if fresh_seen:
                    continue
                fresh_seen = True
            if deg[v] < 3 and v not in adj[u]:
                add(u, v)
                yield from rec(u, v + 1)
                remove(u, v)

    yield from rec(1, 2)


def main(out_path):
    lines = []
    for n in (4, 6, 8, 10):
        reps = {}
        for edges in cubic_graphs(n):
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            if not nx.is_connected(g):
                continue
            key = nx.weisfeiler_lehman_graph_hash(g)
            bucket = reps.setdefault(key, [])
            if not any(nx.is_isomorphic(g, h) for h in bucket):
                bucket.append(g)
        graphs = [g for bucket in reps.values() for g in bucket]
        print(f"n={n}: {len(graphs)}", file=sys.stderr)
        for g in graphs:
            word = nx.to_graph6_bytes(g, nodes=range(n), header=False).decode().strip()
            edges = " ".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
            lines.append(f"{word}\t{edges}")
    with open(out_path, "w") as f:
        f.write("\n".join(sorted(lines)) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/reference_cubic.tsv")
