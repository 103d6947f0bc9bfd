#!/usr/bin/env python3
"""Independent numeric oracle used to pin expected values for the test suite.

Computes, with numpy/scipy and hand-rolled BFS (no shared code with the Rust
implementation):
  * |SL2(F_p)|, regularity, connectivity of the Cayley graphs on {A, A^-1, B, B^-1}
    with A = [[1,1],[0,1]], B = [[1,0],[1,1]]
  * girth and diameter of those Cayley graphs
  * spectral gap of the normalized Laplacian D = (1/2)(I - A/d)
  * Petersen graph girth/diameter

Run: python3 scripts/pin_oracles.py
The printed values are frozen as constants in the Rust test suite.
"""

import itertools
import json
from collections import deque

import numpy as np


def sl2_elements(p):
    els = []
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p == 1:
            els.append((a, b, c, d))
    return els


def mat_mul(m1, m2, p):
    a, b, c, d = m1
    e, f, g, h = m2
    return ((a * e + b * g) % p, (a * f + b * h) % p,
            (c * e + d * g) % p, (c * f + d * h) % p)


def sl2_cayley(p):
    els = sl2_elements(p)
    idx = {m: i for i, m in enumerate(els)}
    gens = [(1, 1, 0, 1), (1, p - 1, 0, 1), (1, 0, 1, 1), (1, 0, p - 1, 1)]
    edges = set()
    for m in els:
        i = idx[m]
        for s in gens:
            j = idx[mat_mul(m, s, p)]
            if i != j:
                edges.add((min(i, j), max(i, j)))
    n = len(els)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return n, sorted(edges), adj


def bfs_dists(adj, root):
    n = len(adj)
    dist = [-1] * n
    dist[root] = 0
    q = deque([root])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def diameter(adj):
    best = 0
    for r in range(len(adj)):
        d = bfs_dists(adj, r)
        if min(d) < 0:
            return None  # disconnected
        best = max(best, max(d))
    return best


def girth(adj):
    # For each root: BFS; a non-tree edge (u,v) seen from u closes a cycle of
    # length dist[u]+dist[v]+1.  Min over all roots is exact for simple graphs.
    n = len(adj)
    best = None
    for r in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[r] = 0
        q = deque([r])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
                elif v != parent[u]:
                    c = dist[u] + dist[v] + 1
                    if best is None or c < best:
                        best = c
    return best


def laplacian_gap(n, edges, degree):
    a = np.zeros((n, n))
    for u, v in edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    lap = 0.5 * (np.eye(n) - a / degree)
    evals = np.linalg.eigvalsh(lap)
    near_zero = [e for e in evals if abs(e) < 1e-9]
    assert len(near_zero) == 1, f"kernel dim {len(near_zero)}"
    gap = min(e for e in evals if e >= 1e-9)
    return float(gap), float(evals[-1])


def petersen():
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer cycle
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        edges.append((i, 5 + i))                # spokes
    adj = [[] for _ in range(10)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def main():
    out = {}
    for p in [3, 5, 7, 11, 13]:
        n, edges, adj = sl2_cayley(p)
        degs = {len(a) for a in adj}
        diam = diameter(adj)
        g = girth(adj) if p <= 7 else None  # girth BFS is cheap but skip big ones we don't pin
        gap, lam_max = laplacian_gap(n, edges, 4)
        out[f"sl2_{p}"] = {
            "order": n,
            "order_formula": p * (p * p - 1),
            "degrees": sorted(degs),
            "connected": diam is not None,
            "diameter": diam,
            "girth": g,
            "gap": gap,
            "lambda_max": lam_max,
        }
        print(f"SL2(F_{p}): n={n} (formula {p*(p*p-1)}), degrees={sorted(degs)}, "
              f"diam={diam}, girth={g}, gap={gap:.12f}, lam_max={lam_max:.12f}")

    padj = petersen()
    out["petersen"] = {"diameter": diameter(padj), "girth": girth(padj)}
    print(f"Petersen: diameter={out['petersen']['diameter']}, girth={out['petersen']['girth']}")

    for n in [3, 4, 12, 15]:
        gap = (1 - np.cos(2 * np.pi / n)) / 2
        print(f"gap(C_{n}) closed form = {gap:.12f}")

    with open("scripts/pinned_oracles.json", "w") as f:
        json.dump(out, f, indent=2)
    print("wrote scripts/pinned_oracles.json")


if __name__ == "__main__":
    main()
