#!/usr/bin/env python3
"""Regenerate the bundled graph corpora under src/girthlab/data/.

Deliberately self-contained: the fixtures are produced by an independent
enumerator with its own canonical labeling, graph6 writer and naive
cycle statistics, so the shipped corpus never depends on the library it
is used to test.

  cubic_le14.g6          all connected cubic simple graphs on 4..14
                         vertices (counts checked against the published
                         sequence 1, 2, 5, 19, 85, 509)
  girthreg_ext_16_20.g6  the girth-regular graphs of girth <= 5 on
                         16/18/20 vertices: prisms, Möbius ladders, the
                         dodecahedron, and every truncation of a loopless
                         g-regular base multigraph under every dihedral
                         scheme that passes the naive girth-regularity
                         filter

Usage: python tools/gen_corpus.py [outdir]
"""

from __future__ import annotations

import sys
from collections import deque
from itertools import combinations, permutations
from pathlib import Path

EXPECTED_CONNECTED_CUBIC = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


# ---------- basic helpers (simple graphs as frozenset edge sets) ----------

def adj_of(n: int, edges) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def is_connected(n: int, adj: list[set[int]]) -> bool:
    if n == 0:
        return True
    seen = {0}
    q = deque([0])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen) == n


# ---------- canonical certificate (refinement + individualization) ----------

def _refine(n: int, adj: list[set[int]], colors: list[int]) -> list[int]:
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [table[s] for s in sig]
        if new == colors:
            return new
        colors = new


def canon_cert(n: int, edges) -> tuple:
    """Canonical edge tuple, minimal over an individualization search."""
    adj = adj_of(n, edges)
    best: tuple | None = None

    def emit(colors: list[int]) -> None:
        nonlocal best
        order = sorted(range(n), key=lambda v: colors[v])
        pos = {v: i for i, v in enumerate(order)}
        cert = tuple(
            sorted((min(pos[u], pos[w]), max(pos[u], pos[w])) for u, w in edges)
        )
        if best is None or cert < best:
            best = cert

    def search(colors: list[int]) -> None:
        colors = _refine(n, adj, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            emit(colors)
            return
        for v in target:
            branched = list(colors)
            branched[v] = -1
            search(branched)

    search([0] * n)
    assert best is not None
    return (n,) + best


# ---------- graph6 writer ----------

def graph6_line(n: int, edges) -> str:
    assert n <= 62
    adj = [[False] * n for _ in range(n)]
    for u, v in edges:
        adj[u][v] = adj[v][u] = True
    bits = [1 if adj[i][j] else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------- exhaustive census via 2-factor + perfect matching ----------
#
# Every cubic graph with a perfect matching is a disjoint cycle cover plus
# a perfect matching. Cubic graphs without one exist only from 16 vertices
# up, so sweeping all (cycle partition, matching) pairs is exhaustive for
# n <= 14; the published counts are re-checked before anything is written.

def partitions_min3(n: int):
    """Partitions of n into parts >= 3, descending."""

    def rec(remaining: int, maxpart: int):
        if remaining == 0:
            yield []
            return
        for p in range(min(remaining, maxpart), 2, -1):
            if remaining - p == 0 or remaining - p >= 3:
                for rest in rec(remaining - p, p):
                    yield [p] + rest

    yield from rec(n, n)


def two_factor_edges(parts: list[int]) -> frozenset:
    edges = set()
    start = 0
    for p in parts:
        for i in range(p):
            u, v = start + i, start + (i + 1) % p
            edges.add((min(u, v), max(u, v)))
        start += p
    return frozenset(edges)


def perfect_matchings(n: int, forbidden: frozenset):
    """Perfect matchings on 0..n-1 avoiding the forbidden pairs."""

    def rec(unmatched: list[int], acc: list):
        if not unmatched:
            yield tuple(acc)
            return
        u = unmatched[0]
        for j in range(1, len(unmatched)):
            w = unmatched[j]
            if (u, w) in forbidden:
                continue
            acc.append((u, w))
            yield from rec(unmatched[1:j] + unmatched[j + 1 :], acc)
            acc.pop()

    yield from rec(list(range(n)), [])


def generate_connected_cubic(max_n: int) -> dict[int, list[tuple]]:
    """Connected cubic simple graphs on 4..max_n vertices, as canonical
    edge tuples."""
    levels: dict[int, list[tuple]] = {}
    for n in range(4, max_n + 1, 2):
        seen: set[tuple] = set()
        for parts in partitions_min3(n):
            tf = two_factor_edges(parts)
            for matching in perfect_matchings(n, tf):
                edges = frozenset(tf | set(matching))
                if not is_connected(n, adj_of(n, edges)):
                    continue
                cert = canon_cert(n, edges)
                seen.add(cert)
        levels[n] = sorted(seen)
    return levels


# ---------- naive cycle statistics (independent oracle-style) ----------

def naive_girth(n: int, adj: list[set[int]]) -> int | None:
    best = None
    for root in range(n):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if w == parent[v]:
                    continue
                if w in dist:
                    cand = dist[v] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
                else:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    q.append(w)
    return best


def _count_paths(adj, cur, goal, remaining, visited) -> int:
    if remaining == 0:
        return 1 if cur == goal else 0
    total = 0
    for w in adj[cur]:
        if w in visited or (w == goal and remaining != 1):
            continue
        visited.add(w)
        total += _count_paths(adj, w, goal, remaining - 1, visited)
        visited.remove(w)
    return total


def naive_signature(n: int, edges) -> tuple[int, tuple[int, ...]] | None:
    """(girth, signature) if the cubic graph is girth-regular, else None."""
    adj = adj_of(n, edges)
    gir = naive_girth(n, adj)
    if gir is None:
        return None
    eps: dict[tuple[int, int], int] = {}
    for u, v in edges:
        adj[u].discard(v)
        adj[v].discard(u)
        eps[(u, v)] = _count_paths(adj, u, v, gir - 1, {u})
        adj[u].add(v)
        adj[v].add(u)
    sigs = set()
    for v in range(n):
        sigs.add(tuple(sorted(c for (a, b), c in eps.items() if v in (a, b))))
    if len(sigs) != 1:
        return None
    return gir, sigs.pop()


# ---------- named families (independent constructions) ----------

def prism_edges(k: int) -> tuple[int, list]:
    pairs = [(i, (i + 1) % k) for i in range(k)]
    pairs += [(k + i, k + (i + 1) % k) for i in range(k)]
    pairs += [(i, k + i) for i in range(k)]
    return 2 * k, [(min(u, v), max(u, v)) for u, v in pairs]


def mobius_edges(k: int) -> tuple[int, list]:
    m = 2 * k
    pairs = [(i, (i + 1) % m) for i in range(m)] + [(i, i + k) for i in range(k)]
    return m, sorted({(min(u, v), max(u, v)) for u, v in pairs})


def dodecahedron_edges() -> tuple[int, list]:
    lcf = (10, 7, 4, -4, -7, 10, -4, 7, -7, 4)
    n = 20
    pairs = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    pairs |= {
        (min(i, (i + lcf[i % 10]) % n), max(i, (i + lcf[i % 10]) % n)) for i in range(n)
    }
    return n, sorted(pairs)


# ---------- multigraph bases and truncations ----------

def regular_multigraphs(v: int, k: int) -> list[dict[tuple[int, int], int]]:
    """Connected loopless k-regular multigraphs on v vertices, up to
    isomorphism (brute-force canonical form over all vertex permutations)."""
    pairs = list(combinations(range(v), 2))
    results: list[dict[tuple[int, int], int]] = []
    seen: set[tuple] = set()

    def done(mult: dict[tuple[int, int], int]) -> None:
        deg = [0] * v
        for (a, b), m in mult.items():
            deg[a] += m
            deg[b] += m
        if any(d != k for d in deg):
            return
        adj = adj_of(v, [p for p, m in mult.items() if m])
        if not is_connected(v, adj):
            return
        cert = min(
            tuple(mult.get((min(p[i], p[j]), max(p[i], p[j])), 0) for i, j in pairs)
            for p in permutations(range(v))
        )
        if cert not in seen:
            seen.add(cert)
            results.append(dict(mult))

    def walk(i: int, mult: dict, deg: list[int]) -> None:
        if i == len(pairs):
            done(mult)
            return
        a, b = pairs[i]
        cap = min(k - deg[a], k - deg[b])
        if b == v - 1:  # last pair touching a: its multiplicity is forced
            need = k - deg[a]
            choices = [need] if 0 <= need <= cap else []
        else:
            choices = range(cap + 1)
        for m in choices:
            if m:
                mult[(a, b)] = m
                deg[a] += m
                deg[b] += m
            walk(i + 1, mult, deg)
            if m:
                del mult[(a, b)]
                deg[a] -= m
                deg[b] -= m

    walk(0, {}, [0] * v)
    return results


def base_arcs(v: int, mult: dict[tuple[int, int], int]):
    """Expand a multiplicity map to edge instances and their arcs."""
    edges = []
    for (a, b), m in sorted(mult.items()):
        for _ in range(m):
            edges.append((len(edges), a, b))
    out = {u: [] for u in range(v)}
    for eid, a, b in edges:
        out[a].append((eid, a))
        out[b].append((eid, b))
    return edges, out


def rotations_of(arcs: list) -> list[tuple]:
    """Cyclic orders of the arc list up to rotation and reflection."""
    first, rest = arcs[0], arcs[1:]
    rots = []
    for perm in permutations(rest):
        if perm[0] <= perm[-1]:
            rots.append((first,) + perm)
    return rots


def truncation_edges(v: int, mult: dict[tuple[int, int], int], scheme: dict):
    edges, out = base_arcs(v, mult)
    arcs = sorted(a for als in out.values() for a in als)
    idx = {a: i for i, a in enumerate(arcs)}
    pairs = set()
    for rot in scheme.values():
        k = len(rot)
        for i in range(k):
            a, b = rot[i], rot[(i + 1) % k]
            pairs.add((min(idx[a], idx[b]), max(idx[a], idx[b])))
    for eid, a, b in edges:
        i, j = idx[(eid, a)], idx[(eid, b)]
        pairs.add((min(i, j), max(i, j)))
    return len(arcs), sorted(pairs)


def truncation_candidates(base_v: int, base_k: int):
    """Every truncation of every scheme on every loopless base."""
    for mult in regular_multigraphs(base_v, base_k):
        _, out = base_arcs(base_v, mult)
        per_vertex = [rotations_of(out[u]) for u in range(base_v)]
        stack: list[dict] = [{}]
        for u in range(base_v):
            nxt = []
            for s in stack:
                for rot in per_vertex[u]:
                    s2 = dict(s)
                    s2[u] = rot
                    nxt.append(s2)
            stack = nxt
        for scheme in stack:
            yield truncation_edges(base_v, mult, scheme)


def extension_graphs() -> list[tuple[int, list]]:
    """Girth-regular graphs of girth <= 5 on 16/18/20 vertices."""
    out: list[tuple[int, list]] = []
    for k in (8, 9, 10):
        out.append(prism_edges(k))
        out.append(mobius_edges(k))
    out.append(dodecahedron_edges())
    # (0,1,1) truncations: base valence g on 2|E|/g-sized graphs
    jobs = [(6, 3), (4, 4), (5, 4), (4, 5)]  # (base vertices, base valence)
    for bv, bk in jobs:
        for n, edges in truncation_candidates(bv, bk):
            stats = naive_signature(n, edges)
            if stats is None:
                continue
            gir, _sig = stats
            if gir <= 5 and is_connected(n, adj_of(n, edges)):
                out.append((n, edges))
    return out


# ---------- main ----------

def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("src/girthlab/data")
    outdir.mkdir(parents=True, exist_ok=True)

    levels = generate_connected_cubic(14)
    lines = []
    for n in sorted(levels):
        got = len(levels[n])
        want = EXPECTED_CONNECTED_CUBIC[n]
        print(f"n={n}: {got} connected cubic graphs (expected {want})")
        if got != want:
            print("COUNT MISMATCH - refusing to write corpus", file=sys.stderr)
            return 1
        for cert in levels[n]:
            lines.append(graph6_line(n, cert[1:]))
    (outdir / "cubic_le14.g6").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to cubic_le14.g6")

    ext = extension_graphs()
    seen: set[tuple] = set()
    ext_lines = []
    for n, edges in ext:
        cert = canon_cert(n, edges)
        if cert in seen:
            continue
        seen.add(cert)
        ext_lines.append((cert[0], cert[1:], graph6_line(n, list(cert[1:]))))
    ext_lines.sort(key=lambda t: (t[0], t[1]))
    (outdir / "girthreg_ext_16_20.g6").write_text(
        "\n".join(line for _, _, line in ext_lines) + "\n"
    )
    print(f"wrote {len(ext_lines)} graphs to girthreg_ext_16_20.g6")
    return 0


if __name__ == "__main__":
    sys.exit(main())
