"""Girth, per-edge girth-cycle counts, signatures and distance partitions.

The per-edge counter follows the distance-partition structure around an
edge uv: for odd girth 2d+1 the girth cycles through uv correspond
one-to-one to the far vertices at distance d from both ends, for even
girth 2d to the far edges joining the two depth-d shells. Global cycle
enumeration exists only as a cross-check (tests) and for operations that
need the cycles themselves, where each cycle is reconstructed from the
same partition structure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable

from .errors import InfiniteGirth, NotAnEdge, NotCubicVertex
from .multigraph import MultiGraph


# --- distances ---

def _adjsets(g: MultiGraph) -> list[set[int]]:
    """Neighbor sets without self (loops never shorten a distance)."""
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for e in g.edges:
        if not e.is_loop:
            u, v = e.ends
            adj[u].add(v)
            adj[v].add(u)
    return adj


def _bfs(adj: list[set[int]], src: int, maxdepth: int | None = None) -> list[int]:
    dist = [-1] * len(adj)
    dist[src] = 0
    q = deque([src])
    while q:
        v = q.popleft()
        if maxdepth is not None and dist[v] >= maxdepth:
            continue
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


# --- girth ---

def girth(g: MultiGraph) -> int | None:
    """Length of a shortest cycle; None for forests.

    Loops give girth 1 and a parallel pair girth 2; otherwise the girth
    of the underlying simple graph via rooted BFS.
    """
    if g.has_loops:
        return 1
    if g.has_parallel_edges:
        return 2
    adj = _adjsets(g)
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        q = deque([root])
        while q:
            v = q.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                continue
            for w in adj[v]:
                if w == parent[v]:
                    continue
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    q.append(w)
                else:
                    # non-tree edge: closed walk through the root
                    cand = dist[v] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
        if best == 3:
            break
    return best


# --- per-edge counts ---

def _require_finite(g: MultiGraph) -> int:
    gir = girth(g)
    if gir is None:
        raise InfiniteGirth("graph is a forest")
    return gir


def _epsilon_simple(
    g: MultiGraph, adj: list[set[int]], gir: int, u: int, v: int
) -> int:
    d = gir // 2
    du = _bfs(adj, u, d)
    dv = _bfs(adj, v, d)
    if gir % 2:
        return sum(1 for x in range(g.n) if du[x] == d and dv[x] == d)
    count = 0
    for e in g.edges:
        x, y = e.ends
        if (du[x] == d - 1 and dv[x] == d and du[y] == d and dv[y] == d - 1) or (
            du[y] == d - 1 and dv[y] == d and du[x] == d and dv[x] == d - 1
        ):
            count += 1
    return count


def epsilon(g: MultiGraph, eid: int, gir: int | None = None) -> int:
    """Number of girth cycles containing the edge (cycles as edge sets).
    Pass the girth when already known to skip recomputing it."""
    if gir is None:
        gir = _require_finite(g)
    e = g.edge(eid)
    if gir == 1:
        return 1 if e.is_loop else 0
    if gir == 2:
        if e.is_loop:
            return 0
        return sum(1 for f in g.edges if f.ends == e.ends) - 1
    u, v = e.ends
    return _epsilon_simple(g, _adjsets(g), gir, u, v)


# --- reports ---

@dataclass(frozen=True, slots=True)
class GirthReport:
    girth: int
    cycle_count: int
    epsilon: dict[int, int]
    signatures: dict[int, tuple[int, ...]]
    regular: tuple[int, ...] | None

    def to_json(self) -> dict[str, Any]:
        return {
            "girth": self.girth,
            "cycles": self.cycle_count,
            "epsilon": {str(k): v for k, v in sorted(self.epsilon.items())},
            "signatures": {str(k): list(v) for k, v in sorted(self.signatures.items())},
            "regular": list(self.regular) if self.regular is not None else None,
        }


def girth_report(g: MultiGraph) -> GirthReport:
    gir = _require_finite(g)
    adj = _adjsets(g)
    eps: dict[int, int] = {}
    for e in g.edges:
        if gir == 1:
            eps[e.id] = 1 if e.is_loop else 0
        elif gir == 2:
            eps[e.id] = 0 if e.is_loop else sum(1 for f in g.edges if f.ends == e.ends) - 1
        else:
            u, v = e.ends
            eps[e.id] = _epsilon_simple(g, adj, gir, u, v)
    total = sum(eps.values())
    assert total % gir == 0, "cycle-count conservation failed"
    signatures: dict[int, tuple[int, ...]] = {}
    for v in range(g.n):
        incident: list[int] = []
        for e in g.edges:
            if e.is_loop and e.ends[0] == v:
                incident.extend((eps[e.id], eps[e.id]))
            elif not e.is_loop and v in e.ends:
                incident.append(eps[e.id])
        signatures[v] = tuple(sorted(incident))
    values = set(signatures.values())
    regular = values.pop() if len(values) == 1 and g.n > 0 else None
    return GirthReport(gir, total // gir, eps, signatures, regular)


# --- girth-cycle listing (partition-guided) ---

def _walk_down(adj: list[set[int]], dist: list[int], x: int, pair_eid) -> list[int]:
    """Edge ids of the unique shortest path from x to the BFS source."""
    path = []
    p = x
    while dist[p] > 0:
        nxt = [w for w in adj[p] if dist[w] == dist[p] - 1]
        assert len(nxt) == 1, "shortest path not unique below the girth radius"
        path.append(pair_eid[(min(p, nxt[0]), max(p, nxt[0]))])
        p = nxt[0]
    return path


def girth_cycles(g: MultiGraph) -> list[frozenset[int]]:
    """All girth cycles, each as its set of edge ids."""
    gir = _require_finite(g)
    if gir == 1:
        return [frozenset([e.id]) for e in g.edges if e.is_loop]
    if gir == 2:
        groups: dict[tuple[int, ...], list[int]] = {}
        for e in g.edges:
            groups.setdefault(e.ends, []).append(e.id)
        out = []
        for ids in groups.values():
            out.extend(
                frozenset((ids[i], ids[j]))
                for i in range(len(ids))
                for j in range(i + 1, len(ids))
            )
        return sorted(out, key=sorted)
    adj = _adjsets(g)
    pair_eid = {e.ends: e.id for e in g.edges}
    d = gir // 2
    found: set[frozenset[int]] = set()
    for e in g.edges:
        u, v = e.ends
        du = _bfs(adj, u, d)
        dv = _bfs(adj, v, d)
        if gir % 2:
            for x in range(g.n):
                if du[x] == d and dv[x] == d:
                    cyc = {e.id}
                    cyc.update(_walk_down(adj, du, x, pair_eid))
                    cyc.update(_walk_down(adj, dv, x, pair_eid))
                    assert len(cyc) == gir
                    found.add(frozenset(cyc))
        else:
            for f in g.edges:
                x, y = f.ends
                if du[x] == d and dv[x] == d - 1 and du[y] == d - 1 and dv[y] == d:
                    x, y = y, x
                if du[x] == d - 1 and dv[x] == d and du[y] == d and dv[y] == d - 1:
                    cyc = {e.id, f.id}
                    cyc.update(_walk_down(adj, du, x, pair_eid))
                    cyc.update(_walk_down(adj, dv, y, pair_eid))
                    assert len(cyc) == gir
                    found.add(frozenset(cyc))
    return sorted(found, key=sorted)


def cycle_vertex_order(g: MultiGraph, cycle: Iterable[int]) -> list[int]:
    """Vertices of a cycle (given as edge ids) in traversal order,
    starting at the least vertex, toward its lesser neighbor."""
    edges = [g.edge(eid) for eid in cycle]
    if len(edges) == 1:  # loop
        return [edges[0].ends[0]]
    nxt: dict[int, list[int]] = {}
    for e in edges:
        u, v = e.ends[0], e.ends[-1]
        nxt.setdefault(u, []).append(v)
        nxt.setdefault(v, []).append(u)
    start = min(nxt)
    order = [start]
    prev = None
    cur = start
    for _ in range(len(edges) - 1):
        a, b = sorted(nxt[cur])
        step = a if a != prev else b
        order.append(step)
        prev, cur = cur, step
    return order


# --- direct path-count of cycles through an edge or a 2-path ---

def _count_paths(
    adj: list[set[int]],
    dist_to_goal: list[int],
    cur: int,
    goal: int,
    remaining: int,
    banned: frozenset[int],
    visited: set[int],
) -> int:
    if remaining == 0:
        return 1 if cur == goal else 0
    if dist_to_goal[cur] < 0 or dist_to_goal[cur] > remaining:
        return 0
    total = 0
    for w in adj[cur]:
        if w in visited or w in banned:
            continue
        if w == goal and remaining != 1:
            continue
        visited.add(w)
        total += _count_paths(adj, dist_to_goal, w, goal, remaining - 1, banned, visited)
        visited.remove(w)
    return total


def epsilon_by_paths(g: MultiGraph, eid: int, gir: int | None = None) -> int:
    """ε by direct definition: simple u-v paths of length g-1 avoiding uv.
    Used as the literal side of the partition-fact checks."""
    if gir is None:
        gir = _require_finite(g)
    e = g.edge(eid)
    if gir <= 2:
        return epsilon(g, eid, gir)
    u, v = e.ends
    adj = _adjsets(g)
    if gir == 3:
        return len(adj[u] & adj[v])
    dist_v = _bfs(adj, v, gir)
    adj_no_uv = [set(s) for s in adj]
    adj_no_uv[u].discard(v)
    adj_no_uv[v].discard(u)
    return _count_paths(adj_no_uv, dist_v, u, v, gir - 1, frozenset(), {u})


# --- distance partitions ---

@dataclass(frozen=True, slots=True)
class DistancePartition:
    """Cells D^i_j = S_i(u) ∩ S_j(anchor); anchor is v for an edge pair
    (u, v) and w for a 2-path (u, v, w)."""

    sources: tuple[int, ...]
    radius: int
    cells: dict[tuple[int, int], frozenset[int]] = field(repr=False)

    def cell(self, i: int, j: int) -> frozenset[int]:
        return self.cells.get((i, j), frozenset())


def _partition(g: MultiGraph, u: int, anchor: int, gir: int) -> DistancePartition:
    adj = _adjsets(g)
    d = gir // 2
    bound = d + 1
    du = _bfs(adj, u, bound)
    da = _bfs(adj, anchor, bound)
    cells: dict[tuple[int, int], set[int]] = {}
    for x in range(g.n):
        if 0 <= du[x] <= bound and 0 <= da[x] <= bound:
            cells.setdefault((du[x], da[x]), set()).add(x)
    frozen = {ij: frozenset(s) for ij, s in cells.items()}
    return DistancePartition((u, anchor), d, frozen)


def distance_partition(g: MultiGraph, u: int, v: int) -> DistancePartition:
    if not any(not e.is_loop and set(e.ends) == {u, v} for e in g.edges):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    gir = _require_finite(g)
    return _partition(g, u, v, gir)


def distance_partition_2path(g: MultiGraph, u: int, v: int, w: int) -> DistancePartition:
    ends = {frozenset(e.ends) for e in g.edges if not e.is_loop}
    if frozenset((u, v)) not in ends or frozenset((v, w)) not in ends:
        raise NotAnEdge(f"({u}, {v}, {w}) is not a 2-path")
    gir = _require_finite(g)
    part = _partition(g, u, w, gir)
    return DistancePartition((u, v, w), part.radius, part.cells)


@dataclass(frozen=True, slots=True)
class FactResult:
    fact: int
    applicable: bool
    holds: bool | None
    witness: Any = None


def check_partition_facts(g: MultiGraph, u: int, v: int) -> list[FactResult]:
    """Evaluate the six distance-partition facts literally for the edge uv.

    Facts quantified with (k-1)-counts apply to regular graphs only; facts
    five and six are gated on the girth's parity.
    """
    eid = None
    for e in g.edges:
        if not e.is_loop and set(e.ends) == {u, v}:
            eid = e.id
            break
    if eid is None:
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    gir = _require_finite(g)
    part = _partition(g, u, v, gir)
    adj = _adjsets(g)
    d = part.radius
    k = g.is_regular()
    results: list[FactResult] = []

    # (1) D^i_i empty below the radius
    bad = [(i, sorted(part.cell(i, i))) for i in range(1, d) if part.cell(i, i)]
    results.append(FactResult(1, True, not bad, bad or None))

    # (2) the two off-diagonal shells are independent sets
    bad2 = []
    for i in range(2, d + 1):
        for cell in (part.cell(i - 1, i), part.cell(i, i - 1)):
            for x in cell:
                hits = adj[x] & cell
                if hits:
                    bad2.append((i, x, sorted(hits)))
    results.append(FactResult(2, True, not bad2, bad2 or None))

    # (3) one neighbour back; k-1 neighbours forward (regular only)
    bad3 = []
    for i in range(2, d + 1):
        for cell, back, fwd in (
            (part.cell(i - 1, i), part.cell(i - 2, i - 1), part.cell(i, i + 1)),
            (part.cell(i, i - 1), part.cell(i - 1, i - 2), part.cell(i + 1, i)),
        ):
            for x in cell:
                if len(adj[x] & back) != 1:
                    bad3.append((i, x, "back", len(adj[x] & back)))
                if k is not None and i <= d - 1 and len(adj[x] & fwd) != k - 1:
                    bad3.append((i, x, "forward", len(adj[x] & fwd)))
    results.append(FactResult(3, True, not bad3, bad3 or None))

    # (4) shell sizes (k-1)^(i-1), regular graphs
    if k is None:
        results.append(FactResult(4, False, None))
    else:
        bad4 = []
        for i in range(1, d + 1):
            want = (k - 1) ** (i - 1)
            for cell_name, cell in (("upper", part.cell(i - 1, i)), ("lower", part.cell(i, i - 1))):
                if len(cell) != want:
                    bad4.append((i, cell_name, len(cell), want))
        results.append(FactResult(4, True, not bad4, bad4 or None))

    eps_direct = epsilon_by_paths(g, eid, gir)

    # (5) even girth: ε(uv) counts the far cross edges
    if gir % 2 == 0:
        far = 0
        upper, lower = part.cell(d - 1, d), part.cell(d, d - 1)
        for e in g.edges:
            if e.is_loop:
                continue
            x, y = e.ends
            if (x in upper and y in lower) or (y in upper and x in lower):
                far += 1
        results.append(FactResult(5, True, far == eps_direct, (far, eps_direct)))
        results.append(FactResult(6, False, None))
    else:
        # (6) odd girth: matched far shell of size ε(uv)
        results.append(FactResult(5, False, None))
        dd = part.cell(d, d)
        ok = len(dd) == eps_direct
        wit: Any = (len(dd), eps_direct)
        for x in dd:
            if len(adj[x] & part.cell(d - 1, d)) != 1 or len(adj[x] & part.cell(d, d - 1)) != 1:
                ok = False
                wit = ("unmatched far vertex", x)
                break
        results.append(FactResult(6, True, ok, wit))
    return results


# --- two-path counts ---

@dataclass(frozen=True, slots=True)
class TwoPathCounts:
    """Girth-cycle counts of the three 2-paths at a cubic vertex, in the
    fixed order (e1e2, e2e3, e3e1) with e1 < e2 < e3 by edge id."""

    vertex: int
    edges: tuple[int, int, int]
    x: int
    y: int
    z: int


def _cycles_through_pair(
    g: MultiGraph, adj: list[set[int]], gir: int, v: int, ea: int, eb: int
) -> int:
    a_edge, b_edge = g.edge(ea), g.edge(eb)
    if gir == 1:
        return 0  # a loop cycle has a single edge
    if gir == 2:
        return 1 if a_edge.ends == b_edge.ends else 0
    a = a_edge.ends[0] if a_edge.ends[1] == v else a_edge.ends[1]
    b = b_edge.ends[0] if b_edge.ends[1] == v else b_edge.ends[1]
    adj_no_v = [set(s) for s in adj]
    for w in adj[v]:
        adj_no_v[w].discard(v)
    adj_no_v[v] = set()
    dist_b = _bfs(adj_no_v, b, gir)
    return _count_paths(adj_no_v, dist_b, a, b, gir - 2, frozenset([v]), {a})


def two_path_counts(g: MultiGraph, v: int) -> TwoPathCounts:
    if g.degree(v) != 3 or any(e.is_loop and e.ends[0] == v for e in g.edges):
        raise NotCubicVertex(f"vertex {v} is not a loop-free valence-3 vertex")
    gir = _require_finite(g)
    ids = sorted(e.id for e in g.edges if v in e.ends)
    adj = _adjsets(g)
    e1, e2, e3 = ids
    x = _cycles_through_pair(g, adj, gir, v, e1, e2)
    y = _cycles_through_pair(g, adj, gir, v, e2, e3)
    z = _cycles_through_pair(g, adj, gir, v, e3, e1)
    return TwoPathCounts(v, (e1, e2, e3), x, y, z)
