"""Dihedral schemes, truncations, and the (0,1,1) inverse decomposition.

A dihedral scheme is stored as one cyclic arc sequence (rotation) per
vertex; the symmetric 2-regular relation on arcs is derived from
consecutiveness. Rotations are normalized (least arc first, lesser
direction) so equal schemes compare and serialize identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidScheme, NotCubic, NotGirthRegular, WrongSignature
from .girth import cycle_vertex_order, girth_cycles, girth_report
from .multigraph import Arc, MultiGraph


def _normalize_cycle(arcs: Sequence[Arc]) -> tuple[Arc, ...]:
    """Canonical representative of a cyclic sequence up to rotation and
    reflection (the underlying relation is direction-free)."""
    arcs = tuple(arcs)
    k = len(arcs)
    best: tuple[Arc, ...] | None = None
    for seq in (arcs, tuple(reversed(arcs))):
        start = seq.index(min(seq))
        cand = seq[start:] + seq[:start]
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


@dataclass(frozen=True)
class DihedralScheme:
    base: MultiGraph
    rotations: dict[int, tuple[Arc, ...]]

    @classmethod
    def from_rotations(
        cls, base: MultiGraph, rotations: Iterable[Sequence[Arc]]
    ) -> "DihedralScheme":
        """Validate and normalize one rotation cycle per vertex."""
        by_vertex: dict[int, tuple[Arc, ...]] = {}
        for cyc in rotations:
            cyc = tuple(cyc)
            if len(cyc) < 3:
                raise InvalidScheme(f"rotation cycle of length {len(cyc)} < 3")
            tails = {a.tail for a in cyc}
            if len(tails) != 1:
                raise InvalidScheme(f"rotation mixes vertices {sorted(tails)}")
            v = cyc[0].tail
            if v in by_vertex:
                raise InvalidScheme(f"two rotation cycles at vertex {v}")
            out = base.out_arcs(v)
            if sorted(cyc) != out:
                raise InvalidScheme(
                    f"rotation at vertex {v} does not list out({v}) exactly once"
                )
            by_vertex[v] = _normalize_cycle(cyc)
        for v in range(base.n):
            if base.degree(v) < 3:
                raise InvalidScheme(f"vertex {v} has valence {base.degree(v)} < 3")
            if v not in by_vertex:
                raise InvalidScheme(f"no rotation at vertex {v}")
        return cls(base, by_vertex)

    def rotation(self, v: int) -> tuple[Arc, ...]:
        return self.rotations[v]

    def related_pairs(self) -> set[frozenset[Arc]]:
        """The scheme as a relation: unordered consecutive pairs."""
        pairs: set[frozenset[Arc]] = set()
        for cyc in self.rotations.values():
            k = len(cyc)
            for i in range(k):
                pairs.add(frozenset((cyc[i], cyc[(i + 1) % k])))
        return pairs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DihedralScheme):
            return NotImplemented
        return self.base == other.base and self.rotations == other.rotations

    def __repr__(self) -> str:
        return f"DihedralScheme(base={self.base!r}, vertices={len(self.rotations)})"


@dataclass(frozen=True)
class TruncationResult:
    graph: MultiGraph
    vertex_origin: dict[int, Arc]


def truncate(scheme: DihedralScheme) -> TruncationResult:
    """The simple cubic graph on the arcs of the base: arcs adjacent when
    rotation-consecutive or mutually inverse."""
    base = scheme.base
    arcs = base.arcs()  # sorted by (tail, edge id, end)
    index = {a: i for i, a in enumerate(arcs)}
    rot_pairs = scheme.related_pairs()
    inv_pairs: set[frozenset[Arc]] = set()
    for e in base.edges:
        a, b = base.arcs_of_edge(e.id)
        inv_pairs.add(frozenset((a, b)))
    clash = rot_pairs & inv_pairs
    if clash:
        pair = sorted(next(iter(clash)))
        raise InvalidScheme(
            f"loop arcs {pair} are rotation-consecutive; truncation would not be cubic"
        )
    pairs = sorted(
        tuple(sorted((index[a], index[b]))) for a, b in map(tuple, rot_pairs | inv_pairs)
    )
    graph = MultiGraph(len(arcs), list(enumerate(pairs)))
    assert all(graph.degree(v) == 3 for v in range(graph.n))
    return TruncationResult(graph, {i: a for i, a in enumerate(arcs)})


def unique_cubic_scheme(g: MultiGraph) -> DihedralScheme:
    """Every cubic graph carries exactly one dihedral scheme: the rotation
    at each vertex is the one 3-cycle on its out-arcs."""
    if any(g.degree(v) != 3 for v in range(g.n)):
        bad = next(v for v in range(g.n) if g.degree(v) != 3)
        raise NotCubic(f"vertex {bad} has valence {g.degree(bad)}")
    return DihedralScheme.from_rotations(g, [g.out_arcs(v) for v in range(g.n)])


def decompose_011(g: MultiGraph) -> tuple[MultiGraph, DihedralScheme]:
    """Invert the truncation of a girth-regular (0,1,1) graph.

    The base has one vertex per girth cycle and one edge per edge lying on
    no girth cycle; rotations follow consecutive attachment points along
    each girth cycle. Λ keeps the original edge ids of the matching edges.
    """
    if not g.is_simple or any(g.degree(v) != 3 for v in range(g.n)):
        raise WrongSignature("decomposition needs a simple cubic graph")
    report = girth_report(g)
    if report.regular is None:
        raise NotGirthRegular("vertex signatures differ")
    if report.regular != (0, 1, 1):
        raise WrongSignature(f"signature {report.regular} != (0, 1, 1)")

    cycles = girth_cycles(g)
    cycle_vertices = [set(cycle_vertex_order(g, c)) for c in cycles]
    order = sorted(range(len(cycles)), key=lambda i: min(cycle_vertices[i]))
    cycles = [cycles[i] for i in order]
    cycle_vertices = [cycle_vertices[i] for i in order]

    cycle_of: dict[int, int] = {}
    for ci, vs in enumerate(cycle_vertices):
        for v in vs:
            assert v not in cycle_of, "a vertex lies on two girth cycles"
            cycle_of[v] = ci
    assert len(cycle_of) == g.n, "some vertex lies on no girth cycle"

    matching = [e for e in g.edges if report.epsilon[e.id] == 0]
    lam_edges = []
    for e in matching:
        u, v = e.ends
        cu, cv = cycle_of[u], cycle_of[v]
        assert cu != cv, "matching edge inside one girth cycle"
        lam_edges.append((e.id, (cu, cv)))
    lam = MultiGraph(len(cycles), lam_edges)

    # matching edge at each vertex of g
    m_at: dict[int, int] = {}
    for e in matching:
        for v in e.ends:
            m_at[v] = e.id

    rotations = []
    for ci in range(len(cycles)):
        walk = cycle_vertex_order(g, cycles[ci])
        rot = []
        for v in walk:
            eid = m_at[v]
            ends = lam.edge(eid).ends
            if len(ends) == 2:
                end = ends.index(ci)
            else:  # cannot happen: asserted loop-free above
                end = 0
            rot.append(Arc(ci, eid, end))
        rotations.append(tuple(rot))
    scheme = DihedralScheme.from_rotations(lam, rotations)
    return lam, scheme
