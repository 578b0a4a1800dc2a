"""Executable forms of the bounds, lemmas and classification theorems.

Every law carries its own applicability gate so corpus sweeps never
misreport out-of-scope graphs; a failing law on any input means an
implementation defect, and the witness carries enough to recompute the
violation independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from . import families
from .errors import Disconnected, GirthLabError, InfiniteGirth, PreconditionViolation, SizeCapExceeded
from .girth import GirthReport, girth, girth_report
from .isomorphism import DEFAULT_ISO_CAP, find_isomorphism
from .maps import decompose_112, map_from_222, truncate_map
from .multigraph import MultiGraph
from .schemes import DihedralScheme, decompose_011, truncate

LAW_IDS = (
    "thm1",
    "thm2",
    "thm3",
    "lem3.1",
    "lem3.2",
    "cor3.3",
    "lem3.4",
    "thm3.6",
    "thm3.9",
    "thm3.11",
    "thm-main",
)


@dataclass(frozen=True, slots=True)
class LawResult:
    law_id: str
    applicable: bool
    holds: bool | None
    witness: Any = None

    @property
    def violated(self) -> bool:
        return self.applicable and self.holds is False

    def to_json(self) -> dict[str, Any]:
        return {
            "law": self.law_id,
            "applicable": self.applicable,
            "holds": self.holds,
            "witness": self.witness,
        }


# classification cases
TRUNC011 = "Trunc011"
K4 = "K4"
PRISM_OR_MOBIUS = "PrismOrMobius"
K33 = "K33"
Q3 = "Q3"
PETERSEN = "Petersen"
DODECAHEDRON = "Dodecahedron"
OUTSIDE = "OutsideTheorem"


@dataclass(frozen=True)
class Classification:
    case: str
    detail: dict[str, Any] = field(default_factory=dict)
    witness: Optional[tuple[MultiGraph, DihedralScheme]] = None

    def to_json(self) -> dict[str, Any]:
        return {"case": self.case, "detail": self.detail}


def _x_cycle_count(report: GirthReport, g: MultiGraph) -> int:
    """Components of the subgraph on the single-girth-cycle edges."""
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for eid, c in report.epsilon.items():
        if c == 1:
            u, v = g.edge(eid).ends
            adj[u].append(v)
            adj[v].append(u)
    seen: set[int] = set()
    comps = 0
    for v in range(g.n):
        if v in seen or not adj[v]:
            continue
        comps += 1
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return comps


def classify_g5(
    g: MultiGraph,
    report: GirthReport | None = None,
    iso_cap: int = DEFAULT_ISO_CAP,
) -> Classification:
    """Place a connected cubic girth-regular graph of girth <= 5 into its
    classification case, confirming named cases by isomorphism."""
    if not g.is_simple or not g.is_connected() or g.is_regular() != 3:
        raise PreconditionViolation("classifier needs a simple connected cubic graph")
    if report is None:
        report = girth_report(g)
    sig = report.regular
    if sig is None:
        raise PreconditionViolation("graph is not girth-regular")
    if report.girth > 5:
        raise PreconditionViolation(f"girth {report.girth} > 5")
    gir = report.girth

    def confirmed(case: str, model: MultiGraph, detail: dict[str, Any]) -> Classification:
        if find_isomorphism(g, model, cap=iso_cap) is None:
            return Classification(OUTSIDE, {"girth": gir, "signature": list(sig), "reason": f"not isomorphic to {case}"})
        return Classification(case, detail)

    if sig == (0, 1, 1):
        lam, scheme = decompose_011(g)
        return Classification(TRUNC011, {"girth": gir, "baseVertices": lam.n}, (lam, scheme))
    if gir == 3 and sig == (2, 2, 2):
        return confirmed(K4, families.complete(4), {})
    if gir == 4:
        if sig == (4, 4, 4):
            return confirmed(K33, families.complete_bipartite(3, 3), {})
        if sig == (2, 2, 2):
            return confirmed(Q3, families.cube_q3(), {})
        if sig == (1, 1, 2):
            n = g.n // 2
            comps = _x_cycle_count(report, g)
            if comps == 2:
                return confirmed(PRISM_OR_MOBIUS, families.prism(n), {"family": "prism", "n": n})
            if comps == 1:
                return confirmed(PRISM_OR_MOBIUS, families.mobius(n), {"family": "mobius", "n": n})
            return Classification(OUTSIDE, {"girth": gir, "signature": list(sig), "reason": f"{comps} single-cycle components"})
    if gir == 5:
        if sig == (4, 4, 4):
            return confirmed(PETERSEN, families.petersen(), {})
        if sig == (2, 2, 2):
            return confirmed(DODECAHEDRON, families.dodecahedron(), {})
    return Classification(OUTSIDE, {"girth": gir, "signature": list(sig)})


def canonical_graph(c: Classification) -> MultiGraph | None:
    """Re-expand a classification case to a concrete graph."""
    if c.case == TRUNC011:
        assert c.witness is not None
        return truncate(c.witness[1]).graph
    if c.case == K4:
        return families.complete(4)
    if c.case == K33:
        return families.complete_bipartite(3, 3)
    if c.case == Q3:
        return families.cube_q3()
    if c.case == PETERSEN:
        return families.petersen()
    if c.case == DODECAHEDRON:
        return families.dodecahedron()
    if c.case == PRISM_OR_MOBIUS:
        n = c.detail["n"]
        return families.prism(n) if c.detail["family"] == "prism" else families.mobius(n)
    return None


_EXTREMAL_EVEN = {4: "completeBipartite", 6: "heawood", 8: "tutteCoxeter", 12: "tutte12Cage"}


def _extremal_even_model(gir: int) -> MultiGraph | None:
    if gir == 4:
        return families.complete_bipartite(3, 3)
    if gir == 6:
        return families.heawood()
    if gir == 8:
        return families.tutte_coxeter()
    if gir == 12:
        return families.tutte_12cage()
    return None


def check_all_laws(
    g: MultiGraph,
    report: GirthReport | None = None,
    iso_cap: int = DEFAULT_ISO_CAP,
) -> list[LawResult]:
    """Evaluate every law with its own applicability gate."""
    if not g.is_connected():
        raise Disconnected("laws are stated for connected graphs")
    if girth(g) is None:
        raise InfiniteGirth("graph is a forest")
    if report is None:
        report = girth_report(g)
    gir = report.girth
    d = gir // 2
    k = g.is_regular()
    sig = report.regular
    girth_regular = sig is not None
    cubic_gr = girth_regular and k == 3 and g.is_simple
    results: list[LawResult] = []

    def iso_or_cap(model: MultiGraph) -> bool | None:
        try:
            return find_isomorphism(g, model, cap=iso_cap) is not None
        except SizeCapExceeded:
            return None

    # thm1: extremal bound on the per-edge counts
    if k is not None:
        bad = {e: c for e, c in report.epsilon.items() if c > (k - 1) ** d}
        results.append(LawResult("thm1", True, not bad, bad or None))
    else:
        results.append(LawResult("thm1", False, None))

    # thm2: even-girth equality case forces the incidence graphs
    if girth_regular and k is not None and gir % 2 == 0 and sig[-1] == (k - 1) ** d:
        constant = len(set(sig)) == 1
        ok: bool | None = constant and g.n == families.moore_bound(k, gir)
        wit: Any = {"signature": list(sig), "n": g.n}
        if ok and k == 3:
            model = _extremal_even_model(gir)
            if model is None:
                ok = False
                wit = {"reason": f"no generalised polygon for girth {gir}"}
            else:
                ok = iso_or_cap(model)
                wit = {"model": _EXTREMAL_EVEN[gir]} if ok else wit
        results.append(LawResult("thm2", True, ok, wit))
    else:
        results.append(LawResult("thm2", False, None))

    # thm3: odd-girth equality case forces K4 or Petersen
    if cubic_gr and gir % 2 == 1 and sig[-1] == 2**d:
        ok = iso_or_cap(families.complete(4))
        if ok is False:
            ok = iso_or_cap(families.petersen())
        results.append(LawResult("thm3", True, ok, {"signature": list(sig)}))
    else:
        results.append(LawResult("thm3", False, None))

    # lemma suite on the cubic signature (a, b, c)
    if cubic_gr:
        a, b, c = sig
        even_ok = (a + b + c) % 2 == 0
        tri_ok = a + b >= c
        parity_ok = not (a >= 1 and c == a + b) or gir % 2 == 0
        results.append(
            LawResult(
                "lem3.1",
                True,
                even_ok and tri_ok and parity_ok,
                {"signature": list(sig), "girth": gir},
            )
        )
        if a == 0:
            results.append(LawResult("lem3.2", True, (b, c) == (1, 1), {"signature": list(sig)}))
        else:
            results.append(LawResult("lem3.2", False, None))
        if gir % 2 == 1:
            results.append(LawResult("cor3.3", True, a != 1, {"signature": list(sig)}))
        else:
            results.append(LawResult("cor3.3", False, None))
        m = 2 ** (d - 1)
        results.append(
            LawResult(
                "lem3.4",
                True,
                a >= c - m and b <= a - c + 2 * m,
                {"signature": list(sig), "m": m},
            )
        )
    else:
        results.extend(
            LawResult(law, False, None) for law in ("lem3.1", "lem3.2", "cor3.3", "lem3.4")
        )

    # thm3.6: (0,1,1) graphs are truncations of g-regular schemes
    if cubic_gr and g.is_connected() and sig == (0, 1, 1):
        try:
            lam, scheme = decompose_011(g)
            ok = lam.is_regular() == gir and not lam.has_loops
            wit = {"baseVertices": lam.n, "baseRegular": lam.is_regular()}
            if ok:
                try:
                    back = truncate(scheme).graph
                    ok = find_isomorphism(g, back, cap=iso_cap) is not None
                except SizeCapExceeded:
                    ok = None
        except GirthLabError as exc:
            ok, wit = False, {"error": str(exc)}
        results.append(LawResult("thm3.6", True, ok, wit))
    else:
        results.append(LawResult("thm3.6", False, None))

    # thm3.9: (2,2,2) graphs are skeletons of {g,3}-maps
    if cubic_gr and sig == (2, 2, 2):
        try:
            m = map_from_222(g)
            chi = m.euler_characteristic
            ok = (3 * g.n) % gir == 0 and chi == g.n - (3 * g.n) // 2 + (3 * g.n) // gir and chi <= 2
            wit = {"chi": chi, "faces": len(m.faces)}
        except (GirthLabError, AssertionError) as exc:
            ok, wit = False, {"error": str(exc)}
        results.append(LawResult("thm3.9", True, ok, wit))
    else:
        results.append(LawResult("thm3.9", False, None))

    # thm3.11: (1,1,2) graphs are truncations of maps with g/2-faces
    if cubic_gr and sig == (1, 1, 2):
        try:
            ok = gir % 2 == 0 and g.n % (gir // 2) == 0
            wit: Any = {"girth": gir}
            if ok:
                m, coloring = decompose_112(g)
                wit = {
                    "chi": m.euler_characteristic,
                    "skeletonVertices": m.skeleton.n,
                    "matching": len(coloring["Y"]),
                }
                ok = len(coloring["Y"]) == g.n // 2
                if ok:
                    try:
                        back = truncate_map(m).graph
                        ok = find_isomorphism(g, back, cap=iso_cap) is not None
                    except SizeCapExceeded:
                        ok = None
        except (GirthLabError, AssertionError) as exc:
            ok, wit = False, {"error": str(exc)}
        results.append(LawResult("thm3.11", True, ok, wit))
    else:
        results.append(LawResult("thm3.11", False, None))

    # thm-main: the girth <= 5 classification
    if cubic_gr and gir <= 5:
        try:
            cls = classify_g5(g, report, iso_cap=iso_cap)
            ok = cls.case != OUTSIDE
            if ok:
                model = canonical_graph(cls)
                assert model is not None
                try:
                    ok = find_isomorphism(g, model, cap=iso_cap) is not None
                except SizeCapExceeded:
                    ok = None
            results.append(LawResult("thm-main", True, ok, cls.to_json()))
        except GirthLabError as exc:
            results.append(LawResult("thm-main", True, False, {"error": str(exc)}))
    else:
        results.append(LawResult("thm-main", False, None))

    return results


# --- census ---

@dataclass
class CensusBucket:
    girth: int | None
    signature: tuple[int, ...] | None
    count: int = 0
    examples: list[str] = field(default_factory=list)


@dataclass
class CensusResult:
    total: int = 0
    buckets: dict[tuple, CensusBucket] = field(default_factory=dict)
    violations: list[tuple[str, str, Any]] = field(default_factory=list)
    unverified: list[tuple[str, str]] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)

    def sorted_buckets(self) -> list[CensusBucket]:
        def key(b: CensusBucket):
            return (
                b.girth is None,
                b.girth if b.girth is not None else 0,
                b.signature is None,
                b.signature or (),
            )

        return sorted(self.buckets.values(), key=key)

    def to_json(self) -> dict[str, Any]:
        return {
            "total": self.total,
            "buckets": [
                {
                    "girth": b.girth,
                    "signature": list(b.signature) if b.signature is not None else None,
                    "count": b.count,
                    "examples": b.examples,
                }
                for b in self.sorted_buckets()
            ],
            "violations": [
                {"graph": gid, "law": law, "witness": wit} for gid, law, wit in self.violations
            ],
            "unverified": [{"graph": gid, "law": law} for gid, law in self.unverified],
            "errors": [{"graph": gid, "error": msg} for gid, msg in self.errors],
        }

    def to_text(self) -> str:
        rows = [("girth", "signature", "count", "examples")]
        for b in self.sorted_buckets():
            rows.append(
                (
                    "inf" if b.girth is None else str(b.girth),
                    "-" if b.signature is None else "(" + ",".join(map(str, b.signature)) + ")",
                    str(b.count),
                    " ".join(b.examples[:3]),
                )
            )
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        lines = ["  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip() for row in rows]
        lines.append("")
        lines.append(f"graphs: {self.total}")
        lines.append(f"law violations: {len(self.violations)}")
        if self.unverified:
            lines.append(f"unverified (size cap): {len(self.unverified)}")
        if self.errors:
            lines.append(f"errors: {len(self.errors)}")
        return "\n".join(lines)


def evaluate_for_census(
    gid: str, g: MultiGraph, iso_cap: int = DEFAULT_ISO_CAP
) -> tuple[tuple, GirthReport | None, list[LawResult]]:
    """Bucket key, report and law results for a single census graph."""
    gir = girth(g)
    if gir is None:
        return (None, None), None, []
    report = girth_report(g)
    key = (gir, report.regular)
    try:
        laws = check_all_laws(g, report, iso_cap=iso_cap)
    except Disconnected:
        laws = []
    return key, report, laws


def census(
    items: Iterable[tuple[str, MultiGraph | Exception]],
    iso_cap: int = DEFAULT_ISO_CAP,
    example_limit: int = 3,
) -> CensusResult:
    """Aggregate (girth, signature) buckets and law results over a stream;
    parse errors are collected, not fatal."""
    result = CensusResult()
    for gid, item in items:
        if isinstance(item, Exception):
            result.errors.append((gid, str(item)))
            continue
        result.total += 1
        key, _, laws = evaluate_for_census(gid, item, iso_cap=iso_cap)
        bucket = result.buckets.get(key)
        if bucket is None:
            bucket = CensusBucket(girth=key[0], signature=key[1])
            result.buckets[key] = bucket
        bucket.count += 1
        if len(bucket.examples) < example_limit:
            bucket.examples.append(gid)
        for law in laws:
            if law.violated:
                result.violations.append((gid, law.law_id, law.witness))
            elif law.applicable and law.holds is None:
                result.unverified.append((gid, law.law_id))
    return result
