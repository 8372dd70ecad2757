"""Nice manifolds with corners as facet-incidence data.

A :class:`CornersComplex` lists its faces of codimension 1..n. Each face
record carries the set of facets it is a component of the intersection of;
when that intersection has several components the records are told apart by
``component_tag``. Nothing geometric is stored.

Where two components share a facet set, later constructions sometimes need to
know which component contains a given smaller face. ``within`` answers that:
it names faces of one lower codimension that contain the record. It only has
to be filled in where the facet set alone is ambiguous; builders here do so.

Two-dimensional complexes can carry a :class:`SurfaceInfo` (genus of the
closed surface, and each boundary component as a cyclic list of facet ids).
Complexes without it are taken to be polytope-like: genus zero, boundary read
off the vertex incidences.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    AdjacencyError,
    AmbiguousIncidenceError,
    CycleLengthError,
    InvalidComplexError,
    NotBottomError,
    NotSimpleError,
)
from .report import ValidityReport, Violation

_CHUNK = re.compile(r"(\d+)")


def id_key(ident: str):
    """Natural sort key: ``E2`` sorts before ``E10``."""
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in _CHUNK.split(ident) if p)


def sort_ids(ids: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(ids, key=id_key))


@dataclass(frozen=True)
class FaceRecord:
    id: str
    codim: int
    facet_set: frozenset[str]
    component_tag: int = 0
    within: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "facet_set", frozenset(self.facet_set))
        object.__setattr__(self, "within", frozenset(self.within))


@dataclass(frozen=True)
class SurfaceInfo:
    """Closed surface of genus ``genus`` with boundary components removed.

    Each cycle lists facet ids in cyclic order. A one-element cycle is a
    circle (a facet without vertices); polygon and eye-shape cycles have two or
    more facets.
    """

    genus: int
    cycles: tuple[tuple[str, ...], ...]

    @property
    def boundary_cycles(self) -> tuple[int, ...]:
        return tuple(len(c) if len(c) > 1 else 0 for c in self.cycles)


@dataclass(frozen=True)
class IntervalInfo:
    """Marks a complex as ``Q x [0, 1]`` with the two end facets named."""

    bottom: str
    top: str


@dataclass(frozen=True)
class CornersComplex:
    dim: int
    facets: tuple[str, ...]
    faces: tuple[FaceRecord, ...]
    surface: SurfaceInfo | None = None
    interval: IntervalInfo | None = None
    facet_surfaces: dict[str, SurfaceInfo] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "facets", sort_ids(self.facets))
        object.__setattr__(
            self, "faces", tuple(sorted(self.faces, key=lambda f: (f.codim, id_key(f.id))))
        )

    @cached_property
    def by_id(self) -> dict[str, FaceRecord]:
        return {f.id: f for f in self.faces}

    @cached_property
    def by_facet_set(self) -> dict[frozenset, tuple[FaceRecord, ...]]:
        out: dict[frozenset, list[FaceRecord]] = {}
        for f in self.faces:
            out.setdefault(f.facet_set, []).append(f)
        return {k: tuple(v) for k, v in out.items()}

    @property
    def vertices(self) -> tuple[FaceRecord, ...]:
        return tuple(f for f in self.faces if f.codim == self.dim)

    def face(self, ident: str) -> FaceRecord:
        return self.by_id[ident]

    def records_with(self, facet_set: Iterable[str]) -> tuple[FaceRecord, ...]:
        return self.by_facet_set.get(frozenset(facet_set), ())

    def faces_of(self, facet: str) -> tuple[FaceRecord, ...]:
        return tuple(f for f in self.faces if facet in f.facet_set)


@dataclass(frozen=True)
class MarkedManifold:
    base: CornersComplex
    marked: tuple[str, ...]
    remaining: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "marked", tuple(self.marked))
        object.__setattr__(self, "remaining", sort_ids(self.remaining))


# ---------------------------------------------------------------- validation


def validate_nice(c: CornersComplex) -> ValidityReport:
    out = []
    facets = set(c.facets)
    if len(facets) != len(c.facets):
        out.append(Violation("duplicate-facet", sort_ids(c.facets)))
    seen: set[str] = set()
    for f in c.faces:
        if f.id in seen:
            out.append(Violation("duplicate-face-id", (f.id,)))
        seen.add(f.id)
        if not 1 <= f.codim <= c.dim:
            out.append(Violation("codim-out-of-range", (f.id,), f"codim {f.codim} in dim {c.dim}"))
        if len(f.facet_set) != f.codim:
            out.append(
                Violation(
                    "facet-count",
                    (f.id,),
                    f"codim {f.codim} face lies on {len(f.facet_set)} facets",
                )
            )
        unknown = f.facet_set - facets
        if unknown:
            out.append(Violation("unknown-facet", (f.id, *sort_ids(unknown))))
        if f.codim == 1 and f.facet_set != {f.id}:
            out.append(Violation("facet-record", (f.id,), "codim 1 records must be facets"))
    for fid in c.facets:
        rec = c.by_id.get(fid)
        if rec is None or rec.codim != 1 or rec.facet_set != {fid}:
            out.append(Violation("missing-facet-record", (fid,)))
    for fs, recs in c.by_facet_set.items():
        tags = [r.component_tag for r in recs]
        if len(set(tags)) != len(tags):
            out.append(Violation("shared-component-tag", tuple(r.id for r in recs)))
    for f in c.faces:
        for w in sort_ids(f.within):
            up = c.by_id.get(w)
            if up is None or up.codim != f.codim - 1 or not up.facet_set <= f.facet_set:
                out.append(Violation("bad-within", (f.id, w)))
    if c.surface is not None:
        listed = [x for cyc in c.surface.cycles for x in cyc]
        if sorted(listed) != sorted(c.facets) or c.dim != 2:
            out.append(Violation("surface-cycles", tuple(listed), "cycles must partition the facets"))
        if c.surface.genus < 0:
            out.append(Violation("surface-genus", (), str(c.surface.genus)))
    return ValidityReport("nice", tuple(out))


def validate_marked(m: MarkedManifold) -> ValidityReport:
    base = m.base
    out = list(validate_nice(base).violations)
    marked = set(m.marked)
    if len(marked) != len(m.marked):
        out.append(Violation("duplicate-marked", m.marked))
    if not marked <= set(base.facets):
        out.append(Violation("unknown-marked", sort_ids(marked - set(base.facets))))
    if set(m.remaining) != set(base.facets) - marked:
        out.append(Violation("remaining-mismatch", m.remaining))
    for f in base.faces:
        hit = f.facet_set & marked
        if len(hit) > 1:
            out.append(Violation("marked-not-disjoint", (f.id, *sort_ids(hit))))
    for v in base.vertices:
        if len(v.facet_set & marked) != 1:
            out.append(Violation("vertex-not-marked", (v.id,), "every vertex lies on exactly one marked facet"))
    return ValidityReport("marked", tuple(out))


# ---------------------------------------------------------------- incidence


def containing_face(c: CornersComplex, rec: FaceRecord, facet_set: Iterable[str]) -> FaceRecord:
    """The face with ``facet_set`` that contains ``rec``."""
    target = frozenset(facet_set)
    if not target <= rec.facet_set:
        raise ValueError(f"{sorted(target)} is not a subset of the facets of {rec.id}")
    while rec.facet_set != target:
        drop = sort_ids(rec.facet_set - target)[0]
        up = rec.facet_set - {drop}
        cands = c.records_with(up)
        if len(cands) > 1:
            cands = tuple(r for r in cands if r.id in rec.within)
        if len(cands) != 1:
            raise AmbiguousIncidenceError(
                f"cannot tell which component of {sorted(up)} contains {rec.id}"
            )
        rec = cands[0]
    return rec


def facet_complex(c: CornersComplex, facet: str) -> CornersComplex:
    """The facet ``facet`` as a complex of one lower dimension.

    Its facets are the codimension-2 records on ``facet``; a face of ``c``
    lying on ``facet`` keeps its id, and its facet set becomes the ids of the
    codimension-2 records containing it.
    """
    recs = [f for f in c.faces if facet in f.facet_set and f.id != facet]
    ids = {f.id for f in recs}
    faces = []
    for f in recs:
        fs = frozenset(containing_face(c, f, {facet, g}).id for g in f.facet_set - {facet})
        faces.append(
            FaceRecord(f.id, f.codim - 1, fs, f.component_tag, frozenset(f.within & ids))
        )
    return CornersComplex(
        c.dim - 1,
        tuple(f.id for f in recs if f.codim == 2),
        tuple(faces),
        surface=c.facet_surfaces.get(facet),
    )


def surface_info(c: CornersComplex) -> SurfaceInfo | None:
    """Genus and boundary cycles of a 2-dimensional complex.

    Returns None for other dimensions, or when the vertex incidences do not
    close up into cycles.
    """
    if c.dim != 2:
        return None
    if c.surface is not None:
        return c.surface
    nbrs: dict[str, list[str]] = {f: [] for f in c.facets}
    for v in c.vertices:
        if len(v.facet_set) != 2 or not v.facet_set <= set(nbrs):
            return None
        a, b = sorted(v.facet_set)
        nbrs[a].append(b)
        nbrs[b].append(a)
    cycles = []
    left = set(c.facets)
    for start in c.facets:
        if start not in left:
            continue
        if not nbrs[start]:
            cycles.append((start,))
            left.discard(start)
            continue
        if len(nbrs[start]) != 2:
            return None
        cyc = [start]
        prev, cur = start, min(nbrs[start], key=id_key)
        left.discard(start)
        while cur != start:
            if len(nbrs[cur]) != 2 or cur not in left:
                return None
            cyc.append(cur)
            left.discard(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
            if a == b:  # eye-shape: both neighbours coincide
                cur = a
        cycles.append(tuple(cyc))
    return SurfaceInfo(0, tuple(cycles))


def is_simplex(c: CornersComplex) -> bool:
    n = c.dim
    if len(c.facets) != n + 1:
        return False
    if n == 2 and (info := surface_info(c)) is not None and info.genus:
        return False
    sets = [f.facet_set for f in c.faces]
    if len(set(sets)) != len(sets):
        return False
    want = {frozenset(s) for k in range(1, n + 1) for s in combinations(c.facets, k)}
    return set(sets) == want


# ---------------------------------------------------------------- builders


def build_surface_with_corners(genus: int, boundary_cycles: Sequence[int]) -> CornersComplex:
    """Closed genus-``genus`` surface minus one disc per boundary cycle.

    A cycle of length 0 is a circle (one facet, no vertices), length 2 an
    eye-shape, length >= 3 a polygon. With a single boundary cycle the facets
    are ``E0, E1, ...`` (or ``C`` for a circle) and vertex ``Vj`` joins ``Ej``
    to ``Ej+1``; with several, ids get the cycle index: ``E1.0``, ``V1.0``,
    ``C2``.
    """
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    single = len(boundary_cycles) == 1
    faces, cycles = [], []
    for ci, length in enumerate(boundary_cycles):
        if length == 1 or length < 0:
            raise CycleLengthError(f"boundary cycle of length {length}")
        pre = "" if single else str(ci)
        if length == 0:
            cid = "C" + pre
            faces.append(FaceRecord(cid, 1, {cid}))
            cycles.append((cid,))
            continue
        sep = "" if single else "."
        es = [f"E{pre}{sep}{j}" for j in range(length)]
        faces += [FaceRecord(e, 1, {e}) for e in es]
        for j in range(length):
            tag = j if length == 2 else 0
            faces.append(FaceRecord(f"V{pre}{sep}{j}", 2, {es[j], es[(j + 1) % length]}, tag))
        cycles.append(tuple(es))
    facets = tuple(x for cyc in cycles for x in cyc)
    return CornersComplex(2, facets, tuple(faces), surface=SurfaceInfo(genus, tuple(cycles)))


def polygon(length: int) -> CornersComplex:
    return build_surface_with_corners(0, [length])


def simplex(n: int) -> CornersComplex:
    """The n-simplex with facets ``F0..Fn``; a face is named by its facets."""
    fs = [f"F{i}" for i in range(n + 1)]
    faces = [
        FaceRecord("+".join(s) if k > 1 else s[0], k, set(s))
        for k in range(1, n + 1)
        for s in combinations(fs, k)
    ]
    return CornersComplex(n, tuple(fs), tuple(faces))


def cube(n: int) -> CornersComplex:
    """The n-cube with facets ``L{i}`` (x_i = 0) and ``R{i}`` (x_i = 1)."""
    faces = []
    for k in range(1, n + 1):
        for axes in combinations(range(n), k):
            for sides in range(2**k):
                s = [("R" if sides >> b & 1 else "L") + str(ax) for b, ax in enumerate(axes)]
                faces.append(FaceRecord("+".join(s), k, set(s)))
    facets = [f"{side}{i}" for i in range(n) for side in "LR"]
    return CornersComplex(n, tuple(facets), tuple(faces))


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def product_with_interval(c: CornersComplex) -> CornersComplex:
    """``c x [0, 1]``.

    Every face ``f`` gives ``f:I`` (``f x [0,1]``), ``f:0`` (on the bottom)
    and a top copy that keeps the id ``f``, so the top facet restricts back to
    ``c`` verbatim.
    """
    ids = set(c.by_id)
    k = 0
    while True:
        side, low = (":I", ":0") if k == 0 else (f":I{k}", f":0{k}")
        new = {f.id + side for f in c.faces} | {f.id + low for f in c.faces}
        if len(new) == 2 * len(c.faces) and not new & ids:
            break
        k += 1
    taken = ids | new
    bottom, top = _fresh("bottom", taken), _fresh("top", taken)

    def shared(f):
        return len(c.records_with(f.facet_set)) > 1

    faces = [FaceRecord(bottom, 1, {bottom}), FaceRecord(top, 1, {top})]
    for f in c.faces:
        sides = {g + side for g in f.facet_set}
        vert = {f.id + side} if shared(f) else set()
        faces.append(FaceRecord(f.id + side, f.codim, sides, f.component_tag, {w + side for w in f.within}))
        faces.append(
            FaceRecord(f.id + low, f.codim + 1, sides | {bottom}, f.component_tag, vert | {w + low for w in f.within})
        )
        faces.append(FaceRecord(f.id, f.codim + 1, sides | {top}, f.component_tag, vert | set(f.within)))
    surfaces = {bottom: c.surface, top: c.surface} if c.surface else {}
    return CornersComplex(
        c.dim + 1,
        tuple(g + side for g in c.facets) + (bottom, top),
        tuple(faces),
        interval=IntervalInfo(bottom, top),
        facet_surfaces=surfaces,
    )


def _cut(y: CornersComplex, vertices: Sequence[FaceRecord]) -> tuple[list[str], list[FaceRecord], set[str]]:
    """Replace each vertex by a simplex facet ``cut:<vertex id>``."""
    taken = set(y.by_id)
    cut_ids, new, gone = [], [], set()
    for v in vertices:
        q = _fresh(f"cut:{v.id}", taken)
        cut_ids.append(q)
        gone.add(v.id)
        new.append(FaceRecord(q, 1, {q}))
        sv = sort_ids(v.facet_set)
        for k in range(1, len(sv)):
            for sub in combinations(sv, k):
                within = set()
                if len(y.records_with(sub)) > 1:
                    within.add(containing_face(y, v, sub).id)
                new.append(FaceRecord(_fresh(f"{q}/{'+'.join(sub)}", taken), k + 1, {q, *sub}, 0, within))
    return cut_ids, new, gone


def vertex_cut_bottom(y: CornersComplex, cut_vertices: Sequence[str]) -> MarkedManifold:
    """Cut every bottom vertex of an interval product; mark the cuts and the top.

    Marked facets come in the order of ``cut_vertices``, then the top.
    """
    if y.interval is None:
        raise NotBottomError("not an interval product")
    bottom, top = y.interval.bottom, y.interval.top
    if len(set(cut_vertices)) != len(cut_vertices):
        raise AdjacencyError("a vertex is cut twice; cut neighbourhoods would overlap")
    recs = []
    for vid in cut_vertices:
        v = y.by_id.get(vid)
        if v is None or v.codim != y.dim or bottom not in v.facet_set:
            raise NotBottomError(f"{vid} is not a bottom vertex")
        recs.append(v)
    want = {v.id for v in y.vertices if bottom in v.facet_set}
    if set(cut_vertices) != want:
        raise NotBottomError(f"bottom vertices not cut: {sort_ids(want - set(cut_vertices))}")
    cut_ids, new, gone = _cut(y, recs)
    base = CornersComplex(
        y.dim,
        y.facets + tuple(cut_ids),
        tuple(f for f in y.faces if f.id not in gone) + tuple(new),
        interval=y.interval,
        facet_surfaces=y.facet_surfaces,
    )
    marked = (*cut_ids, top)
    return MarkedManifold(base, marked, tuple(f for f in y.facets if f != top))


def vertex_cut(p: CornersComplex) -> MarkedManifold:
    """Cut off every vertex; the cuts are the marked facets (vertex id order)."""
    bad = [v.id for v in p.vertices if len(v.facet_set) != p.dim]
    if bad:
        raise NotSimpleError(f"vertices not on exactly {p.dim} facets: {bad}")
    report = validate_nice(p)
    if not report.valid:
        raise InvalidComplexError("complex is not nice", report)
    cut_ids, new, gone = _cut(p, p.vertices)
    base = CornersComplex(
        p.dim,
        p.facets + tuple(cut_ids),
        tuple(f for f in p.faces if f.id not in gone) + tuple(new),
    )
    return MarkedManifold(base, tuple(cut_ids), p.facets)


def marked_simplex_report(m: MarkedManifold, facet: str) -> bool:
    """True if the marked facet's vertices form a simplex combinatorially:
    n+1 vertices, any two sharing n-1 remaining facets."""
    n = m.base.dim - 1
    vs = [v for v in m.base.vertices if facet in v.facet_set]
    if len(vs) != n + 1:
        return False
    rem = set(m.remaining)
    return all(len(a.facet_set & b.facet_set & rem) == n - 1 for a, b in combinations(vs, 2))
