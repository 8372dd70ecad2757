"""Cobordism certificates between torus orbifolds.

A certificate records a marked manifold ``Y`` one dimension up, a vector for
each unmarked facet, and the orbifolds sitting over the marked facets. Those
boundary pieces are cobordant; the certificate also states the resulting
relation in the cobordism group, as a sum of content-hash references to the
pieces. :func:`verify_certificate` recomputes everything from the marked
manifold and the vectors, so a certificate can be checked without trusting
whoever made it.

Relations are written unsigned: orientations of the pieces are not tracked.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count, product
from typing import Iterable, Iterator, Mapping, Sequence

from .charfun import CharFunction, validate_characteristic, validate_r_characteristic
from .corners import (
    CornersComplex,
    FaceRecord,
    MarkedManifold,
    SurfaceInfo,
    facet_complex,
    id_key,
    is_simplex,
    product_with_interval,
    surface_info,
    validate_marked,
    validate_nice,
    vertex_cut,
    vertex_cut_bottom,
)
from .errors import (
    DependentVectors,
    DimensionMismatch,
    HasFixedPoints,
    InternalInvariantError,
    InvalidCharFunction,
    InvalidComplexError,
    TorocobError,
    UnknownMarkedFacet,
)
from .families import (
    Bundle,
    LensDescriptor,
    OrbifoldData,
    OrbifoldDescriptor,
    data_of,
    lens_from_interval,
    make_orbifold,
)
from .lattice import Vector, is_primitive, rank
from .report import ValidityReport, Violation
from .serialize import content_ref

PIPELINE = "projective-space-cobordism"
NULL = "fixed-point-free-null-cobordism"
VERTEX_CUT = "vertex-cut-relation"
HIRZEBRUCH = "hirzebruch-boundary"
PROVENANCES = (PIPELINE, NULL, VERTEX_CUT, HIRZEBRUCH)


class RSCharFunction(CharFunction):
    """Vectors in Z^n on the unmarked facets of an (n+1)-dimensional marked
    manifold."""


def validate_rs_characteristic(m: MarkedManifold, rs: RSCharFunction) -> ValidityReport:
    base = m.base
    if rs.n != base.dim - 1:
        raise DimensionMismatch(f"vectors in Z^{rs.n} on a {base.dim}-dimensional marked manifold")
    out = []
    rem = set(m.remaining)
    missing = [f for f in m.remaining if f not in rs.vectors]
    if missing:
        out.append(Violation("missing-vector", tuple(missing)))
    extra = sorted(set(rs.vectors) - rem, key=id_key)
    if extra:
        out.append(Violation("vector-on-marked-or-unknown", tuple(extra)))
    for face in base.faces:
        ids = sorted(face.facet_set & rem, key=id_key)
        if not ids or any(i not in rs.vectors for i in ids):
            continue
        vecs = [rs[i] for i in ids]
        if rank(vecs) != len(vecs):
            out.append(Violation("dependent", (face.id,), str(tuple(vecs))))
    return ValidityReport("rs-characteristic", tuple(out))


def restrict_to_marked(
    m: MarkedManifold, rs: RSCharFunction, marked_id: str
) -> tuple[CornersComplex, CharFunction]:
    """The marked facet as a complex, each of its facets ``P ∩ F`` carrying
    the vector of the unmarked facet ``F``."""
    if marked_id not in m.marked:
        raise UnknownMarkedFacet(marked_id)
    c = facet_complex(m.base, marked_id)
    vecs = {}
    for g in c.facets:
        (other,) = m.base.face(g).facet_set - {marked_id}
        vecs[g] = rs[other]
    return c, CharFunction(rs.n, vecs)


def boundary(m: MarkedManifold, rs: RSCharFunction, bundle: Bundle = "trivial") -> tuple[OrbifoldDescriptor, ...]:
    report = validate_rs_characteristic(m, rs)
    if not report.valid:
        raise InvalidCharFunction("not an rs-characteristic function", report)
    return tuple(make_orbifold(*restrict_to_marked(m, rs, q), bundle) for q in m.marked)


# ---------------------------------------------------------------- lambda_0


def canonical_vectors(n: int) -> Iterator[Vector]:
    """Nonzero integer vectors by sup-norm, then lexicographically, keeping
    only those whose first nonzero entry is positive."""
    for big in count(1):
        for v in product(range(-big, big + 1), repeat=n):
            if max(map(abs, v)) != big:
                continue
            lead = next(x for x in v if x)
            if lead > 0:
                yield v


def first_avoiding(n: int, spans: Iterable[Sequence[Vector]]) -> Vector:
    """First canonical primitive vector outside the real span of every
    independent set in ``spans``."""
    spans = [tuple(s) for s in spans]
    for s in spans:
        if len(s) >= n or rank(s) != len(s):
            raise DependentVectors(f"{s} spans too much to be avoided")
    for v in canonical_vectors(n):
        if is_primitive(v) and all(rank(s + (v,)) == len(s) + 1 for s in spans):
            return v
    raise AssertionError("unreachable")


def find_lambda0(
    constraint_sets: Iterable[Iterable[str]],
    vectors: Mapping[str, Sequence[int]],
    n: int | None = None,
    avoid: Iterable[Sequence[Sequence[int]]] = (),
) -> Vector:
    """First canonical primitive ξ₀ with ``{ξ₀} ∪ (I - {ℓ})`` of rank n for
    every constraint set I and every ℓ in I.

    ``avoid`` lists further independent sets (fewer than n vectors) whose span
    ξ₀ must also miss.
    """
    if n is None:
        if not vectors:
            raise ValueError("dimension unknown: pass n")
        n = len(next(iter(vectors.values())))
    spans = []
    for ids in constraint_sets:
        vs = [tuple(vectors[i]) for i in sorted(ids, key=id_key)]
        if len(vs) != n or rank(vs) != n:
            raise DependentVectors(f"constraint set {sorted(ids)} is not an independent n-set")
        spans += [tuple(vs[:j] + vs[j + 1 :]) for j in range(n)]
    spans += [tuple(tuple(x) for x in s) for s in avoid]
    return first_avoiding(n, spans)


# ---------------------------------------------------------------- certificates


@dataclass(frozen=True)
class RelationStatement:
    """``sum(lhs) = sum(rhs)`` in the cobordism group of 2n-dimensional torus
    orbifolds; an empty side is zero. References are content hashes of the
    pieces' (base, vectors, bundle)."""

    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    n: int
    orientation: str = "unresolved"

    @property
    def terms(self) -> tuple[tuple[int, str], ...]:
        return tuple((1, r) for r in self.lhs) + tuple((-1, r) for r in self.rhs)


@dataclass(frozen=True)
class LensPiece:
    """Lens space over one boundary circle: ``u`` is the circle's vector,
    ``v`` the vector of the bottom facet."""

    circle: str
    u: Vector
    v: Vector
    lens: LensDescriptor


@dataclass(frozen=True)
class CobordismCertificate:
    marked: MarkedManifold
    rs: RSCharFunction
    bundle: Bundle
    boundary: tuple[OrbifoldDescriptor, ...]
    relation: RelationStatement
    provenance: str
    lens_pieces: tuple[LensPiece, ...] = ()


def descriptor_ref(d: OrbifoldDescriptor) -> str:
    return content_ref(data_of(d))


def _expected_relation(prov: str, refs: list[str], n: int) -> RelationStatement:
    if prov == PIPELINE:
        return RelationStatement(tuple(refs[-1:]), tuple(refs[:-1]), n)
    if prov == NULL:
        return RelationStatement(tuple(refs), (), n)
    if prov == VERTEX_CUT:
        return RelationStatement(tuple(refs), (), n)
    return RelationStatement(tuple(refs[:1]), tuple(refs[1:]), n)


def _certificate(m, rs, bundle, piece_bundles, prov, lens=()) -> CobordismCertificate:
    report = validate_rs_characteristic(m, rs)
    if not report.valid:
        raise InternalInvariantError(f"constructed vectors are not rs-characteristic: {report}")
    pieces = tuple(
        make_orbifold(*restrict_to_marked(m, rs, q), b) for q, b in zip(m.marked, piece_bundles)
    )
    rel = _expected_relation(prov, [descriptor_ref(d) for d in pieces], rs.n)
    return CobordismCertificate(m, rs, bundle, pieces, rel, prov, tuple(lens))


def _check_input(c: CornersComplex, f: CharFunction):
    nice = validate_nice(c)
    if not nice.valid:
        raise InvalidComplexError("base is not nice", nice)
    report = validate_r_characteristic(c, f)
    if not report.valid:
        raise InvalidCharFunction("not an r-characteristic function", report)


def _lambda0(c: CornersComplex, f: CharFunction) -> Vector:
    sets = [v.facet_set for v in c.vertices]
    low = [f.face_matrix(face) for face in c.faces if face.codim < c.dim]
    return find_lambda0(sets, f.vectors, c.dim, low)


def _pipeline(c: CornersComplex, f: CharFunction, bundle: Bundle, prov: str, lens_for=None):
    _check_input(c, f)
    y = product_with_interval(c)
    side = {fid: next(iter(y.face(fid).facet_set - {y.interval.top})) for fid in c.facets}
    low = {}
    for v in c.vertices:  # the bottom copy of v is the record on its side facets plus bottom
        sides = {side[g] for g in v.facet_set} | {y.interval.bottom}
        (rec,) = [r for r in y.records_with(sides) if r.component_tag == v.component_tag]
        low[v.id] = rec.id
    m = vertex_cut_bottom(y, [low[v.id] for v in c.vertices])
    lam0 = _lambda0(c, f)
    vecs = {side[g]: f[g] for g in c.facets}
    vecs[y.interval.bottom] = lam0
    rs = RSCharFunction(c.dim, vecs)
    bundles = ["trivial"] * (len(m.marked) - 1) + [bundle]
    lens = lens_for(lam0) if lens_for else ()
    return _certificate(m, rs, bundle, bundles, prov, lens)


def cobordism_to_projective_spaces(
    c: CornersComplex, f: CharFunction, bundle: Bundle = "trivial"
) -> CobordismCertificate:
    """``X(c, f)`` is cobordant to one orbifold projective space per vertex.

    Boundary order: the projective spaces in vertex id order, then ``X``.
    The cut pieces sit over contractible simplices, so their bundles are
    trivial whatever the input bundle is.
    """
    if not c.vertices:
        return null_cobordism(c, f, bundle)
    return _pipeline(c, f, bundle, PIPELINE)


def null_cobordism(c: CornersComplex, f: CharFunction, bundle: Bundle = "trivial") -> CobordismCertificate:
    """Fixed-point-free ``X(c, f)`` bounds.

    For a characteristic function on a surface, also records the lens space
    sitting over each boundary circle.
    """
    if c.vertices:
        raise HasFixedPoints(f"{len(c.vertices)} vertices")

    def lenses(lam0):
        if c.dim != 2 or not validate_characteristic(c, f).valid:
            return ()
        return tuple(LensPiece(g, f[g], lam0, lens_from_interval(f[g], lam0)) for g in c.facets)

    return _pipeline(c, f, bundle, NULL, lenses)


def _greedy_rs(m: MarkedManifold, n: int, seed: Mapping[str, Vector] | None = None) -> dict[str, Vector]:
    rem = set(m.remaining)
    groups = [frozenset(face.facet_set & rem) for face in m.base.faces]
    groups = [g for g in set(groups) if len(g) > 1]
    vecs: dict[str, Vector] = dict(seed or {})
    for fid in m.remaining:
        if fid in vecs:
            continue
        spans = []
        for g in groups:
            if fid in g:
                done = tuple(vecs[h] for h in sorted(g, key=id_key) if h in vecs)
                if done and rank(done) == len(done):
                    spans.append(done)
        vecs[fid] = first_avoiding(n, spans)
    return vecs


def vertex_cut_certificate(p: CornersComplex, seed_rs: RSCharFunction | None = None) -> CobordismCertificate:
    """Cut every vertex of ``p``: the orbifold projective spaces over the cuts
    together bound."""
    m = vertex_cut(p)
    n = p.dim - 1
    if seed_rs is not None and seed_rs.n != n:
        raise DimensionMismatch(f"seed vectors in Z^{seed_rs.n}, expected Z^{n}")
    rs = RSCharFunction(n, _greedy_rs(m, n, seed_rs.vectors if seed_rs else None))
    if seed_rs is not None:
        report = validate_rs_characteristic(m, rs)
        if not report.valid:
            raise InvalidCharFunction("seed vectors are not rs-characteristic", report)
    return _certificate(m, rs, "trivial", ["trivial"] * len(m.marked), VERTEX_CUT)


def vertex_cut_relation(p: CornersComplex, seed_rs: RSCharFunction | None = None) -> RelationStatement:
    return vertex_cut_certificate(p, seed_rs).relation


# ---------------------------------------------------------------- Hirzebruch


def _hirzebruch_manifold(r: int) -> tuple[MarkedManifold, dict[str, int]]:
    """3-dimensional marked manifold over which a quadrilateral with opposite
    sides ``r`` and ``r+2`` sharing a vector bounds two eye-shapes.

    The unmarked facet ``Fac`` meets the quadrilateral ``Q1`` along both of
    those sides; ``Fb`` and ``Fd`` meet it along the other two. The eyes
    ``Q2`` and ``Q3`` close off ``Fac ∩ Fb`` and ``Fac ∩ Fd``. Returns the
    manifold and, for each unmarked facet, the index of the quadrilateral side
    whose vector it carries.
    """
    a, b, c, d = ((r + i) % 4 for i in range(4))
    e = [f"E{i}" for i in range(4)]
    v = [f"V{i}" for i in range(4)]  # V{i} joins E{i} and E{i+1}
    F = FaceRecord
    faces = [F(x, 1, {x}) for x in ("Q1", "Q2", "Q3", "Fac", "Fb", "Fd")]
    faces += [
        F(e[a], 2, {"Q1", "Fac"}, 0),
        F(e[c], 2, {"Q1", "Fac"}, 1),
        F(e[b], 2, {"Q1", "Fb"}),
        F(e[d], 2, {"Q1", "Fd"}),
        F("Q2/Fac", 2, {"Q2", "Fac"}),
        F("Q2/Fb", 2, {"Q2", "Fb"}),
        F("Q3/Fac", 2, {"Q3", "Fac"}),
        F("Q3/Fd", 2, {"Q3", "Fd"}),
        F("Fac/Fb#0", 2, {"Fac", "Fb"}, 0),
        F("Fac/Fb#1", 2, {"Fac", "Fb"}, 1),
        F("Fac/Fd#0", 2, {"Fac", "Fd"}, 0),
        F("Fac/Fd#1", 2, {"Fac", "Fd"}, 1),
        F(v[a], 3, {"Q1", "Fac", "Fb"}, 0, {e[a], "Fac/Fb#0"}),
        F(v[b], 3, {"Q1", "Fac", "Fb"}, 1, {e[c], "Fac/Fb#1"}),
        F(v[c], 3, {"Q1", "Fac", "Fd"}, 0, {e[c], "Fac/Fd#0"}),
        F(v[d], 3, {"Q1", "Fac", "Fd"}, 1, {e[a], "Fac/Fd#1"}),
        F("W2#0", 3, {"Q2", "Fac", "Fb"}, 0, {"Fac/Fb#0"}),
        F("W2#1", 3, {"Q2", "Fac", "Fb"}, 1, {"Fac/Fb#1"}),
        F("W3#0", 3, {"Q3", "Fac", "Fd"}, 0, {"Fac/Fd#0"}),
        F("W3#1", 3, {"Q3", "Fac", "Fd"}, 1, {"Fac/Fd#1"}),
    ]
    base = CornersComplex(
        3,
        ("Q1", "Q2", "Q3", "Fac", "Fb", "Fd"),
        tuple(faces),
        facet_surfaces={"Q1": SurfaceInfo(0, (tuple(e),))},
    )
    return MarkedManifold(base, ("Q1", "Q2", "Q3"), ("Fac", "Fb", "Fd")), {"Fac": a, "Fb": b, "Fd": d}


def hirzebruch_certificate(vs: Sequence[Sequence[int]]) -> CobordismCertificate:
    """Certificate that the quadrilateral orbifold with fan vectors ``vs``
    bounds, given ``vs[0] = ±vs[2]`` or ``vs[1] = ±vs[3]``.

    The first boundary piece is the quadrilateral orbifold with the side
    opposite the shared facet carrying the same vector rather than its
    negative; the other two are eye-shape orbifolds, which bound on their own.
    """
    vs = [tuple(x) for x in vs]
    neg = [tuple(-x for x in w) for w in vs]
    if vs[0] in (vs[2], neg[2]):
        r = 0
    elif vs[1] in (vs[3], neg[3]):
        r = 1
    else:
        raise ValueError("neither pair of opposite vectors agrees up to sign")
    m, side = _hirzebruch_manifold(r)
    rs = RSCharFunction(2, {f: vs[i] for f, i in side.items()})
    return _certificate(m, rs, "trivial", ["trivial"] * 3, HIRZEBRUCH)


# ---------------------------------------------------------------- verification


def _piece_bundles(cert: CobordismCertificate) -> list[str]:
    k = len(cert.marked.marked)
    if cert.provenance in (PIPELINE, NULL):
        return ["trivial"] * (k - 1) + [cert.bundle]
    return ["trivial"] * k


def _replay(cert: CobordismCertificate) -> CobordismCertificate | None:
    if not cert.boundary:
        return None
    if cert.provenance == PIPELINE:
        top = cert.boundary[-1]
        return cobordism_to_projective_spaces(top.base, top.char, top.bundle)
    if cert.provenance == NULL:
        top = cert.boundary[-1]
        return null_cobordism(top.base, top.char, top.bundle)
    if cert.provenance == HIRZEBRUCH:
        quad = cert.boundary[0]
        return hirzebruch_certificate([quad.char[f"E{i}"] for i in range(4)])
    return None


def verify_certificate(cert: CobordismCertificate) -> ValidityReport:
    """Recompute every part of the certificate; report each disagreement."""
    out: list[Violation] = []

    def guard(code, subject, fn):
        try:
            return fn()
        except (TorocobError, InternalInvariantError, KeyError, ValueError, TypeError) as e:
            out.append(Violation(code, subject, f"{type(e).__name__}: {e}"))
            return None

    m, rs = cert.marked, cert.rs
    out += validate_marked(m).violations
    if cert.provenance not in PROVENANCES:
        out.append(Violation("unknown-provenance", (cert.provenance,)))
    rs_report = guard("rs-dimension", ("rs",), lambda: validate_rs_characteristic(m, rs))
    if rs_report is not None:
        out += rs_report.violations
    if len(cert.boundary) != len(m.marked):
        out.append(
            Violation("boundary-count", ("boundary",), f"{len(cert.boundary)} pieces for {len(m.marked)} marked facets")
        )
    bundles = _piece_bundles(cert)
    for i, q in enumerate(m.marked):
        want = guard("restriction", (q,), lambda: make_orbifold(*restrict_to_marked(m, rs, q), bundles[i]))
        if want is not None and (i >= len(cert.boundary) or cert.boundary[i] != want):
            out.append(Violation("boundary-mismatch", (q,), "stored piece differs from the restriction"))
    refs = [descriptor_ref(d) for d in cert.boundary]
    want_rel = _expected_relation(cert.provenance, refs, rs.n)
    if cert.relation != want_rel:
        out.append(Violation("relation-mismatch", ("relation",), f"{len(cert.relation.terms)} terms stored"))
    if cert.provenance in (PIPELINE, VERTEX_CUT):
        cuts = cert.boundary[:-1] if cert.provenance == PIPELINE else cert.boundary
        for q, d in zip(m.marked, cuts):
            if not is_simplex(d.base) or d.family_tag is None or d.family_tag.kind != "OCP":
                out.append(Violation("cut-not-simplex", (q,)))
    if cert.provenance == NULL and cert.boundary and cert.boundary[-1].fixed_points:
        out.append(Violation("has-fixed-points", (m.marked[-1],)))
    if cert.provenance in (VERTEX_CUT, HIRZEBRUCH) and cert.bundle != "trivial":
        out.append(Violation("bundle-flag", ("bundle",), "this construction only produces trivial bundles"))
    if cert.provenance != NULL and cert.lens_pieces:
        out.append(Violation("unexpected-lens-pieces", ("lens_pieces",)))
    for piece in cert.lens_pieces:
        got = guard("lens", (piece.circle,), lambda: lens_from_interval(piece.u, piece.v))
        if got is not None and got != piece.lens:
            out.append(Violation("lens-mismatch", (piece.circle,), f"{got} != {piece.lens}"))
    replay = guard("replay", (cert.provenance,), lambda: _replay(cert))
    if replay is not None and replay != cert:
        out.append(Violation("replay-mismatch", (cert.provenance,), "rebuilding from the boundary gives a different certificate"))
    return ValidityReport("certificate", tuple(out))
