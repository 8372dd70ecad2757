"""Orbifold descriptors and the named families built from them.

An :class:`OrbifoldDescriptor` stands in for the torus orbifold over a base
complex: it stores the base, the vectors, a bundle flag, and everything that
can be derived from them (strata, fixed points, smoothness, a family tag).
The tag depends on the base's combinatorics only; a triangle is always
``OCP`` whatever its vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Literal, Sequence

from .charfun import (
    CharFunction,
    FaceStratum,
    face_stratum,
    is_smooth,
    singular_strata,
    validate_r_characteristic,
)
from .corners import (
    CornersComplex,
    SurfaceInfo,
    build_surface_with_corners,
    is_simplex,
    surface_info,
    validate_nice,
)
from .errors import (
    BundleFlagError,
    ClosedBaseError,
    DependentVectors,
    DimensionMismatch,
    FanConditionError,
    InvalidCharFunction,
    InvalidComplexError,
    NotASimplex,
    NotPrimitive,
)
from .lattice import AbelianGroup, Vector, determinant, is_primitive

Bundle = Literal["trivial", "abstract"]
BUNDLES = ("trivial", "abstract")


@dataclass(frozen=True)
class OrbifoldData:
    """The raw input triple; everything else in a descriptor is derived."""

    base: CornersComplex
    char: CharFunction
    bundle: Bundle = "trivial"


@dataclass(frozen=True)
class FamilyTag:
    """``kind`` is one of OCP, EyeQuotient, DiscModel, Hirzebruch, Generic.
    ``order`` is set for EyeQuotient only."""

    kind: str
    order: int | None = None

    def __str__(self):
        return f"{self.kind}({self.order})" if self.order is not None else self.kind


@dataclass(frozen=True)
class OrbifoldDescriptor:
    base: CornersComplex
    char: CharFunction
    bundle: Bundle
    fixed_points: int
    strata: tuple[FaceStratum, ...]
    smooth: bool
    family_tag: FamilyTag | None


def family_tag(c: CornersComplex, f: CharFunction) -> FamilyTag:
    if c.dim == 2:
        info = surface_info(c)
        if info is not None and info.genus == 0 and len(info.cycles) == 1:
            cyc = info.cycles[0]
            if len(cyc) == 1:
                return FamilyTag("DiscModel")
            if len(cyc) == 2:
                return FamilyTag("EyeQuotient", abs(determinant([f[cyc[0]], f[cyc[1]]])))
            if len(cyc) == 3:
                return FamilyTag("OCP")
            if len(cyc) == 4:
                return FamilyTag("Hirzebruch")
        return FamilyTag("Generic")
    return FamilyTag("OCP") if is_simplex(c) else FamilyTag("Generic")


def data_of(d: OrbifoldDescriptor) -> OrbifoldData:
    return OrbifoldData(d.base, d.char, d.bundle)


def make_orbifold(c: CornersComplex, f: CharFunction, bundle: Bundle = "trivial") -> OrbifoldDescriptor:
    if bundle not in BUNDLES:
        raise BundleFlagError(f"unknown bundle flag {bundle!r}")
    nice = validate_nice(c)
    if not nice.valid:
        raise InvalidComplexError("base is not a nice manifold with corners", nice)
    report = validate_r_characteristic(c, f)
    if not report.valid:
        raise InvalidCharFunction("not an r-characteristic function", report)
    strata = singular_strata(c, f)
    return OrbifoldDescriptor(
        c, f, bundle, len(c.vertices), strata, is_smooth(strata), family_tag(c, f)
    )


# ------------------------------------------------------------ projective spaces


@dataclass(frozen=True)
class OCPRecord:
    """Orbifold projective space: one vector per simplex facet, one local
    group per vertex."""

    vectors: tuple[Vector, ...]
    vertex_groups: dict[str, AbelianGroup]


def classify_simplex_base(d: OrbifoldDescriptor) -> OCPRecord:
    if not is_simplex(d.base):
        raise NotASimplex("base is not combinatorially a simplex")
    return OCPRecord(
        tuple(d.char[fid] for fid in d.base.facets),
        {v.id: face_stratum(d.base, d.char, v.id).local_group for v in d.base.vertices},
    )


# ------------------------------------------------------------ eye-shape and disc


@dataclass(frozen=True)
class EyeQuotient:
    """Orbifold over an eye-shape: a 4-sphere modulo a group of ``order``."""

    order: int
    is_sphere: bool
    descriptor: OrbifoldDescriptor


def eyeshape_quotient(a: int, b: int, c: int, d: int) -> EyeQuotient:
    det = a * d - b * c
    if det == 0:
        raise DependentVectors(f"({a},{b}) and ({c},{d}) are dependent")
    eye = build_surface_with_corners(0, [2])
    desc = make_orbifold(eye, CharFunction(2, {"E0": (a, b), "E1": (c, d)}))
    return EyeQuotient(abs(det), abs(det) == 1, desc)


@dataclass(frozen=True)
class DiscModel:
    """S^1 x S^3 over a disc; ``completion`` extends ``vector`` to a basis."""

    vector: Vector
    completion: Vector
    descriptor: OrbifoldDescriptor


def basis_completion(a: int, b: int) -> Vector:
    """(c, d) with |ad - bc| = 1: smallest c >= 0, then det +1 before -1,
    then smallest |d|."""
    if gcd(a, b) != 1:
        raise NotPrimitive(f"({a},{b}) is not primitive")
    if a == 0:
        return (1, 0)
    c = 0
    while True:
        for det in (1, -1):
            num = det + b * c
            if num % a == 0:
                return (c, num // a)
        c += 1


def disc_model(a: int, b: int) -> DiscModel:
    comp = basis_completion(a, b)
    disc = build_surface_with_corners(0, [0])
    return DiscModel((a, b), comp, make_orbifold(disc, CharFunction(2, {"C": (a, b)})))


# ------------------------------------------------------------ lens spaces


@dataclass(frozen=True)
class LensDescriptor:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or not 0 <= self.q < self.p or (self.p > 1 and gcd(self.p, self.q) != 1):
            raise ValueError(f"L({self.p},{self.q}) is not normalized")
        if self.p == 1 and self.q != 0:
            raise ValueError("L(1,q) requires q = 0")

    def __str__(self):
        return f"L({self.p},{self.q})"


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def lens_from_interval(u: Sequence[int], v: Sequence[int]) -> LensDescriptor:
    """Move ``u`` to (1, 0) by some δ in GL_2(Z) with δv = (-q', p), p > 0,
    and read off L(p, q' mod p). The result does not depend on the δ chosen."""
    u, v = tuple(u), tuple(v)
    for w in (u, v):
        if len(w) != 2:
            raise DimensionMismatch(f"{w} is not in Z^2")
        if not any(w) or not is_primitive(w):
            raise NotPrimitive(f"{w} is not primitive")
    p = u[0] * v[1] - u[1] * v[0]
    if p == 0:
        raise DependentVectors(f"{u} and {v} are dependent")
    _, x, y = _ext_gcd(*u)
    s = x * v[0] + y * v[1]  # first entry of δv; second entry is p
    p = abs(p)
    return LensDescriptor(p, (-s) % p)


# ------------------------------------------------------------ Hirzebruch


@dataclass(frozen=True)
class HirzebruchVerdict:
    """``Bounds`` carries a certificate; ``Unknown`` means the sufficient
    condition does not apply, not that the orbifold fails to bound."""

    verdict: Literal["Bounds", "Unknown"]
    certificate: object | None
    bounds_manifold: bool = False


def hirzebruch_bounds(v1, v2, v3, v4) -> HirzebruchVerdict:
    vs = [tuple(v) for v in (v1, v2, v3, v4)]
    if any(len(v) != 2 for v in vs):
        raise DimensionMismatch("fan vectors must lie in Z^2")
    dets = [determinant([vs[i], vs[(i + 1) % 4]]) for i in range(4)]
    bad = [i for i, d in enumerate(dets) if d == 0]
    if bad:
        raise FanConditionError(f"consecutive vectors dependent at positions {bad}")

    def pm(a, b):
        return a == b or a == tuple(-x for x in b)

    if not (pm(vs[0], vs[2]) or pm(vs[1], vs[3])):
        return HirzebruchVerdict("Unknown", None)
    from .cobordism import hirzebruch_certificate

    cert = hirzebruch_certificate(vs)
    return HirzebruchVerdict("Bounds", cert, all(abs(d) == 1 for d in dets))


# ------------------------------------------------------------ 2D decomposition


@dataclass(frozen=True)
class Summand:
    """``kind``: QuasitoricPiece, EyeQuotient, DiscModel or TrivialBundlePiece."""

    kind: str
    descriptor: OrbifoldDescriptor


@dataclass(frozen=True)
class ConnectedSumDecomposition:
    summands: tuple[Summand, ...]


def _surface(d: OrbifoldDescriptor) -> SurfaceInfo:
    if d.base.dim != 2:
        raise DimensionMismatch(f"base has dimension {d.base.dim}, expected 2")
    info = surface_info(d.base)
    if info is None:
        raise InvalidComplexError("cannot read boundary cycles of the base")
    return info


def decompose_2d(d: OrbifoldDescriptor) -> ConnectedSumDecomposition:
    """One summand per boundary component, plus the trivial-bundle piece
    carrying the genus."""
    info = _surface(d)
    if d.bundle != "trivial":
        raise BundleFlagError("decomposition needs a trivial bundle")
    if not info.cycles:
        raise ClosedBaseError("base has empty boundary")
    out = []
    for cyc in info.cycles:
        ids = set(cyc)
        recs = tuple(r for r in d.base.faces if r.facet_set <= ids)
        base = CornersComplex(2, cyc, recs, surface=SurfaceInfo(0, (cyc,)))
        piece = make_orbifold(base, CharFunction(2, {f: d.char[f] for f in cyc}), "trivial")
        kind = {1: "DiscModel", 2: "EyeQuotient"}.get(len(cyc), "QuasitoricPiece")
        out.append(Summand(kind, piece))
    piece = make_orbifold(closed_surface(info.genus), CharFunction(2, {}), "trivial")
    out.append(Summand("TrivialBundlePiece", piece))
    return ConnectedSumDecomposition(tuple(out))


def closed_surface(genus: int) -> CornersComplex:
    return CornersComplex(2, (), (), surface=SurfaceInfo(genus, ()))


def connect_sum_2d(d1: OrbifoldDescriptor, d2: OrbifoldDescriptor) -> OrbifoldDescriptor:
    """Sum along principal orbits: genera add, boundary cycles concatenate,
    and each facet keeps its vector (facets are renamed by position)."""
    i1, i2 = _surface(d1), _surface(d2)
    if d1.bundle != "trivial" or d2.bundle != "trivial":
        raise BundleFlagError("connected sum needs trivial bundles")
    cycles = i1.cycles + i2.cycles
    base = build_surface_with_corners(i1.genus + i2.genus, [len(c) if len(c) > 1 else 0 for c in cycles])
    vecs = {}
    for new, old, src in zip(
        base.surface.cycles, cycles, [d1] * len(i1.cycles) + [d2] * len(i2.cycles)
    ):
        for n_id, o_id in zip(new, old):
            vecs[n_id] = src.char[o_id]
    return make_orbifold(base, CharFunction(2, vecs), "trivial")

