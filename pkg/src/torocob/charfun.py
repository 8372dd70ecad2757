"""Characteristic functions on a corners complex and the local groups they induce.

For a face lying on facets ``F_1..F_k`` the vectors ``λ(F_1)..λ(F_k)`` span a
lattice ``K``; its saturation ``K~`` (all integer points of the real span)
contains it with finite index when the vectors are independent, and the
quotient ``K~/K`` is the face's local group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .corners import CornersComplex, FaceRecord, sort_ids
from .errors import DimensionMismatch, InvalidCharFunction, UnknownFace
from .lattice import (
    AbelianGroup,
    Matrix,
    Vector,
    hermite_normal_form,
    is_basis_extendable,
    quotient_invariants,
    rank,
    saturation,
)
from .report import ValidityReport, Violation


_ordered = lru_cache(maxsize=65536)(sort_ids)


@dataclass(frozen=True)
class CharFunction:
    """Facet id -> vector in Z^n. Vectors are kept exactly as given."""

    n: int
    vectors: dict[str, Vector]

    def __post_init__(self):
        vecs = {}
        for fid, v in self.vectors.items():
            v = tuple(int(x) for x in v)
            if len(v) != self.n:
                raise DimensionMismatch(f"vector for {fid} has length {len(v)}, expected {self.n}")
            if not any(v):
                raise InvalidCharFunction(f"zero vector assigned to {fid}")
            vecs[fid] = v
        object.__setattr__(self, "vectors", vecs)

    def __getitem__(self, fid: str) -> Vector:
        return self.vectors[fid]

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.vectors.items()))))

    def face_matrix(self, face: FaceRecord) -> Matrix:
        return tuple(self.vectors[f] for f in _ordered(face.facet_set))


def _check(c: CornersComplex, f: CharFunction, check: str, ok) -> ValidityReport:
    if f.n != c.dim:
        raise DimensionMismatch(f"vectors in Z^{f.n} on a {c.dim}-dimensional complex")
    out = []
    missing = [fid for fid in c.facets if fid not in f.vectors]
    if missing:
        out.append(Violation("missing-vector", tuple(missing)))
    extra = sort_ids(set(f.vectors) - set(c.facets))
    if extra:
        out.append(Violation("unknown-facet", tuple(extra)))
    for face in c.faces:
        if not face.facet_set <= f.vectors.keys():
            continue
        m = f.face_matrix(face)
        if not ok(m, len(face.facet_set)):
            out.append(Violation("dependent" if check == "r-characteristic" else "not-unimodular", (face.id,), str(m)))
    return ValidityReport(check, tuple(out))


def validate_r_characteristic(c: CornersComplex, f: CharFunction) -> ValidityReport:
    """Vectors at each face must be linearly independent."""
    return _check(c, f, "r-characteristic", lambda m, k: rank(m) == k)


def validate_characteristic(c: CornersComplex, f: CharFunction) -> ValidityReport:
    """Vectors at each face must extend to a basis of Z^n."""
    return _check(c, f, "characteristic", lambda m, k: rank(m) == k and is_basis_extendable(m))


@dataclass(frozen=True)
class FaceStratum:
    face: str
    k_lattice: Matrix
    saturation: Matrix
    local_group: AbelianGroup
    torus_rank: int


@lru_cache(maxsize=65536)
def _lattice_data(k: Matrix) -> tuple[Matrix, Matrix, AbelianGroup, int]:
    sat = saturation(k)
    return hermite_normal_form(k), sat, quotient_invariants(k, sat), rank(k)


def _stratum(face: FaceRecord, f: CharFunction) -> FaceStratum:
    return FaceStratum(face.id, *_lattice_data(f.face_matrix(face)))


def face_stratum(c: CornersComplex, f: CharFunction, face_id: str) -> FaceStratum:
    face = c.by_id.get(face_id)
    if face is None:
        raise UnknownFace(face_id)
    return _stratum(face, f)


def singular_strata(c: CornersComplex, f: CharFunction) -> tuple[FaceStratum, ...]:
    """Strata of every face, ordered by (codim, id).

    Despite the name this returns all strata, smooth ones included; use
    :func:`is_smooth` for the overall verdict.
    """
    return tuple(_stratum(face, f) for face in c.faces)


def is_smooth(strata) -> bool:
    return all(s.local_group.is_trivial for s in strata)
