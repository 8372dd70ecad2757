"""Regenerate the worked-example corpus under corpus/.

Run from the repository root: ``python3 scripts/build_corpus.py``. Output is
deterministic; the test suite regenerates it in memory and compares bytes.
"""

from __future__ import annotations

import sys
from dataclasses import replace
from pathlib import Path

from torocob import (
    CharFunction,
    CornersComplex,
    FaceRecord,
    build_surface_with_corners,
    canonical_serialize,
    cobordism_to_projective_spaces,
    cube,
    hirzebruch_bounds,
    null_cobordism,
    polygon,
    simplex,
    vertex_cut_certificate,
)
from torocob.cli import FileRef, Manifest, MarkedData, VectorList, VertexCutJob
from torocob.cobordism import RSCharFunction
from torocob.families import OrbifoldData, closed_surface

EYE = build_surface_with_corners(0, [2])
SQUARE = polygon(4)
TRIANGLE = polygon(3)
DISC = build_surface_with_corners(0, [0])


def od(base, **vecs):
    return OrbifoldData(base, CharFunction(base.dim, vecs))


def pyramid() -> CornersComplex:
    """Square pyramid: the apex lies on four facets, so it is not simple."""
    sides = [f"S{i}" for i in range(4)]
    faces = [FaceRecord(f, 1, {f}) for f in ["B", *sides]]
    for i, s in enumerate(sides):
        t = sides[(i + 1) % 4]
        faces += [
            FaceRecord(f"B+{s}", 2, {"B", s}),
            FaceRecord(f"{s}+{t}", 2, {s, t}),
            FaceRecord(f"B+{s}+{t}", 3, {"B", s, t}),
        ]
    faces.append(FaceRecord("apex", 3, set(sides)))
    return CornersComplex(3, ("B", *sides), tuple(faces))


def documents() -> dict[str, object]:
    eye = od(EYE, E0=(1, 0), E1=(0, 1))
    square = od(SQUARE, E0=(1, 0), E1=(0, 1), E2=(1, 0), E3=(0, 1))
    # δ = [[1, 1], [0, 1]] applied, facets rotated one step, one sign flipped
    square_twisted = od(SQUARE, E0=(1, 1), E1=(-1, 0), E2=(1, 1), E3=(1, 0))
    cp2 = od(TRIANGLE, E0=(1, 0), E1=(0, 1), E2=(-1, -1))
    disc = od(DISC, C=(1, 2))
    annulus = od(build_surface_with_corners(0, [0, 0]), C0=(1, 0), C1=(0, 1))
    fig = build_surface_with_corners(0, [4, 0, 3])
    fig_vecs = {
        "E0.0": (1, 0), "E0.1": (0, 1), "E0.2": (1, 0), "E0.3": (0, 1),
        "C1": (1, 1),
        "E2.0": (1, 0), "E2.1": (0, 1), "E2.2": (1, 1),
    }
    docs: dict[str, object] = {
        "inputs/eye.json": eye,
        "inputs/eye-order2.json": od(EYE, E0=(1, 0), E1=(1, 2)),
        "inputs/eye-dependent.json": od(EYE, E0=(1, 0), E1=(2, 0)),
        "inputs/eye-abstract.json": replace(eye, bundle="abstract"),
        "inputs/square.json": square,
        "inputs/square-twisted.json": square_twisted,
        "inputs/square-hirzebruch.json": od(SQUARE, E0=(1, 0), E1=(0, 1), E2=(-1, 5), E3=(0, -1)),
        "inputs/triangle-cp2.json": cp2,
        "inputs/triangle-z2.json": od(TRIANGLE, E0=(1, 0), E1=(0, 1), E2=(1, 2)),
        "inputs/pentagon.json": od(polygon(5), E0=(1, 0), E1=(0, 1), E2=(-1, 1), E3=(-1, 0), E4=(1, -2)),
        "inputs/disc.json": disc,
        "inputs/annulus.json": annulus,
        "inputs/rect-circle-triangle.json": OrbifoldData(fig, CharFunction(2, fig_vecs)),
        "inputs/genus1-triangle.json": od(build_surface_with_corners(1, [3]), E0=(1, 0), E1=(0, 1), E2=(1, 1)),
        "inputs/closed-genus1.json": OrbifoldData(closed_surface(1), CharFunction(2, {})),
        "inputs/simplex3.json": od(simplex(3), F0=(1, 0, 0), F1=(0, 1, 0), F2=(0, 0, 1), F3=(1, 1, 1)),
        "complexes/simplex3.json": simplex(3),
        "complexes/cube3.json": cube(3),
        "complexes/pyramid.json": pyramid(),
        "vectors/hirzebruch-bounds.json": VectorList(((1, 0), (0, 1), (-1, 5), (0, -1))),
        "vectors/hirzebruch-both.json": VectorList(((1, 0), (0, 1), (-1, 0), (0, -1))),
        "vectors/hirzebruch-unknown.json": VectorList(((1, 0), (1, 2), (-1, 1), (-1, -3))),
        "vectors/hirzebruch-dependent.json": VectorList(((1, 0), (2, 0), (-1, 1), (0, -1))),
        "vectors/lens-sphere.json": VectorList(((1, 0), (0, 1))),
        "vectors/lens-5-2.json": VectorList(((1, 0), (-2, 5))),
        "vectors/lens-dependent.json": VectorList(((1, 2), (-1, -2))),
        "manifests/equiv-square.json": Manifest((FileRef("../inputs/square.json"), FileRef("../inputs/square-twisted.json"))),
        "manifests/equiv-eye-refuted.json": Manifest((FileRef("../inputs/eye.json"), FileRef("../inputs/eye-order2.json"))),
        "manifests/equiv-invalid.json": Manifest((FileRef("../inputs/eye.json"), FileRef("../inputs/eye-dependent.json"))),
        "manifests/connect-square-triangle.json": Manifest((FileRef("../inputs/square.json"), FileRef("../inputs/triangle-cp2.json"))),
        "manifests/connect-dimension-mismatch.json": Manifest((FileRef("../inputs/eye.json"), FileRef("../inputs/simplex3.json"))),
        "jobs/simplex3-seeded.json": VertexCutJob(simplex(3), RSCharFunction(2, {"F0": (1, 0), "F1": (0, 1)})),
    }
    certs = {
        "certificates/eye.json": cobordism_to_projective_spaces(eye.base, eye.char),
        "certificates/square.json": cobordism_to_projective_spaces(square.base, square.char),
        "certificates/cp2.json": cobordism_to_projective_spaces(cp2.base, cp2.char),
        "certificates/disc.json": null_cobordism(disc.base, disc.char),
        "certificates/annulus.json": null_cobordism(annulus.base, annulus.char),
        "certificates/simplex3-vertex-cut.json": vertex_cut_certificate(simplex(3)),
        "certificates/cube3-vertex-cut.json": vertex_cut_certificate(cube(3)),
        "certificates/hirzebruch.json": hirzebruch_bounds((1, 0), (0, 1), (-1, 5), (0, -1)).certificate,
    }
    docs.update(certs)
    eye_cert = certs["certificates/eye.json"]
    bad_rs = RSCharFunction(2, {**eye_cert.rs.vectors, "bottom": (1, 0)})
    docs["certificates/tampered-eye.json"] = replace(eye_cert, rs=bad_rs)
    docs["marked/eye-cut.json"] = MarkedData(eye_cert.marked, eye_cert.rs)
    docs["marked/eye-cut-dependent.json"] = MarkedData(eye_cert.marked, bad_rs)
    return docs


def render() -> dict[str, bytes]:
    return {name: canonical_serialize(doc) for name, doc in documents().items()}


def main(root: Path):
    for name, data in render().items():
        path = root / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus")
