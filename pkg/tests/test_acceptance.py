"""Acceptance criteria, one test each. Every test prints a PASS/FAIL line
(also collected into the pytest terminal summary) and then asserts."""

from __future__ import annotations

import json
import random
import time
from dataclasses import replace
from itertools import combinations, product
from math import gcd
from pathlib import Path

from torocob import cli
from torocob.charfun import CharFunction, is_smooth, singular_strata, validate_r_characteristic
from torocob.cobordism import (
    RSCharFunction,
    RelationStatement,
    cobordism_to_projective_spaces,
    find_lambda0,
    hirzebruch_certificate,
    null_cobordism,
    verify_certificate,
    vertex_cut_certificate,
)
from torocob.corners import (
    MarkedManifold,
    build_surface_with_corners,
    cube,
    is_simplex,
    polygon,
    simplex,
)
from torocob.equivalence import check_witness, data_equivalent
from torocob.errors import DependentVectors
from torocob.families import (
    OrbifoldData,
    eyeshape_quotient,
    hirzebruch_bounds,
    lens_from_interval,
    make_orbifold,
)
from torocob.lattice import apply, matmul, quotient_invariants, saturation, smith_normal_form
from torocob.serialize import canonical_serialize, parse

from .conftest import ACCEPTANCE
from .oracles import brute_force_equivalent, coset_count_z2, det_cofactor, rank_fraction

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


def record(num: int, failures: list, text: str):
    ok = not failures
    line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {text}"
    if failures:
        line += f" ({len(failures)} failures, first: {failures[0]})"
    print(line)
    ACCEPTANCE.append((num, ok, line.split(": ", 1)[1]))
    assert ok, line


def nonzero_vectors(bound, n=2):
    return [v for v in product(range(-bound, bound + 1), repeat=n) if any(v)]


def cycle_shapes(max_facets, min_facets=1):
    """Boundary-cycle multisets (0 = circle) using between min and max facets."""
    out = []

    def go(rest, smallest, acc):
        used = sum(max(x, 1) for x in acc)
        if acc and used >= min_facets:
            out.append(tuple(acc))
        for length in (0, 2, 3, 4, 5, 6):
            if length < smallest or max(length, 1) > rest:
                continue
            go(rest - max(length, 1), length, acc + [length])

    go(max_facets, 0, [])
    return out


# ---------------------------------------------------------------- 1


def test_criterion_1_lattice_oracles():
    start = time.perf_counter()
    failures = []
    rng = random.Random(1)
    r3 = range(-3, 4)
    checked = 0
    for a, b, c, d in product(r3, repeat=4):
        m = [[a, b], [c, d]]
        det = det_cofactor(m)
        if det:
            diag = smith_normal_form(m).diag
            checked += 1
            if diag[0] * diag[1] != abs(det):
                failures.append(("2x2", m))
    for _ in range(10_000):
        m = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        det = det_cofactor(m)
        if det:
            diag = smith_normal_form(m).diag
            checked += 1
            if diag[0] * diag[1] * diag[2] != abs(det):
                failures.append(("3x3", m))
    vs = nonzero_vectors(3)
    gen_sets = [[v] for v in vs] + [[v, w] for v in vs for w in vs]
    gen_sets += [[rng.choice(vs) for _ in range(3)] for _ in range(2000)]
    for gens in gen_sets:
        if quotient_invariants(gens, saturation(gens)).order != coset_count_z2(gens):
            failures.append(("quotient", gens))
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(("runtime", f"{elapsed:.1f}s"))
    record(
        1,
        failures,
        f"SNF product = |det| on {checked} full-rank matrices; "
        f"{len(gen_sets)} quotient orders match coset enumeration; {elapsed:.1f}s",
    )


# ---------------------------------------------------------------- 2


def test_criterion_2_local_groups():
    """Every 2D complex with at most 5 facets, every assignment of vectors
    with entries in [-2, 2]. Assignments are taken up to the sign of each
    vector, which the exhaustive pair check below shows the groups ignore;
    complexes with at most 3 facets also run with every sign."""
    start = time.perf_counter()
    failures = []
    vs = nonzero_vectors(2)
    reps = [v for v in vs if next(x for x in v if x) > 0]
    det = {(a, b): det_cofactor([list(a), list(b)]) for a in vs for b in vs}
    g = {a: gcd(*a) for a in vs}

    # sign independence, every pair of vectors in range
    eye = build_surface_with_corners(0, [2])
    for a, b in product(vs, repeat=2):
        base = [s.local_group for s in singular_strata(eye, CharFunction(2, {"E0": a, "E1": b}))]
        for sa, sb in ((-1, 1), (1, -1), (-1, -1)):
            f = CharFunction(2, {"E0": tuple(sa * x for x in a), "E1": tuple(sb * x for x in b)})
            if [s.local_group for s in singular_strata(eye, f)] != base:
                failures.append(("sign", a, b))

    assignments = 0
    shapes = cycle_shapes(5)
    for shape in shapes:
        c = build_surface_with_corners(0, list(shape))
        facets = c.facets
        verts = [(v.id, tuple(sorted(v.facet_set))) for v in c.vertices]
        pool = vs if len(facets) <= 3 else reps
        for combo in product(pool, repeat=len(facets)):
            vec = dict(zip(facets, combo))
            dets = {vid: det[(vec[x], vec[y])] for vid, (x, y) in verts}
            if not all(dets.values()):
                continue  # not r-characteristic: no local groups defined
            assignments += 1
            strata = singular_strata(c, CharFunction(2, vec))
            by_face = {s.face: s for s in strata}
            for vid, dv in dets.items():
                if by_face[vid].local_group.order != abs(dv):
                    failures.append((shape, combo, vid))
            unimodular = all(abs(dv) == 1 for dv in dets.values()) and all(g[v] == 1 for v in combo)
            if is_smooth(strata) != unimodular:
                failures.append((shape, combo, "smooth"))
    elapsed = time.perf_counter() - start
    record(
        2,
        failures,
        f"{len(shapes)} complexes, {assignments} r-characteristic assignments: vertex order = |det| "
        f"and smooth flag = unimodularity; {elapsed:.1f}s",
    )


# ---------------------------------------------------------------- 3


def random_constraint_system(rng):
    n = rng.randint(1, 3)
    count = rng.randint(n, 6)
    while True:
        vecs = {f"x{i}": tuple(rng.randint(-3, 3) for _ in range(n)) for i in range(count)}
        if all(any(v) for v in vecs.values()):
            break
    independent = [
        set(s) for s in combinations(sorted(vecs), n) if rank_fraction([vecs[i] for i in s]) == n
    ]
    if not independent:
        return random_constraint_system(rng)
    sets = rng.sample(independent, rng.randint(1, min(4, len(independent))))
    return n, vecs, sets


def lambda0_run(seed):
    rng = random.Random(seed)
    out = []
    for _ in range(1000):
        n, vecs, sets = random_constraint_system(rng)
        out.append((n, vecs, sets, find_lambda0(sets, vecs, n)))
    return out


def test_criterion_3_lambda0():
    failures = []
    first = lambda0_run(3)
    second = lambda0_run(3)
    dump = lambda run: json.dumps([[n, v, [sorted(s) for s in ss], list(l)] for n, v, ss, l in run], sort_keys=True)
    if dump(first) != dump(second):
        failures.append("two runs differ")
    for n, vecs, sets, lam in first:
        if len(lam) != n or gcd(*lam) != 1:
            failures.append(("not primitive", lam))
        for s in sets:
            for drop in s:
                rows = [vecs[i] for i in s if i != drop] + [lam]
                if rank_fraction(rows) != n:
                    failures.append((n, vecs, s, lam))
    record(3, failures, f"{len(first)} constraint systems; primitive, independent, deterministic")


# ---------------------------------------------------------------- 4


def random_polygon_function(rng, k):
    vs = nonzero_vectors(3)
    while True:
        vecs = [rng.choice(vs)]
        for _ in range(k - 1):
            vecs.append(rng.choice([v for v in vs if det_cofactor([list(vecs[-1]), list(v)])]))
        if det_cofactor([list(vecs[-1]), list(vecs[0])]):
            return CharFunction(2, {f"E{i}": v for i, v in enumerate(vecs)})


def check_pipeline(c, f, failures, label):
    cert = cobordism_to_projective_spaces(c, f)
    if not verify_certificate(cert).valid:
        failures.append((label, "verify"))
    k = len(c.vertices)
    if len(cert.boundary) != k + 1:
        failures.append((label, "piece count"))
    for piece in cert.boundary[:-1]:
        if not is_simplex(piece.base) or not validate_r_characteristic(piece.base, piece.char).valid:
            failures.append((label, "cut piece"))
    top = cert.boundary[-1]
    if top.base != c or top.char != f or top != make_orbifold(c, f):
        failures.append((label, "top piece"))
    return cert


def test_criterion_4_pipeline():
    start = time.perf_counter()
    failures = []
    rng = random.Random(4)
    for i in range(200):
        k = 3 + i % 6
        check_pipeline(polygon(k), random_polygon_function(rng, k), failures, f"polygon {k} #{i}")
    eye = build_surface_with_corners(0, [2])
    cert = check_pipeline(eye, CharFunction(2, {"E0": (1, 0), "E1": (0, 1)}), failures, "eye")
    for piece in cert.boundary[:-1]:
        if set(piece.char.vectors.values()) != {(1, 0), (0, 1), (1, -1)}:
            failures.append(("eye vectors", piece.char.vectors))
    disc = build_surface_with_corners(0, [0])
    check_pipeline(disc, CharFunction(2, {"C": (1, 2)}), failures, "disc")
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        failures.append(("runtime", f"{elapsed:.1f}s"))
    record(4, failures, f"200 polygon certificates plus eye and disc fixtures verify; {elapsed:.1f}s")


# ---------------------------------------------------------------- 5


def test_criterion_5_fixed_point_free_and_lenses():
    failures = []
    disc = build_surface_with_corners(0, [0])
    annulus = build_surface_with_corners(0, [0, 0])
    for c, f in [
        (disc, CharFunction(2, {"C": (1, 2)})),
        (annulus, CharFunction(2, {"C0": (1, 0), "C1": (0, 1)})),
    ]:
        cert = null_cobordism(c, f)
        if cert.relation.rhs or len(cert.relation.lhs) != 1 or not verify_certificate(cert).valid:
            failures.append(("null", c.facets))
        if len(cert.lens_pieces) != len(c.facets):
            failures.append(("lens pieces", c.facets))
    vs = nonzero_vectors(4)
    prim = [v for v in vs if gcd(*v) == 1]
    order_checked = shear_checked = 0
    shear_failures = []
    for u in prim:
        for v in prim:
            d = det_cofactor([list(u), list(v)])
            if not d:
                continue
            lens = lens_from_interval(u, v)
            order_checked += 1
            if lens.p != abs(d):
                failures.append(("order", u, v))
            for m in range(-4, 5):
                w = (v[0] + m * u[0], v[1] + m * u[1])
                if max(map(abs, w)) > 4 or gcd(*w) != 1:
                    continue
                shear_checked += 1
                if lens_from_interval(u, w) != lens:
                    shear_failures.append((u, v, m))
    failures += shear_failures
    record(
        5,
        failures,
        f"disc and annulus bound; p = |det| on {order_checked} pairs; "
        f"shear invariance on {shear_checked} cases ({len(shear_failures)} differ)",
    )


# ---------------------------------------------------------------- 6


def test_criterion_6_eye_quotient():
    failures = []
    eye = build_surface_with_corners(0, [2])
    d = make_orbifold(eye, CharFunction(2, {"E0": (1, 0), "E1": (0, 1)}))
    q = eyeshape_quotient(1, 0, 0, 1)
    if not (d.smooth and d.family_tag.kind == "EyeQuotient" and d.family_tag.order == 1 and q.is_sphere):
        failures.append("characteristic eye")
    checked = 0
    for a, b, c, dd in product(range(-4, 5), repeat=4):
        det = det_cofactor([[a, b], [c, dd]])
        if det == 0:
            try:
                eyeshape_quotient(a, b, c, dd)
                failures.append(("dependent accepted", a, b, c, dd))
            except (DependentVectors, ValueError):
                pass
            continue
        checked += 1
        q = eyeshape_quotient(a, b, c, dd)
        if q.order != abs(det) or q.is_sphere != (abs(det) == 1):
            failures.append((a, b, c, dd))
    record(6, failures, f"eye order 1 is the 4-sphere; order = |ad - bc| on {checked} quadruples")


# ---------------------------------------------------------------- 7

ELEMENTARY = [((1, 1), (0, 1)), ((1, -1), (0, 1)), ((1, 0), (1, 1)), ((1, 0), (-1, 1)), ((0, 1), (1, 0)), ((-1, 0), (0, 1))]


def random_delta(rng, steps=4):
    d = ((1, 0), (0, 1))
    for _ in range(rng.randint(0, steps)):
        d = matmul(rng.choice(ELEMENTARY), d)
    return d


def random_fan(rng):
    vs = nonzero_vectors(3)
    while True:
        fan = [rng.choice(vs) for _ in range(4)]
        if rng.random() < 0.5:
            i = rng.randint(0, 1)
            fan[i + 2] = tuple(rng.choice((1, -1)) * x for x in fan[i])
        if all(det_cofactor([list(fan[i]), list(fan[(i + 1) % 4])]) for i in range(4)):
            return fan


def test_criterion_7_hirzebruch():
    failures = []
    fixtures = [
        ([(1, 0), (0, 1), (-1, 5), (0, -1)], "Bounds"),
        ([(1, 0), (0, 1), (-1, 0), (0, -1)], "Bounds"),
        ([(1, 0), (1, 2), (-1, 0), (1, -3)], "Bounds"),
        ([(1, 0), (1, 2), (-1, 1), (-1, -3)], "Unknown"),
        ([(1, 0), (0, 1), (-1, 1), (1, -2)], "Unknown"),
        ([(2, 1), (0, 1), (-1, 0), (1, -1)], "Unknown"),
    ]
    for fan, want in fixtures:
        v = hirzebruch_bounds(*fan)
        if v.verdict != want:
            failures.append((fan, v.verdict))
        if v.certificate is not None and not verify_certificate(v.certificate).valid:
            failures.append((fan, "certificate"))
    rng = random.Random(7)
    bounds = 0
    for _ in range(500):
        fan = random_fan(rng)
        delta = random_delta(rng)
        sign = rng.choice((1, -1))
        moved = [tuple(sign * x for x in apply(delta, v)) for v in fan]
        a, b = hirzebruch_bounds(*fan), hirzebruch_bounds(*moved)
        bounds += a.verdict == "Bounds"
        if a.verdict != b.verdict:
            failures.append((fan, delta, sign))
        if b.certificate is not None and not verify_certificate(b.certificate).valid:
            failures.append((moved, "certificate"))
    record(7, failures, f"{len(fixtures)} fixtures; verdict invariant on 500 random cases ({bounds} Bounds)")


# ---------------------------------------------------------------- 8


def dihedral(k, rng):
    """A random symmetry of the k-cycle as a map i -> sigma(i)."""
    r = rng.randrange(k)
    if rng.random() < 0.5:
        return [(r + i) % k for i in range(k)]
    # reflection: the facet between vertices keeps adjacency when reversed
    return [(r - i) % k for i in range(k)]


def transformed(d: OrbifoldData, sigma, delta, signs):
    facets = d.base.facets
    vecs = {}
    for i, f in enumerate(facets):
        vecs[facets[sigma[i]]] = tuple(signs[i] * x for x in apply(delta, d.char[f]))
    return OrbifoldData(d.base, CharFunction(2, vecs))


def group_multiset(d):
    return sorted(s.local_group.invariant_factors for s in singular_strata(d.base, d.char))


def small_2d_shapes(max_facets):
    return [s for s in cycle_shapes(max_facets) if s]


def test_criterion_8_equivalence():
    start = time.perf_counter()
    failures = []
    rng = random.Random(8)
    found = refuted = 0
    for i in range(200):
        k = 3 + i % 4
        base = polygon(k)
        d1 = OrbifoldData(base, random_polygon_function(rng, k))
        d2 = transformed(d1, dihedral(k, rng), random_delta(rng), [rng.choice((1, -1)) for _ in range(k)])
        w = data_equivalent(d1, d2)
        if w is None or not check_witness(d1, d2, w).valid:
            failures.append(("missed", d1.char.vectors, d2.char.vectors))
        else:
            found += 1
        # perturb one vector until the local-group multisets differ
        for _ in range(200):
            f = rng.choice(base.facets)
            vecs = dict(d2.char.vectors)
            vecs[f] = rng.choice(nonzero_vectors(3))
            d3 = OrbifoldData(base, CharFunction(2, vecs))
            if validate_r_characteristic(base, d3.char).valid and group_multiset(d3) != group_multiset(d1):
                break
        else:
            failures.append(("no perturbation", d2.char.vectors))
            continue
        if data_equivalent(d1, d3) is not None:
            failures.append(("not refuted", d1.char.vectors, d3.char.vectors))
        else:
            refuted += 1

    # bounded brute force on every genus-0 base with at most 6 facets; with
    # entries in [-1, 1] any relating δ has entries in [-2, 2], inside the bound
    small = nonzero_vectors(1)
    agree = positives = 0
    for shape in small_2d_shapes(6):
        base = build_surface_with_corners(0, list(shape))
        sets = [sorted(v.facet_set) for v in base.vertices]
        for trial in range(6):
            pair = []
            while len(pair) < 2:
                f = CharFunction(2, {x: rng.choice(small) for x in base.facets})
                if validate_r_characteristic(base, f).valid:
                    pair.append(OrbifoldData(base, f))
            if trial % 2 and len(shape) == 1 and shape[0] >= 3:
                k = shape[0]
                signs = [rng.choice((1, -1)) for _ in range(k)]
                pair[1] = transformed(pair[0], dihedral(k, rng), random_delta(rng, 2), signs)
            a, b = pair
            ours = data_equivalent(a, b) is not None
            oracle = brute_force_equivalent(
                list(base.facets), a.char.vectors, sets, list(base.facets), b.char.vectors, sets, bound=3
            )
            positives += oracle
            if ours != oracle:
                failures.append(("oracle", shape, a.char.vectors, b.char.vectors, ours, oracle))
            else:
                agree += 1
    elapsed = time.perf_counter() - start
    record(
        8,
        failures,
        f"{found}/200 constructed pairs found, {refuted}/200 perturbed pairs refuted, "
        f"{agree} brute-force comparisons agree ({positives} equivalent); {elapsed:.1f}s",
    )


# ---------------------------------------------------------------- 9


def valid_certificates():
    eye = build_surface_with_corners(0, [2])
    return {
        "eye": cobordism_to_projective_spaces(eye, CharFunction(2, {"E0": (1, 0), "E1": (0, 1)})),
        "square": cobordism_to_projective_spaces(
            polygon(4), CharFunction(2, {"E0": (1, 0), "E1": (0, 1), "E2": (1, 0), "E3": (0, 1)})
        ),
        "cp2": cobordism_to_projective_spaces(
            polygon(3), CharFunction(2, {"E0": (1, 0), "E1": (0, 1), "E2": (-1, -1)})
        ),
        "disc": null_cobordism(build_surface_with_corners(0, [0]), CharFunction(2, {"C": (1, 2)})),
        "annulus": null_cobordism(
            build_surface_with_corners(0, [0, 0]), CharFunction(2, {"C0": (1, 0), "C1": (0, 1)})
        ),
        "simplex3": vertex_cut_certificate(simplex(3)),
        "cube3": vertex_cut_certificate(cube(3)),
        "hirzebruch": hirzebruch_certificate([(1, 0), (0, 1), (-1, 5), (0, -1)]),
    }


def bump(v, i):
    w = list(v)
    w[i] += 1
    if not any(w):
        w[i] += 1
    return tuple(w)


def mutations(cert):
    """Every single-field tampering: one vector entry, the marked list, one
    relation term, or one scalar field."""
    # vector entries of the rs function
    for f, v in cert.rs.vectors.items():
        for i in range(len(v)):
            rs = RSCharFunction(cert.rs.n, {**cert.rs.vectors, f: bump(v, i)})
            yield f"rs {f}[{i}]", replace(cert, rs=rs)
    # vector entries of the stored boundary pieces
    for p, piece in enumerate(cert.boundary):
        for f, v in piece.char.vectors.items():
            for i in range(len(v)):
                char = CharFunction(piece.char.n, {**piece.char.vectors, f: bump(v, i)})
                pieces = list(cert.boundary)
                pieces[p] = replace(piece, char=char)
                yield f"piece {p} {f}[{i}]", replace(cert, boundary=tuple(pieces))
    # vector entries of lens pieces
    for p, lp in enumerate(cert.lens_pieces):
        for field in ("u", "v"):
            for i in range(2):
                lens = list(cert.lens_pieces)
                lens[p] = replace(lp, **{field: bump(getattr(lp, field), i)})
                yield f"lens {p} {field}[{i}]", replace(cert, lens_pieces=tuple(lens))
    # the marked list
    m = cert.marked
    marked = list(m.marked)
    for i in range(len(marked)):
        rest = marked[:i] + marked[i + 1 :]
        yield f"drop marked {i}", replace(cert, marked=MarkedManifold(m.base, tuple(rest), m.remaining))
        yield f"unmark {i}", replace(
            cert, marked=MarkedManifold(m.base, tuple(rest), m.remaining + (marked[i],))
        )
        yield f"duplicate marked {i}", replace(
            cert, marked=MarkedManifold(m.base, tuple(marked + [marked[i]]), m.remaining)
        )
    for i in range(len(marked) - 1):
        swapped = marked[:]
        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
        yield f"swap marked {i}", replace(cert, marked=MarkedManifold(m.base, tuple(swapped), m.remaining))
    for r in m.remaining:
        yield f"mark {r}", replace(
            cert,
            marked=MarkedManifold(m.base, tuple(marked + [r]), tuple(x for x in m.remaining if x != r)),
        )
    # relation terms
    rel = cert.relation
    fake = "sha256:" + "0" * 64
    for side in ("lhs", "rhs"):
        terms = list(getattr(rel, side))
        other = "rhs" if side == "lhs" else "lhs"
        for i in range(len(terms)):
            yield f"drop {side} {i}", replace(cert, relation=replace(rel, **{side: tuple(terms[:i] + terms[i + 1 :])}))
            yield f"forge {side} {i}", replace(
                cert, relation=replace(rel, **{side: tuple(terms[:i] + [fake] + terms[i + 1 :])})
            )
            yield f"move {side} {i}", replace(
                cert,
                relation=replace(
                    rel,
                    **{side: tuple(terms[:i] + terms[i + 1 :]), other: getattr(rel, other) + (terms[i],)},
                ),
            )
        yield f"extra {side}", replace(cert, relation=replace(rel, **{side: tuple(terms + [fake])}))
    yield "swap sides", replace(cert, relation=RelationStatement(rel.rhs, rel.lhs, rel.n))
    yield "relation n", replace(cert, relation=replace(rel, n=rel.n + 1))
    # scalar fields
    yield "bundle", replace(cert, bundle="abstract" if cert.bundle == "trivial" else "trivial")
    for prov in ("projective-space-cobordism", "fixed-point-free-null-cobordism", "vertex-cut-relation", "hirzebruch-boundary", "other"):
        if prov != cert.provenance:
            yield f"provenance {prov}", replace(cert, provenance=prov)


def test_criterion_9_mutations():
    failures = []
    total = 0
    for name, cert in valid_certificates().items():
        if not verify_certificate(cert).valid:
            failures.append((name, "original invalid"))
        for label, mutant in mutations(cert):
            if mutant == cert:
                continue
            total += 1
            if verify_certificate(mutant).valid:
                failures.append((name, label))
    record(9, failures, f"{total} single-field mutations over 8 certificates, {total - len(failures)} caught")


# ---------------------------------------------------------------- 10


def test_criterion_10_serialization_and_exit_codes(tmp_path):
    from .test_cli import BAD, CASES

    failures = []
    files = sorted(CORPUS.rglob("*.json"))
    for path in files:
        raw = path.read_bytes()
        if canonical_serialize(parse(raw)) != raw:
            failures.append(("round trip", path.name))
    runs = 0
    out = str(tmp_path / "out.json")
    for command, (ok, invalid, wrong) in CASES.items():
        for name, want in ((ok, 0), (invalid, 1), (wrong, 2)):
            runs += 1
            got = cli.main([command, str(CORPUS / name), "--output", out])
            if got != want:
                failures.append((command, name, got, want))
        for bad in sorted(BAD.glob("*.json")):
            runs += 1
            if cli.main([command, str(bad), "--output", out]) != 2:
                failures.append((command, bad.name))
    record(10, failures, f"{len(files)} corpus files byte-stable; {runs} exit-code fixtures")
