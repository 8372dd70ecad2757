"""Deciding when two (base, vectors) data sets describe the same orbifold.

Two data sets are equivalent when some face-preserving bijection ψ of the
bases and some δ in GL_n(Z) carry each vector to plus or minus the vector of
the image facet: ``ξ'(ψ(F)) = ±δ ξ(F)``. Here ψ ranges over face-poset
isomorphisms of the incidence data, which is the combinatorial shadow of a
diffeomorphism of manifolds with corners; nothing stronger is claimed.

The search never enumerates GL_n(Z): for each ψ and each sign choice on a
maximal independent set of source facets, δ is solved for directly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterator

from .charfun import singular_strata
from .corners import CornersComplex, FaceRecord, containing_face, surface_info
from .errors import BundleFlagError, DimensionMismatch
from .lattice import (
    Matrix,
    determinant,
    apply,
    identity,
    matmul,
    rank,
    smith_normal_form,
    transpose,
    unimodular_inverse,
)
from .report import ValidityReport, Violation


@dataclass(frozen=True)
class EquivalenceWitness:
    psi: dict[str, str]
    delta: Matrix
    signs: dict[str, int]


@dataclass(frozen=True)
class Refutation:
    """An invariant that differs between the two data sets."""

    invariant: str
    left: str
    right: str


def _profile(d) -> dict[str, str]:
    c = d.base
    info = surface_info(c)
    groups = sorted(
        (s.local_group.invariant_factors for s in singular_strata(c, d.char)),
    )
    return {
        "dim": str(c.dim),
        "facets": str(len(c.facets)),
        "vertices": str(len(c.vertices)),
        "surface": "none"
        if info is None
        else f"genus {info.genus}, cycles {sorted(info.boundary_cycles)}",
        "local-groups": str(groups),
    }


def invariant_screen(d1, d2) -> Refutation | None:
    p1, p2 = _profile(d1), _profile(d2)
    for key in p1:
        if p1[key] != p2[key]:
            return Refutation(key, p1[key], p2[key])
    return None


def _check_inputs(d1, d2):
    for d in (d1, d2):
        if d.bundle != "trivial":
            raise BundleFlagError("equivalence is only decided for trivial bundles")
    if d1.base.dim != d2.base.dim or d1.char.n != d2.char.n:
        raise DimensionMismatch("data sets of different dimension")


# ---------------------------------------------------------------- face maps


def _parents(c: CornersComplex, r: FaceRecord) -> frozenset[str]:
    if r.codim == 1:
        return frozenset()
    return frozenset(containing_face(c, r, r.facet_set - {x}).id for x in r.facet_set)


def _record_bijection(c1: CornersComplex, c2: CornersComplex, psi: dict[str, str]) -> dict[str, str] | None:
    """Extend a facet bijection to all face records, preserving codim,
    facet sets and which records contain which; None if impossible."""
    images: dict[frozenset, list[FaceRecord]] = {}
    for fs, recs in c1.by_facet_set.items():
        target = frozenset(psi[x] for x in fs)
        if len(c2.records_with(target)) != len(recs):
            return None
        images[fs] = list(c2.records_with(target))
    if sum(len(v) for v in c1.by_facet_set.values()) != len(c2.faces):
        return None
    par1 = {r.id: _parents(c1, r) for r in c1.faces}
    par2 = {r.id: _parents(c2, r) for r in c2.faces}
    recs = list(c1.faces)  # ordered by codim, so parents are mapped first
    phi: dict[str, str] = {}
    used: set[str] = set()

    def go(i):
        if i == len(recs):
            return True
        r = recs[i]
        for s in images[r.facet_set]:
            if s.id in used:
                continue
            if frozenset(phi[p] for p in par1[r.id]) != par2[s.id]:
                continue
            phi[r.id] = s.id
            used.add(s.id)
            if go(i + 1):
                return True
            del phi[r.id]
            used.discard(s.id)
        return False

    return dict(phi) if go(0) else None


def _facet_signature(c: CornersComplex, char, fid: str):
    per_codim = Counter((r.codim, len(c.records_with(r.facet_set))) for r in c.faces if fid in r.facet_set)
    return (tuple(sorted(per_codim.items())), gcd(*char[fid]))


def facet_bijections(d1, d2) -> Iterator[dict[str, str]]:
    """Facet bijections extending to face-record isomorphisms, in canonical
    order (source facets in id order, targets tried in id order)."""
    c1, c2 = d1.base, d2.base
    if len(c1.facets) != len(c2.facets):
        return
    sig1 = {f: _facet_signature(c1, d1.char, f) for f in c1.facets}
    sig2 = {f: _facet_signature(c2, d2.char, f) for f in c2.facets}
    src = list(c1.facets)
    sets1 = [r.facet_set for r in c1.faces]
    psi: dict[str, str] = {}
    used: set[str] = set()

    def consistent():
        # every record whose facets are all mapped must have matching multiplicity
        for fs in set(sets1):
            if fs <= psi.keys():
                if len(c2.records_with(psi[x] for x in fs)) != len(c1.records_with(fs)):
                    return False
        return True

    def go(i):
        if i == len(src):
            if _record_bijection(c1, c2, psi) is not None:
                yield dict(psi)
            return
        f = src[i]
        for g in c2.facets:
            if g in used or sig1[f] != sig2[g]:
                continue
            psi[f] = g
            used.add(g)
            if consistent():
                yield from go(i + 1)
            del psi[f]
            used.discard(g)

    yield from go(0)


# ---------------------------------------------------------------- delta


def _extend_to_unimodular(cols: list[tuple[int, ...]], n: int) -> Matrix | None:
    """Unimodular n x n matrix whose first columns are ``cols``."""
    r = len(cols)
    if r == 0:
        return identity(n)
    c = transpose(cols)  # n x r
    snf = smith_normal_form(c)
    if any(x != 1 for x in snf.diag):
        return None
    left_inv = unimodular_inverse(snf.left)
    right_inv = unimodular_inverse(snf.right)
    block = tuple(
        tuple(right_inv[i][j] if i < r and j < r else int(i == j) for j in range(n)) for i in range(n)
    )
    return matmul(left_inv, block)


def solve_delta(sources: list[tuple[int, ...]], targets: list[tuple[int, ...]], n: int) -> Matrix | None:
    """Unimodular δ with δ·sources[i] = targets[i], or None.

    ``sources`` must be independent. Writes sources as columns P with
    ``L P R = D`` (Smith form); then ``δ = X L`` where the first columns of X
    are ``(W R)_i / d_i`` and X is completed to a unimodular matrix.
    """
    r = len(sources)
    if r == 0:
        return identity(n)
    p = transpose(sources)
    w = transpose(targets)
    snf = smith_normal_form(p)
    wr = matmul(w, snf.right)
    cols = []
    for i in range(r):
        d = snf.diag[i]
        col = tuple(wr[k][i] for k in range(n))
        if any(x % d for x in col):
            return None
        cols.append(tuple(x // d for x in col))
    x = _extend_to_unimodular(cols, n)
    if x is None:
        return None
    return matmul(x, snf.left)


def _independent_facets(d) -> list[str]:
    chosen, vecs = [], []
    for f in d.base.facets:
        v = d.char[f]
        if rank(vecs + [v]) == len(vecs) + 1:
            chosen.append(f)
            vecs.append(v)
    return chosen


def _witness_for(d1, d2, psi) -> EquivalenceWitness | None:
    n = d1.char.n
    basis = _independent_facets(d1)
    src = [d1.char[f] for f in basis]
    for tail in product((1, -1), repeat=max(len(basis) - 1, 0)):
        signs = (1,) + tail if basis else ()
        tgt = [tuple(s * x for x in d2.char[psi[f]]) for s, f in zip(signs, basis)]
        delta = solve_delta(src, tgt, n)
        if delta is None:
            continue
        out_signs = {}
        for f in d1.base.facets:
            img = apply(delta, d1.char[f])
            want = d2.char[psi[f]]
            if img == want:
                out_signs[f] = 1
            elif img == tuple(-x for x in want):
                out_signs[f] = -1
            else:
                break
        else:
            return EquivalenceWitness(dict(psi), delta, out_signs)
    return None


def data_equivalent(d1, d2) -> EquivalenceWitness | None:
    """First witness in canonical order, or None when the data are not
    equivalent."""
    _check_inputs(d1, d2)
    if invariant_screen(d1, d2) is not None:
        return None
    for psi in facet_bijections(d1, d2):
        w = _witness_for(d1, d2, psi)
        if w is not None:
            return w
    return None


def check_witness(d1, d2, w: EquivalenceWitness) -> ValidityReport:
    out = []
    c1, c2 = d1.base, d2.base
    if set(w.psi) != set(c1.facets) or sorted(w.psi.values()) != sorted(c2.facets):
        out.append(Violation("psi-not-bijection", tuple(sorted(w.psi))))
    elif _record_bijection(c1, c2, w.psi) is None:
        out.append(Violation("psi-breaks-faces", tuple(sorted(w.psi))))
    n = d1.char.n
    if len(w.delta) != n or any(len(r) != n for r in w.delta) or abs(determinant(w.delta)) != 1:
        out.append(Violation("delta-not-unimodular", (), str(w.delta)))
        return ValidityReport("witness", tuple(out))
    for f in c1.facets:
        s = w.signs.get(f)
        g = w.psi.get(f)
        if s not in (1, -1) or g not in d2.char.vectors:
            out.append(Violation("bad-sign-or-image", (f,)))
            continue
        if tuple(s * x for x in apply(w.delta, d1.char[f])) != d2.char[g]:
            out.append(Violation("vector-mismatch", (f,)))
    return ValidityReport("witness", tuple(out))


def inverse_witness(w: EquivalenceWitness) -> EquivalenceWitness:
    return EquivalenceWitness(
        {v: k for k, v in w.psi.items()},
        unimodular_inverse(w.delta),
        {w.psi[f]: s for f, s in w.signs.items()},
    )

