"""``torocob`` command line.

Every command reads one JSON document (``--input`` or a positional path,
``-`` for stdin) and writes one canonical JSON document (``--output`` or
stdout). Exit status: 0 success, 1 mathematically invalid input (a report is
written), 2 unreadable or schema-violating input, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable

from . import cobordism as cob
from .charfun import (
    FaceStratum,
    is_smooth,
    singular_strata,
    validate_characteristic,
    validate_r_characteristic,
)
from .corners import CornersComplex, MarkedManifold, validate_marked, validate_nice
from .equivalence import EquivalenceWitness, Refutation, check_witness, data_equivalent, invariant_screen
from .errors import InternalInvariantError, TorocobError
from .families import (
    Bundle,
    OrbifoldData,
    OrbifoldDescriptor,
    connect_sum_2d,
    decompose_2d,
    hirzebruch_bounds,
    lens_from_interval,
    make_orbifold,
)
from .lattice import Vector
from .report import ValidityReport, Violation, merge
from .serialize import SchemaError, canonical_serialize, parse

EXIT_OK, EXIT_INVALID, EXIT_SCHEMA, EXIT_INTERNAL = 0, 1, 2, 3


# ---------------------------------------------------------------- job inputs


@dataclass(frozen=True)
class MarkedData:
    marked: MarkedManifold
    rs: cob.RSCharFunction
    bundle: Bundle = "trivial"


@dataclass(frozen=True)
class VectorList:
    vectors: tuple[Vector, ...]


@dataclass(frozen=True)
class VertexCutJob:
    base: CornersComplex
    seed_rs: cob.RSCharFunction | None = None


@dataclass(frozen=True)
class FileRef:
    """Manifest entry pointing at another file, relative to the manifest."""

    path: str


@dataclass(frozen=True)
class Manifest:
    items: tuple[object, ...]


# ---------------------------------------------------------------- job outputs


@dataclass(frozen=True)
class ValidationOutcome:
    nice: ValidityReport
    r_characteristic: ValidityReport
    characteristic: ValidityReport


@dataclass(frozen=True)
class StrataResult:
    strata: tuple[FaceStratum, ...]
    smooth: bool


@dataclass(frozen=True)
class BoundaryResult:
    pieces: tuple[OrbifoldDescriptor, ...]


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    witness: EquivalenceWitness | None
    refutation: Refutation | None


class Invalid(Exception):
    """Carry a result document out of a command with exit status 1."""

    def __init__(self, doc):
        self.doc = doc


# ---------------------------------------------------------------- commands


def _orbifold_input(doc, args) -> OrbifoldData:
    if isinstance(doc, OrbifoldDescriptor):
        doc = OrbifoldData(doc.base, doc.char, doc.bundle)
    if not isinstance(doc, OrbifoldData):
        raise SchemaError(f"expected OrbifoldData, got {type(doc).__name__}")
    if args.bundle:
        doc = replace(doc, bundle=args.bundle)
    return doc


def _load(path: str):
    raw = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return parse(raw)


def _manifest_items(doc, base_dir: Path):
    if not isinstance(doc, Manifest):
        raise SchemaError(f"expected Manifest, got {type(doc).__name__}")
    out = []
    for item in doc.items:
        if isinstance(item, FileRef):
            item = _load(str(base_dir / item.path))
        out.append(item)
    return out


def cmd_validate(doc, args):
    if isinstance(doc, MarkedData):
        rep = merge("marked", validate_marked(doc.marked), cob.validate_rs_characteristic(doc.marked, doc.rs))
        if not rep.valid:
            raise Invalid(rep)
        return rep
    d = _orbifold_input(doc, args)
    nice = validate_nice(d.base)
    r = validate_r_characteristic(d.base, d.char)
    full = validate_characteristic(d.base, d.char)
    out = ValidationOutcome(nice, r, full)
    if not (nice.valid and r.valid):
        raise Invalid(out)
    return out


def cmd_local_groups(doc, args):
    d = _orbifold_input(doc, args)
    rep = merge("r-characteristic", validate_nice(d.base), validate_r_characteristic(d.base, d.char))
    if not rep.valid:
        raise Invalid(rep)
    strata = singular_strata(d.base, d.char)
    return StrataResult(strata, is_smooth(strata))


def cmd_construct(doc, args):
    d = _orbifold_input(doc, args)
    return make_orbifold(d.base, d.char, d.bundle)


def _checked(cert):
    rep = cob.verify_certificate(cert)
    if not rep.valid:
        raise InternalInvariantError(f"constructed certificate fails verification: {rep}")
    return cert


def cmd_cobordism(doc, args):
    d = _orbifold_input(doc, args)
    return _checked(cob.cobordism_to_projective_spaces(d.base, d.char, d.bundle))


def cmd_null_cobordism(doc, args):
    d = _orbifold_input(doc, args)
    return _checked(cob.null_cobordism(d.base, d.char, d.bundle))


def cmd_vertex_cut_relation(doc, args):
    if isinstance(doc, CornersComplex):
        doc = VertexCutJob(doc)
    if not isinstance(doc, VertexCutJob):
        raise SchemaError(f"expected VertexCutJob or CornersComplex, got {type(doc).__name__}")
    return _checked(cob.vertex_cut_certificate(doc.base, doc.seed_rs))


def cmd_boundary(doc, args):
    if not isinstance(doc, MarkedData):
        raise SchemaError(f"expected MarkedData, got {type(doc).__name__}")
    rep = validate_marked(doc.marked)
    if not rep.valid:
        raise Invalid(rep)
    return BoundaryResult(cob.boundary(doc.marked, doc.rs, args.bundle or doc.bundle))


def cmd_equiv(doc, args):
    items = [_orbifold_input(x, args) for x in _manifest_items(doc, args.base_dir)]
    if len(items) != 2:
        raise SchemaError("equiv needs a manifest with exactly two items")
    for d in items:
        make_orbifold(d.base, d.char, d.bundle)
    refutation = invariant_screen(*items)
    w = data_equivalent(*items)
    if w is not None and not check_witness(*items, w).valid:
        raise InternalInvariantError("witness fails its own check")
    return EquivalenceResult(w is not None, w, refutation)


def cmd_decompose_2d(doc, args):
    d = _orbifold_input(doc, args)
    return decompose_2d(make_orbifold(d.base, d.char, d.bundle))


def cmd_connect_sum(doc, args):
    items = [_orbifold_input(x, args) for x in _manifest_items(doc, args.base_dir)]
    if len(items) != 2:
        raise SchemaError("connect-sum needs a manifest with exactly two items")
    a, b = (make_orbifold(d.base, d.char, d.bundle) for d in items)
    return connect_sum_2d(a, b)


def _vectors(doc, k):
    if not isinstance(doc, VectorList):
        raise SchemaError(f"expected VectorList, got {type(doc).__name__}")
    if len(doc.vectors) != k:
        raise SchemaError(f"expected {k} vectors, got {len(doc.vectors)}")
    return doc.vectors


def cmd_hirzebruch(doc, args):
    verdict = hirzebruch_bounds(*_vectors(doc, 4))
    if verdict.certificate is not None:
        _checked(verdict.certificate)
    return verdict


def cmd_lens(doc, args):
    return lens_from_interval(*_vectors(doc, 2))


def cmd_verify(doc, args):
    if not isinstance(doc, cob.CobordismCertificate):
        raise SchemaError(f"expected CobordismCertificate, got {type(doc).__name__}")
    rep = cob.verify_certificate(doc)
    if not rep.valid:
        raise Invalid(rep)
    return rep


COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "local-groups": cmd_local_groups,
    "construct": cmd_construct,
    "cobordism": cmd_cobordism,
    "null-cobordism": cmd_null_cobordism,
    "vertex-cut-relation": cmd_vertex_cut_relation,
    "boundary": cmd_boundary,
    "equiv": cmd_equiv,
    "decompose-2d": cmd_decompose_2d,
    "connect-sum": cmd_connect_sum,
    "hirzebruch": cmd_hirzebruch,
    "lens": cmd_lens,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------- driver


def corpus_check(target: Path) -> tuple[int, list[str]]:
    """Parse and re-serialize every ``*.json`` under ``target``; report files
    whose bytes change."""
    files = sorted(target.rglob("*.json")) if target.is_dir() else [target]
    bad = []
    status = EXIT_OK
    for f in files:
        raw = f.read_bytes()
        try:
            again = canonical_serialize(parse(raw))
        except (SchemaError, TorocobError) as e:
            bad.append(f"{f}: {e}")
            status = EXIT_SCHEMA
            continue
        if again != raw:
            bad.append(f"{f}: not byte-stable")
            status = max(status, EXIT_INVALID)
    return status, bad


def _write(data: bytes, path: str | None, stream):
    if path and path != "-":
        Path(path).write_bytes(data)
    else:
        stream.buffer.write(data)
        stream.flush()


def _report_doc(exc: TorocobError) -> ValidityReport:
    if exc.report is not None:
        return exc.report
    return ValidityReport("error", (Violation(type(exc).__name__, (), str(exc)),))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="torocob", description=__doc__.splitlines()[0])
    p.add_argument("command", nargs="?", choices=sorted(COMMANDS))
    p.add_argument("path", nargs="?", help="input file (same as --input)")
    p.add_argument("--input", dest="input_path")
    p.add_argument("--output")
    p.add_argument("--bundle", choices=["trivial", "abstract"])
    p.add_argument("--emit-report", action="store_true", help="also write validity reports to stderr")
    p.add_argument("--corpus-check", metavar="PATH", help="check canonical round-trips of JSON files")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.corpus_check:
        status, bad = corpus_check(Path(args.corpus_check))
        for line in bad:
            print(line, file=sys.stderr)
        if not bad:
            print(f"{args.corpus_check}: all files byte-stable", file=sys.stderr)
        return status
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_SCHEMA
    path = args.input_path or args.path
    if not path:
        print("no input given", file=sys.stderr)
        return EXIT_SCHEMA
    args.base_dir = Path(".") if path == "-" else Path(path).parent
    try:
        doc = _load(path)
        result = COMMANDS[args.command](doc, args)
    except OSError as e:
        print(f"cannot read input: {e}", file=sys.stderr)
        return EXIT_SCHEMA
    except SchemaError as e:
        print(f"schema error: {e}", file=sys.stderr)
        return EXIT_SCHEMA
    except Invalid as e:
        out = canonical_serialize(e.doc)
        _write(out, args.output, sys.stdout)
        if args.emit_report:
            _write(out, None, sys.stderr)
        return EXIT_INVALID
    except TorocobError as e:
        out = canonical_serialize(_report_doc(e))
        print(f"invalid input: {type(e).__name__}: {e}", file=sys.stderr)
        _write(out, args.output, sys.stdout)
        if args.emit_report:
            _write(out, None, sys.stderr)
        return EXIT_INVALID
    except Exception as e:  # anything else is our bug, not the user's
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    out = canonical_serialize(result)
    _write(out, args.output, sys.stdout)
    if args.emit_report and isinstance(result, (ValidityReport, ValidationOutcome)):
        _write(out, None, sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
