"""JSON Schema and field reference generated from the dataclass annotations.

The shipped files under ``schemas/`` are produced by ``python3 -m
torocob.schema <dir>``; a test regenerates them and compares.
"""

from __future__ import annotations

import dataclasses
import json
import sys
import types
from pathlib import Path
from typing import Any, Literal, Union, get_args, get_origin

from .serialize import SCHEMA_KEY, SCHEMA_VERSION, _computed, _hints, registry

INT = {"type": "string", "pattern": "^(0|-?[1-9][0-9]*)$"}

DOCS = {
    "FaceRecord": {
        "id": "unique face id",
        "codim": "codimension, 1 for facets up to dim for vertices",
        "facet_set": "ids of the facets this face lies on; exactly codim of them",
        "component_tag": "distinguishes components that share a facet set",
        "within": "ids of codim-1 faces containing this one; needed only where the facet set is shared",
    },
    "CornersComplex": {
        "dim": "dimension n",
        "facets": "facet ids",
        "faces": "every face record, facets included",
        "surface": "2D only: genus and boundary cycles; null means genus 0 with cycles read from vertices",
        "interval": "set on products with an interval: ids of the two end facets",
        "facet_surfaces": "surface data for facets that are themselves 2D surfaces",
    },
    "SurfaceInfo": {
        "genus": "genus of the closed surface",
        "cycles": "boundary components as cyclic facet-id lists; a single id is a circle",
    },
    "IntervalInfo": {"bottom": "facet Q x {0}", "top": "facet Q x {1}"},
    "MarkedManifold": {
        "base": "the (n+1)-dimensional complex",
        "marked": "marked facet ids in boundary order",
        "remaining": "the other facet ids",
    },
    "CharFunction": {"n": "lattice rank", "vectors": "facet id -> integer vector of length n"},
    "RSCharFunction": {"n": "lattice rank (base dim - 1)", "vectors": "unmarked facet id -> vector"},
    "OrbifoldData": {
        "base": "base complex",
        "char": "vectors on its facets",
        "bundle": "principal bundle flag: trivial or abstract (recorded, not classified)",
    },
    "OrbifoldDescriptor": {
        "base": "base complex",
        "char": "vectors on its facets",
        "bundle": "bundle flag",
        "fixed_points": "number of vertices",
        "strata": "one stratum per face, ordered by (codim, id)",
        "smooth": "true iff every local group is trivial",
        "family_tag": "family read off the base shape",
    },
    "FaceStratum": {
        "face": "face id",
        "k_lattice": "Hermite basis of the lattice spanned by the face's vectors",
        "saturation": "Hermite basis of its saturation",
        "local_group": "saturation modulo lattice",
        "torus_rank": "rank of the face's vectors",
    },
    "AbelianGroup": {"invariant_factors": "each >= 2 and dividing the next; empty is trivial"},
    "CobordismCertificate": {
        "marked": "marked manifold one dimension up",
        "rs": "vectors on its unmarked facets",
        "bundle": "bundle flag of the input orbifold",
        "boundary": "one orbifold per marked facet, same order",
        "relation": "resulting relation between content hashes of the boundary pieces",
        "provenance": "which construction produced the certificate",
        "lens_pieces": "lens spaces over boundary circles (fixed-point-free surfaces only)",
    },
    "RelationStatement": {
        "lhs": "sha256 references summed on the left",
        "rhs": "sha256 references summed on the right; empty means zero",
        "n": "torus rank; the relation lives among 2n-dimensional orbifolds",
        "orientation": "always 'unresolved': orientation signs are not tracked",
    },
}


def _ref(name: str) -> dict:
    return {"$ref": f"#/$defs/{name}"}


def _schema_for(hint: Any, defs: dict) -> dict:
    origin = get_origin(hint)
    if hint is Any or hint is object:
        return {"type": "object", "required": ["type"]}
    if origin in (Union, types.UnionType):
        opts = [_schema_for(a, defs) if a is not type(None) else {"type": "null"} for a in get_args(hint)]
        return {"anyOf": opts}
    if origin is Literal:
        return {"enum": list(get_args(hint))}
    if hint is bool:
        return {"type": "boolean"}
    if hint is int:
        return dict(INT)
    if hint is str:
        return {"type": "string"}
    if origin is tuple:
        args = get_args(hint)
        if len(args) == 2 and args[1] is Ellipsis:
            return {"type": "array", "items": _schema_for(args[0], defs)}
        return {
            "type": "array",
            "prefixItems": [_schema_for(a, defs) for a in args],
            "minItems": len(args),
            "maxItems": len(args),
        }
    if origin is frozenset:
        return {"type": "array", "items": _schema_for(get_args(hint)[0], defs), "uniqueItems": True}
    if origin is dict:
        return {"type": "object", "additionalProperties": _schema_for(get_args(hint)[1], defs)}
    if isinstance(hint, type) and dataclasses.is_dataclass(hint):
        _define(hint, defs)
        return _ref(hint.__name__)
    raise TypeError(f"no schema for {hint!r}")


def _define(cls: type, defs: dict):
    name = cls.__name__
    if name in defs:
        return
    defs[name] = {}  # placeholder against recursion
    hints = _hints(cls)
    props: dict[str, Any] = {"type": {"const": name}, SCHEMA_KEY: {"const": SCHEMA_VERSION}}
    required = ["type"]
    docs = DOCS.get(name, {})
    for f in dataclasses.fields(cls):
        s = _schema_for(hints[f.name], defs)
        if f.name in docs:
            s = {**s, "description": docs[f.name]}
        props[f.name] = s
        if f.default is dataclasses.MISSING and f.default_factory is dataclasses.MISSING:
            required.append(f.name)
    for extra in _computed(cls):
        props[extra] = {"description": "derived; ignored on input"}
    body = {"type": "object", "properties": props, "required": required, "additionalProperties": False}
    if cls.__doc__ and not cls.__doc__.startswith(f"{name}("):
        body["description"] = " ".join(cls.__doc__.split())
    defs[name] = body


def build_schema() -> dict:
    defs: dict[str, Any] = {}
    for name in sorted(registry()):
        _define(registry()[name], defs)
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "torocob documents",
        "description": f"Every document is one tagged object with \"{SCHEMA_KEY}\": \"{SCHEMA_VERSION}\".",
        "type": "object",
        "required": [SCHEMA_KEY, "type"],
        "properties": {SCHEMA_KEY: {"const": SCHEMA_VERSION}},
        "oneOf": [_ref(n) for n in sorted(defs)],
        "$defs": {n: defs[n] for n in sorted(defs)},
    }


def _json_type(s: dict) -> str:
    if "$ref" in s:
        return s["$ref"].rsplit("/", 1)[1]
    if "anyOf" in s:
        return " or ".join(_json_type(x) for x in s["anyOf"])
    if "enum" in s:
        return " or ".join(f"`{json.dumps(x)}`" for x in s["enum"])
    if s.get("pattern") == INT["pattern"]:
        return "integer (decimal string)"
    t = s.get("type", "any")
    if t == "array":
        if "prefixItems" in s:
            return "[" + ", ".join(_json_type(x) for x in s["prefixItems"]) + "]"
        return f"list of {_json_type(s['items'])}"
    if t == "object" and "additionalProperties" in s and isinstance(s["additionalProperties"], dict):
        return f"map id -> {_json_type(s['additionalProperties'])}"
    return t


def field_reference(schema: dict) -> str:
    lines = [
        "# Document formats",
        "",
        "Generated from the type annotations by `python3 -m torocob.schema schemas/`.",
        "",
        f"Every file holds one object with `\"{SCHEMA_KEY}\": \"{SCHEMA_VERSION}\"` and a `\"type\"` tag.",
        "Integers are decimal strings. Fields with defaults may be omitted on input.",
        "Hand-written complexes must list every face on which vectors should be checked;",
        "only the listed records are validated.",
        "",
    ]
    for name, body in schema["$defs"].items():
        lines += [f"## {name}", ""]
        if "description" in body:
            lines += [body["description"], ""]
        lines += ["| field | type | required | meaning |", "|---|---|---|---|"]
        for field, s in body["properties"].items():
            if field in ("type", SCHEMA_KEY):
                continue
            req = "yes" if field in body["required"] else "no"
            lines.append(f"| `{field}` | {_json_type(s)} | {req} | {s.get('description', '')} |")
        lines.append("")
    return "\n".join(lines)


def write(target: Path):
    target.mkdir(parents=True, exist_ok=True)
    schema = build_schema()
    (target / "torocob.schema.json").write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n")
    (target / "FORMATS.md").write_text(field_reference(schema))


if __name__ == "__main__":
    write(Path(sys.argv[1] if len(sys.argv) > 1 else "schemas"))
