"""Canonical JSON for every public type.

Dataclasses become objects tagged with ``"type"``; integers become decimal
strings so no reader truncates them; sets become sorted lists; keys are
sorted and whitespace is fixed. Equal values therefore give equal bytes, and
``canonical_serialize(parse(b)) == b`` for any canonical ``b``.

Decoding is driven by the dataclass field annotations, so the JSON layout is
exactly the field layout documented in ``schemas/``.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import types
import typing
from functools import lru_cache
from typing import Any, Literal, Union, get_args, get_origin

SCHEMA_KEY = "torocob-schema"
SCHEMA_VERSION = "1"


class SchemaError(ValueError):
    """Input does not match the expected JSON layout."""


@lru_cache(maxsize=None)
def registry() -> dict[str, type]:
    from . import charfun, cli, cobordism, corners, equivalence, families, lattice, report

    out = {}
    for mod in (lattice, report, corners, charfun, families, cobordism, equivalence, cli):
        for name in dir(mod):
            obj = getattr(mod, name)
            if isinstance(obj, type) and dataclasses.is_dataclass(obj) and obj.__module__ == mod.__name__:
                out[name] = obj
    return out


@lru_cache(maxsize=None)
def _hints(cls: type) -> dict[str, Any]:
    hints = typing.get_type_hints(cls)
    return {f.name: hints[f.name] for f in dataclasses.fields(cls)}


def _computed(cls: type) -> tuple[str, ...]:
    return getattr(cls, "_computed", ())


# ---------------------------------------------------------------- encode


def to_json(value: Any) -> Any:
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return str(value)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        cls = type(value)
        out = {"type": cls.__name__}
        for name in _hints(cls):
            out[name] = to_json(getattr(value, name))
        for name in _computed(cls):
            out[name] = to_json(getattr(value, name))
        return out
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(to_json(v) for v in value)
    if isinstance(value, (tuple, list)):
        return [to_json(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def canonical_serialize(value: Any) -> bytes:
    doc = to_json(value)
    if isinstance(doc, dict):
        doc = {SCHEMA_KEY: SCHEMA_VERSION, **doc}
    return (json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n").encode()


def content_ref(value: Any) -> str:
    return "sha256:" + hashlib.sha256(canonical_serialize(value)).hexdigest()


# ---------------------------------------------------------------- decode


def _fail(path: str, msg: str):
    raise SchemaError(f"{path or '<root>'}: {msg}")


def from_json(data: Any, hint: Any, path: str = "") -> Any:
    origin = get_origin(hint)
    if hint is Any or hint is object:
        if not isinstance(data, dict) or "type" not in data:
            _fail(path, "expected a tagged object")
        cls = registry().get(data["type"])
        if cls is None:
            _fail(path, f"unknown type {data['type']!r}")
        return from_json(data, cls, path)
    if origin in (Union, types.UnionType):
        args = get_args(hint)
        if data is None and type(None) in args:
            return None
        rest = [a for a in args if a is not type(None)]
        if len(rest) == 1:
            return from_json(data, rest[0], path)
        errors = []
        for a in rest:
            try:
                return from_json(data, a, path)
            except SchemaError as e:
                errors.append(str(e))
        _fail(path, "; ".join(errors))
    if origin is Literal:
        if data not in get_args(hint):
            _fail(path, f"expected one of {get_args(hint)}, got {data!r}")
        return data
    if hint is bool:
        if not isinstance(data, bool):
            _fail(path, "expected true/false")
        return data
    if hint is int:
        if not isinstance(data, str) or not data.lstrip("-").isdigit() or data != str(int(data)):
            _fail(path, f"expected a decimal integer string, got {data!r}")
        return int(data)
    if hint is str:
        if not isinstance(data, str):
            _fail(path, "expected a string")
        return data
    if origin is tuple:
        args = get_args(hint)
        if not isinstance(data, list):
            _fail(path, "expected a list")
        if len(args) == 2 and args[1] is Ellipsis:
            return tuple(from_json(x, args[0], f"{path}[{i}]") for i, x in enumerate(data))
        if len(args) != len(data):
            _fail(path, f"expected {len(args)} entries")
        return tuple(from_json(x, a, f"{path}[{i}]") for i, (x, a) in enumerate(zip(data, args)))
    if origin is frozenset:
        if not isinstance(data, list):
            _fail(path, "expected a list")
        return frozenset(from_json(x, get_args(hint)[0], f"{path}[{i}]") for i, x in enumerate(data))
    if origin is dict:
        k, v = get_args(hint)
        if not isinstance(data, dict):
            _fail(path, "expected an object")
        return {from_json(key, k, path): from_json(val, v, f"{path}.{key}") for key, val in data.items()}
    if isinstance(hint, type) and dataclasses.is_dataclass(hint):
        if not isinstance(data, dict):
            _fail(path, f"expected a {hint.__name__} object")
        if data.get("type", hint.__name__) != hint.__name__:
            _fail(path, f"expected type {hint.__name__}, got {data.get('type')!r}")
        hints = _hints(hint)
        allowed = set(hints) | set(_computed(hint)) | {"type", SCHEMA_KEY}
        extra = set(data) - allowed
        if extra:
            _fail(path, f"unknown fields {sorted(extra)}")
        kwargs = {}
        for f in dataclasses.fields(hint):
            if f.name in data:
                kwargs[f.name] = from_json(data[f.name], hints[f.name], f"{path}.{f.name}")
            elif f.default is dataclasses.MISSING and f.default_factory is dataclasses.MISSING:
                _fail(path, f"missing field {f.name!r}")
        try:
            return hint(**kwargs)
        except SchemaError:
            raise
        except (TypeError, ValueError) as e:
            # value-level rejections from constructors surface as their own errors
            if getattr(e, "report", None) is not None or type(e).__module__.endswith("errors"):
                raise
            _fail(path, str(e))
    _fail(path, f"unsupported annotation {hint!r}")


def parse(raw: bytes | str, hint: Any = object) -> Any:
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as e:
        raise SchemaError(f"not JSON: {e}") from None
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    version = doc.get(SCHEMA_KEY)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported {SCHEMA_KEY} {version!r}")
    return from_json(doc, hint)
