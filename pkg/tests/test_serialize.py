import importlib.util
import json
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from torocob.charfun import CharFunction
from torocob.corners import build_surface_with_corners
from torocob.families import make_orbifold
from torocob.lattice import AbelianGroup
from torocob.schema import build_schema, field_reference
from torocob.serialize import SchemaError, canonical_serialize, content_ref, parse, registry, to_json

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
CORPUS_FILES = sorted(CORPUS.rglob("*.json"))


def load_builder():
    spec = importlib.util.spec_from_file_location("build_corpus", ROOT / "scripts" / "build_corpus.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_corpus_matches_generator():
    rendered = load_builder().render()
    on_disk = {str(p.relative_to(CORPUS)): p.read_bytes() for p in CORPUS_FILES}
    assert set(rendered) == set(on_disk)
    for name, data in rendered.items():
        assert data == on_disk[name], name


@pytest.mark.parametrize("path", CORPUS_FILES, ids=lambda p: str(p.relative_to(CORPUS)))
def test_corpus_round_trip(path):
    raw = path.read_bytes()
    assert canonical_serialize(parse(raw)) == raw


@pytest.mark.parametrize("path", CORPUS_FILES, ids=lambda p: str(p.relative_to(CORPUS)))
def test_corpus_validates_against_schema(path):
    jsonschema.validate(json.loads(path.read_bytes()), build_schema())


def test_shipped_schema_is_current():
    schema = build_schema()
    shipped = json.loads((ROOT / "schemas" / "torocob.schema.json").read_text())
    assert shipped == schema
    assert (ROOT / "schemas" / "FORMATS.md").read_text() == field_reference(schema)
    jsonschema.Draft202012Validator.check_schema(schema)


def test_every_registered_type_is_in_schema():
    assert set(build_schema()["$defs"]) == set(registry())


def test_integers_are_strings_and_keys_sorted():
    big = 2**80
    raw = canonical_serialize(AbelianGroup((big, big * 3)))
    assert raw == (
        b'{"invariant_factors":["1208925819614629174706176","3626777458843887524118528"],'
        b'"torocob-schema":"1","type":"AbelianGroup"}\n'
    )
    assert parse(raw) == AbelianGroup((big, big * 3))


def test_rejects_json_numbers():
    doc = json.loads(canonical_serialize(AbelianGroup((2,))))
    doc["invariant_factors"] = [2]
    with pytest.raises(SchemaError):
        parse(json.dumps(doc))


@pytest.mark.parametrize("text", ['"01"', '"+1"', '"1.0"', '" 1"', '"-0"'])
def test_rejects_noncanonical_integer_strings(text):
    raw = '{"torocob-schema":"1","type":"AbelianGroup","invariant_factors":[' + text + "]}"
    with pytest.raises(SchemaError):
        parse(raw)


def test_rejects_unknown_fields_and_types():
    with pytest.raises(SchemaError):
        parse('{"torocob-schema":"1","type":"AbelianGroup","extra":[]}')
    with pytest.raises(SchemaError):
        parse('{"torocob-schema":"1","type":"Nope"}')
    with pytest.raises(SchemaError):
        parse('{"type":"AbelianGroup"}')


def test_constructor_rejections_surface_as_schema_errors():
    with pytest.raises(SchemaError):
        parse('{"torocob-schema":"1","type":"AbelianGroup","invariant_factors":["4","6"]}')


def test_content_ref_is_stable():
    eye = make_orbifold(build_surface_with_corners(0, [2]), CharFunction(2, {"E0": (1, 0), "E1": (0, 1)}))
    ref = content_ref(eye)
    assert ref.startswith("sha256:") and len(ref) == 7 + 64
    assert content_ref(parse(canonical_serialize(eye))) == ref


def test_to_json_rejects_unknown_objects():
    with pytest.raises(TypeError):
        to_json(object())


vec = st.tuples(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30)).filter(any)


@given(st.lists(st.sampled_from([0, 2, 3, 4]), min_size=1, max_size=3), st.integers(0, 3), st.data())
def test_descriptor_round_trip(lengths, genus, data):
    base = build_surface_with_corners(genus, lengths)
    while True:
        vecs = {f: data.draw(vec) for f in base.facets}
        try:
            d = make_orbifold(base, CharFunction(2, vecs))
            break
        except ValueError:
            continue
    raw = canonical_serialize(d)
    back = parse(raw)
    assert back == d
    assert canonical_serialize(back) == raw
