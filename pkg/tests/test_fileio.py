import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradiv.constructions import Presentation, building_block, catalog, from_presentation, pauli_grading
from gradiv.abgroups import AbelianGroup
from gradiv.errors import FormatError
from gradiv.fileio import dump_algebra, dump_map, dump_presentation, load_algebra, load_map, load_presentation
from gradiv.galgebra import commutation_data, validate
from gradiv.isomaps import builtin_equivalences, verify_graded_map
from gradiv.labels import BLOCKS
from gradiv.scalars import Scalar


@pytest.mark.parametrize("name", BLOCKS)
def test_algebra_round_trip_is_bit_identical(name):
    text = dump_algebra(building_block(name))
    R = load_algebra(text)
    assert validate(R)
    assert dump_algebra(R) == text


def test_pauli_round_trip_keeps_frame():
    P = pauli_grading((3,))
    R = load_algebra(dump_algebra(P))
    assert R.conductor == 24
    assert commutation_data(R).sigma == commutation_data(P).sigma


def test_canonical_form():
    obj = json.loads(dump_algebra(catalog("type=ii k=1")))
    assert obj["format"] == "galg/1" and obj["conductor"] == 8
    keys = [(m["i"], m["j"]) for m in obj["mul"]]
    assert keys == sorted(keys)
    for m in obj["mul"]:
        assert [t["k"] for t in m["terms"]] == sorted(t["k"] for t in m["terms"])
        for t in m["terms"]:
            assert len(t["c"]) == 4
            assert all("/" in x for x in t["c"])


def test_presentation_round_trip():
    P = Presentation(AbelianGroup((4, 2)), [(1, 0), (0, 1)], [4, 2], [-1, -1], {(0, 1): -1}, "M2_8")
    text = dump_presentation(P)
    Q = load_presentation(text)
    assert dump_presentation(Q) == text
    assert dump_algebra(from_presentation(Q)) == dump_algebra(from_presentation(P))


def test_presentation_minimal_literal():
    text = '{"group":[2],"degrees":[[1]],"powers":[2],"power_scalars":["-1/1"],"comm":[]}'
    R = from_presentation(load_presentation(text))
    assert R.dim == 2 and validate(R)


@pytest.mark.parametrize("eq", builtin_equivalences(), ids=lambda e: e.name)
def test_map_round_trip(eq):
    text = dump_map(eq.map, eq.target)
    f = load_map(text, eq.source, eq.target)
    assert verify_graded_map(eq.source, eq.target, f)
    assert dump_map(f, eq.target) == text


GOOD = dump_algebra(building_block("C2"))


def _broken(mutate):
    obj = json.loads(GOOD)
    mutate(obj)
    return json.dumps(obj)


@pytest.mark.parametrize("mutate,field", [
    (lambda o: o.update(format="galg/2"), "format"),
    (lambda o: o.update(group=[2, "x"]), "group"),
    (lambda o: o["degrees"].__setitem__(1, [5]), "degrees[1]"),
    (lambda o: o["unit"].pop(), "unit"),
    (lambda o: o["unit"].__setitem__(0, ["1/0", "0/1", "0/1", "0/1"]), "unit[0]"),
    (lambda o: o["unit"].__setitem__(0, ["1/1"]), "unit[0]"),
    (lambda o: o["mul"][0].update(i=7), "mul[0]"),
    (lambda o: o["mul"][0]["terms"][0].update(k=-1), "mul[0]"),
])
def test_format_errors_name_the_field(mutate, field):
    with pytest.raises(FormatError) as info:
        load_algebra(_broken(mutate))
    assert info.value.field == field


def test_not_json():
    with pytest.raises(FormatError):
        load_algebra("{not json")


def test_map_wrong_shape():
    eq = builtin_equivalences()[0]
    obj = json.loads(dump_map(eq.map, eq.target))
    obj["images"] = obj["images"][:-1]
    with pytest.raises(FormatError) as info:
        load_map(json.dumps(obj), eq.source, eq.target)
    assert info.value.field == "images"


small = st.fractions(min_value=-9, max_value=9, max_denominator=12)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=4, max_size=4))
def test_scalar_text_round_trip(coeffs):
    s = Scalar(coeffs)
    P = Presentation(AbelianGroup((1,)), [(0,)], [1], [s if s else Scalar(1)])
    Q = load_presentation(dump_presentation(P))
    assert Q.power_scalars[0] == (s if s else 1)
