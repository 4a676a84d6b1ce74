"""Generation, sweep orchestration, reports, and determinism."""

import json

import pytest

from starring.classify import classify
from starring.geninv import InverseBundle, verify_group, verify_penrose
from starring.harness import (
    EXHAUSTIVE_BUDGET,
    BudgetExceededError,
    GeneratorSpec,
    InvalidSpecError,
    Mode,
    PAIR_BUDGET,
    REPORT_SCHEMA,
    UnknownEntryError,
    generate,
    resolve_entries,
    sweep,
)
from starring.starfield import GAUSSIAN, RATIONAL, prime_field, quad_ext_field

F2 = prime_field(2)
F3 = prime_field(3)
F4 = quad_ext_field(2)
F5 = prime_field(5)


# -- generation -------------------------------------------------------------------

def test_exhaustive_counts_and_distinctness():
    for field, expected in ((F2, 16), (F3, 81), (F4, 256)):
        elems = list(generate(GeneratorSpec(Mode.EXHAUSTIVE, field, 2)))
        assert len(elems) == expected
        assert len(set(elems)) == expected


def test_exhaustive_is_lexicographic():
    elems = list(generate(GeneratorSpec(Mode.EXHAUSTIVE, F2, 2)))
    assert elems[0].to_tokens() == [["0", "0"], ["0", "0"]]
    assert elems[1].to_tokens() == [["0", "0"], ["0", "1"]]
    assert elems[-1].to_tokens() == [["1", "1"], ["1", "1"]]


def test_exhaustive_budget():
    with pytest.raises(BudgetExceededError):
        GeneratorSpec(Mode.EXHAUSTIVE, F5, 3).validate()  # 5^9 > 10^6
    assert 5 ** 9 > EXHAUSTIVE_BUDGET


def test_invalid_specs():
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(Mode.EXHAUSTIVE, RATIONAL, 2).validate()
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(Mode.RANDOM, RATIONAL, 2, sample_count=5).validate()
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(Mode.RANDOM, RATIONAL, 2, sample_count=0, seed=1).validate()
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(Mode.RANDOM, RATIONAL, 9, sample_count=5, seed=1).validate()
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(Mode.CONSTRUCTED_PI, RATIONAL, 1, sample_count=5, seed=1).validate()


@pytest.mark.parametrize("field", [F2, F3, F4])
def test_constructed_ep_unsatisfiable_on_norm_one_fields(field):
    # every invertible scalar has norm 1 there, so no non-unitary core exists
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(Mode.CONSTRUCTED_EP, field, 2,
                      sample_count=5, seed=1).validate()
    GeneratorSpec(Mode.CONSTRUCTED_EP, F5, 2, sample_count=5, seed=1).validate()


def test_stream_determinism():
    for mode, kwargs in [
        (Mode.RANDOM, dict(sample_count=40, seed=7)),
        (Mode.CONSTRUCTED_SEP, dict(sample_count=40, seed=7)),
        (Mode.CONSTRUCTED_EP, dict(sample_count=40, seed=7)),
        (Mode.CONSTRUCTED_PI, dict(sample_count=40, seed=7)),
    ]:
        spec = GeneratorSpec(mode, GAUSSIAN, 3, **kwargs)
        assert list(generate(spec)) == list(generate(spec))
    different = GeneratorSpec(Mode.RANDOM, GAUSSIAN, 3, sample_count=40, seed=8)
    base = GeneratorSpec(Mode.RANDOM, GAUSSIAN, 3, sample_count=40, seed=7)
    assert list(generate(different)) != list(generate(base))


def test_random_entry_bounds():
    for m in generate(GeneratorSpec(Mode.RANDOM, RATIONAL, 2,
                                    sample_count=60, seed=3)):
        for row in m.rows:
            for e in row:
                assert abs(e.value.numerator) <= 3
                assert 1 <= e.value.denominator <= 3


@pytest.mark.parametrize("field", [GAUSSIAN, RATIONAL, F5])
def test_constructed_streams_classify_as_promised(field):
    n = 3
    sep_spec = GeneratorSpec(Mode.CONSTRUCTED_SEP, field, n, sample_count=20, seed=5)
    for m in generate(sep_spec):
        assert classify(InverseBundle.compute(m)).is_sep

    ep_spec = GeneratorSpec(Mode.CONSTRUCTED_EP, field, n, sample_count=20, seed=5)
    for m in generate(ep_spec):
        c = classify(InverseBundle.compute(m))
        assert c.is_ep and not c.is_pi and not c.is_sep

    pi_spec = GeneratorSpec(Mode.CONSTRUCTED_PI, field, n, sample_count=20, seed=5)
    for m in generate(pi_spec):
        c = classify(InverseBundle.compute(m))
        assert c.is_pi and not c.group_invertible and not m.is_zero()


# -- sweeping ------------------------------------------------------------------------

def test_entry_resolution():
    assert [e.id for e in resolve_entries("all")][:3] == ["T2.1", "T2.2", "T2.3"]
    assert [e.id for e in resolve_entries(["T2.5", "X3"])] == ["T2.5", "X3"]
    with pytest.raises(UnknownEntryError):
        resolve_entries(["T9.9"])


FROZEN_MEMBERSHIP = {
    # produced by the exhaustive oracle, cross-checked by the brute-force
    # equation search in test_geninv; regression values
    "F2": dict(generated=16, mpInvertible=11, groupInvertible=13,
               bothInvertible=9, sep=5),
    "F3": dict(generated=81, mpInvertible=81, groupInvertible=73,
               bothInvertible=73, sep=17),
    "F4": dict(generated=256, mpInvertible=193, groupInvertible=241,
               bothInvertible=187, sep=25),
}


@pytest.mark.parametrize("field,name", [(F2, "F2"), (F3, "F3"), (F4, "F4")])
def test_exhaustive_sweep_membership_and_soundness(field, name):
    report = sweep(GeneratorSpec(Mode.EXHAUSTIVE, field, 2), "all")
    assert report.totals == FROZEN_MEMBERSHIP[name]
    assert report.counterexample_count() == 0
    both = report.totals["bothInvertible"]
    for tid, tallies in report.per_theorem.items():
        expected = report.totals["mpInvertible"] if tid == "X3" else both
        assert tallies["checked"] == expected
        assert tallies["consistent"] == expected
        assert tallies["counterexamples"] == []
    assert report.informational["T3.4e"]["checked"] == both
    assert report.lemmas["L3.1"]["violations"] == []
    assert report.lemmas["L2.8"]["violations"] == []


def test_pair_budget_respected():
    report = sweep(GeneratorSpec(Mode.EXHAUSTIVE, F4, 2), ["T2.1"])
    assert report.lemmas["L3.1"]["checked"] == PAIR_BUDGET  # 256^2 > budget
    small = sweep(GeneratorSpec(Mode.EXHAUSTIVE, F2, 2), ["T2.1"])
    assert small.lemmas["L3.1"]["checked"] == 16 * 16


def test_sweep_entry_subset():
    report = sweep(GeneratorSpec(Mode.EXHAUSTIVE, F2, 2), ["T2.3", "X3"])
    assert set(report.per_theorem) == {"T2.3", "X3"}
    assert report.informational == {}
    assert report.entry_ids == ["T2.3", "X3"]


def test_sweep_constructed_sep_counts():
    spec = GeneratorSpec(Mode.CONSTRUCTED_SEP, GAUSSIAN, 2,
                         sample_count=30, seed=21)
    report = sweep(spec, "all")
    assert report.totals["sep"] == report.totals["generated"] == 30
    assert report.counterexample_count() == 0
    for tallies in report.per_theorem.values():
        assert tallies["consistent"] == tallies["checked"]


def test_report_shape_and_determinism():
    spec = GeneratorSpec(Mode.RANDOM, RATIONAL, 2, sample_count=100, seed=42)
    first = sweep(spec, ["T2.5"])
    second = sweep(spec, ["T2.5"])

    doc = first.to_dict()
    assert doc["schema"] == REPORT_SCHEMA
    assert doc["spec"]["ring"] == "q" and doc["spec"]["seed"] == 42
    assert doc["spec"]["entries"] == ["T2.5"]
    assert set(doc) == {"schema", "spec", "totals", "perTheorem",
                        "informational", "lemmas", "wallTime"}
    assert first.totals["generated"] == 100

    a = json.loads(first.to_json())
    b = json.loads(second.to_json())
    assert a.pop("wallTime") != "" and b.pop("wallTime") != ""
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_report_json_embeds_scalar_grammar():
    spec = GeneratorSpec(Mode.EXHAUSTIVE, F2, 2)
    doc = sweep(spec, ["T2.1"]).to_dict()
    assert doc["totals"]["generated"] == 16
    assert doc["perTheorem"]["T2.1"]["counterexamples"] == []
