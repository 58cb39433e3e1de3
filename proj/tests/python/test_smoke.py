"""Smoke tests for the Python bindings.

Run with the built extension on the path, e.g.:
    PYTHONPATH=build/bindings:python pytest tests/python
"""

import os

import pytest

import speclab

CORPUS = os.environ.get("SPECLAB_CORPUS_DIR", "corpus")


def minepump():
    return speclab.load_spec(os.path.join(CORPUS, "minepump.spec"))


def test_parse_render_roundtrip():
    f = speclab.parse("G(h -> X p)")
    assert speclab.render(f) == "G (h -> X p)"
    assert speclab.parse(speclab.render(f)) == f
    assert f.size == 5


def test_parse_rejects_unknown_props_under_fixed_vocab():
    with pytest.raises(speclab.ParseError):
        speclab.parse("h && q", vocab=["h", "m"])


def test_eval_and_sat():
    f = speclab.parse("F(h && m)")
    assert speclab.evaluate(f, [["h"]], [["h", "m"]])
    result = speclab.is_sat(f)
    assert result["sat"]
    assert result["witness"] is not None
    assert not speclab.is_sat(speclab.parse("p && !p"))["sat"]


def test_minepump_bc_checks():
    spec = minepump()
    assert spec.vocab == ["h", "m", "p"]
    verdict = speclab.check_bc(spec, spec.fixture("phi1"))
    assert verdict["is_bc"]
    neg_goals = speclab.parse("!(G(h -> X p) && G(m -> X (! p)))")
    verdict = speclab.check_bc(spec, neg_goals)
    assert not verdict["is_bc"]
    assert verdict["failure"] == "triviality"


def test_witness_and_contrasty():
    spec = minepump()
    phi1, phi2, phi3 = (spec.fixture(n) for n in ("phi1", "phi2", "phi3"))
    assert speclab.is_witness(spec, phi1, phi3)
    assert not speclab.is_witness(spec, phi3, phi1)
    assert speclab.are_contrastive(spec, phi2, phi3)
    assert not speclab.are_contrastive(spec, phi1, phi2)


def test_ppfc_running_example():
    spec = minepump()
    kept = speclab.ppfc(spec, [spec.fixture(n) for n in ("phi1", "phi2", "phi3")])
    assert [e["formula"] for e in kept] == ["F (h && m)"]


def test_likelihood_counts():
    spec = minepump()
    value = speclab.likelihood(spec, spec.fixture("phi2"), k=4)
    assert (value["num"], value["den"]) == ("800", "3200")
    count = speclab.count_prefixes([speclab.parse("G p")], ["p"], 3)
    assert count["count"] == "1"


def test_jfc_terminates_on_minepump():
    spec = minepump()
    result = speclab.jfc(spec, searcher="pattern")
    assert result["termination"] == "termination-condition"
    assert len(result["bcs"]) == 1
    assert result["certified"]


def test_genetic_search_is_seed_deterministic():
    spec = minepump()
    a = speclab.genetic_search(spec, seed=5, max_candidates=2)
    b = speclab.genetic_search(spec, seed=5, max_candidates=2)
    assert [e["formula"] for e in a] == [e["formula"] for e in b]
