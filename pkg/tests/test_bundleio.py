import json
import random

import pytest

from delaygames import FormatError, InputError, decide, prepare, synthesize_block
from delaygames.bundleio import bundle_to_json, json_to_bundle, load_bundle, save_bundle
from delaygames.gamesolve import extract_gs_transducer
from delaygames.monitors import FRESH
from delaygames.strategies import BlockRunner, materialize_delay_transducer


def test_block_bundle_roundtrip(copy_aut, tmp_path):
    decision = decide(prepare(copy_aut))
    bundle = synthesize_block(decision)
    path = tmp_path / "copy.bundle.json"
    save_bundle(bundle, copy_aut, path)
    loaded, automaton = load_bundle(path)
    assert automaton == copy_aut
    assert loaded.block_length == bundle.block_length
    assert loaded.state_count == bundle.state_count
    assert loaded.initial == bundle.initial
    assert loaded.delta == bundle.delta
    assert loaded.lam == bundle.lam
    # same behaviour on a few blocks
    r1, r2 = BlockRunner(bundle), BlockRunner(loaded)
    for block in [("1", "0", "1"), ("0", "0", "0"), ("1", "1", "0")]:
        assert r1.feed(block) == r2.feed(block)


def test_reserialization_is_byte_identical(copy_aut, tmp_path):
    decision = decide(prepare(copy_aut))
    bundle = synthesize_block(decision)
    text = bundle_to_json(bundle, copy_aut)
    loaded, automaton = json_to_bundle(text)
    assert bundle_to_json(loaded, automaton) == text

    delay = materialize_delay_transducer(bundle)
    text = bundle_to_json(delay, copy_aut)
    loaded, automaton = json_to_bundle(text)
    assert bundle_to_json(loaded, automaton) == text

    gs = extract_gs_transducer(decision.reduced, decision.result)
    text = bundle_to_json(gs, copy_aut)
    loaded, automaton = json_to_bundle(text)
    assert bundle_to_json(loaded, automaton) == text


def test_delay_transducer_roundtrip(copy_aut, rng):
    decision = decide(prepare(copy_aut))
    delay = materialize_delay_transducer(synthesize_block(decision))
    loaded, _ = json_to_bundle(bundle_to_json(delay, copy_aut))
    assert loaded.lookahead == delay.lookahead
    assert loaded.state_count == delay.state_count
    z1 = delay.initial
    z2 = loaded.initial
    for _ in range(60):
        a = rng.choice(("0", "1"))
        z1, o1 = delay.advance(z1, a)
        z2, o2 = loaded.advance(z2, a)
        assert o1 == o2
    assert z1 == z2


def test_gs_transducer_roundtrip(copy_aut):
    decision = decide(prepare(copy_aut))
    gs = extract_gs_transducer(decision.reduced, decision.result)
    loaded, _ = json_to_bundle(bundle_to_json(gs, copy_aut))
    assert loaded.state_count == gs.state_count
    assert loaded.delta == gs.delta
    assert loaded.lam == gs.lam
    assert tuple(loaded.input_symbols) == tuple(gs.input_symbols)


def test_fresh_memory_is_null_in_json(copy_aut):
    decision = decide(prepare(copy_aut))
    gs = extract_gs_transducer(decision.reduced, decision.result)
    doc = json.loads(bundle_to_json(gs, copy_aut))
    picks = [p for p in doc["transducer"]["lam"] if p is not None]
    assert ["s", None] in picks  # FRESH marker travels as null
    loaded, _ = json_to_bundle(bundle_to_json(gs, copy_aut))
    assert any(p is not None and p[1] is FRESH for p in loaded.lam)


def test_bad_documents_rejected(copy_aut):
    with pytest.raises(FormatError):
        json_to_bundle("not json at all {")
    with pytest.raises(FormatError):
        json_to_bundle(json.dumps({"kind": "mystery"}))
    decision = decide(prepare(copy_aut))
    bundle = synthesize_block(decision)
    doc = json.loads(bundle_to_json(bundle, copy_aut))
    doc["transducer"]["lam"] = doc["transducer"]["lam"][:-1]
    with pytest.raises(FormatError):
        json_to_bundle(json.dumps(doc))
    doc = json.loads(bundle_to_json(bundle, copy_aut))
    doc["classTable"]["summaries"][1]["id"] = 7
    with pytest.raises(FormatError):
        json_to_bundle(json.dumps(doc))


def test_wrong_automaton_refused(copy_aut, predict_aut):
    decision = decide(prepare(copy_aut))
    bundle = synthesize_block(decision)
    with pytest.raises(InputError):
        bundle_to_json(bundle, predict_aut)
    gs = extract_gs_transducer(decision.reduced, decision.result)
    with pytest.raises(InputError):
        bundle_to_json(gs, predict_aut)
    with pytest.raises(InputError):
        bundle_to_json(object(), copy_aut)
