import itertools
import random

import pytest

from delaygames import (
    FRESH,
    InputError,
    build_class_table,
    parity_scheme,
    powerset_step,
    product_with_monitor,
    remark_check,
    summary_of_word,
)

from conftest import make_parity


def copy_product(copy_aut):
    scheme = parity_scheme(copy_aut)
    return product_with_monitor(copy_aut, scheme.monitor)


def test_copy_summaries_frozen(copy_aut):
    prod = copy_product(copy_aut)
    r0 = summary_of_word(prod, ["0"])
    # state order is (s, r)
    assert set(r0[0]) == {("s", 0), ("r", 0)}
    assert set(r0[1]) == {("r", 1)}
    r00 = summary_of_word(prod, ["0", "0"])
    assert set(r00[0]) == {("s", 0), ("r", 0), ("r", 1)}
    assert set(r00[1]) == {("r", 1)}
    # the two letters act the same in this automaton
    assert summary_of_word(prod, ["1"]) == r0
    assert summary_of_word(prod, ["1", "1"]) == r00


def test_powerset_step_matches_summary(copy_aut):
    prod = copy_product(copy_aut)
    pairs = {("s", FRESH)}
    pairs = powerset_step(prod, pairs, "0")
    assert set(pairs) == {("s", 0), ("r", 0)}
    pairs = powerset_step(prod, pairs, "0")
    assert set(pairs) == {("s", 0), ("r", 0), ("r", 1)}


def test_empty_word_rejected(copy_aut):
    prod = copy_product(copy_aut)
    with pytest.raises(InputError):
        summary_of_word(prod, [])
    with pytest.raises(InputError):
        remark_check(prod, ())


def test_copy_class_table_frozen(copy_aut):
    table = build_class_table(copy_product(copy_aut))
    assert table.index == 2
    assert table.index_bound == 256
    assert table.d_min == 3
    assert table.d_theory == 4096
    assert table.infinite_ids == (1,)
    assert table.classes[0].representative == ("0",)
    assert table.classes[1].representative == ("0", "0")
    assert not table.classes[0].infinite
    assert table.classes[1].infinite
    assert table.roots == {"0": 0, "1": 0}
    assert table.class_of_word("0110") == 1


def test_predict_class_table_frozen(predict_aut):
    table = build_class_table(copy_product(predict_aut))
    assert table.index == 14
    assert table.d_min == 15
    assert len(table.infinite_ids) == 4
    assert table.index <= table.index_bound


def test_class_successors_consistent(copy_aut, rng):
    table = build_class_table(copy_product(copy_aut))
    for _ in range(50):
        word = [rng.choice(copy_aut.input_symbols) for _ in range(rng.randint(1, 6))]
        cid = table.class_of_word(word)
        prod = copy_product(copy_aut)
        assert table.classes[cid].key == summary_of_word(prod, word)


def test_words_at_d_min_are_infinite(rng):
    # pumping: every word of length >= d_min lands in an infinite class
    for trial in range(12):
        aut = make_parity(rng)
        scheme = parity_scheme(aut)
        prod = product_with_monitor(aut, scheme.monitor)
        table = build_class_table(prod)
        assert table.index <= table.index_bound, trial
        if table.d_min > 8:
            continue
        for _ in range(20):
            word = [rng.choice(aut.input_symbols) for _ in range(table.d_min)]
            assert table.classes[table.class_of_word(word)].infinite, (trial, word)


def test_remark_check_random(rng):
    for trial in range(10):
        aut = make_parity(rng)
        scheme = parity_scheme(aut)
        prod = product_with_monitor(aut, scheme.monitor)
        for n in range(1, 5):
            for word in itertools.product(aut.input_symbols, repeat=n):
                assert remark_check(prod, word), (trial, word)
