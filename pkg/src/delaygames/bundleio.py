"""JSON persistence for strategies.

One document shape for all three strategy kinds; the automaton travels
inside the bundle as its canonical text form, so a bundle is self-contained
and the whole document serializes byte-identically after a round trip.
"""

from __future__ import annotations

import json
from typing import Any

from .automata import OmegaAutomaton
from .errors import FormatError, InputError
from .gamesolve import GSTransducer
from .monitors import FRESH, parity_scheme, product_with_monitor
from .reduction import ClassTable, SummaryClass, build_class_table
from .strategies import DelayObliviousTransducer, TableBlockTransducer
from .textformat import parse_automaton, serialize_automaton

KINDS = ("block-bundle", "delay-transducer", "gs-transducer")


def _pick_doc(pick):
    if pick is None:
        return None
    q, m = pick
    return [q, None if m is FRESH else m]


def _pick_from_doc(entry):
    if entry is None:
        return None
    q, m = entry
    return (q, FRESH if m is None else m)


def _table_doc(table: ClassTable) -> dict:
    summaries = []
    for c in table.classes:
        summaries.append(
            {
                "id": c.class_id,
                "images": [[[q, m] for (q, m) in row] for row in c.key],
                "infinite": c.infinite,
                "representative": list(c.representative),
                "successors": {a: cid for a, cid in c.successors.items()},
            }
        )
    return {
        "dMin": table.d_min,
        "dTheory": table.d_theory,
        "index": table.index,
        "indexBound": table.index_bound,
        "roots": dict(table.roots),
        "summaries": summaries,
    }


def _table_from_doc(doc: dict, automaton: OmegaAutomaton) -> ClassTable:
    scheme = parity_scheme(automaton)
    product = product_with_monitor(automaton, scheme.monitor)
    classes = []
    key_to_id = {}
    for entry in doc["summaries"]:
        key = tuple(tuple((q, m) for (q, m) in row) for row in entry["images"])
        c = SummaryClass(
            class_id=entry["id"],
            key=key,
            representative=tuple(entry["representative"]),
            successors={a: cid for a, cid in entry["successors"].items()},
            infinite=bool(entry["infinite"]),
        )
        if c.class_id != len(classes):
            raise FormatError("summary ids must be dense and in order")
        classes.append(c)
        key_to_id[key] = c.class_id
    return ClassTable(
        product=product,
        classes=classes,
        key_to_id=key_to_id,
        roots=dict(doc["roots"]),
        index=doc["index"],
        index_bound=doc["indexBound"],
        d_min=doc["dMin"],
        d_theory=doc["dTheory"],
        infinite_ids=tuple(sorted(c.class_id for c in classes if c.infinite)),
    )


def bundle_to_json(transducer: Any, automaton: OmegaAutomaton) -> str:
    if isinstance(transducer, TableBlockTransducer):
        if transducer.table.product.automaton != automaton:
            raise InputError("bundle automaton differs from the strategy's table")
        doc = {
            "kind": "block-bundle",
            "automaton": serialize_automaton(automaton),
            "blockLength": transducer.block_length,
            "lookahead": None,
            "classTable": _table_doc(transducer.table),
            "transducer": {
                "states": transducer.state_count,
                "initial": transducer.initial,
                "delta": [
                    {str(cid): z for cid, z in row.items()} for row in transducer.delta
                ],
                "lam": [_pick_doc(pick) for pick in transducer.lam],
            },
        }
    elif isinstance(transducer, DelayObliviousTransducer):
        doc = {
            "kind": "delay-transducer",
            "automaton": serialize_automaton(automaton),
            "blockLength": None,
            "lookahead": transducer.lookahead,
            "classTable": None,
            "transducer": {
                "states": transducer.state_count,
                "initial": transducer.initial,
                "delta": [dict(row) for row in transducer.delta],
                "lam": list(transducer.lam),
            },
        }
    elif isinstance(transducer, GSTransducer):
        scheme = parity_scheme(automaton)
        table = build_class_table(product_with_monitor(automaton, scheme.monitor))
        if tuple(transducer.input_symbols) != tuple(table.infinite_ids):
            raise InputError("transducer classes do not come from this automaton")
        doc = {
            "kind": "gs-transducer",
            "automaton": serialize_automaton(automaton),
            "blockLength": None,
            "lookahead": None,
            "classTable": _table_doc(table),
            "transducer": {
                "states": transducer.state_count,
                "initial": transducer.initial,
                "delta": [
                    {str(cid): z for cid, z in row.items()} for row in transducer.delta
                ],
                "lam": [_pick_doc(pick) for pick in transducer.lam],
            },
        }
    else:
        raise InputError("cannot serialize strategy of type %r" % type(transducer).__name__)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def json_to_bundle(text: str):
    """Returns (transducer, automaton)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("bundle is not valid JSON: %s" % exc) from None
    if not isinstance(doc, dict) or doc.get("kind") not in KINDS:
        raise FormatError("bundle kind must be one of %s" % (", ".join(KINDS)))
    automaton = parse_automaton(doc["automaton"])
    tr = doc["transducer"]
    states = tr["states"]
    initial = tr["initial"]
    if len(tr["delta"]) != states or len(tr["lam"]) != states:
        raise FormatError("transducer tables do not match the state count")
    kind = doc["kind"]
    if kind == "block-bundle":
        table = _table_from_doc(doc["classTable"], automaton)
        delta = [{int(cid): z for cid, z in row.items()} for row in tr["delta"]]
        lam = [_pick_from_doc(entry) for entry in tr["lam"]]
        out = TableBlockTransducer(
            table=table,
            block_length=doc["blockLength"],
            state_count=states,
            initial=initial,
            delta=delta,
            lam=lam,
        )
    elif kind == "delay-transducer":
        out = DelayObliviousTransducer(
            input_symbols=automaton.input_symbols,
            output_symbols=automaton.output_symbols,
            lookahead=doc["lookahead"],
            state_count=states,
            initial=initial,
            delta=[dict(row) for row in tr["delta"]],
            lam=list(tr["lam"]),
        )
    else:
        table = _table_from_doc(doc["classTable"], automaton)
        lam = [_pick_from_doc(entry) for entry in tr["lam"]]
        picks = sorted(
            {p for p in lam if p is not None}, key=lambda t: (str(t[0]), str(t[1]))
        )
        out = GSTransducer(
            input_symbols=tuple(table.infinite_ids),
            output_symbols=tuple(picks),
            state_count=states,
            initial=initial,
            delta=[{int(cid): z for cid, z in row.items()} for row in tr["delta"]],
            lam=lam,
        )
    return out, automaton


def save_bundle(transducer: Any, automaton: OmegaAutomaton, path) -> None:
    text = bundle_to_json(transducer, automaton)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def load_bundle(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json_to_bundle(fh.read())
