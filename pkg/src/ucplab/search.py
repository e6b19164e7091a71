"""Enumeration and classification of small block-pasted event logics.

A logic is described by its maximal Boolean blocks over atoms 1..n.  The
enumeration produces pastings where distinct blocks overlap in at most one
atom (so no block is redundant and no two atoms are forced equal), one
representative per atom-relabeling class, in a deterministic order.  Each
logic is then pushed through the axiom checkers, the two unique-conditional
properties and, where those hold everywhere, the exact interference scan.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .finite import FiniteLogic, check_os_axioms, check_uc1, check_uc2, conditional_table
from .interference import finite_I3_scan

MAX_SCAN_EVENTS = 64
MAX_UC2_VERTICES = 200


@dataclass(frozen=True)
class SearchConfig:
    max_atoms: int
    max_blocks: int = 2
    block_size_min: int = 3
    block_size_max: int | None = None

    def __post_init__(self):
        if self.max_atoms < 0 or self.max_blocks < 1:
            raise ValueError("max_atoms must be >= 0 and max_blocks positive")
        if self.block_size_min < 2:
            raise ValueError("blocks need at least two atoms")
        top = self.block_size_max
        if top is not None and top < self.block_size_min:
            raise ValueError("block_size_max below block_size_min")


def _canonical_form(blocks, n_atoms):
    """Lexicographically least relabeling of the block hypergraph."""
    best = None
    for perm in itertools.permutations(range(1, n_atoms + 1)):
        relabel = {i + 1: perm[i] for i in range(n_atoms)}
        form = tuple(sorted(tuple(sorted(relabel[a] for a in b)) for b in blocks))
        if best is None or form < best:
            best = form
    return best


def enumerate_logics(config: SearchConfig):
    """All admissible pastings, one per isomorphism class, sorted.

    Admissible: every atom lies in some block, no two blocks share more
    than one atom, no block contains another.  Yields (n_atoms, blocks)
    with blocks in canonical form.
    """
    top = config.block_size_max or config.max_atoms
    seen = set()
    results = []
    for n in range(config.block_size_min, config.max_atoms + 1):
        atoms = range(1, n + 1)
        sizes = range(config.block_size_min, min(top, n) + 1)
        candidates = [tuple(c) for s in sizes for c in itertools.combinations(atoms, s)]
        for count in range(1, config.max_blocks + 1):
            for combo in itertools.combinations(candidates, count):
                covered = set().union(*map(set, combo))
                if covered != set(atoms):
                    continue
                ok = True
                for a, b in itertools.combinations(combo, 2):
                    if len(set(a) & set(b)) > 1:
                        ok = False
                        break
                if not ok:
                    continue
                form = _canonical_form(combo, n)
                if form in seen:
                    continue
                seen.add(form)
                results.append((n, form))
    results.sort()
    return results


def _fmt_fraction(value):
    return str(value) if isinstance(value, Fraction) else value


def classify(blocks, n_atoms=None) -> dict:
    """Run the checker chain on one logic, short-circuiting on failure.

    Stages: state-space axioms, vertex separation (UC1), unique
    conditionals (UC2), exact interference scan.  Oversized logics get a
    skip marker instead of the expensive stages.
    """
    logic = FiniteLogic(blocks, n_atoms)
    record = {
        "blocks": [sorted(b) for b in blocks],
        "n_atoms": logic.n,
        "n_events": len(logic.events),
    }
    os_report = check_os_axioms(logic)
    record["os_pass"] = os_report.passed
    if not os_report.passed:
        record["failure"] = {"stage": os_report.axiom, "witness": os_report.witness}
        return record
    record["n_states"] = len(logic.state_vertices())
    uc1 = check_uc1(logic)
    record["uc1_pass"] = uc1.passed
    if not uc1.passed:
        record["failure"] = {"stage": "UC1", "witness": uc1.witness}
        return record
    if len(logic.events) > MAX_SCAN_EVENTS or record["n_states"] > MAX_UC2_VERTICES:
        record["skipped"] = "size"
        return record
    uc2 = check_uc2(logic)
    record["uc2_pass"] = uc2.passed
    if not uc2.passed:
        bad = [d for d in uc2.details if not (d["exists"] and d["unique"])]
        record["failure"] = {"stage": uc2.axiom, "witness": uc2.witness, "details": bad[:5]}
        return record
    scan = finite_I3_scan(logic, conditional_table(logic))
    record["scan"] = {
        "max_abs_i2": _fmt_fraction(scan["max_abs_i2"]),
        "max_abs_i3": _fmt_fraction(scan["max_abs_i3"]),
        "i2_witness": scan["i2_witness"],
        "i3_witness": scan["i3_witness"],
        "pairs": scan["pairs"],
        "triples": scan["triples"],
    }
    return record


def run_search(config: SearchConfig, out_path=None):
    """Classify every enumerated logic; optionally stream JSONL records.

    Returns (records, summary); the summary counts logics by the deepest
    stage they reached.
    """
    records = []
    summary = {
        "enumerated": 0,
        "os_fail": 0,
        "uc1_fail": 0,
        "uc2_fail": 0,
        "skipped": 0,
        "ucp": 0,
    }
    for n_atoms, blocks in enumerate_logics(config):
        record = classify(blocks, n_atoms)
        records.append(record)
        summary["enumerated"] += 1
        if not record["os_pass"]:
            summary["os_fail"] += 1
        elif not record.get("uc1_pass", False):
            summary["uc1_fail"] += 1
        elif record.get("skipped"):
            summary["skipped"] += 1
        elif not record.get("uc2_pass", False):
            summary["uc2_fail"] += 1
        else:
            summary["ucp"] += 1
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as handle:
            for record in records:
                handle.write(json.dumps(record, sort_keys=True) + "\n")
            handle.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
    return records, summary
