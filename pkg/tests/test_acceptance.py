"""Acceptance criteria 1-11, one test each.

Every test records a pass/fail line through ``record``; the lines are printed
together in the terminal summary (see ``conftest.py``).
"""

import random
import re
import subprocess
import sys
import time

from uum import (
    AttributeSet,
    ObjectSet,
    concept_count_bound,
    discovery_context,
    enumerate_concepts,
    extent,
    intent,
    is_seed,
    maximal_seeds,
    negate,
    new_context,
    parse_csv,
    parse_cxt,
    phi,
    psi,
    serialize_csv,
    serialize_cxt,
    verify_propositions,
)
from uum.evaluation import GenSpec, brute_force_concepts, gen_random_context, gen_random_extension, seed_recall

from conftest import A, B, D, G, record

CORPUS_SIZE = 240
CORPUS_DENSITIES = (0.1, 0.3, 0.5, 0.7, 0.9)


def _corpus():
    rng = random.Random(7)
    out = []
    for k in range(CORPUS_SIZE):
        spec = GenSpec(rng.randint(1, 10), rng.randint(1, 10), CORPUS_DENSITIES[k % 5], rng.getrandbits(32))
        out.append(gen_random_context(spec))
    return out


CORPUS = _corpus()


def _best_time(fn, repeat=200):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def _named(ctx, concept):
    return (frozenset(ctx.object_names_of(concept.extent)), frozenset(ctx.attribute_names_of(concept.intent)))


def test_criterion_01_negation(table1, table4):
    result = negate(table1)
    elapsed = _best_time(lambda: negate(table1))
    ok = result == table4 and elapsed < 1e-3
    record(1, ok, f"negated fixture matches: {result == table4}; {elapsed * 1e6:.1f} us")
    assert ok


def test_criterion_02_anticoncepts(table4):
    lattice = enumerate_concepts(table4)
    elapsed = _best_time(lambda: enumerate_concepts(table4))
    got = {_named(table4, c) for c in lattice}
    wanted = {
        (frozenset("BC"), frozenset({A})),
        (frozenset("A"), frozenset({G})),
        (frozenset("B"), frozenset({A, B})),
    }
    oracle = {_named(table4, c) for c in brute_force_concepts(table4)}
    ok = wanted <= got and len(lattice) == 5 and got == oracle and elapsed < 1e-3
    record(2, ok, f"{len(lattice)} anti-concepts (oracle {len(oracle)}); {elapsed * 1e6:.1f} us")
    assert ok


def test_criterion_03_birkhoff(table1):
    i_ac = table1.attribute_names_of(intent(table1, table1.objects("A", "C")))
    e_ab = table1.object_names_of(extent(table1, table1.attributes(A, B)))
    ok = i_ac == [B] and e_ab == ["A"]
    record(3, ok, f"I(A,C)={i_ac}, E(α,β)={e_ab}")
    assert ok


def test_criterion_04_revelation(ext12, table2):
    values = {
        "phi(B,E)": table2.attribute_names_of(phi(ext12, table2.objects("B", "E"))),
        "phi(A)": table2.attribute_names_of(phi(ext12, table2.objects("A"))),
        "psi(γ,δ)": table2.object_names_of(psi(ext12, table2.attributes(G, D))),
        "psi(β,γ)": table2.object_names_of(psi(ext12, table2.attributes(B, G))),
    }
    ok = values == {"phi(B,E)": [], "phi(A)": [D], "psi(γ,δ)": [], "psi(β,γ)": ["E"]}
    record(4, ok, ", ".join(f"{k}={v}" for k, v in values.items()))
    assert ok


def test_criterion_05_discovery_and_seeds(ext12, table1):
    star = discovery_context(ext12)
    table3 = new_context("ABCDE", [A, B, G, D], [("A", D), ("B", A), ("D", A), ("D", D), ("E", B), ("E", G)])
    concepts = {_named(star, c) for c in enumerate_concepts(star)}
    wanted = {
        (frozenset("BD"), frozenset({A})),
        (frozenset("E"), frozenset({B, G})),
        (frozenset("AD"), frozenset({D})),
        (frozenset("D"), frozenset({A, D})),
    }
    seeds = [s.names(table1) for s in maximal_seeds(ext12)]
    recall = seed_recall(ext12)
    ok = (
        star == table3
        and wanted <= concepts
        and seeds == [(["B"], [A])]
        and recall.recall == 0.25
        and recall.discovery_concept_count == 4
    )
    record(5, ok, f"discovery relation matches: {star == table3}; seeds {seeds}; recall {recall.recall} of {recall.discovery_concept_count}")
    assert ok


def test_criterion_06_proposition_suite():
    rng = random.Random(6)
    start = time.perf_counter()
    failures = []
    trials = 1000
    for k in range(trials):
        density = (0.2, 0.5, 0.8)[k % 3]
        base = gen_random_context(GenSpec(rng.randint(0, 8), rng.randint(0, 8), density, rng.getrandbits(32)))
        ext = gen_random_extension(base, rng.randint(0, 3), rng.randint(0, 3), density, rng.getrandbits(32))
        report = verify_propositions(ext, sample_budget=256, rng_seed=k)
        if not report.passed:
            failures.append((k, report.failures()))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    record(6, ok, f"{trials} extensions, {len(failures)} failing; {elapsed:.1f} s")
    assert ok, failures[:5]


def test_criterion_07_oracle_equivalence():
    start = time.perf_counter()
    mismatches = []
    over_bound = []
    for k, ctx in enumerate(CORPUS):
        lattice = enumerate_concepts(ctx)
        if set(lattice) != set(brute_force_concepts(ctx)):
            mismatches.append(k)
        if len(lattice) > concept_count_bound(ctx.size):
            over_bound.append((ctx.n_objects, ctx.n_attributes, ctx.size, len(lattice)))
    elapsed = time.perf_counter() - start
    ok = not mismatches and not over_bound and elapsed < 60
    sizes = sorted({r for _, _, r, _ in over_bound})
    record(
        7,
        ok,
        f"{len(CORPUS)} contexts: {len(mismatches)} oracle mismatches, "
        f"{len(over_bound)} above the count bound (relation sizes {sizes}); {elapsed:.1f} s",
    )
    assert not mismatches
    assert not over_bound, f"concept count exceeds the bound on (|G|, |M|, |R|, count) = {over_bound}"
    assert elapsed < 60


def _random_preconcept(ctx, rng):
    crosses = [(g, m) for g in range(ctx.n_objects) for m in range(ctx.n_attributes) if ctx.rows[g] >> m & 1]
    g, m = rng.choice(crosses)
    ys = (1 << m) | (ctx.rows[g] & rng.getrandbits(ctx.n_attributes))
    xs = (1 << g) | (ctx.extent_mask(ys) & rng.getrandbits(ctx.n_objects))
    return xs, ys


def test_criterion_08_no_seed_in_base():
    rng = random.Random(8)
    sampled = failures = skipped = 0
    for ctx in CORPUS:
        if ctx.size == 0:
            skipped += 1
            continue
        ext = gen_random_extension(ctx, 2, 2, 0.5, rng.getrandbits(32))
        for _ in range(100):
            xs, ys = _random_preconcept(ctx, rng)
            objects = ObjectSet(xs, ctx.n_objects)
            attributes = AttributeSet(ys, ctx.n_attributes)
            assert objects and attributes and objects <= extent(ctx, attributes)
            sampled += 1
            failures += is_seed(ext, objects, attributes)
    ok = failures == 0 and sampled >= 100 * (len(CORPUS) - skipped)
    record(8, ok, f"{sampled} preconcepts over {len(CORPUS) - skipped} contexts, {failures} seeds; {skipped} empty relations")
    assert ok


_CXT_GRAMMAR = re.compile(r"B\n\n(\d+)\n(\d+)\n\n((?:[^\n]+\n)*)")


def test_criterion_09_round_trip(table1):
    bad = []
    for k, ctx in enumerate(CORPUS):
        text = serialize_cxt(ctx)
        m = _CXT_GRAMMAR.fullmatch(text)
        lines = m.group(3).splitlines() if m else []
        n, a = ctx.n_objects, ctx.n_attributes
        shape_ok = (
            m is not None
            and int(m.group(1)) == n
            and int(m.group(2)) == a
            and len(lines) == n + a + n
            and all(re.fullmatch(r"[X.]{%d}" % a, row) for row in lines[n + a :])
        )
        if not shape_ok or parse_cxt(text) != ctx or parse_csv(serialize_csv(ctx)) != ctx:
            bad.append(k)
    golden = "B\n\n3\n3\n\nA\nB\nC\nα\nβ\nγ\nXX.\n..X\n.XX\n"
    exact = serialize_cxt(table1) == golden
    ok = not bad and exact
    record(9, ok, f"{len(CORPUS) - len(bad)}/{len(CORPUS)} contexts round-trip; fixture bytes exact: {exact}")
    assert ok


def test_criterion_10_cli_determinism(tmp_path, table1, table2):
    t1, t2 = tmp_path / "t1.cxt", tmp_path / "t2.cxt"
    t1.write_text(serialize_cxt(table1), encoding="utf-8")
    t2.write_text(serialize_cxt(table2), encoding="utf-8")
    commands = [
        ["concepts", str(t1), "--json"],
        ["concepts", str(t1)],
        ["anticoncepts", str(t1)],
        ["negate", str(t1), "--to", "csv"],
        ["candidates", str(t1), "--json"],
        ["reveal", str(t1), str(t2), "--json"],
        ["seeds", str(t1), str(t2), "--all"],
        ["verify", str(t1), str(t2), "--budget", "64", "--seed", "3"],
        ["dot", str(t1), "--labels", "reduced"],
        ["gen", "--objects", "6", "--attributes", "5", "--seed", "4"],
        ["extend", str(t1), "--seed", "4"],
        ["eval", "--trials", "4", "--objects", "5,6", "--seed", "1", "--jobs", "2"],
    ]
    differing = []
    for argv in commands:
        runs = [
            subprocess.run([sys.executable, "-m", "uum", *argv], capture_output=True, check=False)
            for _ in range(2)
        ]
        if runs[0].returncode != 0 or runs[0].stdout != runs[1].stdout or runs[0].returncode != runs[1].returncode:
            differing.append(argv[0])
    ok = not differing
    record(10, ok, f"{len(commands)} commands run twice, differing: {differing or 'none'}")
    assert ok


def test_criterion_11_mutation(ext12):
    def unsubtracted_phi(ext, objects):
        return intent(ext.extended, objects)

    report = verify_propositions(ext12, phi=unsubtracted_phi)
    prop3 = report.results["prop3_new_relationships"]
    ok = not prop3.passed and bool(prop3.witness)
    record(11, ok, f"prop3 fails: {not prop3.passed}; witness {prop3.witness}")
    assert ok
