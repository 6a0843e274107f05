"""Random contexts and extensions, a brute-force concept oracle, seed recall."""

from __future__ import annotations

import csv
import io
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .context import AttributeSet, FormalContext, ObjectSet
from .discovery import ContextExtension, anticipated_concepts, make_extension, seeds_from_lattice
from .errors import TooLargeForOracle
from .lattice import DEFAULT_CAP, Concept, enumerate_concepts, lectic_key

__all__ = [
    "GenSpec",
    "RecallMetrics",
    "ORACLE_MAX_OBJECTS",
    "SWEEP_HEADER",
    "gen_random_context",
    "gen_random_extension",
    "brute_force_concepts",
    "seed_recall",
    "run_sweep",
    "sweep_csv",
]

ORACLE_MAX_OBJECTS = 20

SWEEP_HEADER = (
    "trial",
    "objects",
    "attributes",
    "density",
    "new_objects",
    "new_attributes",
    "new_density",
    "seed_count",
    "discovery_concepts",
    "anticipated",
    "recall",
)


@dataclass(frozen=True)
class GenSpec:
    object_count: int
    attribute_count: int
    density: float
    rng_seed: int

    def __post_init__(self):
        if self.object_count < 0 or self.attribute_count < 0:
            raise ValueError("counts must be non-negative")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must lie in [0, 1], got {self.density}")


@dataclass(frozen=True)
class RecallMetrics:
    seed_count: int
    discovery_concept_count: int
    anticipated_count: int
    recall: float


def gen_random_context(spec: GenSpec) -> FormalContext:
    """Objects ``g0..``, attributes ``m0..``, each cell set with probability ``density``."""
    rng = random.Random(spec.rng_seed)
    rows = []
    for _ in range(spec.object_count):
        row = 0
        for m in range(spec.attribute_count):
            if rng.random() < spec.density:
                row |= 1 << m
        rows.append(row)
    return FormalContext(
        [f"g{i}" for i in range(spec.object_count)],
        [f"m{i}" for i in range(spec.attribute_count)],
        rows,
    )


def _fresh_names(prefix: str, taken, count: int, start: int) -> list[str]:
    names, k = [], start
    taken = set(taken)
    while len(names) < count:
        name = f"{prefix}{k}"
        if name not in taken:
            names.append(name)
            taken.add(name)
        k += 1
    return names


def gen_random_extension(
    context: FormalContext,
    new_objects: int,
    new_attributes: int,
    new_density: float,
    rng_seed: int,
) -> ContextExtension:
    """Grow ``context`` monotonically: keep every cross, add new objects/attributes,
    and set each cell outside the old relation with probability ``new_density``."""
    if new_objects < 0 or new_attributes < 0:
        raise ValueError("counts must be non-negative")
    if not 0.0 <= new_density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {new_density}")
    rng = random.Random(rng_seed)
    objects = list(context.object_names) + _fresh_names("g", context.object_names, new_objects, context.n_objects)
    attributes = list(context.attribute_names) + _fresh_names(
        "m", context.attribute_names, new_attributes, context.n_attributes
    )
    rows = list(context.rows) + [0] * new_objects
    for g in range(len(objects)):
        for m in range(len(attributes)):
            if not rows[g] >> m & 1 and rng.random() < new_density:
                rows[g] |= 1 << m
    return make_extension(context, FormalContext(objects, attributes, rows))


def brute_force_concepts(context: FormalContext) -> list[Concept]:
    """Every concept, found by closing each of the ``2**|G|`` object subsets."""
    n, m = context.n_objects, context.n_attributes
    if n > ORACLE_MAX_OBJECTS:
        raise TooLargeForOracle(f"{n} objects exceeds the oracle limit of {ORACLE_MAX_OBJECTS}")
    relation = context.relation
    found = set()
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            shared = frozenset(a for a in range(m) if all(relation[g][a] for g in subset))
            closed = frozenset(g for g in range(n) if all(relation[g][a] for a in shared))
            found.add((closed, shared))
    concepts = [
        Concept(ObjectSet.from_indices(e, n), AttributeSet.from_indices(i, m)) for e, i in found
    ]
    concepts.sort(key=lambda c: lectic_key(c.intent))
    return concepts


def seed_recall(ext: ContextExtension, cap: int | None = DEFAULT_CAP) -> RecallMetrics:
    """Share of non-trivial discovery concepts that some seed is a preconcept of.

    Top and bottom concepts of the discovery lattice are left out of the
    denominator; recall is 0 when nothing remains.
    """
    lattice = enumerate_concepts(ext.discovery, cap)
    seeds = seeds_from_lattice(ext, lattice)
    nontrivial = set(range(1, len(lattice) - 1))
    hit = set()
    for seed in seeds:
        hit.update(k for k in anticipated_concepts(ext, lattice, seed) if k in nontrivial)
    denominator = len(nontrivial)
    recall = len(hit) / denominator if denominator else 0.0
    return RecallMetrics(len(seeds), denominator, len(hit), recall)


def _trial(args):
    trial, objects, attributes, density, new_objects, new_attributes, new_density, trial_seed, cap = args
    rng = random.Random(trial_seed)
    base = gen_random_context(GenSpec(objects, attributes, density, rng.getrandbits(64)))
    ext = gen_random_extension(base, new_objects, new_attributes, new_density, rng.getrandbits(64))
    metrics = seed_recall(ext, cap)
    return (
        trial,
        objects,
        attributes,
        density,
        new_objects,
        new_attributes,
        new_density,
        metrics.seed_count,
        metrics.discovery_concept_count,
        metrics.anticipated_count,
        metrics.recall,
    )


def run_sweep(
    trials: int,
    objects=(8,),
    attributes=(8,),
    density=(0.5,),
    new_objects=(2,),
    new_attributes=(2,),
    new_density=(0.3,),
    seed: int = 0,
    jobs: int = 1,
    cap: int | None = DEFAULT_CAP,
) -> list[tuple]:
    """Recall experiment over the parameter grid, ``trials`` runs per grid point.

    Per-trial seeds are drawn from ``seed`` in grid order, so results do not
    depend on ``jobs``.
    """
    master = random.Random(seed)
    tasks = []
    grid = itertools.product(objects, attributes, density, new_objects, new_attributes, new_density)
    trial = 0
    for point in grid:
        for _ in range(trials):
            tasks.append((trial, *point, master.getrandbits(64), cap))
            trial += 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_trial, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_trial(t) for t in tasks]


def sweep_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow([f"{v:.6g}" if isinstance(v, float) else v for v in row])
    return buf.getvalue()
