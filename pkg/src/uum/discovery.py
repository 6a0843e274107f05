"""Revelation mappings, the discovery context, seeds and their verification.

Given an existing context ``K = (G, M; R)`` and its extension
``K+ = (G+, M+; R+)``, the revelation mappings are

    phi(S+) = I_{R+}(S+) minus the union of I_R(g) over g in S+
    psi(T+) = E_{R+}(T+) minus the union of E_R(m) over m in T+

with ``I_R(g)`` and ``E_R(m)`` empty for objects and attributes that are not
in ``K``. They form a Galois connection whose relation is ``R+ \\ R``: the
discovery context ``K*``. A seed is a non-empty preconcept of ``K*`` made of
old objects and old attributes only; every seed is a preconcept of the
negated existing context, which is why anti-concepts are mined for them.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from .context import AttributeSet, FormalContext, ObjectSet, iter_bits, negate
from .errors import CapExceeded, MissingEmbedding, RemovalsRejected
from .formats import serialize_cxt
from .lattice import DEFAULT_CAP, Concept, ConceptLattice, enumerate_concepts, lectic_key

__all__ = [
    "ContextExtension",
    "Seed",
    "RankedAntiConcept",
    "CandidateReport",
    "PropositionResult",
    "VerificationReport",
    "SeedEntry",
    "SeedReport",
    "PROPOSITIONS",
    "make_extension",
    "phi",
    "psi",
    "discovery_context",
    "is_seed",
    "maximal_seeds",
    "all_seeds",
    "candidate_outbox",
    "phi_tilde",
    "psi_tilde",
    "verify_propositions",
    "seed_report",
    "context_digest",
    "anticipated_concepts",
    "seeds_from_lattice",
    "RANKING_HEURISTIC",
]

RANKING_HEURISTIC = "score = |extent| * |intent| (heuristic)"


def _lift(mask: int, embedding) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << embedding[i]
    return out


class ContextExtension:
    """An existing context ``base`` embedded by name into ``extended``.

    ``object_embedding[g]`` is the index in ``extended`` of base object ``g``;
    likewise ``attribute_embedding``. ``removals_present`` is true when some
    cross of ``base`` is absent from ``extended``.
    """

    def __init__(self, base: FormalContext, extended: FormalContext, allow_removals: bool = False):
        obj_emb, attr_emb = [], []
        for name in base.object_names:
            if name not in extended.object_names:
                raise MissingEmbedding(f"object {name!r} is missing from the extended context")
            obj_emb.append(extended.object_index(name))
        for name in base.attribute_names:
            if name not in extended.attribute_names:
                raise MissingEmbedding(f"attribute {name!r} is missing from the extended context")
            attr_emb.append(extended.attribute_index(name))

        self.base = base
        self.extended = extended
        self.object_embedding = tuple(obj_emb)
        self.attribute_embedding = tuple(attr_emb)

        # base relation in extended index space; empty rows/cols for new items
        lifted_rows = [0] * extended.n_objects
        lifted_cols = [0] * extended.n_attributes
        for g, row in enumerate(base.rows):
            lifted_rows[obj_emb[g]] = _lift(row, attr_emb)
        for m, col in enumerate(base.cols):
            lifted_cols[attr_emb[m]] = _lift(col, obj_emb)
        self.lifted_rows = tuple(lifted_rows)
        self.lifted_cols = tuple(lifted_cols)
        self.base_objects_mask = _lift((1 << base.n_objects) - 1, obj_emb)
        self.base_attributes_mask = _lift((1 << base.n_attributes) - 1, attr_emb)

        self.removals_present = any(
            lifted & ~row for lifted, row in zip(self.lifted_rows, extended.rows)
        )
        if self.removals_present and not allow_removals:
            raise RemovalsRejected(
                "the extended context drops crosses of the base context; pass allow_removals=True"
            )
        self.allow_removals = allow_removals

    def __repr__(self):
        return f"ContextExtension(base={self.base!r}, extended={self.extended!r})"

    @cached_property
    def discovery(self) -> FormalContext:
        return FormalContext(
            self.extended.object_names,
            self.extended.attribute_names,
            [row & ~lifted for row, lifted in zip(self.extended.rows, self.lifted_rows)],
        )

    @cached_property
    def _object_back(self) -> dict[int, int]:
        return {e: g for g, e in enumerate(self.object_embedding)}

    @cached_property
    def _attribute_back(self) -> dict[int, int]:
        return {e: m for m, e in enumerate(self.attribute_embedding)}

    def lift_objects(self, objects: ObjectSet) -> ObjectSet:
        self.base.check_objects(objects)
        return ObjectSet(_lift(objects.mask, self.object_embedding), self.extended.n_objects)

    def lift_attributes(self, attributes: AttributeSet) -> AttributeSet:
        self.base.check_attributes(attributes)
        return AttributeSet(_lift(attributes.mask, self.attribute_embedding), self.extended.n_attributes)

    def restrict_objects(self, objects: ObjectSet) -> ObjectSet:
        """Base objects among ``objects`` (a set over the extended context)."""
        self.extended.check_objects(objects)
        back = self._object_back
        mask = 0
        for e in iter_bits(objects.mask & self.base_objects_mask):
            mask |= 1 << back[e]
        return ObjectSet(mask, self.base.n_objects)

    def restrict_attributes(self, attributes: AttributeSet) -> AttributeSet:
        self.extended.check_attributes(attributes)
        back = self._attribute_back
        mask = 0
        for e in iter_bits(attributes.mask & self.base_attributes_mask):
            mask |= 1 << back[e]
        return AttributeSet(mask, self.base.n_attributes)


def make_extension(base: FormalContext, extended: FormalContext, allow_removals: bool = False) -> ContextExtension:
    return ContextExtension(base, extended, allow_removals)


# -- revelation mappings -------------------------------------------------------


def _phi_mask(ext: ContextExtension, objects: int) -> int:
    shared = ext.extended.intent_mask(objects)
    seen = 0
    rows = ext.lifted_rows
    for g in iter_bits(objects):
        seen |= rows[g]
    return shared & ~seen


def _psi_mask(ext: ContextExtension, attributes: int) -> int:
    shared = ext.extended.extent_mask(attributes)
    seen = 0
    cols = ext.lifted_cols
    for m in iter_bits(attributes):
        seen |= cols[m]
    return shared & ~seen


def phi(ext: ContextExtension, objects: ObjectSet) -> AttributeSet:
    """Attributes of the extended context newly shared by all of ``objects``."""
    ext.extended.check_objects(objects)
    return AttributeSet(_phi_mask(ext, objects.mask), ext.extended.n_attributes)


def psi(ext: ContextExtension, attributes: AttributeSet) -> ObjectSet:
    """Objects of the extended context that newly carry all of ``attributes``."""
    ext.extended.check_attributes(attributes)
    return ObjectSet(_psi_mask(ext, attributes.mask), ext.extended.n_objects)


def discovery_context(ext: ContextExtension) -> FormalContext:
    """The context over the extended names whose relation is ``R+ \\ R``."""
    return ext.discovery


def phi_tilde(context: FormalContext, objects: ObjectSet) -> AttributeSet:
    """Attributes held by none of ``objects``."""
    context.check_objects(objects)
    seen = 0
    for g in objects:
        seen |= context.rows[g]
    return AttributeSet(((1 << context.n_attributes) - 1) & ~seen, context.n_attributes)


def psi_tilde(context: FormalContext, attributes: AttributeSet) -> ObjectSet:
    """Objects having none of ``attributes``."""
    context.check_attributes(attributes)
    seen = 0
    for m in attributes:
        seen |= context.cols[m]
    return ObjectSet(((1 << context.n_objects) - 1) & ~seen, context.n_objects)


# -- seeds ---------------------------------------------------------------------


@dataclass(frozen=True)
class Seed:
    """Old objects and old attributes all related only in the discovery context."""

    objects: ObjectSet
    attributes: AttributeSet

    def names(self, base: FormalContext) -> tuple[list[str], list[str]]:
        return base.object_names_of(self.objects), base.attribute_names_of(self.attributes)


def _seed_sort_key(seed: Seed):
    return (lectic_key(seed.attributes), lectic_key(seed.objects))


def is_seed(ext: ContextExtension, objects: ObjectSet, attributes: AttributeSet) -> bool:
    ext.base.check_objects(objects)
    ext.base.check_attributes(attributes)
    if not objects or not attributes:
        return False
    want = _lift(attributes.mask, ext.attribute_embedding)
    rows = ext.discovery.rows
    return all(not want & ~rows[ext.object_embedding[g]] for g in objects)


def maximal_seeds(ext: ContextExtension, cap: int | None = DEFAULT_CAP) -> list[Seed]:
    """Project each discovery concept onto the old objects and attributes.

    Concepts whose projection is empty on either side are skipped. Every
    maximal old-by-old rectangle of new crosses appears in the result.
    """
    lattice = _discovery_lattice(ext, cap)
    return seeds_from_lattice(ext, lattice)


def _discovery_lattice(ext: ContextExtension, cap) -> ConceptLattice:
    return enumerate_concepts(ext.discovery, cap)


def seeds_from_lattice(ext: ContextExtension, lattice: ConceptLattice) -> list[Seed]:
    """Seeds obtained from an already enumerated discovery lattice."""
    found = set()
    for concept in lattice:
        objects = ext.restrict_objects(concept.extent)
        attributes = ext.restrict_attributes(concept.intent)
        if objects and attributes:
            found.add(Seed(objects, attributes))
    return sorted(found, key=_seed_sort_key)


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def all_seeds(ext: ContextExtension, cap: int | None = DEFAULT_CAP) -> list[Seed]:
    """Every seed; raises :class:`CapExceeded` once more than ``cap`` are found."""
    if cap is None:
        cap = DEFAULT_CAP
    n, m = ext.base.n_objects, ext.base.n_attributes
    found = set()
    for top in maximal_seeds(ext, cap):
        for xs in _submasks(top.objects.mask):
            for ys in _submasks(top.attributes.mask):
                found.add((xs, ys))
                if len(found) > cap:
                    raise CapExceeded(cap, cap)
    seeds = [Seed(ObjectSet(xs, n), AttributeSet(ys, m)) for xs, ys in found]
    return sorted(seeds, key=_seed_sort_key)


# -- candidate outbox ----------------------------------------------------------


def context_digest(context: FormalContext) -> str:
    return "sha256:" + hashlib.sha256(serialize_cxt(context).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class RankedAntiConcept:
    index: int
    concept: Concept
    score: int
    preconcept_count: int
    rank: int


@dataclass(frozen=True)
class CandidateReport:
    """Anti-concepts of an existing context ranked as places to look for seeds."""

    context: FormalContext
    negative: FormalContext
    anti_concepts: ConceptLattice
    ranked: tuple[RankedAntiConcept, ...]
    digest: str
    heuristic: str = RANKING_HEURISTIC

    def to_dict(self) -> dict:
        neg = self.negative
        entries = sorted(self.ranked, key=lambda r: r.index)
        return {
            "input_digest": self.digest,
            "heuristic": self.heuristic,
            "anti_concept_count": len(self.anti_concepts),
            "anti_concepts": [
                {
                    "extent": neg.object_names_of(r.concept.extent),
                    "intent": neg.attribute_names_of(r.concept.intent),
                    "score": r.score,
                    "preconcept_count": r.preconcept_count,
                    "rank": r.rank,
                }
                for r in entries
            ],
        }


def candidate_outbox(context: FormalContext, cap: int | None = DEFAULT_CAP) -> CandidateReport:
    """Enumerate anti-concepts (concepts of the negated context) and rank them.

    Anti-concepts with an empty extent or intent are dropped. The rest are
    ranked by ``|extent| * |intent|`` descending, ties in lectic order.
    """
    negative = negate(context)
    lattice = enumerate_concepts(negative, cap)
    kept = []
    for index, concept in enumerate(lattice):
        a, b = len(concept.extent), len(concept.intent)
        if a and b:
            kept.append((index, concept, a * b, (2**a - 1) * (2**b - 1)))
    kept.sort(key=lambda item: (-item[2], item[0]))
    ranked = tuple(
        RankedAntiConcept(index, concept, score, count, rank)
        for rank, (index, concept, score, count) in enumerate(kept, start=1)
    )
    return CandidateReport(context, negative, lattice, ranked, context_digest(context))


# -- proposition checker -------------------------------------------------------

PROPOSITIONS = (
    "birkhoff_galois",
    "prop1_antitone",
    "prop2_galois",
    "prop3_new_relationships",
    "phi_psi_discovery_identity",
    "prop4_seed_exists",
    "prop5_no_seed_in_base",
    "prop5_corollary",
    "prop6_seed_in_negative",
    "approximation_containment",
)


@dataclass
class PropositionResult:
    passed: bool = True
    checks: int = 0
    witness: dict | None = None

    def check(self, ok: bool, witness: Callable[[], dict]) -> bool:
        self.checks += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = witness()
        return ok

    def to_dict(self) -> dict:
        out = {"pass": self.passed, "checks": self.checks}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    results: dict[str, PropositionResult]
    exhaustive: bool
    rng_seed: int
    sample_budget: int

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failures(self) -> list[str]:
        return [name for name, r in self.results.items() if not r.passed]

    def to_dict(self) -> dict:
        return {name: r.to_dict() for name, r in self.results.items()}


def _subset_pairs(n_left: int, n_right: int, budget: int, rng: random.Random):
    """All ``(left, right)`` mask pairs if there are at most ``budget`` of them, else a sample."""
    total = 1 << (n_left + n_right)
    if total <= budget:
        return True, [(s, t) for s in range(1 << n_left) for t in range(1 << n_right)]
    return False, [(rng.getrandbits(n_left), rng.getrandbits(n_right)) for _ in range(budget)]


def _masks(n: int, budget: int, rng: random.Random):
    if (1 << n) <= budget:
        return list(range(1 << n))
    return [rng.getrandbits(n) for _ in range(budget)]


def _is_sub(a: int, b: int) -> bool:
    return not a & ~b


def verify_propositions(
    ext: ContextExtension,
    sample_budget: int = 4096,
    rng_seed: int = 0,
    cap: int | None = DEFAULT_CAP,
    phi: Callable[[ContextExtension, ObjectSet], AttributeSet] = phi,
    psi: Callable[[ContextExtension, AttributeSet], ObjectSet] = psi,
) -> VerificationReport:
    """Machine-check the revelation-mapping and seed properties on ``ext``.

    Universally quantified properties are checked over every subset pair when
    there are at most ``sample_budget`` of them and over ``sample_budget``
    uniformly drawn pairs otherwise. ``phi``/``psi`` may be replaced to test
    the checker itself. Failures carry the first counterexample found.
    """
    rng = random.Random(rng_seed)
    base, plus = ext.base, ext.extended
    star = ext.discovery
    neg = negate(base)
    nG, nM = plus.n_objects, plus.n_attributes
    results = {name: PropositionResult() for name in PROPOSITIONS}

    def P(mask):
        return ObjectSet(mask, nG)

    def T(mask):
        return AttributeSet(mask, nM)

    def f(s):
        return phi(ext, P(s)).mask

    def g(t):
        return psi(ext, T(t)).mask

    def names_plus(s, t):
        return {"objects": plus.object_names_of(P(s)), "attributes": plus.attribute_names_of(T(t))}

    def names_base(s, t):
        return {
            "objects": base.object_names_of(ObjectSet(s, base.n_objects)),
            "attributes": base.attribute_names_of(AttributeSet(t, base.n_attributes)),
        }

    exhaustive, pairs = _subset_pairs(nG, nM, sample_budget, rng)

    # Galois laws of the derivation operators, in the base and extended contexts
    r = results["birkhoff_galois"]
    base_pairs = _subset_pairs(base.n_objects, base.n_attributes, sample_budget, rng)[1]
    for label, ctx, ctx_pairs in (("extended", plus, pairs), ("base", base, base_pairs)):
        n_obj, n_attr = ctx.n_objects, ctx.n_attributes
        for s, t in ctx_pairs:
            i_s, e_t = ctx.intent_mask(s), ctx.extent_mask(t)

            def witness(law):
                return {
                    "law": law,
                    "context": label,
                    "objects": ctx.object_names_of(ObjectSet(s, n_obj)),
                    "attributes": ctx.attribute_names_of(AttributeSet(t, n_attr)),
                }

            r.check(
                _is_sub(s, ctx.extent_mask(i_s)) and _is_sub(t, ctx.intent_mask(e_t)),
                lambda: witness("extensive"),
            )
            r.check(_is_sub(s, e_t) == _is_sub(t, i_s), lambda: witness("adjunction"))

    for s, t in pairs:
        fs, gt = f(s), g(t)

        # Prop 1: antitone on a random sub-pair
        s1 = s & rng.getrandbits(nG) if nG else 0
        t1 = t & rng.getrandbits(nM) if nM else 0
        results["prop1_antitone"].check(
            _is_sub(fs, f(s1)), lambda: {"mapping": "phi", "smaller": names_plus(s1, 0)["objects"], "larger": names_plus(s, 0)["objects"]}
        )
        results["prop1_antitone"].check(
            _is_sub(gt, g(t1)), lambda: {"mapping": "psi", "smaller": names_plus(0, t1)["attributes"], "larger": names_plus(0, t)["attributes"]}
        )

        # Prop 2: both formulations of a Galois connection, plus closure laws
        r = results["prop2_galois"]
        r.check(_is_sub(t, fs) == _is_sub(s, gt), lambda: {"law": "adjunction", **names_plus(s, t)})
        r.check(_is_sub(s, g(fs)), lambda: {"law": "extensive psi.phi", **names_plus(s, 0)})
        r.check(_is_sub(t, f(gt)), lambda: {"law": "extensive phi.psi", **names_plus(0, t)})
        r.check(f(g(fs)) == fs, lambda: {"law": "phi.psi.phi = phi", **names_plus(s, 0)})
        r.check(_is_sub(g(f(s1)), g(fs)), lambda: {"law": "psi.phi monotone", **names_plus(s, 0)})

        r = results["phi_psi_discovery_identity"]
        r.check(fs == star.intent_mask(s), lambda: {"mapping": "phi", **names_plus(s, 0)})
        r.check(gt == star.extent_mask(t), lambda: {"mapping": "psi", **names_plus(0, t)})

    # Prop 3: the relation induced by (phi, psi) is R+ \ R
    r = results["prop3_new_relationships"]
    for gi in range(nG):
        row_phi = f(1 << gi)
        new = plus.rows[gi] & ~ext.lifted_rows[gi]
        for m in range(nM):
            via_psi = bool(g(1 << m) >> gi & 1)
            in_phi = bool(row_phi >> m & 1)
            in_new = bool(new >> m & 1)
            r.check(
                in_phi == in_new == via_psi,
                lambda: {
                    "object": plus.object_names[gi],
                    "attribute": plus.attribute_names[m],
                    "in_phi_relation": in_phi,
                    "in_new_relationships": in_new,
                    "in_psi_relation": via_psi,
                },
            )

    # Prop 4
    old_new = any(
        star.rows[ext.object_embedding[gi]] & ext.base_attributes_mask for gi in range(base.n_objects)
    )
    try:
        seeds = maximal_seeds(ext, cap)
    except CapExceeded:
        seeds = None
    r = results["prop4_seed_exists"]
    if seeds is None:
        r.check(False, lambda: {"error": "discovery lattice exceeds cap"})
        seeds = []
    r.check(not old_new or bool(seeds), lambda: {"reason": "new old-by-old crosses but no seed"})
    for seed in seeds:
        r.check(is_seed(ext, seed.objects, seed.attributes), lambda: {"not_a_seed": names_base(seed.objects.mask, seed.attributes.mask)})

    # Prop 5: no non-empty preconcept of the base context is a seed
    r = results["prop5_no_seed_in_base"]
    nb, mb = base.n_objects, base.n_attributes
    if (1 << (nb + mb)) <= sample_budget:
        candidates = [
            (p, u)
            for p in range(1, 1 << nb)
            for u in _submasks(base.intent_mask(p))
        ]
    else:
        candidates = []
        for _ in range(sample_budget):
            p = rng.getrandbits(nb) if nb else 0
            if not p:
                continue
            u = base.intent_mask(p) & rng.getrandbits(mb)
            if u:
                candidates.append((p, u))
    for p, u in candidates:
        objs, attrs = ObjectSet(p, nb), AttributeSet(u, mb)
        r.check(not is_seed(ext, objs, attrs), lambda: names_base(p, u))

    # Prop 5 corollary and Prop 6 over maximal seeds and sampled sub-seeds
    sub_seeds = []
    for seed in seeds:
        xs, ys = seed.objects.mask, seed.attributes.mask
        sub_seeds.append((xs, ys))
        for _ in range(8):
            x = xs & rng.getrandbits(nb)
            y = ys & rng.getrandbits(mb)
            if x and y:
                sub_seeds.append((x, y))
    for x, y in sub_seeds:
        objs, attrs = ObjectSet(x, nb), AttributeSet(y, mb)
        seen_objs = 0
        for m in iter_bits(y):
            seen_objs |= base.cols[m]
        seen_attrs = 0
        for gi in iter_bits(x):
            seen_attrs |= base.rows[gi]
        results["prop5_corollary"].check(
            is_seed(ext, objs, attrs) and not x & seen_objs and not y & seen_attrs,
            lambda: names_base(x, y),
        )
        results["prop6_seed_in_negative"].check(_is_sub(y, neg.intent_mask(x)), lambda: names_base(x, y))

    # phi restricted to old attributes is bounded by its approximation
    r = results["approximation_containment"]
    for s in _masks(nb, sample_budget, rng):
        lifted = _lift(s, ext.object_embedding)
        approx = phi_tilde(base, ObjectSet(s, nb))
        restricted = ext.restrict_attributes(T(f(lifted) & ext.base_attributes_mask))
        r.check(restricted <= approx, lambda: {"mapping": "phi", **names_base(s, 0)})
        r.check(approx.mask == neg.intent_mask(s), lambda: {"mapping": "phi_tilde vs negated intent", **names_base(s, 0)})
    for t in _masks(mb, sample_budget, rng):
        lifted = _lift(t, ext.attribute_embedding)
        approx = psi_tilde(base, AttributeSet(t, mb))
        restricted = ext.restrict_objects(P(g(lifted) & ext.base_objects_mask))
        r.check(restricted <= approx, lambda: {"mapping": "psi", **names_base(0, t)})
        r.check(approx.mask == neg.extent_mask(t), lambda: {"mapping": "psi_tilde vs negated extent", **names_base(0, t)})

    return VerificationReport(results, exhaustive, rng_seed, sample_budget)


# -- seed report ---------------------------------------------------------------


@dataclass(frozen=True)
class SeedEntry:
    seed: Seed
    anticipating: tuple[int, ...]
    containing: tuple[int, ...]


@dataclass(frozen=True)
class SeedReport:
    extension: ContextExtension
    discovery_lattice: ConceptLattice
    anti_lattice: ConceptLattice
    entries: tuple[SeedEntry, ...]
    verification: VerificationReport | None = field(default=None)

    @property
    def discovery_context(self) -> FormalContext:
        return self.extension.discovery

    @property
    def seeds(self) -> list[Seed]:
        return [e.seed for e in self.entries]

    def to_dict(self) -> dict:
        ext = self.extension
        star = ext.discovery
        neg = self.anti_lattice.context
        n = star.n_attributes

        def star_concept(k):
            c = self.discovery_lattice[k]
            return {"extent": star.object_names_of(c.extent), "intent": star.attribute_names_of(c.intent)}

        def anti_concept(k):
            c = self.anti_lattice[k]
            return {"extent": neg.object_names_of(c.extent), "intent": neg.attribute_names_of(c.intent)}

        return {
            "discovery_context": {
                "objects": list(star.object_names),
                "attributes": list(star.attribute_names),
                "rows": ["".join("X" if row >> m & 1 else "." for m in range(n)) for row in star.rows],
            },
            "seeds": [
                {
                    "objects": ext.base.object_names_of(e.seed.objects),
                    "attributes": ext.base.attribute_names_of(e.seed.attributes),
                    "anticipating_concepts": [star_concept(k) for k in e.anticipating],
                    "containing_anticoncepts": [anti_concept(k) for k in e.containing],
                }
                for e in self.entries
            ],
            "propositions": self.verification.to_dict() if self.verification else {},
        }


def anticipated_concepts(ext: ContextExtension, lattice: ConceptLattice, seed: Seed) -> tuple[int, ...]:
    """Indices of discovery concepts that have ``seed`` as a preconcept."""
    xs = _lift(seed.objects.mask, ext.object_embedding)
    ys = _lift(seed.attributes.mask, ext.attribute_embedding)
    return tuple(
        k for k, c in enumerate(lattice) if _is_sub(xs, c.extent.mask) and _is_sub(ys, c.intent.mask)
    )


def seed_report(
    ext: ContextExtension,
    cap: int | None = DEFAULT_CAP,
    verify: bool = True,
    sample_budget: int = 4096,
    rng_seed: int = 0,
) -> SeedReport:
    star_lattice = _discovery_lattice(ext, cap)
    anti = enumerate_concepts(negate(ext.base), cap)
    entries = []
    for seed in seeds_from_lattice(ext, star_lattice):
        containing = tuple(
            k
            for k, c in enumerate(anti)
            if seed.objects <= c.extent and seed.attributes <= c.intent
        )
        entries.append(SeedEntry(seed, anticipated_concepts(ext, star_lattice, seed), containing))
    verification = verify_propositions(ext, sample_budget, rng_seed, cap) if verify else None
    return SeedReport(ext, star_lattice, anti, tuple(entries), verification)

