"""Concepts, preconcepts, closure operators and concept enumeration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from . import kernels
from .context import AttributeSet, FormalContext, ObjectSet, extent, intent
from .errors import CapExceeded, ContextMismatch, InvalidSet

__all__ = [
    "DEFAULT_CAP",
    "Concept",
    "Preconcept",
    "ConceptLattice",
    "close_attributes",
    "close_objects",
    "is_concept",
    "is_preconcept",
    "preconcept_leq",
    "enumerate_concepts",
    "concept_count_bound",
    "lectic_key",
    "format_set",
    "format_concept",
    "to_dot",
]

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class Concept:
    extent: ObjectSet
    intent: AttributeSet


@dataclass(frozen=True)
class Preconcept:
    """A pair whose objects all carry all its attributes in ``context``."""

    context: FormalContext
    objects: ObjectSet
    attributes: AttributeSet

    def __post_init__(self):
        if not is_preconcept(self.context, self.objects, self.attributes):
            raise InvalidSet("objects do not all carry the given attributes")


def lectic_key(s) -> tuple[int, ...]:
    """Sort key realizing lectic order: the smallest differing index decides.

    Index 0 is the most significant element, so ``{2} < {1} < {1, 2} < {0}``.
    """
    return tuple(1 if i in s else 0 for i in range(s.universe))


def close_attributes(context: FormalContext, attributes: AttributeSet) -> AttributeSet:
    """``intent(extent(T))``."""
    return intent(context, extent(context, attributes))


def close_objects(context: FormalContext, objects: ObjectSet) -> ObjectSet:
    """``extent(intent(S))``."""
    return extent(context, intent(context, objects))


def is_concept(context: FormalContext, objects: ObjectSet, attributes: AttributeSet) -> bool:
    return intent(context, objects) == attributes and extent(context, attributes) == objects


def is_preconcept(context: FormalContext, objects: ObjectSet, attributes: AttributeSet) -> bool:
    return objects <= extent(context, attributes)


def preconcept_leq(p1: Preconcept, p2: Preconcept) -> bool:
    """``p1`` is less extensive than ``p2``: componentwise inclusion."""
    if p1.context is not p2.context and p1.context != p2.context:
        raise ContextMismatch("preconcepts belong to different contexts")
    return p1.objects <= p2.objects and p1.attributes <= p2.attributes


def concept_count_bound(relation_size: int) -> float:
    """Upper bound ``1.5 * 2**sqrt(|R| + 1) - 1`` on the number of concepts."""
    if relation_size < 0:
        raise ValueError("relation size must be non-negative")
    return 1.5 * 2.0 ** math.sqrt(relation_size + 1) - 1.0


@dataclass(frozen=True)
class ConceptLattice:
    """Concepts of ``context`` in increasing lectic order of intents.

    ``covers`` holds ``(lower, upper)`` index pairs of the Hasse diagram,
    where ``lower`` has the strictly smaller extent.
    """

    context: FormalContext
    concepts: tuple[Concept, ...]

    def __len__(self):
        return len(self.concepts)

    def __iter__(self):
        return iter(self.concepts)

    def __getitem__(self, i):
        return self.concepts[i]

    def index(self, concept: Concept) -> int:
        return self.concepts.index(concept)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        exts = [c.extent.mask for c in self.concepts]
        sizes = [len(c.extent) for c in self.concepts]
        pairs = []
        for lo, e in enumerate(exts):
            above = [j for j, f in enumerate(exts) if f != e and not e & ~f]
            above.sort(key=lambda j: (sizes[j], j))
            minimal = []
            for j in above:
                f = exts[j]
                if not any(not exts[k] & ~f for k in minimal):
                    minimal.append(j)
            pairs.extend((lo, up) for up in minimal)
        return tuple(sorted(pairs))

    @property
    def top(self) -> Concept | None:
        """The concept with the full extent."""
        return self.concepts[0] if self.concepts else None

    @property
    def bottom(self) -> Concept | None:
        """The concept with the full intent."""
        return self.concepts[-1] if self.concepts else None


def enumerate_concepts(context: FormalContext, cap: int | None = DEFAULT_CAP) -> ConceptLattice:
    """All concepts of ``context`` via NextClosure, in lectic order of intents.

    Raises :class:`CapExceeded` if the context has more than ``cap`` concepts.
    """
    if cap is None:
        cap = DEFAULT_CAP
    found, overflow = kernels.next_closure(
        context.rows, context.cols, context.n_objects, context.n_attributes, cap
    )
    if overflow:
        raise CapExceeded(cap, len(found))
    n, m = context.n_objects, context.n_attributes
    concepts = tuple(Concept(ObjectSet(e, n), AttributeSet(i, m)) for e, i in found)
    return ConceptLattice(context, concepts)


def format_set(names) -> str:
    return "{" + ", ".join(names) + "}"


def format_concept(context: FormalContext, concept: Concept) -> str:
    """Render as ``{A, C} ; {β}``."""
    return (
        format_set(context.object_names_of(concept.extent))
        + " ; "
        + format_set(context.attribute_names_of(concept.intent))
    )


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _reduced_labels(lattice: ConceptLattice):
    """Own objects and own attributes of each concept (reduced labelling)."""
    ctx = lattice.context
    where = {(c.extent.mask, c.intent.mask): k for k, c in enumerate(lattice.concepts)}
    own_objects = [[] for _ in lattice.concepts]
    own_attributes = [[] for _ in lattice.concepts]
    for g in range(ctx.n_objects):
        i = ctx.intent_mask(1 << g)
        k = where.get((ctx.extent_mask(i), i))
        if k is not None:
            own_objects[k].append(ctx.object_names[g])
    for m in range(ctx.n_attributes):
        e = ctx.extent_mask(1 << m)
        k = where.get((e, ctx.intent_mask(e)))
        if k is not None:
            own_attributes[k].append(ctx.attribute_names[m])
    return own_objects, own_attributes


def to_dot(lattice: ConceptLattice, labels: str = "full") -> str:
    """Hasse diagram in DOT syntax; ``labels`` is ``"full"`` or ``"reduced"``."""
    if labels not in ("full", "reduced"):
        raise ValueError(f"unknown label style {labels!r}")
    ctx = lattice.context
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
    if labels == "reduced":
        own_objects, own_attributes = _reduced_labels(lattice)
    for k, concept in enumerate(lattice.concepts):
        if labels == "full":
            top = format_set(ctx.object_names_of(concept.extent))
            bottom = format_set(ctx.attribute_names_of(concept.intent))
        else:
            top = ", ".join(own_objects[k])
            bottom = ", ".join(own_attributes[k])
        label = _dot_escape(top) + "\\n" + _dot_escape(bottom)
        lines.append(f'  c{k} [label="{label}"];')
    for lo, up in lattice.covers:
        lines.append(f"  c{lo} -> c{up};")
    lines.append("}")
    return "\n".join(lines) + "\n"

