"""Mining formal contexts for unknown unknowns.

Formal concept analysis primitives (contexts, derivation operators, NextClosure
enumeration), the revelation mappings between an existing context and its
extension, the discovery context, seeds, and the anti-concept candidate
procedure that works from the existing context alone.
"""

__version__ = "0.1.0"

from .context import AttributeSet, FormalContext, ObjectSet, extent, intent, negate, new_context
from .discovery import (
    CandidateReport,
    ContextExtension,
    Seed,
    SeedReport,
    all_seeds,
    candidate_outbox,
    discovery_context,
    is_seed,
    make_extension,
    maximal_seeds,
    phi,
    phi_tilde,
    psi,
    psi_tilde,
    seed_report,
    verify_propositions,
)
from .errors import (
    CapExceeded,
    ContextMismatch,
    InvalidName,
    InvalidSet,
    MissingEmbedding,
    NameCollision,
    ParseError,
    RemovalsRejected,
    TooLargeForOracle,
    UnknownName,
    UumError,
)
from .formats import parse_csv, parse_cxt, read_context, serialize_csv, serialize_cxt
from .lattice import (
    Concept,
    ConceptLattice,
    Preconcept,
    close_attributes,
    close_objects,
    concept_count_bound,
    enumerate_concepts,
    is_concept,
    is_preconcept,
    preconcept_leq,
    to_dot,
)
