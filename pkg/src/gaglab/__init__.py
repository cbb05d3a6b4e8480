"""Finite-model laboratory for gamma-indexed AG-groupoids."""

from .core import (
    GammaGroupoid,
    Law,
    LawVerdict,
    LimitExceededError,
    RegularityWitness,
    check_law,
    identities,
    is_regular,
    law_sides,
    members,
    regular_witness,
    subset_of,
    subset_product,
)
from .ideals import (
    IdealKind,
    IdealVerdict,
    SemilatticeReport,
    build_ideal_semilattice,
    enumerate_ideals,
    ideal_closure,
    is_ideal,
    is_idempotent,
    is_prime,
    is_semiprime,
    principal_left,
)
from .io import ParseError, fixture_path, load_fixture, parse, parse_file, serialize, write_file
from .search import Filter, SearchSpec, canonical_form, count, enumerate_structures
from .theorems import (
    HUNT_FILTERS,
    LemmaId,
    LemmaStatus,
    LemmaVerdict,
    hunt,
    verify,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "GammaGroupoid", "Law", "LawVerdict", "RegularityWitness", "LimitExceededError",
    "check_law", "identities", "is_regular", "law_sides", "members",
    "regular_witness", "subset_of", "subset_product",
    "IdealKind", "IdealVerdict", "SemilatticeReport", "build_ideal_semilattice",
    "enumerate_ideals", "ideal_closure", "is_ideal", "is_idempotent",
    "is_prime", "is_semiprime", "principal_left",
    "ParseError", "fixture_path", "load_fixture", "parse", "parse_file",
    "serialize", "write_file",
    "Filter", "SearchSpec", "canonical_form", "count", "enumerate_structures",
    "HUNT_FILTERS", "LemmaId", "LemmaStatus", "LemmaVerdict",
    "hunt", "verify", "verify_all",
]
