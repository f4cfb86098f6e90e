"""Count and verify solutions of X + Y = c^z over products of fixed bases."""

__version__ = "0.1.0"

from .catalog import anomalous_catalog, family_instances, mersenne_quotient_scan, pair_transform
from .classify import association_tag, group_by_association, key_number_of
from .errors import (
    CongruenceFails, DepthInvalid, EvenModulus, FactorizationIncomplete, KeyNumberInvalid,
    NotCoprime, NotFound, ParamOutOfRange, PowersumError, PremiseFails, ResourceLimit, Unsolvable,
)
from .grouplat import check_pq, invariants, unit_lattice
from .instance import Instance
from .modmath import factorize, key_numbers, mult_order
from .orbits import detect_case, minimal_pair_power, orbit_power, predicted_solution, verify_lemma1
from .search import Solution, distinct_values, enumerate_general, enumerate_solutions

__all__ = [
    "Instance", "Solution", "enumerate_solutions", "enumerate_general", "distinct_values",
    "factorize", "key_numbers", "mult_order", "unit_lattice", "invariants", "check_pq",
    "association_tag", "group_by_association", "key_number_of",
    "minimal_pair_power", "orbit_power", "predicted_solution", "detect_case", "verify_lemma1",
    "family_instances", "anomalous_catalog", "pair_transform", "mersenne_quotient_scan",
    "PowersumError", "ResourceLimit", "FactorizationIncomplete", "NotFound", "NotCoprime", "EvenModulus",
    "DepthInvalid", "CongruenceFails", "ParamOutOfRange", "PremiseFails", "Unsolvable", "KeyNumberInvalid",
]
