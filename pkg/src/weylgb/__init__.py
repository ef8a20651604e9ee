"""weylgb: exact Groebner bases in Weyl algebras over the rationals."""

from .commutative import (
    CommutativePolynomial,
    commutative_buchberger,
    induced_ordering,
    to_commutative,
    to_weyl,
)
from .division import (
    ContractReport,
    DivisionResult,
    LeadingTerm,
    check_division_contract,
    divide,
    leading_monomial,
    leading_term,
    monic,
    term_quotient,
)
from .feasibility import Infeasible, certifies_infeasibility, solve_inequalities
from .groebner import (
    GroebnerBasis,
    buchberger,
    ideal_member,
    is_groebner,
    reduce_basis,
    restriction_stable,
    s_pair,
)
from .orderings import (
    DistanceBound,
    Filtration,
    Ordering,
    agree_on,
    lex_compare,
    monomials_up_to_degree,
    ordering_distance,
)
from .parsing import (
    ParseError,
    format_element,
    format_monomial,
    format_ordering,
    parse_element,
    parse_ordering,
)
from .universal import (
    Cone,
    CounterexampleOrdering,
    Restriction,
    SupportCapExceeded,
    UniversalCertificate,
    WeightWitness,
    certificate_json,
    certificate_text,
    certify_universal,
    enumerate_restrictions,
    enumerate_restrictions_naive,
    realize_restriction,
    universal_groebner,
)
from .weyl import (
    Monomial,
    WeylAlgebra,
    WeylElement,
    combined_support,
    commutator,
    multiply_monomials,
)

__version__ = "0.1.0"

__all__ = [
    "CommutativePolynomial",
    "Cone",
    "ContractReport",
    "CounterexampleOrdering",
    "DistanceBound",
    "DivisionResult",
    "Filtration",
    "GroebnerBasis",
    "Infeasible",
    "LeadingTerm",
    "Monomial",
    "Ordering",
    "ParseError",
    "Restriction",
    "SupportCapExceeded",
    "UniversalCertificate",
    "WeightWitness",
    "WeylAlgebra",
    "WeylElement",
    "agree_on",
    "buchberger",
    "certifies_infeasibility",
    "certificate_json",
    "certificate_text",
    "certify_universal",
    "check_division_contract",
    "combined_support",
    "commutative_buchberger",
    "commutator",
    "divide",
    "enumerate_restrictions",
    "enumerate_restrictions_naive",
    "format_element",
    "format_monomial",
    "format_ordering",
    "ideal_member",
    "induced_ordering",
    "is_groebner",
    "leading_monomial",
    "leading_term",
    "lex_compare",
    "monic",
    "monomials_up_to_degree",
    "multiply_monomials",
    "ordering_distance",
    "parse_element",
    "parse_ordering",
    "realize_restriction",
    "reduce_basis",
    "restriction_stable",
    "s_pair",
    "solve_inequalities",
    "term_quotient",
    "to_commutative",
    "to_weyl",
    "universal_groebner",
]
