"""Universal Groebner bases: certification by finite cone enumeration.

A finite basis B is certified against every ordering at once by looking only
at its combined support: whenever two normal orderings agree on Supp(B), the
Groebner property transfers between them.  So it suffices to enumerate the
total orders ("restrictions") on Supp(B) that are realizable by an ordering
of the engine's weight family - one nonnegative weight row plus the lex
tie-break - and to run the S-pair criterion once per realized cone.

Realization is exact: the strict inequalities a weight row must satisfy are
solved by Fourier-Motzkin elimination over the rationals, with a slack of 1
standing in for strictness.  Unrealizable chains come back with a Farkas
certificate.  The saturation loop grows a candidate basis with Groebner
bases recomputed under every counterexample ordering until certification
succeeds; each round strictly enlarges the basis, and finitely many support
behaviors exist, so the loop terminates.

Scope note: certificates quantify over the weight-row-plus-lex family.  Any
normal ordering whose restriction to the certified support is realized by
that family is covered by the transfer principle; the certificate header
records this boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .division import divide
from .feasibility import Infeasible, nonneg_rows, solve_inequalities
from .groebner import buchberger, is_groebner, reduce_basis
from .orderings import Ordering, lex_compare
from .weyl import Monomial, combined_support

COVERAGE_FAMILY = "nonnegative weight row + lex tie-break"

DEFAULT_SUPPORT_CAP = 9


class SupportCapExceeded(Exception):
    """Raised instead of attempting a factorial enumeration on a big support.

    When the saturation loop trips the cap mid-run, ``partial_basis`` holds
    the candidate basis built so far.
    """

    def __init__(self, size, cap, context=""):
        super().__init__()
        self.size = size
        self.cap = cap
        self.context = context
        self.partial_basis = None

    def __str__(self):
        msg = (
            f"support has {self.size} monomials, above the enumeration cap "
            f"{self.cap}; raise max_support to force the computation"
        )
        if self.context:
            msg += f" ({self.context})"
        return msg


@dataclass(frozen=True)
class Restriction:
    """A total order on finitely many monomials, listed smallest first."""

    monomials: tuple

    def __post_init__(self):
        if len(set(self.monomials)) != len(self.monomials):
            raise ValueError("restriction monomials must be distinct")

    def __len__(self):
        return len(self.monomials)


@dataclass(frozen=True)
class WeightWitness:
    """A nonnegative weight row whose induced ordering realizes a restriction."""

    weights: tuple

    def ordering(self):
        return Ordering((self.weights,))


def _restriction_rows(restriction):
    """Inequality rows a weight row must satisfy to reproduce the chain.

    Adjacent pairs suffice: the induced ordering is total, so transitivity
    settles the rest.  Pairs the lex tail already orders correctly only need
    weights . diff >= 0; pairs it orders the wrong way need strict separation,
    encoded with slack 1 (weight rows scale freely).
    """
    monos = restriction.monomials
    rows = []
    for low, high in zip(monos, monos[1:]):
        diff = tuple(
            Fraction(b - a) for a, b in zip(low.vector, high.vector)
        )
        slack = Fraction(0) if lex_compare(low, high) < 0 else Fraction(1)
        rows.append((diff, slack))
    return rows


def realize_restriction(restriction):
    """WeightWitness realizing the chain through its ordering, or Infeasible.

    The witness is verified before being returned: the chain's sort keys
    under the induced ordering must be strictly increasing, which pins down
    every pairwise comparison.  Results are cached; restrictions recur
    heavily across enumeration prefixes and saturation rounds.
    """
    monos = restriction.monomials
    if not monos:
        raise ValueError("empty restriction")
    return _realize_cached(monos)


@lru_cache(maxsize=200000)
def _realize_cached(monos):
    num_vars = 2 * monos[0].dimension
    rows = _restriction_rows(Restriction(monos)) + nonneg_rows(num_vars)
    outcome = solve_inequalities(rows, num_vars)
    if isinstance(outcome, Infeasible):
        return outcome
    witness = WeightWitness(outcome)
    ordering = witness.ordering()
    keys = [ordering.sort_key(m) for m in monos]
    if any(a >= b for a, b in zip(keys, keys[1:])):
        raise AssertionError("witness failed to reproduce its restriction; solver bug")
    return witness


def enumerate_restrictions(support, max_support=DEFAULT_SUPPORT_CAP):
    """All realizable total orders on the support, with witnesses.

    Depth-first search over chains in which every prefix is realizable;
    since a chain's constraints contain its prefix's constraints, pruning an
    infeasible prefix cannot lose a realizable completion.  The result is
    identical to filtering all permutations (enumerate_restrictions_naive)
    and is returned in a deterministic order.
    """
    support = _sorted_support(support)
    if len(support) > max_support:
        raise SupportCapExceeded(len(support), max_support)
    out = []

    def extend(prefix, witness, remaining):
        if not remaining:
            out.append((Restriction(tuple(prefix)), witness))
            return
        for idx, mono in enumerate(remaining):
            prefix.append(mono)
            candidate = realize_restriction(Restriction(tuple(prefix)))
            if isinstance(candidate, WeightWitness):
                extend(prefix, candidate, remaining[:idx] + remaining[idx + 1 :])
            prefix.pop()

    extend([], None, support)
    return out


def enumerate_restrictions_naive(support, max_support=DEFAULT_SUPPORT_CAP):
    """Filter all |support|! permutations; the oracle twin of the pruned search."""
    support = _sorted_support(support)
    if len(support) > max_support:
        raise SupportCapExceeded(len(support), max_support)
    out = []
    for perm in itertools.permutations(support):
        restriction = Restriction(perm)
        witness = realize_restriction(restriction)
        if isinstance(witness, WeightWitness):
            out.append((restriction, witness))
    return out


def _sorted_support(support):
    support = sorted(set(support), key=Monomial.sort_key)
    if not support:
        raise ValueError("empty support")
    dims = {m.dimension for m in support}
    if len(dims) > 1:
        raise ValueError("support mixes dimensions")
    return support


@dataclass(frozen=True)
class Cone:
    restriction: Restriction
    witness: WeightWitness
    verdict: str


@dataclass(frozen=True)
class UniversalCertificate:
    basis: tuple
    cones: tuple
    support: tuple


@dataclass(frozen=True)
class CounterexampleOrdering:
    """A realized restriction under which the candidate fails the S-pair test."""

    restriction: Restriction
    witness: WeightWitness

    def ordering(self):
        return self.witness.ordering()


def certify_universal(elements, generators=None, max_support=DEFAULT_SUPPORT_CAP):
    """Certify a basis against every realizable restriction of its support.

    Runs the S-pair criterion once per realized cone and returns either a
    certificate whose cones all passed, or the first failing cone as a
    counterexample.  When ``generators`` is given, each cone additionally
    requires every generator to reduce to zero, so a candidate that fails to
    generate the intended ideal is rejected.
    """
    elements = list(elements)
    if not elements or any(not e for e in elements):
        raise ValueError("certification needs a nonempty list of nonzero elements")
    support = tuple(_sorted_support(combined_support(elements)))
    if len(support) > max_support:
        raise SupportCapExceeded(len(support), max_support, "certification support")

    cones = []
    for restriction, witness in enumerate_restrictions(support, max_support):
        ordering = witness.ordering()
        ok = is_groebner(elements, ordering)
        if ok and generators is not None:
            ok = all(
                not divide(g, elements, ordering).remainder for g in generators
            )
        if not ok:
            return CounterexampleOrdering(restriction, witness)
        cones.append(Cone(restriction, witness, "passed"))

    cones.sort(key=lambda c: tuple(m.sort_key() for m in c.restriction.monomials))
    basis = tuple(
        sorted(elements, key=lambda e: _element_key(e), reverse=True)
    )
    return UniversalCertificate(basis, tuple(cones), support)


def universal_groebner(
    generators, max_support=DEFAULT_SUPPORT_CAP, max_rounds=32
):
    """Grow a basis until certification succeeds; return the certificate.

    Start from the reduced Groebner basis under graded lex, then repeatedly:
    certify; on a counterexample ordering, union in the reduced Groebner
    basis of the ORIGINAL generators recomputed under that ordering.  Adding
    elements of the ideal never destroys the Groebner property the basis
    already has, and a counterexample ordering always contributes at least
    one new element, so the candidate grows strictly until it covers every
    realizable cone.
    """
    generators = list(generators)
    nonzero = [g for g in generators if g]
    if not nonzero:
        raise ValueError("universal basis of the zero ideal is empty; need a nonzero generator")
    n = nonzero[0].n

    basis = [
        _canonical_scale(e)
        for e in reduce_basis(buchberger(generators, Ordering.grlex(n))).elements
    ]
    rounds = 0
    while True:
        rounds += 1
        if rounds > max_rounds:
            raise RuntimeError(
                f"saturation did not stabilize after {max_rounds} rounds; "
                f"current basis has {len(basis)} elements"
            )
        try:
            result = certify_universal(basis, max_support=max_support)
        except SupportCapExceeded as exc:
            exc.context = f"saturation round {rounds}, basis size {len(basis)}"
            exc.partial_basis = tuple(basis)
            raise
        if isinstance(result, UniversalCertificate):
            return result
        fix = reduce_basis(buchberger(generators, result.ordering()))
        added = [
            e for e in (_canonical_scale(f) for f in fix.elements) if e not in basis
        ]
        if not added:
            raise RuntimeError(
                "counterexample ordering contributed no new elements; "
                "certification cannot make progress"
            )
        basis.extend(added)
        basis = sorted(set(basis), key=_element_key, reverse=True)


def _canonical_scale(e):
    """Scale so the graded-lex-greatest term has coefficient 1.

    Ordering-independent, so the same ideal element contributed by different
    saturation rounds lands on one representative.  Rescaling never changes
    Groebner status: leading monomials and S-pair reductions are invariant.
    """
    top = max(e.terms, key=Monomial.sort_key)
    return e * (1 / e.terms[top])


def _element_key(e):
    return tuple(
        (m.sort_key(), c) for m, c in e.sorted_terms(reverse=True)
    )


def certificate_text(cert):
    """Canonical plain-text serialization; byte-stable for identical inputs."""
    from .parsing import format_element, format_monomial

    n = cert.basis[0].n
    lines = [
        "universal groebner certificate",
        f"dimension: {n}",
        f"certified family: {COVERAGE_FAMILY}",
        "coverage: every normal ordering whose restriction to the support",
        "  is realized by the family above is covered by the transfer principle",
        f"basis ({len(cert.basis)}):",
    ]
    for e in cert.basis:
        lines.append(f"  {format_element(e)}")
    lines.append(
        "support (%d): %s"
        % (len(cert.support), ", ".join(format_monomial(m) for m in cert.support))
    )
    lines.append(f"cones ({len(cert.cones)}):")
    for i, cone in enumerate(cert.cones, 1):
        chain = " < ".join(format_monomial(m) for m in cone.restriction.monomials)
        weights = " ".join(str(w) for w in cone.witness.weights)
        lines.append(f"  cone {i}: {chain} | weights {weights} | {cone.verdict}")
    return "\n".join(lines) + "\n"


def certificate_json(cert):
    """JSON-ready dict mirror of certificate_text."""
    from .parsing import format_element, format_monomial

    return {
        "dimension": cert.basis[0].n,
        "family": COVERAGE_FAMILY,
        "basis": [format_element(e) for e in cert.basis],
        "support": [format_monomial(m) for m in cert.support],
        "cones": [
            {
                "restriction": [
                    format_monomial(m) for m in cone.restriction.monomials
                ],
                "weights": [str(w) for w in cone.witness.weights],
                "verdict": cone.verdict,
            }
            for cone in cert.cones
        ],
    }
