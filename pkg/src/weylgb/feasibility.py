"""Exact rational linear feasibility via Fourier-Motzkin elimination.

Systems are lists of rows (coeffs, rhs), each meaning coeffs . w >= rhs.
Variables are eliminated from the highest index down; combining a row with
positive coefficient and one with negative coefficient on the pivot uses
positive multipliers only, so every derived row is a nonnegative combination
of input rows.  If elimination produces 0 >= rhs with rhs > 0, rerunning it
with multiplier tracking yields a Farkas certificate of infeasibility that
can be checked independently of this solver.

Internally rows are scaled to integers and GCD-normalized after every
combination step, which keeps the arithmetic in machine integers; Fractions
only reappear in the back-substituted solution and in certificates.  On
feasible systems the solution is read off stage by stage, always picking the
smallest value allowed by the accumulated lower bounds (or the largest
allowed by upper bounds when no lower bound exists).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Infeasible:
    """Farkas witness: nonnegative multipliers over ``rows`` that combine the
    left-hand sides to zero while the combined right-hand side stays positive.
    """

    rows: tuple
    multipliers: tuple

    def verify(self):
        return certifies_infeasibility(self.rows, self.multipliers)


def certifies_infeasibility(rows, multipliers):
    """Independent check of a Farkas certificate."""
    if len(rows) != len(multipliers):
        return False
    if any(m < 0 for m in multipliers):
        return False
    width = len(rows[0][0]) if rows else 0
    combined = [Fraction(0)] * width
    rhs = Fraction(0)
    for (coeffs, b), m in zip(rows, multipliers):
        for k, c in enumerate(coeffs):
            combined[k] += m * c
        rhs += m * b
    return all(c == 0 for c in combined) and rhs > 0


def nonneg_rows(num_vars):
    """The rows w_j >= 0 for every variable."""
    out = []
    for j in range(num_vars):
        coeffs = tuple(int(k == j) for k in range(num_vars))
        out.append((coeffs, 0))
    return out


def solve_inequalities(rows, num_vars):
    """Find w with coeffs . w >= rhs for every row, or an Infeasible certificate.

    ``rows`` is a sequence of (coeffs, rhs) pairs with len(coeffs) == num_vars.
    Nonnegativity of the variables is NOT implied; append nonneg_rows() when
    wanted, so the certificate covers those constraints too.
    """
    original = tuple(
        (tuple(Fraction(c) for c in coeffs), Fraction(rhs)) for coeffs, rhs in rows
    )
    for coeffs, _ in original:
        if len(coeffs) != num_vars:
            raise ValueError("row width does not match num_vars")

    scaled, scales = [], []
    for coeffs, rhs in original:
        denom = math.lcm(*(f.denominator for f in coeffs + (rhs,)))
        scaled.append(
            (tuple(int(c * denom) for c in coeffs), int(rhs * denom))
        )
        scales.append(denom)

    stages = _eliminate_all(scaled, num_vars)
    if stages is None:
        mults = _farkas_multipliers(scaled, num_vars)
        adjusted = tuple(m * s for m, s in zip(mults, scales))
        return Infeasible(original, adjusted)

    solution = [Fraction(0)] * num_vars
    for var in range(num_vars):
        stage = stages[num_vars - 1 - var]
        lowers, uppers = [], []
        for coeffs, rhs in stage:
            c = coeffs[var]
            if c == 0:
                continue
            residual = Fraction(rhs) - sum(
                coeffs[k] * solution[k] for k in range(var)
            )
            (lowers if c > 0 else uppers).append(residual / c)
        if lowers:
            solution[var] = max(lowers)
        elif uppers:
            solution[var] = min(min(uppers), Fraction(0))
        else:
            solution[var] = Fraction(0)
    return tuple(Fraction(v) for v in solution)


def _normalize(coeffs, rhs):
    g = math.gcd(*(abs(c) for c in coeffs), abs(rhs))
    if g > 1:
        return tuple(c // g for c in coeffs), rhs // g
    return coeffs, rhs


def _eliminate_all(rows, num_vars):
    """Stage list from the integer system, or None when infeasible.

    stages[k] still involves variables 0 .. num_vars-1-k; a stage row with
    zero coefficients everywhere and positive right side kills feasibility.
    """
    current = []
    seen = set()
    for coeffs, rhs in rows:
        row = _normalize(coeffs, rhs)
        if row not in seen:
            seen.add(row)
            current.append(row)
    stages = [current]
    for var in range(num_vars - 1, -1, -1):
        for coeffs, rhs in current:
            if rhs > 0 and not any(coeffs):
                return None
        nxt, seen = [], set()
        pos = [r for r in current if r[0][var] > 0]
        neg = [r for r in current if r[0][var] < 0]
        for r in current:
            if r[0][var] == 0 and r not in seen:
                seen.add(r)
                nxt.append(r)
        for pc, pr in pos:
            for nc, nr in neg:
                a, b = pc[var], -nc[var]
                row = _normalize(
                    tuple(b * x + a * y for x, y in zip(pc, nc)), b * pr + a * nr
                )
                if row not in seen:
                    seen.add(row)
                    nxt.append(row)
        stages.append(nxt)
        current = nxt
    for coeffs, rhs in current:
        if rhs > 0:
            return None
    return stages


def _farkas_multipliers(rows, num_vars):
    """Rerun elimination with multiplier tracking; rows must be infeasible."""
    working = []
    for i, (coeffs, rhs) in enumerate(rows):
        mults = tuple(Fraction(int(k == i)) for k in range(len(rows)))
        working.append((coeffs, rhs, mults))
    for var in range(num_vars - 1, -1, -1):
        hit = _find_contradiction(working)
        if hit is not None:
            return hit
        nxt = [r for r in working if r[0][var] == 0]
        pos = [r for r in working if r[0][var] > 0]
        neg = [r for r in working if r[0][var] < 0]
        for pc, pr, pm in pos:
            for nc, nr, nm in neg:
                a, b = pc[var], -nc[var]
                nxt.append(
                    (
                        tuple(b * x + a * y for x, y in zip(pc, nc)),
                        b * pr + a * nr,
                        tuple(b * x + a * y for x, y in zip(pm, nm)),
                    )
                )
        working = nxt
    hit = _find_contradiction(working)
    if hit is None:
        raise AssertionError("certificate rerun found no contradiction")
    return hit


def _find_contradiction(working):
    for coeffs, rhs, mults in working:
        if rhs > 0 and not any(coeffs):
            return mults
    return None
