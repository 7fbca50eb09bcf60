"""Quasisymmetric refinements: the G polynomials, monomial-quasisymmetric
expansion, Hecke operators, and Demazure t-atoms.

G over a strong composition gamma sums the integral-form permuted-basement
polynomials over all weak compositions whose positive parts are gamma in
order; every such composition shares the same increasing sort, so the sum
is a polynomial multiple of a single x-free scalar.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .mpoly import MPoly, RationalForm, divided_difference, specialize, swap_vars
from .nonattacking import e_general_q0, e_integral, pr2
from .shapes import check_composition, identity_perm


class NotQuasisymmetricError(ValueError):
    """Raised by qsym_expand; carries a witness pair of exponent keys."""

    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


def _strong(gamma) -> tuple[int, ...]:
    gamma = check_composition(gamma)
    if any(p == 0 for p in gamma):
        raise ValueError(f"{gamma} is not a strong composition")
    return gamma


def placements(gamma, n: int):
    """All weak compositions of length n whose positive parts read gamma."""
    gamma = _strong(gamma)
    k = len(gamma)
    if n < k:
        raise ValueError("not enough variables for the composition")
    for support in combinations(range(n), k):
        alpha = [0] * n
        for j, pos in enumerate(support):
            alpha[pos] = gamma[j]
        yield tuple(alpha)


def g_integral(gamma, n: int) -> MPoly:
    """The polynomial scalar multiple of G: the sum of integral forms over
    all placements of gamma among n variables."""
    total = MPoly.zero(n)
    for alpha in placements(gamma, n):
        total = total + e_integral(alpha, n)
    return total


def g_poly(gamma, n: int) -> RationalForm:
    """G itself, as integral form over the shared x-free scalar."""
    gamma = _strong(gamma)
    padded = (0,) * (n - len(gamma)) + tuple(sorted(gamma))
    return RationalForm(g_integral(gamma, n), pr2(padded, n))


@dataclass(frozen=True)
class QSymExpansion:
    """Coefficients of a polynomial on the monomial quasisymmetric basis."""

    nvars: int
    coeffs: dict  # strong composition -> x-free MPoly in q, t

    def degree(self):
        degs = {sum(g) for g in self.coeffs}
        return degs.pop() if len(degs) == 1 else None

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree(),
            "coeffs": {",".join(map(str, g)): c.to_json_dict()
                       for g, c in sorted(self.coeffs.items())},
        }


def qsym_expand(p: MPoly) -> QSymExpansion:
    """Expand p over the monomial quasisymmetric basis, or fail with a witness.

    For each term, the positive x-exponents read left to right give a strong
    composition; p is quasisymmetric iff for every composition appearing,
    all placements of it among the variables occur with one and the same
    q,t-coefficient.
    """
    n = p.nvars
    groups: dict[tuple, dict[tuple, dict]] = {}
    for key, c in p.terms().items():
        xpart = key[:n]
        comp = tuple(e for e in xpart if e)
        support = tuple(i for i, e in enumerate(xpart) if e)
        groups.setdefault(comp, {}).setdefault(support, {})[key[n:]] = c

    coeffs = {}
    for comp, by_support in sorted(groups.items()):
        supports = list(combinations(range(n), len(comp)))
        ref_support = next(s for s in supports if s in by_support)
        ref = by_support[ref_support]

        def full_key(support, qt):
            xpart = [0] * n
            for j, pos in enumerate(support):
                xpart[pos] = comp[j]
            return tuple(xpart) + qt

        for s in supports:
            got = by_support.get(s, {})
            if got != ref:
                qt = next(iter(set(ref) ^ set(got)), next(iter(ref)))
                raise NotQuasisymmetricError(
                    f"coefficient of placement {s} of {comp} differs from "
                    f"placement {ref_support}",
                    (full_key(ref_support, qt), full_key(s, qt)))
        coeffs[comp] = MPoly(n, {(0,) * n + qt: c for qt, c in ref.items()})
    return QSymExpansion(n, coeffs)


def hecke_T(p: MPoly, i: int) -> MPoly:
    """Hecke operator: t p - (t x_i - x_{i+1}) d_i p, with d_i the divided
    difference; polynomial for every polynomial input."""
    n = p.nvars
    tt = MPoly.t(n)
    factor = tt * MPoly.x(n, i) - MPoly.x(n, i + 1)
    return tt * p - factor * divided_difference(p, i)


def hecke_si(p: MPoly, i: int) -> MPoly:
    """The variable swap s_i, for checking symmetry-type identities."""
    return swap_vars(p, i, i + 1)


def demazure_t_atom(alpha, n: int) -> MPoly:
    """The q = 0, identity-basement polynomial for alpha (t-atom)."""
    alpha = check_composition(alpha)
    if len(alpha) > n:
        raise ValueError("composition longer than the variable count")
    alpha = alpha + (0,) * (n - len(alpha))
    return e_general_q0(alpha, identity_perm(n), n)


def qs_gamma(gamma, n: int) -> MPoly:
    """Quasisymmetric Schur polynomial: t-atoms summed over placements, at t=0."""
    total = MPoly.zero(n)
    for alpha in placements(gamma, n):
        total = total + specialize(demazure_t_atom(alpha, n), {"t": 0})
    return total
