"""Characteristic series, solvability and nilpotency predicates, radicals.

All series are reported in ambient coordinates as `Subspace` terms, even
when computed for a proper subalgebra: products of subspaces do not care
whether the computation happens in a restriction or in the ambient
algebra.  Full-algebra series and predicates are cached on the algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LeibnizAlgebra
from .enumeration import DEFAULT_BUDGET, enumerate_spaces
from .errors import InfiniteFieldUnsupported, LeibnizError
from .linalg import Subspace


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple
    terminated: bool  # stabilized on its own rather than hitting the step cap

    @property
    def reaches_zero(self) -> bool:
        return self.terms[-1].dim == 0


def _step_cap(L: LeibnizAlgebra) -> int:
    return 2 * L.dim + 4


def derived_series(L: LeibnizAlgebra, U: Subspace | None = None) -> SeriesReport:
    cache = U is None
    if cache and "derived_series" in L._cache:
        return L._cache["derived_series"]
    term = L.full_space() if U is None else U
    terms = [term]
    terminated = False
    for _ in range(_step_cap(L)):
        nxt = L.product(term, term)
        if nxt == term:
            terminated = True
            break
        terms.append(nxt)
        term = nxt
        if term.dim == 0:
            terminated = True
            break
    report = SeriesReport("derived", tuple(terms), terminated)
    if cache:
        L._cache["derived_series"] = report
    return report


def lower_central_series(L: LeibnizAlgebra, U: Subspace | None = None) -> SeriesReport:
    cache = U is None
    if cache and "lower_central" in L._cache:
        return L._cache["lower_central"]
    base = L.full_space() if U is None else U
    term = base
    terms = [term]
    terminated = False
    for _ in range(_step_cap(L)):
        nxt = L.product(term, base)
        if nxt == term:
            terminated = True
            break
        terms.append(nxt)
        term = nxt
        if term.dim == 0:
            terminated = True
            break
    report = SeriesReport("lower_central", tuple(terms), terminated)
    if cache:
        L._cache["lower_central"] = report
    return report


def upper_central_series(L: LeibnizAlgebra) -> SeriesReport:
    if "upper_central" in L._cache:
        return L._cache["upper_central"]
    term = L.zero_space()
    terms = [term]
    for _ in range(L.dim + 1):
        Q, qmap = L.quotient(term)
        centre_q = Q.centre()
        if centre_q.dim == 0:
            break
        vectors = list(term.basis) + [qmap.lift(v) for v in centre_q.basis]
        nxt = L.span(vectors)
        if nxt == term:
            break
        terms.append(nxt)
        term = nxt
    report = SeriesReport("upper_central", tuple(terms), True)
    L._cache["upper_central"] = report
    return report


def hypercentre(L: LeibnizAlgebra) -> Subspace:
    return upper_central_series(L).terms[-1]


def nilpotent_residual(L: LeibnizAlgebra, U: Subspace | None = None) -> Subspace:
    """Stabilized term of the lower central series: smallest term K with
    the quotient (U or L)/K nilpotent."""
    return lower_central_series(L, U).terms[-1]


def lower_nilpotent_series(L: LeibnizAlgebra) -> SeriesReport:
    """N_0 = L, each next term the nilpotent residual of the previous one,
    taken as an algebra in its own right."""
    if "lower_nilpotent" in L._cache:
        return L._cache["lower_nilpotent"]
    term = L.full_space()
    terms = [term]
    for _ in range(L.dim + 1):
        nxt = nilpotent_residual(L, term)
        if nxt == term:
            break
        terms.append(nxt)
        term = nxt
        if term.dim == 0:
            break
    report = SeriesReport("lower_nilpotent", tuple(terms), True)
    L._cache["lower_nilpotent"] = report
    return report


def is_nilpotent(L: LeibnizAlgebra) -> bool:
    if "is_nilpotent" not in L._cache:
        L._cache["is_nilpotent"] = lower_central_series(L).reaches_zero
    return L._cache["is_nilpotent"]


def is_solvable(L: LeibnizAlgebra) -> bool:
    if "is_solvable" not in L._cache:
        L._cache["is_solvable"] = derived_series(L).reaches_zero
    return L._cache["is_solvable"]


def is_completely_solvable(L: LeibnizAlgebra) -> bool:
    """The derived subalgebra is nilpotent (sometimes called strongly
    solvable)."""
    if "is_completely_solvable" not in L._cache:
        report = lower_central_series(L, L.derived_space())
        L._cache["is_completely_solvable"] = report.reaches_zero
    return L._cache["is_completely_solvable"]


def is_metabelian(L: LeibnizAlgebra) -> bool:
    return L.is_abelian_space(L.derived_space())


def nilpotency_class(L: LeibnizAlgebra) -> int:
    report = lower_central_series(L)
    if not report.reaches_zero:
        raise LeibnizError("nilpotency class undefined: algebra is not nilpotent")
    return len(report.terms) - 1


def derived_length(L: LeibnizAlgebra) -> int:
    report = derived_series(L)
    if not report.reaches_zero:
        raise LeibnizError("derived length undefined: algebra is not solvable")
    return len(report.terms) - 1


def is_nilpotent_space(L: LeibnizAlgebra, U: Subspace) -> bool:
    return lower_central_series(L, U).reaches_zero


def is_solvable_space(L: LeibnizAlgebra, U: Subspace) -> bool:
    return derived_series(L, U).reaches_zero


def nilradical(L: LeibnizAlgebra, budget: int = DEFAULT_BUDGET):
    """Largest nilpotent ideal when computable exactly.

    Returns (subspace, mode) with mode "exact" or "lower_bound".  Exact
    answers come from the nilpotent case or from exhausting the ideals of
    a small finite-field algebra.  Otherwise the result is a verified
    nilpotent ideal containing the hypercentre, the squares ideal and the
    first nilpotent derived term, which may be smaller than the true
    nilradical.
    """
    if "nilradical" in L._cache:
        return L._cache["nilradical"]
    result = _nilradical_uncached(L, budget)
    L._cache["nilradical"] = result
    return result


def _nilradical_uncached(L: LeibnizAlgebra, budget: int):
    if is_nilpotent(L):
        return L.full_space(), "exact"
    if L.field.is_finite:
        try:
            ideals = enumerate_spaces(L, "ideals", budget)
        except Exception:
            ideals = None
        if ideals is not None:
            total = L.zero_space()
            for I in ideals:
                if is_nilpotent_space(L, I):
                    total = total.add(I)
            if not is_nilpotent_space(L, total):
                raise LeibnizError(
                    "sum of nilpotent ideals failed its nilpotency check")
            return total, "exact"
    total = hypercentre(L).add(L.leib_ideal())
    for term in derived_series(L).terms[1:]:
        if is_nilpotent_space(L, term):
            total = total.add(term)
            break
    if not L.is_ideal(total) or not is_nilpotent_space(L, total):
        raise LeibnizError("nilradical lower bound failed verification")
    return total, "lower_bound"


def radical(L: LeibnizAlgebra, budget: int = DEFAULT_BUDGET):
    """Largest solvable ideal; exact or it refuses.

    Returns (subspace, "exact").  Over infinite fields the only exact case
    implemented is the solvable one; anything else raises
    InfiniteFieldUnsupported rather than guessing.
    """
    if "radical" in L._cache:
        return L._cache["radical"]
    if is_solvable(L):
        result = (L.full_space(), "exact")
    elif L.field.is_finite:
        total = L.zero_space()
        for I in enumerate_spaces(L, "ideals", budget):
            if is_solvable_space(L, I):
                total = total.add(I)
        if not is_solvable_space(L, total):
            raise LeibnizError("sum of solvable ideals failed its solvability check")
        result = (total, "exact")
    else:
        raise InfiniteFieldUnsupported(
            "radical of a non-solvable algebra needs a finite ground field")
    L._cache["radical"] = result
    return result
