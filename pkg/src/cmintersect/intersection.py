"""Assembly of the intersection-number sum and its companion reports.

The coefficient of log(ell) is a finite triple sum over branches
(delta, n, f_u); each summand is C_delta * mu * (local root-count product)
* (embedding-pair count).  The result is exact when the field data is
monogenic, no enumerated delta is divisible by ell, and every pair count
was exact; otherwise it is an upper bound, with a global factor of two
exactly when some enumerated delta is divisible by ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cm_fields import (CMFieldData, NContext, enumerate_delta, enumerate_fu,
                        enumerate_n)
from .embedding_counts import EXACT, UPPER_BOUND, build_query, scrJ
from .integers import factorize, hilbert_symbol, is_prime, padic_val
from .local_roots import frakI
from .quadratic_orders import count_all_ideals, discriminant_of, rho_simplified

MODE_MONOGENIC = "monogenic"
MODE_INDEX_BOUND = "index-bound"


class IndexHypothesisViolated(ValueError):
    pass


@dataclass(frozen=True)
class ContributionRow:
    delta: int
    n: int
    f_u: int
    C_delta: int
    mu: Fraction
    frakI: int
    scrJ_value: int
    scrJ_exactness: str
    product: Fraction


@dataclass(frozen=True)
class IntersectionReport:
    value: Fraction            # coefficient of log(ell)
    exactness: str
    mode: str
    ell: int
    rows: tuple[ContributionRow, ...]
    warnings: tuple[str, ...] = ()


def mu_ell(nctx: NContext, ell: int) -> Fraction:
    """v_ell(N) when ell divides both d_u and d_x, else (v_ell(N) + 1)/2."""
    v = padic_val(nctx.N, ell)
    if nctx.d_u % ell == 0 and nctx.d_x % ell == 0:
        return Fraction(v)
    return Fraction(v + 1, 2)


def _check_index_hypothesis(field: CMFieldData, ell: int) -> None:
    index = field.params.index_bound
    if index % ell == 0:
        raise IndexHypothesisViolated(
            f"index bound {index} is divisible by ell = {ell}")
    for p, _ in factorize(index).factors:
        if p <= field.params.D // 4:
            raise IndexHypothesisViolated(
                f"index bound {index} is divisible by {p} <= D/4")


def intersection_number(field: CMFieldData, ell: int) -> IntersectionReport:
    """Exact value or flagged upper bound of the log(ell) coefficient."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    mode = MODE_MONOGENIC if field.params.index_bound == 1 else MODE_INDEX_BOUND
    if mode == MODE_INDEX_BOUND:
        _check_index_hypothesis(field, ell)
    rows = []
    warnings = []
    ell_divides_delta = False
    all_exact = True
    for dctx in enumerate_delta(field):
        if dctx.delta % ell == 0:
            ell_divides_delta = True
        for nctx in enumerate_n(field, dctx, ell):
            mu = mu_ell(nctx, ell)
            for f_u in enumerate_fu(nctx, ell):
                weight = frakI(nctx, f_u, ell)
                query = build_query(nctx, f_u, ell, field)
                if query.t.denominator != 1:
                    warnings.append(
                        f"non-integral pairing value t at "
                        f"(delta={dctx.delta}, n={nctx.n}, f_u={f_u}): {query.t}")
                result = scrJ(query)
                if result.exactness != EXACT:
                    all_exact = False
                product = dctx.C_delta * mu * weight * result.value
                rows.append(ContributionRow(
                    delta=dctx.delta, n=nctx.n, f_u=f_u,
                    C_delta=dctx.C_delta, mu=mu, frakI=weight,
                    scrJ_value=result.value,
                    scrJ_exactness=result.exactness,
                    product=product))
    value = sum((row.product for row in rows), Fraction(0))
    if not all_exact:
        warnings.append(
            "some embedding-pair counts are only upper bounds "
            "(ideal norm shares a factor with an order conductor)")
    if ell_divides_delta:
        value *= 2
        warnings.append(
            "ell divides an enumerated delta: value is twice the branch sum "
            "and only an upper bound")
    if mode == MODE_INDEX_BOUND:
        warnings.append("non-trivial index bound: value is an upper bound")
    exact = (mode == MODE_MONOGENIC) and not ell_divides_delta and all_exact
    return IntersectionReport(
        value=value,
        exactness=EXACT if exact else UPPER_BOUND,
        mode=mode, ell=ell, rows=tuple(rows), warnings=tuple(warnings))


def enumerate_candidate_primes(field: CMFieldData, max_prime: int | None = None):
    """Primes ell that pass the symbol screen, with their witnesses.

    A witness is a pair (delta, n) with N = (delta^2 Dtilde - n^2)/(4D) a
    positive multiple of ell and (d_u(n), -N)_p = 1 at every finite prime
    p != ell; the product formula then forces -1 at ell itself, since the
    symbol at the archimedean place is -1.  Searching divisors of 2 d_u N
    suffices.  `max_prime` truncates the factor search (the full
    enumeration is bounded by max delta^2 Dtilde / 4D anyway).
    """
    found: dict[int, list[tuple[int, int]]] = {}
    for dctx in enumerate_delta(field):
        for nctx in enumerate_n_all(field, dctx):
            if max_prime is None:
                ells = nctx_prime_divisors(nctx.N)
            else:
                ells = [p for p in _primes_up_to(max_prime) if nctx.N % p == 0]
            for ell in ells:
                if _witness_symbols_hold(nctx, ell):
                    found.setdefault(ell, []).append((dctx.delta, nctx.n))
    return tuple(sorted((ell, tuple(ws)) for ell, ws in found.items()))


def enumerate_n_all(field: CMFieldData, dctx):
    """Admissible n with positive integral N, no divisibility constraint."""
    from .cm_fields import _n_contexts
    return _n_contexts(field, dctx)


def nctx_prime_divisors(N: int):
    return list(factorize(N).primes())


def _primes_up_to(bound: int):
    return [p for p in range(2, bound + 1) if is_prime(p)]


def _witness_symbols_hold(nctx: NContext, ell: int) -> bool:
    primes = {2}
    primes.update(factorize(nctx.d_u).primes())
    primes.update(factorize(nctx.N).primes())
    for p in primes:
        if p != ell and hilbert_symbol(nctx.d_u, -nctx.N, p) == -1:
            return False
    # product over all places is 1 and the archimedean symbol is -1
    return hilbert_symbol(nctx.d_u, -nctx.N, ell) == -1


def special_case_value(field: CMFieldData, ell: int):
    """Simplified sum valid when every d_u is fundamental and ell misses delta.

    Returns None unless the hypotheses hold for every enumerated branch;
    the branch constant here is 1/2 (not 2) when 4 delta = D, following
    the simplified statement's own convention.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if field.params.index_bound != 1:
        return None
    deltas = enumerate_delta(field)
    if any(dctx.delta % ell == 0 for dctx in deltas):
        return None
    branches = []
    for dctx in deltas:
        for nctx in enumerate_n(field, dctx, ell):
            if discriminant_of(nctx.d_u).f != 1:
                return None
            branches.append((dctx, nctx))
    total = Fraction(0)
    for dctx, nctx in branches:
        c_delta = Fraction(1, 2) if 4 * dctx.delta == field.params.D else Fraction(1)
        disc = discriminant_of(nctx.d_u)
        rho = rho_simplified(disc, nctx.N, ell)
        ideal_count = count_all_ideals(disc, nctx.N // ell) if nctx.N // ell >= 1 else 0
        total += c_delta * mu_ell(nctx, ell) * rho * ideal_count
    return total
