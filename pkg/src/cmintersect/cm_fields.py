"""Quartic CM field input validation and branch enumeration.

A field is given by the discriminant D of the real quadratic order and
integers (alpha0, alpha1, beta0, beta1) describing the relative trace and
norm of a generator over the basis (1, omega), omega = (D + sqrt(D))/2.
Validation derives the norm Dtilde of the relative discriminant and the
congruence constant cK, checking exactly (never in floating point) that
the relative discriminant is negative under both real embeddings and that
Dtilde is not a perfect square.

Branches of the intersection sum are enumerated in three layers: delta
(with D - 4*delta a perfect square), then n (a single residue class mod
2D, both signs, bounded by delta^2 * Dtilde), then the divisor f_u.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .integers import is_prime, perfect_square_root
from .quadratic_orders import discriminant_of


class FieldValidationError(ValueError):
    pass


class BadRealDiscriminant(FieldValidationError):
    pass


class NotTotallyImaginary(FieldValidationError):
    pass


class NotPrimitive(FieldValidationError):
    pass


class HalfIntegerDiscriminant(FieldValidationError):
    pass


class IntegralityViolation(ArithmeticError):
    pass


@dataclass(frozen=True)
class CMFieldParams:
    D: int
    alpha0: int
    alpha1: int
    beta0: int
    beta1: int
    index_bound: int = 1


@dataclass(frozen=True)
class CMFieldData:
    params: CMFieldParams
    Dtilde: int
    cK: int


@dataclass(frozen=True)
class DeltaContext:
    delta: int
    a: int
    sq: int          # sq^2 = D - 4*delta, sq = D - 2a
    C_delta: int     # 2 when 4*delta = D, else 1
    t_u: int
    t_x: int
    t_w: int


@dataclass(frozen=True)
class NContext:
    delta_ctx: DeltaContext
    n: int
    N: int           # (delta^2 Dtilde - n^2) / (4D), positive, multiple of ell
    n_u: int
    n_x: int
    n_w: int
    t_xuv: int
    d_u: int
    d_x: int
    d_w: int


def congruence_constant(params: CMFieldParams) -> int:
    """cK = a0^2 + a0 a1 D + a1^2 (D^2 - D)/4 - 4 b0 - 2 b1 D."""
    D, a0, a1, b0, b1 = params.D, params.alpha0, params.alpha1, params.beta0, params.beta1
    return a0 * a0 + a0 * a1 * D + a1 * a1 * (D * D - D) // 4 - 4 * b0 - 2 * b1 * D


def validate(params: CMFieldParams) -> CMFieldData:
    """Check the field data and compute (Dtilde, cK).

    The relative discriminant is A + B*sqrt(D) with 2A, 2B integers; both
    embeddings are negative iff 2A < 0 and (2A)^2 > (2B)^2 D, compared
    after clearing the halves.
    """
    D = params.D
    if D <= 0 or D % 4 not in (0, 1) or perfect_square_root(D) is not None:
        raise BadRealDiscriminant(f"D = {D} is not a valid non-square discriminant")
    if params.index_bound < 1:
        raise FieldValidationError("index bound must be a positive integer")
    cK = congruence_constant(params)
    a0, a1, b1 = params.alpha0, params.alpha1, params.beta1
    A2 = 2 * cK + a1 * a1 * D
    B2 = 2 * a0 * a1 + a1 * a1 * D - 4 * b1
    if (A2 * A2 - B2 * B2 * D) % 4:
        raise HalfIntegerDiscriminant(
            "norm of the relative discriminant is not an integer")
    if not (A2 < 0 and A2 * A2 > B2 * B2 * D):
        raise NotTotallyImaginary(
            "relative discriminant is not negative at both real embeddings")
    Dtilde = (A2 * A2 - B2 * B2 * D) // 4
    if perfect_square_root(Dtilde) is not None:
        raise NotPrimitive(f"Dtilde = {Dtilde} is a perfect square")
    return CMFieldData(params, Dtilde, cK)


def enumerate_delta(field: CMFieldData) -> tuple[DeltaContext, ...]:
    """All delta >= 1 with D - 4*delta a perfect square, ascending."""
    D = field.params.D
    a0, a1 = field.params.alpha0, field.params.alpha1
    out = []
    for delta in range(1, D // 4 + 1):
        sq = perfect_square_root(D - 4 * delta)
        if sq is None:
            continue
        a = (D - sq) // 2
        out.append(DeltaContext(
            delta=delta, a=a, sq=sq,
            C_delta=2 if 4 * delta == D else 1,
            t_u=a1 * delta,
            t_x=a0 + a * a1,
            t_w=a0 + (D - a) * a1,
        ))
    return tuple(out)


@lru_cache(maxsize=4096)
def _n_contexts(field: CMFieldData, dctx: DeltaContext) -> tuple[NContext, ...]:
    # all n in the admissible residue class with positive integral N,
    # independent of ell; cached because every prime reuses them
    params = field.params
    D, cK, Dt = params.D, field.cK, field.Dtilde
    delta, a, sq = dctx.delta, dctx.a, dctx.sq
    b0, b1 = params.beta0, params.beta1
    r = (-cK * delta) % (2 * D)
    # n^2 mod 4D is constant on the class, so integrality of N is too
    if (delta * delta * Dt - r * r) % (4 * D):
        return ()
    out = []
    bound = math.isqrt(delta * delta * Dt)  # floor(delta * sqrt(Dtilde))
    lo = -((bound + r) // (2 * D))
    hi = (bound - r) // (2 * D)
    for k in range(lo, hi + 1):
        n = r + 2 * D * k
        nsq = n * n
        if nsq >= delta * delta * Dt:
            continue
        N = (delta * delta * Dt - nsq) // (4 * D)
        step = (n + cK * delta) // (2 * D)
        n_u = -delta * step
        if n_u % delta:
            raise IntegralityViolation(f"n_u = {n_u} not divisible by delta = {delta}")
        t_xuv = b1 * delta - sq * (n_u // delta)
        n_x = b0 + a * b1 - n_u // delta
        n_w = b0 + (D - a) * b1 - n_u // delta
        d_u = dctx.t_u**2 - 4 * n_u
        d_x = dctx.t_x**2 - 4 * n_x
        d_w = dctx.t_w**2 - 4 * n_w
        if d_u >= 0:
            raise IntegralityViolation(f"d_u = {d_u} is not negative")
        if (d_x * d_u - (dctx.t_x * dctx.t_u - 2 * t_xuv) ** 2) != 4 * N:
            raise IntegralityViolation("norm identity failed; input inconsistent")
        out.append(NContext(dctx, n, N, n_u, n_x, n_w, t_xuv, d_u, d_x, d_w))
    return tuple(out)


def enumerate_n(field: CMFieldData, dctx: DeltaContext, ell: int) -> tuple[NContext, ...]:
    """All n with n = -cK*delta (mod 2D), N positive integral, ell | N."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    return tuple(ctx for ctx in _n_contexts(field, dctx) if ctx.N % ell == 0)


def enumerate_fu(nctx: NContext, ell: int) -> tuple[int, ...]:
    """Positive f_u with d_u/f_u^2 a discriminant whose order is maximal at ell."""
    d_u = nctx.d_u
    out = []
    f = 1
    while f * f <= -d_u:
        if d_u % (f * f) == 0 and (d_u // (f * f)) % 4 in (0, 1):
            if discriminant_of(d_u // (f * f)).f % ell:
                out.append(f)
        f += 1
    return tuple(out)


def t_pair(nctx: NContext, f_u: int) -> Fraction:
    """Exact value of (d_x d_u - f_u (t_x t_u - 2 t_xuv)) / (2 f_u^2)."""
    dctx = nctx.delta_ctx
    num = nctx.d_x * nctx.d_u - f_u * (dctx.t_x * dctx.t_u - 2 * nctx.t_xuv)
    return Fraction(num, 2 * f_u * f_u)
