"""One checker per congruence claim.

Every checker computes its two sides by disjoint codepaths: the left side
always comes from a counting engine (trinomial rows, binomial products,
explicit summation), the right side from Fermat-quotient closed forms or
plain constants.  Right-hand terms that carry an explicit factor p evaluate
their quotient coefficient mod p and lift; constant terms are exact at the
full claim modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .claims import CheckResult, ClaimId, result
from .harmonic import (
    check_half_third_sixth,
    check_progression_lemmas,
    check_reflections,
    harmonic_table,
    inverse_table,
)
from .modular import PrimeContext, fermat_quotient, inv_mod, rat_mod
from .trinomial import coeff_closed_mod_p2, halfrow_binomial_check, row_mod_prefix


@lru_cache(maxsize=4096)
def _prefix_coeffs(exponent: int, m: int, length: int) -> tuple[int, ...]:
    """Cached modular row prefix; one computation serves every checker that
    reads the same row (several claims share the exponent n*p - 1)."""
    return tuple(row_mod_prefix(exponent, m, length).coeffs)


def _binom_coprime_mod(a: int, k: int, m: int) -> int:
    """C(a, k) mod m as a falling-factorial quotient.

    Valid only when no prime factor of m divides any of a, a-1, ..., a-k+1
    or k!; the classical claims below only ever call it that way.
    """
    num = 1
    den = 1
    for i in range(1, k + 1):
        num = num * ((a - i + 1) % m) % m
        den = den * i % m
    return num * inv_mod(den, m).value % m


def check_thm1_eq2(ctx: PrimeContext, n: int) -> CheckResult:
    """Trinomial C(np-1, p-1)_2 mod p**2 vs +-(1 + n*p*q3) per p mod 3."""
    p, p2 = ctx.p, ctx.p2
    lhs = _prefix_coeffs(n * p - 1, p2, p)[p - 1]
    q3 = fermat_quotient(3, ctx).value
    if ctx.rc3 == 1:
        rhs = (1 + n * p * q3) % p2
    else:
        rhs = (-1 - n * p * q3) % p2
    return result(ClaimId.THM1_EQ2, p, p2, lhs, rhs, n=n)


def check_thm1_eq4(ctx: PrimeContext, n: int) -> CheckResult:
    """Trinomial C(np-1, (p-1)/2)_2 mod p**2 vs the half-row closed form."""
    p, p2 = ctx.p, ctx.p2
    lhs = _prefix_coeffs(n * p - 1, p2, p)[(p - 1) // 2]
    q2 = fermat_quotient(2, ctx).value
    q3 = fermat_quotient(3, ctx).value
    if ctx.rc6 == 1:
        coef = (2 * q2 + rat_mod(q3, 2, p).value) % p
        rhs = (1 + n * p * coef) % p2
    else:
        rhs = -n * p * rat_mod(q3, 2, p).value % p2
    return result(ClaimId.THM1_EQ4, p, p2, lhs, rhs, n=n)


def check_thm2_eq6(ctx: PrimeContext) -> CheckResult:
    """sum_{k=0..(p-1)/2} C(2k,k) * H_k mod p vs -+q3 per p mod 3.

    Central binomials mod p come from the multiplicative recurrence
    C(2k,k) = C(2k-2,k-1) * 2*(2k-1) / k; all factors stay below p.
    """
    p = ctx.p
    table = harmonic_table(ctx)
    inv = inverse_table(ctx)
    central = 1
    acc = 0  # k = 0 term vanishes with H_0 = 0
    for k in range(1, (p - 1) // 2 + 1):
        central = central * (2 * (2 * k - 1)) % p * inv[k] % p
        acc = (acc + central * table[k]) % p
    q3 = fermat_quotient(3, ctx).value
    rhs = -q3 % p if ctx.rc3 == 1 else q3 % p
    return result(ClaimId.THM2_EQ6, p, p, acc, rhs)


def check_thm2_eq7(ctx: PrimeContext) -> CheckResult:
    """sum_{k=1..floor((p-1)/4)} C(4k,2k)/4**k * (2*H_{2k} - H_k) mod p vs
    -+(-1)**((p-1)/2) * q3/2 per p mod 6."""
    p = ctx.p
    table = harmonic_table(ctx)
    inv = inverse_table(ctx)
    central4 = 1
    inv4_pow = 1
    acc = 0
    for k in range(1, (p - 1) // 4 + 1):
        step = (4 * k - 3) * (4 * k - 2) % p * (4 * k - 1) % p * (4 * k) % p
        den = inv[2 * k - 1] * inv[2 * k] % p
        central4 = central4 * step % p * den % p * den % p
        inv4_pow = inv4_pow * inv[4] % p
        acc = (acc + central4 * inv4_pow % p * (2 * table[2 * k] - table[k])) % p
    sign = 1 if (p - 1) // 2 % 2 == 0 else -1
    half_q3 = rat_mod(fermat_quotient(3, ctx).value, 2, p).value
    rhs = -sign * half_q3 % p if ctx.rc6 == 1 else sign * half_q3 % p
    return result(ClaimId.THM2_EQ7, p, p, acc, rhs)


def check_prop3_eq9(ctx: PrimeContext, n: int) -> CheckResult:
    """sum_{k=0..p-1} C(np-1,k)_2 mod p**2 vs 1 + n*p*q3 or 0 per p mod 3."""
    p, p2 = ctx.p, ctx.p2
    lhs = sum(_prefix_coeffs(n * p - 1, p2, p)) % p2
    if ctx.rc3 == 1:
        rhs = (1 + n * p * fermat_quotient(3, ctx).value) % p2
    else:
        rhs = 0
    return result(ClaimId.PROP3_EQ9, p, p2, lhs, rhs, n=n)


def check_prop3_eq10(ctx: PrimeContext, n: int) -> CheckResult:
    """sum_{k=0..(p-1)/2} C(np-1,k)_2 mod p**2 vs the half-range closed form."""
    p, p2 = ctx.p, ctx.p2
    row = _prefix_coeffs(n * p - 1, p2, p)
    lhs = sum(row[: (p - 1) // 2 + 1]) % p2
    q2 = fermat_quotient(2, ctx).value
    q3 = fermat_quotient(3, ctx).value
    if ctx.rc6 == 1:
        coef = (rat_mod(4 * q2, 3, p).value + q3) % p
        rhs = (1 + n * p * coef) % p2
    else:
        rhs = -n * p * rat_mod(2 * q2, 3, p).value % p2
    return result(ClaimId.PROP3_EQ10, p, p2, lhs, rhs, n=n)


def check_cor4_eq11(ctx: PrimeContext, n: int) -> list[CheckResult]:
    """C(n*p**2 - 1, k)_2 mod p**2 vs the 1, -1, 0 pattern by k mod 3,
    one record per k in 0..p-1."""
    p, p2 = ctx.p, ctx.p2
    row = _prefix_coeffs(n * p2 - 1, p2, p)
    pattern = (1, p2 - 1, 0)
    return [
        result(ClaimId.COR4_EQ11, p, p2, row[k], pattern[k % 3], n=n, k=k)
        for k in range(p)
    ]


def check_triple_sum(ctx: PrimeContext, n: int) -> list[CheckResult]:
    """Sum of the three closed forms at 3k, 3k+1, 3k+2 vs n*p/(3k+2) mod p**2,
    one record per k with 3k+2 <= p-1."""
    p, p2 = ctx.p, ctx.p2
    inv = inverse_table(ctx)
    out = []
    k = 0
    while 3 * k + 2 <= p - 1:
        lhs = (
            coeff_closed_mod_p2(n, ctx, 3 * k).value
            + coeff_closed_mod_p2(n, ctx, 3 * k + 1).value
            + coeff_closed_mod_p2(n, ctx, 3 * k + 2).value
        ) % p2
        rhs = n * p * inv[3 * k + 2] % p2
        out.append(result(ClaimId.TRIPLE_SUM_A, p, p2, lhs, rhs, n=n, k=k))
        k += 1
    return out


def check_babbage(ctx: PrimeContext) -> CheckResult:
    """C(2p-1, p-1) == 1 mod p**2."""
    lhs = _binom_coprime_mod(2 * ctx.p - 1, ctx.p - 1, ctx.p2)
    return result(ClaimId.BABBAGE, ctx.p, ctx.p2, lhs, 1)


def check_wolstenholme(ctx: PrimeContext) -> CheckResult:
    """C(2p-1, p-1) == 1 mod p**3."""
    lhs = _binom_coprime_mod(2 * ctx.p - 1, ctx.p - 1, ctx.p3)
    return result(ClaimId.WOLSTENHOLME, ctx.p, ctx.p3, lhs, 1)


def check_glaisher(ctx: PrimeContext, n: int) -> CheckResult:
    """C(np-1, p-1) == 1 mod p**3 for every n >= 1."""
    lhs = _binom_coprime_mod(n * ctx.p - 1, ctx.p - 1, ctx.p3)
    return result(ClaimId.GLAISHER, ctx.p, ctx.p3, lhs, 1, n=n)


def check_morley(ctx: PrimeContext) -> CheckResult:
    """C(p-1, (p-1)/2) vs (-1)**((p-1)/2) * 4**(p-1) mod p**3."""
    p, p3 = ctx.p, ctx.p3
    lhs = _binom_coprime_mod(p - 1, (p - 1) // 2, p3)
    sign = 1 if (p - 1) // 2 % 2 == 0 else -1
    rhs = sign * pow(4, p - 1, p3) % p3
    return result(ClaimId.MORLEY, p, p3, lhs, rhs)


def check_carlitz(ctx: PrimeContext) -> CheckResult:
    """(-1)**((p-1)/2) * C(p-1, (p-1)/2) vs 4**(p-1) + p**3/12 mod p**4."""
    p, p4 = ctx.p, ctx.p4
    sign = 1 if (p - 1) // 2 % 2 == 0 else -1
    lhs = sign * _binom_coprime_mod(p - 1, (p - 1) // 2, p4) % p4
    rhs = (pow(4, p - 1, p4) + ctx.p3 * inv_mod(12, p4).value) % p4
    return result(ClaimId.CARLITZ, p, p4, lhs, rhs)


def check_classical(ctx: PrimeContext, n: int) -> list[CheckResult]:
    """The five classical binomial congruences; only Glaisher depends on n."""
    return [
        check_babbage(ctx),
        check_wolstenholme(ctx),
        check_glaisher(ctx, n),
        check_morley(ctx),
        check_carlitz(ctx),
    ]


@dataclass(frozen=True)
class ClaimSpec:
    """How a claim is swept: whether it takes the n parameter, whether it
    emits one record per index k (collapsible in summary-only reports), and
    the runner producing its records for one prime."""

    claim: ClaimId
    per_n: bool
    per_instance: bool
    run: Callable[[PrimeContext, int | None], list[CheckResult]]


def _only(claim: ClaimId, grouped: Callable[[PrimeContext], list[CheckResult]]):
    def run(ctx: PrimeContext, n: int | None) -> list[CheckResult]:
        return [r for r in grouped(ctx) if r.claim is claim]

    return run


def _single(checker: Callable[[PrimeContext], CheckResult]):
    def run(ctx: PrimeContext, n: int | None) -> list[CheckResult]:
        return [checker(ctx)]

    return run


def _single_n(checker: Callable[[PrimeContext, int], CheckResult]):
    def run(ctx: PrimeContext, n: int | None) -> list[CheckResult]:
        return [checker(ctx, n)]

    return run


def _many_n(checker: Callable[[PrimeContext, int], list[CheckResult]]):
    def run(ctx: PrimeContext, n: int | None) -> list[CheckResult]:
        return checker(ctx, n)

    return run


def _grouped(checker: Callable[[PrimeContext], list[CheckResult]]):
    def run(ctx: PrimeContext, n: int | None) -> list[CheckResult]:
        return checker(ctx)

    return run


CLAIM_REGISTRY: dict[ClaimId, ClaimSpec] = {
    entry.claim: entry
    for entry in [
        ClaimSpec(ClaimId.THM1_EQ2, True, False, _single_n(check_thm1_eq2)),
        ClaimSpec(ClaimId.THM1_EQ4, True, False, _single_n(check_thm1_eq4)),
        ClaimSpec(ClaimId.THM2_EQ6, False, False, _single(check_thm2_eq6)),
        ClaimSpec(ClaimId.THM2_EQ7, False, False, _single(check_thm2_eq7)),
        ClaimSpec(ClaimId.PROP3_EQ9, True, False, _single_n(check_prop3_eq9)),
        ClaimSpec(ClaimId.PROP3_EQ10, True, False, _single_n(check_prop3_eq10)),
        ClaimSpec(ClaimId.COR4_EQ11, True, True, _many_n(check_cor4_eq11)),
        ClaimSpec(ClaimId.TRIPLE_SUM_A, True, True, _many_n(check_triple_sum)),
        ClaimSpec(ClaimId.BABBAGE, False, False, _single(check_babbage)),
        ClaimSpec(ClaimId.WOLSTENHOLME, False, False, _single(check_wolstenholme)),
        ClaimSpec(ClaimId.GLAISHER, True, False, _single_n(check_glaisher)),
        ClaimSpec(ClaimId.MORLEY, False, False, _single(check_morley)),
        ClaimSpec(ClaimId.CARLITZ, False, False, _single(check_carlitz)),
        ClaimSpec(
            ClaimId.HALF_ROW_BINOM, False, True, _grouped(halfrow_binomial_check)
        ),
        ClaimSpec(ClaimId.GL0, False, False, _only(ClaimId.GL0, check_half_third_sixth)),
        ClaimSpec(ClaimId.GL, False, False, _only(ClaimId.GL, check_half_third_sixth)),
        ClaimSpec(ClaimId.GL2, False, False, _only(ClaimId.GL2, check_half_third_sixth)),
        ClaimSpec(ClaimId.CONG0, False, True, _only(ClaimId.CONG0, check_reflections)),
        ClaimSpec(ClaimId.CONG1, False, True, _only(ClaimId.CONG1, check_reflections)),
        ClaimSpec(ClaimId.C1B, False, False, _only(ClaimId.C1B, check_progression_lemmas)),
        ClaimSpec(ClaimId.C1C, False, False, _only(ClaimId.C1C, check_progression_lemmas)),
        ClaimSpec(ClaimId.C2B, False, False, _only(ClaimId.C2B, check_progression_lemmas)),
        ClaimSpec(ClaimId.C2C, False, False, _only(ClaimId.C2C, check_progression_lemmas)),
        ClaimSpec(ClaimId.C3, False, False, _only(ClaimId.C3, check_progression_lemmas)),
        ClaimSpec(ClaimId.C3B, False, False, _only(ClaimId.C3B, check_progression_lemmas)),
        ClaimSpec(ClaimId.H0, False, False, _only(ClaimId.H0, check_progression_lemmas)),
        ClaimSpec(ClaimId.H1, False, False, _only(ClaimId.H1, check_progression_lemmas)),
        ClaimSpec(ClaimId.H2, False, False, _only(ClaimId.H2, check_progression_lemmas)),
        ClaimSpec(ClaimId.H3, False, False, _only(ClaimId.H3, check_progression_lemmas)),
    ]
}
