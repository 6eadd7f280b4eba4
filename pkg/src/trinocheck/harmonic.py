"""Harmonic numbers and arithmetic-progression harmonic sums modulo p.

H_0 = 0 and H_n = 1 + 1/2 + ... + 1/n, with every division performed by
modular inversion.  The checkers at the bottom verify the stock of
harmonic-sum congruences (half/third/sixth prefixes against Fermat-quotient
combinations, reflection rules, and the arithmetic-progression sums) that
the trinomial closed forms are built on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .claims import CheckResult, ClaimId, result
from .modular import PrimeContext, Residue, fermat_quotient, inv_mod, rat_mod


def inverse_table(ctx: PrimeContext) -> list[int]:
    """inv[i] = i**-1 mod p for 1 <= i < p (inv[0] = 0).

    Uses the standard recurrence inv[i] = -(p // i) * inv[p % i]; required to
    be bit-equivalent to per-element inv_mod, which the tests enforce.
    """
    p = ctx.p
    inv = [0] * p
    inv[1] = 1
    for i in range(2, p):
        inv[i] = (p - p // i) * inv[p % i] % p
    return inv


@dataclass(frozen=True)
class HarmonicTable:
    """H_n mod p for 0 <= n <= p-1; immutable and shareable.

    Entry 0 is 0 by definition and entry p-1 is 0 (the numerator of
    H_{p-1} is divisible by p for p >= 5).
    """

    ctx: PrimeContext
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def harmonic_table(ctx: PrimeContext) -> HarmonicTable:
    """Prefix sums of modular inverses: O(p) time, one entry per 0 <= n < p."""
    inv = inverse_table(ctx)
    p = ctx.p
    values = [0] * p
    acc = 0
    for n in range(1, p):
        acc = (acc + inv[n]) % p
        values[n] = acc
    return HarmonicTable(ctx, tuple(values))


def ap_harmonic(m: int, d: int, r: int, ctx: PrimeContext) -> Residue:
    """Sum_{k=0..m} 1/(d*k + r) mod p (empty when m < 0).

    Raises NotInvertible if any term d*k + r hits a multiple of p.
    """
    p = ctx.p
    acc = 0
    for k in range(m + 1):
        acc += inv_mod(d * k + r, p).value
    return Residue(acc, p)


def check_half_third_sixth(
    ctx: PrimeContext, table: HarmonicTable | None = None
) -> list[CheckResult]:
    """H at the floor(p/2), floor(p/3), floor(p/6) prefixes vs -2*q2, -(3/2)*q3
    and their sum, all mod p."""
    if table is None:
        table = harmonic_table(ctx)
    p = ctx.p
    q2 = fermat_quotient(2, ctx).value
    q3 = fermat_quotient(3, ctx).value
    half_rhs = -2 * q2 % p
    third_rhs = rat_mod(-3 * q3, 2, p).value
    sixth_rhs = (half_rhs + third_rhs) % p
    return [
        result(ClaimId.GL0, p, p, table[p // 2], half_rhs),
        result(ClaimId.GL, p, p, table[p // 3], third_rhs),
        result(ClaimId.GL2, p, p, table[p // 6], sixth_rhs),
    ]


def check_reflections(
    ctx: PrimeContext, table: HarmonicTable | None = None
) -> list[CheckResult]:
    """Reflection rules, one record per index k:

    H_{p-k} == H_{k-1} for 1 <= k <= p-1, and
    H_{(p-1)/2 - k} == -2*q2 + 2*H_{2k} - H_k for 1 <= k <= (p-1)/2.
    """
    if table is None:
        table = harmonic_table(ctx)
    p = ctx.p
    q2 = fermat_quotient(2, ctx).value
    out = []
    for k in range(1, p):
        out.append(result(ClaimId.CONG0, p, p, table[p - k], table[k - 1], k=k))
    half = (p - 1) // 2
    for k in range(1, half + 1):
        rhs = (-2 * q2 + 2 * table[2 * k] - table[k]) % p
        out.append(result(ClaimId.CONG1, p, p, table[half - k], rhs, k=k))
    return out


def check_progression_lemmas(ctx: PrimeContext) -> list[CheckResult]:
    """Arithmetic-progression harmonic sums against their closed forms mod p.

    Emits only the claims applicable to ctx's residue class; inapplicable
    claims contribute no record at all (no vacuous passes).  All term
    indices stay below p, so every inversion exists.
    """
    p = ctx.p
    q2 = fermat_quotient(2, ctx).value
    q3 = fermat_quotient(3, ctx).value
    half_q3 = rat_mod(q3, 2, p).value
    out = []
    if ctx.rc3 == 1:
        m = (p - 4) // 3
        out.append(result(ClaimId.C1B, p, p, ap_harmonic(m, 3, 2, ctx).value, 0))
        out.append(
            result(ClaimId.C1C, p, p, ap_harmonic(m, 3, 1, ctx).value, half_q3)
        )
    else:
        m = (p - 5) // 3
        out.append(result(ClaimId.C2B, p, p, ap_harmonic(m, 3, 1, ctx).value, 1))
        out.append(
            result(ClaimId.C2C, p, p, ap_harmonic(m, 3, 2, ctx).value, half_q3)
        )
    two_thirds_q2 = rat_mod(-2 * q2, 3, p).value
    if ctx.rc6 == 1:
        m = (p - 1) // 6
        odd_rhs = (q2 + rat_mod(-3 * q3, 4, p).value + rat_mod(3, 2, p).value) % p
        out.append(
            result(ClaimId.C3, p, p, ap_harmonic(m, 2, 1, ctx).value, odd_rhs)
        )
        out.append(
            result(
                ClaimId.H0, p, p, ap_harmonic(m, 3, 1, ctx).value,
                (two_thirds_q2 + 2) % p,
            )
        )
        out.append(
            result(
                ClaimId.H1, p, p, ap_harmonic(m, 3, 2, ctx).value,
                (two_thirds_q2 + half_q3 + rat_mod(2, 3, p).value) % p,
            )
        )
    else:
        m = (p - 5) // 6
        odd_rhs = (q2 + rat_mod(-3 * q3, 4, p).value) % p
        out.append(
            result(ClaimId.C3B, p, p, ap_harmonic(m, 2, 1, ctx).value, odd_rhs)
        )
        out.append(
            result(
                ClaimId.H3, p, p, ap_harmonic(m, 3, 1, ctx).value,
                (half_q3 + two_thirds_q2) % p,
            )
        )
        out.append(
            result(
                ClaimId.H2, p, p, ap_harmonic(m, 3, 2, ctx).value, two_thirds_q2
            )
        )
    return out
