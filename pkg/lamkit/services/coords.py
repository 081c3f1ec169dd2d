"""Triangle and Dynnikov coordinates of integral laminations on D_n.

Arcs are numbered as usual: alpha_{2i-1} and alpha_{2i} join puncture i+1 to
the boundary above and below it, beta_i runs between punctures i and i+1.
Strip S_i is the pair of triangles either side of puncture i+1, bounded by
beta_i and beta_{i+1}.  All indices in the public API are 1-based.
"""

import logging

from lamkit.errors import (
    InvalidTriangleError,
    StripIndexError,
    ZeroLaminationError,
)
from lamkit.models import (
    DynnikovCoords,
    LoopSide,
    RelaxedCurve,
    StripStats,
    TriangleCoords,
    Violation,
    check_int64,
)

logger = logging.getLogger(__name__)

__all__ = [
    'check_int64',
    'dynnikov_from_triangle',
    'triangle_from_dynnikov',
    'validate_triangle',
    'ensure_valid',
    'strip_stats',
    'relaxed_curve_dynnikov',
    'relaxed_curve_triangle',
    'beta_recovery_holds',
]


def _check_strip(t: TriangleCoords, i: int) -> None:
    if not 1 <= i <= t.n - 2:
        raise StripIndexError(f'strip index must be in 1..{t.n - 2}, got {i}')


# ── Per-strip statistics ──────────────────────────────────────────────────────

def strip_stats(t: TriangleCoords, i: int) -> StripStats:
    """Loop, above and below component counts of strip S_i.

    Assumes ``t`` is valid; on invalid input ``above``/``below`` may come out
    negative, which is exactly what ``validate_triangle`` looks for.
    """
    _check_strip(t, i)
    upper = t.alpha_at(2 * i - 1)
    lower = t.alpha_at(2 * i)
    # beta parity is a separate invariant; floor division keeps this total
    b = (t.beta_at(i) - t.beta_at(i + 1)) // 2
    above = upper - abs(b)
    below = lower - abs(b)
    return StripStats(
        index=i,
        b=b,
        loop_side=LoopSide.of(b),
        above=above,
        below=below,
        m=min(above, below),
        x=abs(lower - upper),
    )


# ── Validation ────────────────────────────────────────────────────────────────

def validate_triangle(t: TriangleCoords) -> list[Violation]:
    """Return every violated invariant of ``t``; an empty list means valid."""
    violations: list[Violation] = []

    for pos, value in enumerate(t.alpha, start=1):
        if value < 0:
            violations.append(Violation('negative_entry', None, f'alpha_{pos} = {value} < 0'))
    for pos, value in enumerate(t.beta, start=1):
        if value < 0:
            violations.append(Violation('negative_entry', None, f'beta_{pos} = {value} < 0'))

    if not any(t.alpha) and not any(t.beta):
        violations.append(Violation('zero_vector', None, 'the empty lamination has no coordinates'))
        return violations

    for pos, value in enumerate(t.beta, start=1):
        if value % 2:
            violations.append(Violation('beta_parity', None, f'beta_{pos} = {value} is odd'))

    min_m: int | None = None
    for i in t.strips:
        stats = strip_stats(t, i)
        upper, lower = t.alpha_at(2 * i - 1), t.alpha_at(2 * i)
        left, right = t.beta_at(i), t.beta_at(i + 1)
        if upper + lower != max(left, right):
            violations.append(Violation(
                'strip_sum', i,
                f'alpha_{2 * i - 1} + alpha_{2 * i} = {upper + lower} '
                f'!= max(beta_{i}, beta_{i + 1}) = {max(left, right)}',
            ))
        if stats.x % 2:
            violations.append(Violation(
                'alpha_parity', i, f'alpha_{2 * i} - alpha_{2 * i - 1} = {lower - upper} is odd',
            ))
        if stats.above < 0:
            violations.append(Violation(
                'above_negative', i, f'alpha_{2 * i - 1} - |b_{i}| = {stats.above} < 0',
            ))
        if stats.below < 0:
            violations.append(Violation(
                'below_negative', i, f'alpha_{2 * i} - |b_{i}| = {stats.below} < 0',
            ))
        min_m = stats.m if min_m is None else min(min_m, stats.m)

    if min_m is not None and min_m > 0:
        violations.append(Violation(
            'no_min_zero', None,
            f'min m_i = {min_m} != 0: every strip has both above and below '
            'components, so some curve is parallel to the boundary',
        ))

    return violations


def ensure_valid(t: TriangleCoords) -> None:
    """Raise ``InvalidTriangleError`` listing every violation of ``t``."""
    violations = validate_triangle(t)
    if violations:
        logger.debug(
            'Rejected triangle coordinates %s (%d violation(s))',
            t.to_json(),
            len(violations),
        )
        raise InvalidTriangleError(violations)


# ── The bijection ─────────────────────────────────────────────────────────────

def dynnikov_from_triangle(t: TriangleCoords) -> DynnikovCoords:
    """rho: a_i = (alpha_{2i} - alpha_{2i-1}) / 2, b_i = (beta_i - beta_{i+1}) / 2."""
    ensure_valid(t)
    a = tuple((t.alpha_at(2 * i) - t.alpha_at(2 * i - 1)) // 2 for i in t.strips)
    b = tuple((t.beta_at(i) - t.beta_at(i + 1)) // 2 for i in t.strips)
    return DynnikovCoords(t.n, a, b)


def triangle_from_dynnikov(d: DynnikovCoords) -> TriangleCoords:
    """Invert rho.

    beta_1 is twice the largest |a_k| + max(b_k, 0) + (b_1 + ... + b_{k-1});
    every other beta telescopes from it, and each alpha pair is split about
    the larger of the two betas bounding its strip.
    """
    if d.is_zero:
        raise ZeroLaminationError('the zero vector is not the coordinate of any lamination')

    strips = d.n - 2
    partial = [0] * (strips + 1)   # partial[k] = b_1 + ... + b_k
    for k in range(1, strips + 1):
        partial[k] = partial[k - 1] + d.b[k - 1]

    half_beta1 = max(
        abs(d.a[k - 1]) + max(d.b[k - 1], 0) + partial[k - 1]
        for k in range(1, strips + 1)
    )
    beta = tuple(
        check_int64(2 * (half_beta1 - partial[i - 1]), f'beta_{i}')
        for i in range(1, d.n)
    )

    alpha: list[int] = []
    for k in range(1, strips + 1):
        a_k, b_k = d.a[k - 1], d.b[k - 1]
        if b_k > 0:
            half = beta[k - 1] // 2
        elif b_k < 0:
            half = beta[k] // 2
        else:
            assert beta[k - 1] == beta[k], f'b_{k} = 0 but beta_{k} != beta_{k + 1}'
            half = beta[k - 1] // 2
        alpha.append(check_int64(half - a_k, f'alpha_{2 * k - 1}'))
        alpha.append(check_int64(half + a_k, f'alpha_{2 * k}'))

    return TriangleCoords(d.n, tuple(alpha), beta)


def beta_recovery_holds(t: TriangleCoords) -> bool:
    """Check how the betas of a valid ``t`` are recovered from (a, b).

    Per strip, beta_i = 2(|a_i| + max(b_i, 0) + m_i); globally beta_1 is
    twice the largest |a_k| + max(b_k, 0) + (b_1 + ... + b_{k-1}).
    """
    partial = 0
    candidates = []
    for i in t.strips:
        stats = strip_stats(t, i)
        a_i = (t.alpha_at(2 * i) - t.alpha_at(2 * i - 1)) // 2
        if stats.x != 2 * abs(a_i):
            return False
        if t.beta_at(i) != 2 * (abs(a_i) + max(stats.b, 0) + stats.m):
            return False
        candidates.append(abs(a_i) + max(stats.b, 0) + partial)
        partial += stats.b
    return t.beta_at(1) == 2 * max(candidates)


# ── Relaxed curves ────────────────────────────────────────────────────────────

def relaxed_curve_dynnikov(c: RelaxedCurve) -> DynnikovCoords:
    """rho(C_ij): a = 0, b_{i-1} = -1 if i > 1, b_{j-1} = +1 if j < n."""
    b = [0] * (c.n - 2)
    if c.i > 1:
        b[c.i - 2] = -1
    if c.j < c.n:
        b[c.j - 2] = 1
    return DynnikovCoords(c.n, (0,) * (c.n - 2), tuple(b))


def relaxed_curve_triangle(c: RelaxedCurve) -> TriangleCoords:
    return triangle_from_dynnikov(relaxed_curve_dynnikov(c))
