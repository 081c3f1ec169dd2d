import logging

from lamkit.errors import DimensionMismatchError, StripIndexError
from lamkit.models import (
    DynnikovCoords,
    IntervalFamily,
    RelaxedCurve,
    SCounts,
    TriangleCoords,
    check_int64,
)
from lamkit.services.coords import (
    ensure_valid,
    relaxed_curve_dynnikov,
    strip_stats,
    triangle_from_dynnikov,
)

logger = logging.getLogger(__name__)

__all__ = [
    'relaxed_curve_dynnikov',
    's_counts',
    'enclosing_loops',
    'intersect_relaxed',
    'intersect_relaxed_dynnikov',
    'intersect_relaxed_family',
    'd3_relaxed_curves',
    'intersect_d3',
]


def _same_punctures(first_n: int, second_n: int, what: str) -> None:
    if first_n != second_n:
        raise DimensionMismatchError(f'{what}: D_{first_n} vs D_{second_n}')


def _beta_or_zero(t: TriangleCoords, i: int) -> int:
    # beta_0 and beta_n are virtual arcs that no lamination crosses
    if 1 <= i <= t.n - 1:
        return t.beta_at(i)
    return 0


def s_counts(t: TriangleCoords, i: int, j: int) -> SCounts:
    """Above and below components of L running straight through S_i..S_j."""
    if not 1 <= i <= j <= t.n - 2:
        raise StripIndexError(
            f'strip range must satisfy 1 <= i <= j <= {t.n - 2}, got i={i}, j={j}'
        )
    stats = [strip_stats(t, k) for k in range(i, j + 1)]
    s_above = min(s.above for s in stats)
    s_below = min(s.below for s in stats)
    return SCounts(s_above, s_below, check_int64(s_above + s_below, 's'))


def _straight_loops(t: TriangleCoords, loops: int, base: tuple[int, int], strips: range) -> int:
    # loops are nested, so the outermost ones leave first as straight strands
    if not loops:
        return 0
    stats = [strip_stats(t, k) for k in strips]
    above = min(s.above for s in stats) - base[0]
    below = min(s.below for s in stats) - base[1]
    return max(0, min(loops, above, below))


def enclosing_loops(t: TriangleCoords, c: RelaxedCurve) -> int:
    """Loop components of L in S_{i-1,j-1} that go round all of punctures i..j.

    Such a component closes round puncture i (or j) and runs straight through
    the strips of the other enclosed punctures, so like an above or below
    component it can be pushed off C_ij.
    """
    total = 0
    if c.j < c.n:
        if c.i == 1:
            loops, base = t.beta_at(1) // 2, (0, 0)
        else:
            stats = strip_stats(t, c.i - 1)
            loops, base = max(-stats.b, 0), (stats.above, stats.below)
        total += _straight_loops(t, loops, base, range(c.i, c.j))
    if c.i > 1:
        if c.j == c.n:
            loops, base = t.beta_at(c.n - 1) // 2, (0, 0)
        else:
            stats = strip_stats(t, c.j - 1)
            loops, base = max(stats.b, 0), (stats.above, stats.below)
        total += _straight_loops(t, loops, base, range(c.i - 1, c.j - 1))
    return total


def intersect_relaxed(t: TriangleCoords, c: RelaxedCurve) -> int:
    """i(L, C_ij) = beta_{i-1} + beta_j - 2 (s_{i-1,j-1} + e_ij).

    e_ij is ``enclosing_loops``.  At i = 1 or j = n one bounding arc is
    virtual, so nothing runs straight through and the s term vanishes.
    """
    _same_punctures(t.n, c.n, 'lamination and curve live on different disks')
    ensure_valid(t)

    if c.i == 1 or c.j == c.n:
        straight = 0
    else:
        straight = s_counts(t, c.i - 1, c.j - 1).s
    removable = straight + enclosing_loops(t, c)
    value = _beta_or_zero(t, c.i - 1) + _beta_or_zero(t, c.j) - 2 * removable
    return check_int64(value, f'i(L, C_{c.i}{c.j})')


def intersect_relaxed_dynnikov(d: DynnikovCoords, c: RelaxedCurve) -> int:
    return intersect_relaxed(triangle_from_dynnikov(d), c)


def intersect_relaxed_family(t: TriangleCoords, f: IntervalFamily) -> int:
    """Sum of i(L, C) over the components of a relaxed multicurve."""
    _same_punctures(t.n, f.n, 'lamination and family live on different disks')
    total = 0
    for curve in f:
        total += intersect_relaxed(t, curve)
    logger.debug('i(L, family of %d curves) = %d', len(f), total)
    return check_int64(total, 'i(L, family)')


def d3_relaxed_curves() -> tuple[RelaxedCurve, RelaxedCurve]:
    """C_12 and C_23: the only relaxed curves on D_3."""
    return RelaxedCurve(3, 1, 2), RelaxedCurve(3, 2, 3)


def _loop_sign(t: TriangleCoords) -> int:
    b = (t.beta_at(1) - t.beta_at(2)) // 2
    return (b > 0) - (b < 0)


def intersect_d3(t1: TriangleCoords, t2: TriangleCoords) -> int:
    """Geometric intersection of two arbitrary laminations on D_3."""
    for t in (t1, t2):
        if t.n != 3:
            raise DimensionMismatchError(f'intersect_d3 needs laminations on D_3, got D_{t.n}')
        ensure_valid(t)

    (p1, q1), (p2, q2) = t1.alpha, t2.alpha
    opposite = q1 * p2 + p1 * q2
    same = abs(q1 * p2 - p1 * q2)

    signs = _loop_sign(t1) * _loop_sign(t2)
    if signs < 0:
        value = opposite
    elif signs > 0:
        value = same
    else:
        # a loop-free strip has m_1 = 0, so one of its alphas is 0
        assert opposite == same, f'D_3 branches disagree: {opposite} != {same}'
        value = same
    return check_int64(value, 'i(L1, L2)')
