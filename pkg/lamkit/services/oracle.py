"""Ground truth that does not go through the intersection formula.

* ``reconstruct`` draws the lamination strip by strip from its triangle
  coordinates and glues the pieces into closed components.
* ``family_triangle`` builds coordinates of relaxed multicurves by adding
  the coordinates of their (disjoint) components.
* ``linking_intersection`` counts intersections of relaxed curves purely
  combinatorially: two relaxed curves meet twice iff their intervals link.
"""

import logging
import random
from dataclasses import dataclass

from lamkit.errors import (
    DiagramTooLargeError,
    DimensionMismatchError,
    MalformedInputError,
    StripIndexError,
    ZeroLaminationError,
)
from lamkit.models import (
    LEFT_END,
    RIGHT_END,
    CurveDiagram,
    IntervalFamily,
    RelaxedCurve,
    TransitKind,
    Transit,
    TriangleCoords,
    links,
)
from lamkit.services.coords import ensure_valid, relaxed_curve_triangle, strip_stats

logger = logging.getLogger(__name__)

__all__ = [
    'reconstruct',
    'crossing_counts',
    'path_component_count',
    'component_count',
    'family_triangle',
    'linking_intersection',
    'relaxed_curves',
    'random_family',
    'links',
]

# A crossing of the lamination with beta_arc, lanes counted from the top.
Node = tuple[int, int]

_RANDOM_ATTEMPTS_PER_COMPONENT = 32


@dataclass(frozen=True)
class _Piece:
    region: int | str
    kind: TransitKind
    ends: tuple[Node, Node]


# ── Drawing each region ───────────────────────────────────────────────────────

def _strip_pieces(t: TriangleCoords, k: int) -> list[_Piece]:
    """Path components of S_k, laid out by lane.

    On the arc carrying the loops: above components on top, then the loop
    endpoints (innermost loop in the middle two lanes), then below
    components.  On the other arc: above, then below.
    """
    stats = strip_stats(t, k)
    above, below, loops = stats.above, stats.below, stats.loops
    if stats.b >= 0:
        loop_arc, loop_kind = k, TransitKind.RIGHT_LOOP
    else:
        loop_arc, loop_kind = k + 1, TransitKind.LEFT_LOOP

    def below_lane(arc: int, q: int) -> int:
        return above + (2 * loops if arc == loop_arc else 0) + q

    pieces = [
        _Piece(k, TransitKind.ABOVE, ((k, p), (k + 1, p)))
        for p in range(above)
    ]
    pieces += [
        _Piece(k, loop_kind, ((loop_arc, above + loops - 1 - l), (loop_arc, above + loops + l)))
        for l in range(loops)
    ]
    pieces += [
        _Piece(k, TransitKind.BELOW, ((k, below_lane(k, q)), (k + 1, below_lane(k + 1, q))))
        for q in range(below)
    ]
    return pieces


def _end_pieces(arc: int, crossings: int, region: str, kind: TransitKind) -> list[_Piece]:
    # every loop in an end region must go round the end puncture, so they nest
    return [
        _Piece(region, kind, ((arc, l), (arc, crossings - 1 - l)))
        for l in range(crossings // 2)
    ]


def _is_right_of(region: int | str, arc: int) -> bool:
    return region == RIGHT_END or region == arc


def reconstruct(t: TriangleCoords, max_crossings: int | None = None) -> CurveDiagram:
    """Glue the strip pictures of ``t`` into closed components.

    The diagram holds one node per crossing with a beta arc; with
    ``max_crossings`` set, larger laminations raise ``DiagramTooLargeError``
    before anything is allocated.
    """
    ensure_valid(t)
    n = t.n
    crossings = sum(t.beta)
    if max_crossings is not None and crossings > max_crossings:
        raise DiagramTooLargeError(
            f'lamination crosses the beta arcs {crossings} times; '
            f'diagrams are limited to {max_crossings}'
        )

    pieces = _end_pieces(1, t.beta_at(1), LEFT_END, TransitKind.LEFT_LOOP)
    for k in t.strips:
        pieces += _strip_pieces(t, k)
    pieces += _end_pieces(n - 1, t.beta_at(n - 1), RIGHT_END, TransitKind.RIGHT_LOOP)

    right_of: dict[Node, _Piece] = {}
    left_of: dict[Node, _Piece] = {}
    for piece in pieces:
        for node in piece.ends:
            side = right_of if _is_right_of(piece.region, node[0]) else left_of
            assert node not in side, f'two path components share crossing {node}'
            side[node] = piece

    nodes = [(arc, lane) for arc in range(1, n) for lane in range(t.beta_at(arc))]
    assert set(nodes) == set(right_of) == set(left_of), 'strip pictures do not glue'

    visited: set[Node] = set()
    components: list[tuple[Transit, ...]] = []
    for start in nodes:
        if start in visited:
            continue
        transits: list[Transit] = []
        node, heading_right = start, True
        while True:
            visited.add(node)
            piece = (right_of if heading_right else left_of)[node]
            transits.append(Transit(piece.region, piece.kind, node[1], node[0]))
            first, second = piece.ends
            node = second if first == node else first
            # leave the next crossing on the side away from the piece just used
            heading_right = not _is_right_of(piece.region, node[0])
            if node == start and heading_right:
                break
        components.append(tuple(transits))

    logger.debug('Reconstructed %s into %d component(s)', t.to_json(), len(components))
    return CurveDiagram(n, t.beta, tuple(components))


# ── Reading a diagram back ────────────────────────────────────────────────────

def crossing_counts(diagram: CurveDiagram) -> TriangleCoords:
    """Count how often the drawn components cross each alpha and beta arc."""
    n = diagram.n
    alpha = [0] * (2 * n - 4)
    beta = [0] * (n - 1)
    for component in diagram.components:
        for transit in component:
            beta[transit.arc - 1] += 1
            if not transit.in_strip:
                continue
            k = transit.strip
            if transit.kind is not TransitKind.BELOW:
                alpha[2 * k - 2] += 1
            if transit.kind is not TransitKind.ABOVE:
                alpha[2 * k - 1] += 1
    return TriangleCoords(n, tuple(alpha), tuple(beta))


def path_component_count(diagram: CurveDiagram, i: int, j: int) -> int:
    """Components of L ∩ S_{i,j} that are arcs rather than closed curves."""
    if not 1 <= i <= j <= diagram.n - 2:
        raise StripIndexError(
            f'strip range must satisfy 1 <= i <= j <= {diagram.n - 2}, got i={i}, j={j}'
        )
    count = 0
    for component in diagram.components:
        inside = [t.in_strip and i <= t.strip <= j for t in component]
        if all(inside):
            continue
        count += sum(
            1 for pos, flag in enumerate(inside) if flag and not inside[pos - 1]
        )
    return count


def component_count(t: TriangleCoords) -> int:
    return len(reconstruct(t).components)


# ── Relaxed multicurves ───────────────────────────────────────────────────────

def relaxed_curves(n: int) -> list[RelaxedCurve]:
    """Every relaxed curve C_ij of D_n, ordered by (i, j)."""
    return [
        RelaxedCurve(n, i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if (i, j) != (1, n)
    ]


def family_triangle(f: IntervalFamily) -> TriangleCoords:
    """Triangle coordinates of a relaxed multicurve (sum over its components)."""
    if not len(f):
        raise ZeroLaminationError('an empty family is the empty lamination')
    curves = iter(f)
    total = relaxed_curve_triangle(next(curves))
    for curve in curves:
        total = total + relaxed_curve_triangle(curve)
    ensure_valid(total)
    return total


def linking_intersection(f: IntervalFamily, c: RelaxedCurve) -> int:
    """2 x (number of components of ``f`` whose interval links that of ``c``)."""
    if f.n != c.n:
        raise DimensionMismatchError(f'family on D_{f.n}, curve on D_{c.n}')
    return 2 * sum(1 for curve in f if links(curve, c))


def random_family(n: int, max_components: int, seed) -> IntervalFamily:
    """A seeded random relaxed multicurve with 1..max_components components.

    Intervals are drawn uniformly from ``relaxed_curves(n)`` and kept only if
    they are nested in or disjoint from everything kept so far.
    """
    if n < 3:
        raise DimensionMismatchError(f'n must be at least 3, got {n}')
    if max_components < 1:
        raise MalformedInputError('a family needs at least one component')
    candidates = relaxed_curves(n)
    rng = random.Random(seed)

    target = rng.randint(1, max_components)
    chosen: list[RelaxedCurve] = []
    for _ in range(_RANDOM_ATTEMPTS_PER_COMPONENT * target):
        if len(chosen) == target:
            break
        candidate = rng.choice(candidates)
        if not any(links(candidate, kept) for kept in chosen):
            chosen.append(candidate)

    if len(chosen) < target:
        logger.debug(
            'random_family(n=%d, seed=%r): kept %d of %d requested components',
            n, seed, len(chosen), target,
        )
    return IntervalFamily(n, tuple(chosen))
