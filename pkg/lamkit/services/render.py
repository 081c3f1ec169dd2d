"""SVG drawings of reconstructed laminations in the standard disk model.

Punctures sit evenly spaced on the horizontal axis of an elliptical disk.
Every crossing of a component with beta_i becomes a waypoint on the vertical
line beta_i, and every passage through a strip adds waypoints in the
puncture's column; each closed component is drawn as a smooth closed path
through its waypoints.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass

from lamkit import templates
from lamkit.errors import MalformedInputError
from lamkit.models import LEFT_END, CurveDiagram, Transit, TransitKind

logger = logging.getLogger(__name__)

_TEMPLATE = 'diagram.svg.j2'
_MARGIN = 20
_DEFAULT_PALETTE = (
    '#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e',
    '#17becf', '#8c564b', '#e377c2', '#7f7f7f', '#bcbd22',
)

Point = tuple[float, float]


@dataclass(frozen=True)
class RenderOptions:
    width: int = 800
    height: int = 400
    show_arcs: bool = True
    show_labels: bool = True
    # Colours and widths are passed through to the SVG verbatim
    stroke_width: str = '2'
    arc_stroke_width: str = '1'
    arc_color: str = '#999999'
    boundary_color: str = '#333333'
    puncture_color: str = '#000000'
    palette: tuple[str, ...] = _DEFAULT_PALETTE

    def __post_init__(self) -> None:
        for name in ('width', 'height'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise MalformedInputError(f'{name} must be a positive integer, got {value!r}')
        if self.width <= 2 * _MARGIN or self.height <= 2 * _MARGIN:
            raise MalformedInputError(
                f'canvas {self.width}x{self.height} leaves no room inside the {_MARGIN}px margin'
            )
        if not self.palette:
            raise MalformedInputError('palette must name at least one colour')

    @classmethod
    def from_config(cls, config, **overrides) -> 'RenderOptions':
        values = {'width': config.SVG_WIDTH, 'height': config.SVG_HEIGHT}
        values.update(overrides)
        return cls(**values)


def _fmt(value: float) -> str:
    text = f'{value:.2f}'
    return '0.00' if text == '-0.00' else text


@dataclass(frozen=True)
class _Layout:
    n: int
    beta: tuple[int, ...]
    cx: float
    cy: float
    rx: float
    ry: float
    pitch: float
    turn: float
    above: Counter
    below: Counter
    loops: Counter
    right_loops: frozenset

    def puncture_x(self, k: int) -> float:
        return self.cx - self.rx + 2 * self.rx * k / (self.n + 1)

    def arc_x(self, arc: int) -> float:
        return (self.puncture_x(arc) + self.puncture_x(arc + 1)) / 2

    def node(self, arc: int, lane: int) -> Point:
        crossings = self.beta[arc - 1]
        return self.arc_x(arc), self.cy + (lane - (crossings - 1) / 2) * self.pitch

    def boundary_y(self, x: float) -> float:
        """Half-height of the disk above the axis at abscissa ``x``."""
        u = (x - self.cx) / self.rx
        return self.ry * math.sqrt(max(0.0, 1 - u * u))


def _layout(d: CurveDiagram, o: RenderOptions) -> _Layout:
    above: Counter = Counter()
    below: Counter = Counter()
    loops: Counter = Counter()
    right_loops = set()
    for component in d.components:
        for transit in component:
            if not transit.in_strip:
                continue
            if transit.kind is TransitKind.ABOVE:
                above[transit.strip] += 1
            elif transit.kind is TransitKind.BELOW:
                below[transit.strip] += 1
            else:
                # each loop is entered once, from one of its two ends
                loops[transit.strip] += 1
                if transit.kind is TransitKind.RIGHT_LOOP:
                    right_loops.add(transit.strip)

    # tallest stack anywhere: a beta arc, or a puncture column
    column = [above[k] + loops[k] for k in range(1, d.n - 1)]
    column += [below[k] + loops[k] for k in range(1, d.n - 1)]
    column += [(crossings + 1) // 2 for crossings in d.beta]
    span = max([1, *column, *d.beta])

    rx = (o.width - 2 * _MARGIN) / 2
    ry = (o.height - 2 * _MARGIN) / 2
    spacing = 2 * rx / (d.n + 1)
    return _Layout(
        n=d.n,
        beta=d.beta,
        cx=o.width / 2,
        cy=o.height / 2,
        rx=rx,
        ry=ry,
        pitch=ry / (span + 1),
        turn=(spacing / 2) / (span + 1),
        above=above,
        below=below,
        loops=loops,
        right_loops=frozenset(right_loops),
    )


def _loop_waypoints(x: float, cy: float, depth: int, direction: int, from_top: bool,
                    layout: _Layout) -> list[Point]:
    rise = (depth + 1) * layout.pitch
    points = [
        (x, cy - rise),
        (x + direction * (depth + 1) * layout.turn, cy),
        (x, cy + rise),
    ]
    return points if from_top else points[::-1]


def _transit_waypoints(transit: Transit, layout: _Layout) -> list[Point]:
    """Waypoints strictly inside the region crossed by ``transit``."""
    cy = layout.cy
    lane = transit.lane

    if not transit.in_strip:
        crossings = layout.beta[transit.arc - 1]
        outer = min(lane, crossings - 1 - lane)
        depth = crossings // 2 - 1 - outer
        if transit.strip == LEFT_END:
            x, direction = layout.puncture_x(1), -1
        else:
            x, direction = layout.puncture_x(layout.n), 1
        return _loop_waypoints(x, cy, depth, direction, lane < crossings / 2, layout)

    k = transit.strip
    x = layout.puncture_x(k + 1)
    above, loops = layout.above[k], layout.loops[k]
    loop_arc = k if k in layout.right_loops else k + 1

    if transit.kind is TransitKind.ABOVE:
        return [(x, cy - (above - lane + loops) * layout.pitch)]
    if transit.kind is TransitKind.BELOW:
        q = lane - above - (2 * loops if transit.arc == loop_arc and loops else 0)
        return [(x, cy + (loops + 1 + q) * layout.pitch)]

    from_top = lane < above + loops
    depth = above + loops - 1 - lane if from_top else lane - above - loops
    direction = 1 if transit.kind is TransitKind.RIGHT_LOOP else -1
    return _loop_waypoints(x, cy, depth, direction, from_top, layout)


def _closed_spline(points: list[Point]) -> str:
    """Closed Catmull-Rom spline through ``points`` as cubic Bezier segments."""
    count = len(points)
    x0, y0 = points[0]
    parts = [f'M {_fmt(x0)} {_fmt(y0)}']
    for idx in range(count):
        p0 = points[idx - 1]
        p1 = points[idx]
        p2 = points[(idx + 1) % count]
        p3 = points[(idx + 2) % count]
        c1 = (p1[0] + (p2[0] - p0[0]) / 6, p1[1] + (p2[1] - p0[1]) / 6)
        c2 = (p2[0] - (p3[0] - p1[0]) / 6, p2[1] - (p3[1] - p1[1]) / 6)
        parts.append(
            f'C {_fmt(c1[0])} {_fmt(c1[1])} {_fmt(c2[0])} {_fmt(c2[1])} '
            f'{_fmt(p2[0])} {_fmt(p2[1])}'
        )
    parts.append('Z')
    return ' '.join(parts)


def _component_path(component: tuple[Transit, ...], layout: _Layout) -> str:
    points: list[Point] = []
    for transit in component:
        points.append(layout.node(transit.arc, transit.lane))
        points.extend(_transit_waypoints(transit, layout))
    return _closed_spline(points)


def _arcs(layout: _Layout) -> list[dict]:
    arcs = []
    for arc in range(1, layout.n):
        x = layout.arc_x(arc)
        h = layout.boundary_y(x)
        arcs.append({'family': 'beta', 'x1': _fmt(x), 'y1': _fmt(layout.cy - h),
                     'x2': _fmt(x), 'y2': _fmt(layout.cy + h)})
    for k in range(2, layout.n):
        x = layout.puncture_x(k)
        h = layout.boundary_y(x)
        for sign in (-1, 1):
            arcs.append({'family': 'alpha', 'x1': _fmt(x), 'y1': _fmt(layout.cy),
                         'x2': _fmt(x), 'y2': _fmt(layout.cy + sign * h)})
    return arcs


def _labels(layout: _Layout) -> list[dict]:
    labels = []
    for arc in range(1, layout.n):
        x = layout.arc_x(arc)
        labels.append({'x': _fmt(x), 'y': _fmt(layout.cy - layout.boundary_y(x) - 4),
                       'text': f'β{arc}'})
    for k in range(1, layout.n + 1):
        labels.append({'x': _fmt(layout.puncture_x(k)), 'y': _fmt(layout.cy + 16),
                       'text': str(k)})
    return labels


def render_svg(d: CurveDiagram, o: RenderOptions | None = None) -> str:
    """Render a reconstructed diagram as an SVG 1.1 document."""
    o = o or RenderOptions()
    if not d.components or any(not component for component in d.components):
        raise MalformedInputError('a curve diagram needs at least one non-empty component')

    layout = _layout(d, o)
    components = [
        {'d': _component_path(component, layout), 'color': o.palette[idx % len(o.palette)]}
        for idx, component in enumerate(d.components)
    ]
    logger.debug('Rendering D_%d with %d component(s)', d.n, len(components))

    return templates.get_template(_TEMPLATE).render(
        n=d.n,
        width=o.width,
        height=o.height,
        disk={'cx': _fmt(layout.cx), 'cy': _fmt(layout.cy),
              'rx': _fmt(layout.rx), 'ry': _fmt(layout.ry)},
        show_arcs=o.show_arcs,
        show_labels=o.show_labels,
        arcs=_arcs(layout) if o.show_arcs else [],
        labels=_labels(layout) if o.show_labels else [],
        punctures=[{'x': _fmt(layout.puncture_x(k)), 'y': _fmt(layout.cy)}
                   for k in range(1, d.n + 1)],
        puncture_radius=_fmt(max(2.0, min(5.0, layout.pitch / 2))),
        components=components,
        stroke_width=o.stroke_width,
        arc_stroke_width=o.arc_stroke_width,
        arc_color=o.arc_color,
        boundary_color=o.boundary_color,
        puncture_color=o.puncture_color,
    )
