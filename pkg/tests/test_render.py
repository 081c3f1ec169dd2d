import xml.etree.ElementTree as ET

import pytest

from lamkit.errors import MalformedInputError
from lamkit.models import CurveDiagram, TriangleCoords
from lamkit.services import oracle
from lamkit.services.render import RenderOptions, render_svg

from .conftest import EXAMPLE_TRIANGLE, StubConfig

SVG = {'svg': 'http://www.w3.org/2000/svg'}


def parse(svg: str) -> ET.Element:
    return ET.fromstring(svg.encode('utf-8'))


def groups(root: ET.Element, cls: str) -> list[ET.Element]:
    return [g for g in root.iterfind('.//svg:g', SVG) if g.get('class') == cls]


@pytest.fixture
def example_diagram() -> CurveDiagram:
    return oracle.reconstruct(EXAMPLE_TRIANGLE)


def test_one_group_per_component(example_diagram):
    root = parse(render_svg(example_diagram))
    components = groups(root, 'component')
    assert len(components) == 2
    assert [g.get('id') for g in components] == ['component-1', 'component-2']
    for g in components:
        (path,) = g.findall('svg:path', SVG)
        assert path.get('d').startswith('M ')
        assert path.get('d').endswith('Z')


def test_document_has_canvas_size(example_diagram):
    root = parse(render_svg(example_diagram, RenderOptions(width=640, height=320)))
    assert root.get('width') == '640'
    assert root.get('height') == '320'
    assert root.get('viewBox') == '0 0 640 320'


def test_punctures_and_arcs_are_drawn(example_diagram):
    root = parse(render_svg(example_diagram))
    assert len(root.findall('.//svg:circle', SVG)) == 5
    # beta_1..beta_4 plus alpha_1..alpha_6
    assert len(root.findall('.//svg:line', SVG)) == 10


def test_arcs_and_labels_can_be_hidden(example_diagram):
    options = RenderOptions(show_arcs=False, show_labels=False)
    root = parse(render_svg(example_diagram, options))
    assert root.findall('.//svg:line', SVG) == []
    assert root.findall('.//svg:text', SVG) == []
    assert len(groups(root, 'component')) == 2


def test_output_is_deterministic(example_diagram):
    assert render_svg(example_diagram) == render_svg(oracle.reconstruct(EXAMPLE_TRIANGLE))


def test_colours_cycle_through_palette():
    t = TriangleCoords(4, (3, 3, 0, 0), (6, 0, 0))
    root = parse(render_svg(oracle.reconstruct(t), RenderOptions(palette=('red', 'blue'))))
    strokes = [g.find('svg:path', SVG).get('stroke') for g in groups(root, 'component')]
    assert strokes == ['red', 'blue', 'red']


def test_empty_diagram_is_rejected():
    with pytest.raises(MalformedInputError):
        render_svg(CurveDiagram(3, (0, 0), ()))


@pytest.mark.parametrize(
    'overrides',
    [
        {'width': 0},
        {'height': -5},
        {'width': 30},
        {'width': True},
        {'palette': ()},
    ],
)
def test_bad_options_are_rejected(overrides):
    with pytest.raises(MalformedInputError):
        RenderOptions(**overrides)


def test_options_from_config():
    options = RenderOptions.from_config(StubConfig(), show_labels=False)
    assert (options.width, options.height) == (400, 200)
    assert options.show_labels is False


@pytest.mark.parametrize(
    't,expected',
    [
        (TriangleCoords(4, (1, 1, 0, 0), (2, 0, 0)), 1),
        (TriangleCoords(4, (2, 2, 0, 0), (4, 0, 0)), 2),
        (EXAMPLE_TRIANGLE, 2),
    ],
)
def test_component_groups_match_reconstruction(t, expected):
    root = parse(render_svg(oracle.reconstruct(t)))
    assert len(groups(root, 'component')) == expected
