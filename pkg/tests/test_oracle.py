import pytest
from hypothesis import given, settings

from lamkit.errors import (
    DiagramTooLargeError,
    DimensionMismatchError,
    InvalidTriangleError,
    MalformedInputError,
    StripIndexError,
    ZeroLaminationError,
)
from lamkit.models import (
    LEFT_END,
    RIGHT_END,
    DynnikovCoords,
    IntervalFamily,
    RelaxedCurve,
    TransitKind,
    TriangleCoords,
)
from lamkit.services import coords, oracle

from .conftest import EXAMPLE_TRIANGLE, dynnikov_vectors, laminar_families


def family(n: int, *intervals: tuple[int, int]) -> IntervalFamily:
    return IntervalFamily(n, tuple(RelaxedCurve(n, i, j) for i, j in intervals))


# ── Reconstruction ────────────────────────────────────────────────────────────

def test_example_has_two_components():
    # regression value for the worked example on D_5
    assert oracle.component_count(EXAMPLE_TRIANGLE) == 2


def test_example_diagram_reproduces_coordinates():
    diagram = oracle.reconstruct(EXAMPLE_TRIANGLE)
    assert diagram.beta == EXAMPLE_TRIANGLE.beta
    assert oracle.crossing_counts(diagram) == EXAMPLE_TRIANGLE


def test_single_relaxed_curve():
    diagram = oracle.reconstruct(TriangleCoords(4, (1, 1, 0, 0), (2, 0, 0)))
    assert len(diagram.components) == 1
    (component,) = diagram.components
    assert [t.strip for t in component] == [1, LEFT_END]
    assert component[0].kind is TransitKind.RIGHT_LOOP
    assert component[1].kind is TransitKind.LEFT_LOOP


def test_parallel_copies_stay_separate():
    t = oracle.family_triangle(family(4, (1, 2), (1, 2)))
    assert t == TriangleCoords(4, (2, 2, 0, 0), (4, 0, 0))
    assert oracle.component_count(t) == 2


def test_nested_curves_stay_separate():
    t = oracle.family_triangle(family(4, (1, 2), (1, 3)))
    assert t == TriangleCoords(4, (2, 2, 1, 1), (4, 2, 0))
    assert oracle.component_count(t) == 2


def test_right_end_region_is_used():
    diagram = oracle.reconstruct(TriangleCoords(4, (0, 0, 1, 1), (0, 0, 2)))
    (component,) = diagram.components
    assert {t.strip for t in component} == {2, RIGHT_END}


def test_diagram_json_lists_transits():
    diagram = oracle.reconstruct(TriangleCoords(3, (1, 1), (2, 0)))
    payload = diagram.to_dict()
    assert payload['n'] == 3
    assert payload['beta'] == [2, 0]
    assert len(payload['components']) == 1
    assert {entry['kind'] for entry in payload['components'][0]} == {'right_loop', 'left_loop'}


def test_invalid_triangle_cannot_be_drawn():
    with pytest.raises(InvalidTriangleError):
        oracle.reconstruct(TriangleCoords(3, (1, 1), (2, 2)))


@settings(max_examples=100)
@given(dynnikov_vectors(max_n=7, bound=6))
def test_reconstruction_reproduces_coordinates(d: DynnikovCoords):
    t = coords.triangle_from_dynnikov(d)
    assert oracle.crossing_counts(oracle.reconstruct(t)) == t


@settings(max_examples=100)
@given(dynnikov_vectors(max_n=7, bound=6))
def test_path_components_of_strip_runs(d: DynnikovCoords):
    t = coords.triangle_from_dynnikov(d)
    diagram = oracle.reconstruct(t)
    for i in t.strips:
        for j in range(i, t.n - 1):
            expected = (t.beta_at(i) + t.beta_at(j + 1)) // 2
            assert oracle.path_component_count(diagram, i, j) == expected


def test_path_component_range_is_checked():
    diagram = oracle.reconstruct(EXAMPLE_TRIANGLE)
    with pytest.raises(StripIndexError):
        oracle.path_component_count(diagram, 2, 1)


@settings(max_examples=100)
@given(laminar_families())
def test_family_has_as_many_components_as_curves(f: IntervalFamily):
    assert oracle.component_count(oracle.family_triangle(f)) == len(f)


# ── Relaxed multicurves ───────────────────────────────────────────────────────

def test_relaxed_curves_of_d4():
    assert [c.interval for c in oracle.relaxed_curves(4)] == [
        (1, 2), (1, 3), (2, 3), (2, 4), (3, 4),
    ]


def test_empty_family_has_no_coordinates():
    with pytest.raises(ZeroLaminationError):
        oracle.family_triangle(IntervalFamily(5))


def test_linking_intersection():
    f = family(6, (1, 3), (1, 3), (4, 5), (2, 3))
    assert oracle.linking_intersection(f, RelaxedCurve(6, 3, 4)) == 8
    assert oracle.linking_intersection(f, RelaxedCurve(6, 1, 5)) == 0
    assert oracle.linking_intersection(f, RelaxedCurve(6, 2, 4)) == 6


def test_random_family_is_deterministic():
    first = oracle.random_family(6, 5, 42)
    again = oracle.random_family(6, 5, 42)
    assert first == again
    assert first.to_json() == again.to_json()
    assert 1 <= len(first) <= 5
    assert first.n == 6


def test_random_family_needs_a_component():
    with pytest.raises(MalformedInputError):
        oracle.random_family(5, 0, 1)


@pytest.mark.parametrize('n', [2, 1, 0])
def test_random_family_needs_three_punctures(n):
    with pytest.raises(DimensionMismatchError):
        oracle.random_family(n, 1, 0)


@pytest.mark.parametrize(
    'members,curve,expected',
    [
        ([(1, 2)], (2, 3), 2),
        ([(1, 2)], (1, 3), 0),
    ],
)
def test_linking_intersection_on_d4(members, curve, expected):
    assert oracle.linking_intersection(family(4, *members), RelaxedCurve(4, *curve)) == expected


def test_disjoint_intervals_do_not_link():
    assert oracle.linking_intersection(family(5, (1, 2)), RelaxedCurve(5, 3, 4)) == 0


def test_singleton_family_is_the_curve():
    assert oracle.family_triangle(family(5, (2, 4))) == coords.triangle_from_dynnikov(
        DynnikovCoords(5, (0, 0, 0), (-1, 0, 1))
    )


@pytest.mark.parametrize('seed', range(10))
def test_random_family_on_d3(seed):
    f = oracle.random_family(3, 1, seed)
    assert [c.interval for c in f] in ([(1, 2)], [(2, 3)])


def test_crossing_budget_is_checked_before_drawing():
    # the worked example crosses the beta arcs 24 times
    assert len(oracle.reconstruct(EXAMPLE_TRIANGLE, max_crossings=24).components) == 2
    with pytest.raises(DiagramTooLargeError):
        oracle.reconstruct(EXAMPLE_TRIANGLE, max_crossings=23)


def test_huge_lamination_is_refused():
    t = coords.triangle_from_dynnikov(DynnikovCoords(3, (0,), (10 ** 9,)))
    with pytest.raises(DiagramTooLargeError):
        oracle.reconstruct(t, max_crossings=10 ** 6)
