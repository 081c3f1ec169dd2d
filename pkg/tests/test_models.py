import pytest

from lamkit.errors import (
    CoordinateOverflowError,
    DimensionMismatchError,
    InvalidCurveError,
    MalformedInputError,
    NonLaminarFamilyError,
)
from lamkit.models import (
    DynnikovCoords,
    IntervalFamily,
    RelaxedCurve,
    TriangleCoords,
    lamination_from_dict,
    links,
)

from .conftest import EXAMPLE_DYNNIKOV, EXAMPLE_TRIANGLE


def test_triangle_json_is_compact_and_ordered():
    assert EXAMPLE_TRIANGLE.to_json() == '{"n":5,"alpha":[2,6,3,5,4,4],"beta":[4,8,8,4]}'


def test_dynnikov_json_is_compact_and_ordered():
    assert EXAMPLE_DYNNIKOV.to_json() == '{"n":5,"a":[2,1,0],"b":[-2,0,2]}'


def test_lamination_from_dict_tells_forms_apart():
    assert lamination_from_dict(EXAMPLE_TRIANGLE.to_dict()) == EXAMPLE_TRIANGLE
    assert lamination_from_dict(EXAMPLE_DYNNIKOV.to_dict()) == EXAMPLE_DYNNIKOV
    with pytest.raises(MalformedInputError):
        lamination_from_dict({'n': 5, 'x': []})
    with pytest.raises(MalformedInputError):
        lamination_from_dict([1, 2, 3])


def test_one_based_accessors():
    assert EXAMPLE_TRIANGLE.alpha_at(1) == 2
    assert EXAMPLE_TRIANGLE.alpha_at(6) == 4
    assert EXAMPLE_TRIANGLE.beta_at(2) == 8
    assert list(EXAMPLE_TRIANGLE.strips) == [1, 2, 3]


@pytest.mark.parametrize(
    'n,alpha,beta',
    [
        (2, (), (0,)),
        (4, (1, 1, 0), (2, 0, 0)),
        (4, (1, 1, 0, 0), (2, 0)),
    ],
)
def test_triangle_shape_is_checked(n, alpha, beta):
    with pytest.raises(DimensionMismatchError):
        TriangleCoords(n, alpha, beta)


def test_dynnikov_shape_is_checked():
    with pytest.raises(DimensionMismatchError):
        DynnikovCoords(4, (0,), (1, 0))


def test_booleans_and_strings_are_not_integers():
    with pytest.raises(MalformedInputError):
        DynnikovCoords(3, (True,), (0,))
    with pytest.raises(MalformedInputError):
        TriangleCoords.from_dict({'n': 3, 'alpha': '11', 'beta': [2, 0]})
    with pytest.raises(MalformedInputError):
        TriangleCoords.from_dict({'n': 3, 'alpha': [1, 1]})


def test_entries_outside_int64_overflow():
    with pytest.raises(CoordinateOverflowError):
        DynnikovCoords(3, (2 ** 63,), (0,))


def test_triangle_addition():
    c12 = TriangleCoords(4, (1, 1, 0, 0), (2, 0, 0))
    c13 = TriangleCoords(4, (1, 1, 1, 1), (2, 2, 0))
    assert c12 + c13 == TriangleCoords(4, (2, 2, 1, 1), (4, 2, 0))
    with pytest.raises(DimensionMismatchError):
        c12 + TriangleCoords(3, (1, 1), (2, 0))


@pytest.mark.parametrize('i,j', [(1, 4), (3, 3), (0, 2), (2, 5)])
def test_invalid_relaxed_curves(i, j):
    with pytest.raises(InvalidCurveError):
        RelaxedCurve(4, i, j)


def test_relaxed_curve_json_form():
    curve = RelaxedCurve(5, 2, 4)
    assert curve.to_dict() == {'n': 5, 'i': 2, 'j': 4}
    assert RelaxedCurve.from_dict({'n': 5, 'i': 2, 'j': 4}) == curve
    with pytest.raises(MalformedInputError):
        RelaxedCurve.from_dict({'n': 5, 'i': 2})
    with pytest.raises(InvalidCurveError):
        RelaxedCurve.from_dict({'n': 5, 'i': 1, 'j': 5})


@pytest.mark.parametrize(
    'first,second,expected',
    [
        ((1, 3), (2, 4), True),
        ((2, 4), (1, 3), True),
        ((1, 3), (3, 5), True),
        ((1, 4), (2, 3), False),
        ((1, 4), (2, 4), False),
        ((1, 2), (3, 4), False),
        ((2, 3), (2, 3), False),
    ],
)
def test_links(first, second, expected):
    assert links(RelaxedCurve(5, *first), RelaxedCurve(5, *second)) is expected


def test_linking_family_is_rejected():
    with pytest.raises(NonLaminarFamilyError, match=r'\[1,3\] and \[3,5\]'):
        IntervalFamily(5, (RelaxedCurve(5, 3, 5), RelaxedCurve(5, 1, 3)))


def test_family_on_another_disk_is_rejected():
    with pytest.raises(DimensionMismatchError):
        IntervalFamily(5, (RelaxedCurve(4, 1, 2),))


def test_family_json_groups_parallel_copies():
    family = IntervalFamily(5, (
        RelaxedCurve(5, 2, 4),
        RelaxedCurve(5, 1, 4),
        RelaxedCurve(5, 2, 4),
    ))
    assert family.to_json() == (
        '{"n":5,"components":[{"i":1,"j":4,"mult":1},{"i":2,"j":4,"mult":2}]}'
    )
    assert IntervalFamily.from_dict(family.to_dict()).multiplicities() == family.multiplicities()
    assert len(family.without(0)) == 2


def test_family_from_dict_rejects_bad_multiplicity():
    with pytest.raises(MalformedInputError):
        IntervalFamily.from_dict({'n': 5, 'components': [{'i': 1, 'j': 2, 'mult': 0}]})
    with pytest.raises(MalformedInputError):
        IntervalFamily.from_dict({'n': 5, 'components': {'i': 1, 'j': 2}})
