import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from lamkit.errors import (
    CoordinateOverflowError,
    DimensionMismatchError,
    InvalidCurveError,
    MalformedInputError,
    NonLaminarFamilyError,
)

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1


def check_int64(value: int, what: str) -> int:
    """Return ``value`` unchanged, or raise if it leaves the signed 64-bit range."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise CoordinateOverflowError(
            f'{what} = {value} does not fit in a signed 64-bit integer'
        )
    return value


def dumps(payload) -> str:
    """Single-line JSON with the compact separators used on the wire."""
    return json.dumps(payload, separators=(',', ':'))


# ── Field helpers ─────────────────────────────────────────────────────────────

def _require_int(value, what: str) -> int:
    # bool is an int subclass; JSON true/false must not sneak in as 1/0
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInputError(f'{what} must be an integer, got {value!r}')
    return check_int64(value, what)


def _int_tuple(values, what: str) -> tuple[int, ...]:
    if isinstance(values, (str, bytes)) or not hasattr(values, '__iter__'):
        raise MalformedInputError(f'{what} must be a list of integers')
    return tuple(
        _require_int(v, f'{what}[{pos}]') for pos, v in enumerate(values, start=1)
    )


def _check_punctures(n) -> int:
    n = _require_int(n, 'n')
    if n < 3:
        raise DimensionMismatchError(f'n must be at least 3, got {n}')
    return n


def _field(data: dict, key: str):
    if not isinstance(data, dict):
        raise MalformedInputError(f'expected a JSON object, got {type(data).__name__}')
    try:
        return data[key]
    except KeyError:
        raise MalformedInputError(f'missing field "{key}"') from None


# ── Coordinates ───────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class TriangleCoords:
    """Arc intersection counts (alpha_1..alpha_{2n-4}; beta_1..beta_{n-1}).

    Only shape is checked here; use ``coords.validate_triangle`` for the
    conditions that make the vector the coordinates of a lamination.
    """

    n: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self) -> None:
        n = _check_punctures(self.n)
        alpha = _int_tuple(self.alpha, 'alpha')
        beta = _int_tuple(self.beta, 'beta')
        if len(alpha) != 2 * n - 4:
            raise DimensionMismatchError(
                f'alpha must have 2n-4 = {2 * n - 4} entries for n={n}, got {len(alpha)}'
            )
        if len(beta) != n - 1:
            raise DimensionMismatchError(
                f'beta must have n-1 = {n - 1} entries for n={n}, got {len(beta)}'
            )
        object.__setattr__(self, 'alpha', alpha)
        object.__setattr__(self, 'beta', beta)

    # 1-based accessors matching the arc labels
    def alpha_at(self, i: int) -> int:
        return self.alpha[i - 1]

    def beta_at(self, i: int) -> int:
        return self.beta[i - 1]

    @property
    def strips(self) -> range:
        return range(1, self.n - 1)

    def __add__(self, other: 'TriangleCoords') -> 'TriangleCoords':
        if not isinstance(other, TriangleCoords):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatchError(
                f'cannot add coordinates on D_{self.n} and D_{other.n}'
            )
        return TriangleCoords(
            self.n,
            tuple(x + y for x, y in zip(self.alpha, other.alpha)),
            tuple(x + y for x, y in zip(self.beta, other.beta)),
        )

    def to_dict(self) -> dict:
        return {'n': self.n, 'alpha': list(self.alpha), 'beta': list(self.beta)}

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> 'TriangleCoords':
        return cls(_field(data, 'n'), _field(data, 'alpha'), _field(data, 'beta'))


@dataclass(frozen=True)
class DynnikovCoords:
    """Dynnikov coordinates (a_1..a_{n-2}, b_1..b_{n-2})."""

    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        n = _check_punctures(self.n)
        a = _int_tuple(self.a, 'a')
        b = _int_tuple(self.b, 'b')
        for name, vec in (('a', a), ('b', b)):
            if len(vec) != n - 2:
                raise DimensionMismatchError(
                    f'{name} must have n-2 = {n - 2} entries for n={n}, got {len(vec)}'
                )
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)

    @property
    def is_zero(self) -> bool:
        return not any(self.a) and not any(self.b)

    def as_vector(self) -> tuple[int, ...]:
        return self.a + self.b

    def to_dict(self) -> dict:
        return {'n': self.n, 'a': list(self.a), 'b': list(self.b)}

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> 'DynnikovCoords':
        return cls(_field(data, 'n'), _field(data, 'a'), _field(data, 'b'))


def lamination_from_dict(data: dict) -> TriangleCoords | DynnikovCoords:
    """Parse either coordinate form, telling them apart by their keys."""
    if isinstance(data, dict) and 'alpha' in data:
        return TriangleCoords.from_dict(data)
    if isinstance(data, dict) and 'a' in data:
        return DynnikovCoords.from_dict(data)
    raise MalformedInputError(
        'expected {"n","alpha","beta"} or {"n","a","b"} coordinates'
    )


# ── Strip data ────────────────────────────────────────────────────────────────

class LoopSide(str, Enum):
    LEFT = 'left'
    RIGHT = 'right'
    NONE = 'none'

    @classmethod
    def of(cls, b: int) -> 'LoopSide':
        if b > 0:
            return cls.RIGHT
        if b < 0:
            return cls.LEFT
        return cls.NONE


@dataclass(frozen=True)
class StripStats:
    index: int
    b: int
    loop_side: LoopSide
    above: int
    below: int
    m: int
    x: int

    @property
    def loops(self) -> int:
        return abs(self.b)

    def to_dict(self) -> dict:
        return {
            'strip': self.index,
            'b': self.b,
            'loop_side': self.loop_side.value,
            'above': self.above,
            'below': self.below,
            'm': self.m,
            'x': self.x,
        }


class SCounts(NamedTuple):
    s_above: int
    s_below: int
    s: int


@dataclass(frozen=True)
class Violation:
    # Values: 'negative_entry', 'zero_vector', 'beta_parity', 'strip_sum',
    #         'alpha_parity', 'above_negative', 'below_negative', 'no_min_zero'
    invariant: str
    strip: int | None
    detail: str

    def describe(self) -> str:
        where = f' (strip {self.strip})' if self.strip is not None else ''
        return f'{self.invariant}{where}: {self.detail}'

    def to_dict(self) -> dict:
        return {'invariant': self.invariant, 'strip': self.strip, 'detail': self.detail}


# ── Relaxed curves and families ───────────────────────────────────────────────

@dataclass(frozen=True, order=True)
class RelaxedCurve:
    """C_ij: the round curve enclosing punctures i..j."""

    n: int
    i: int
    j: int

    def __post_init__(self) -> None:
        n = _check_punctures(self.n)
        i = _require_int(self.i, 'i')
        j = _require_int(self.j, 'j')
        if not 1 <= i < j <= n:
            raise InvalidCurveError(
                f'relaxed curve needs 1 <= i < j <= n, got i={i}, j={j}, n={n}'
            )
        if (i, j) == (1, n):
            raise InvalidCurveError(
                f'C_1{n} encloses every puncture and is parallel to the boundary'
            )

    @property
    def interval(self) -> tuple[int, int]:
        return self.i, self.j

    def to_dict(self) -> dict:
        return {'n': self.n, 'i': self.i, 'j': self.j}

    @classmethod
    def from_dict(cls, data: dict) -> 'RelaxedCurve':
        return cls(_field(data, 'n'), _field(data, 'i'), _field(data, 'j'))


def links(first: RelaxedCurve, second: RelaxedCurve) -> bool:
    """True when the enclosed intervals overlap without nesting."""
    a, b = first.interval
    i, j = second.interval
    return a < i <= b < j or i < a <= j < b


def _first_linking_pair(curves) -> tuple[RelaxedCurve, RelaxedCurve] | None:
    # Sweep by left end (ties: longest first); the stack holds the chain of
    # intervals that still enclose the sweep position.
    stack: list[RelaxedCurve] = []
    for curve in sorted(curves, key=lambda c: (c.i, -c.j)):
        while stack and stack[-1].j < curve.i:
            stack.pop()
        if stack and stack[-1].j < curve.j:
            return stack[-1], curve
        stack.append(curve)
    return None


@dataclass(frozen=True)
class IntervalFamily:
    """A relaxed multicurve: pairwise nested-or-disjoint relaxed curves.

    Repeated curves in ``curves`` are parallel copies (multiplicity).
    """

    n: int
    curves: tuple[RelaxedCurve, ...] = ()

    def __post_init__(self) -> None:
        n = _check_punctures(self.n)
        curves = tuple(self.curves)
        for curve in curves:
            if not isinstance(curve, RelaxedCurve):
                raise MalformedInputError(f'family members must be relaxed curves, got {curve!r}')
            if curve.n != n:
                raise DimensionMismatchError(
                    f'curve C_{curve.i}{curve.j} lives on D_{curve.n}, family on D_{n}'
                )
        pair = _first_linking_pair(curves)
        if pair is not None:
            first, second = pair
            raise NonLaminarFamilyError(
                f'intervals [{first.i},{first.j}] and [{second.i},{second.j}] link; '
                'their curves cannot be disjoint'
            )
        object.__setattr__(self, 'curves', curves)

    def __len__(self) -> int:
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)

    def multiplicities(self) -> list[tuple[RelaxedCurve, int]]:
        counts = Counter(self.curves)
        return sorted(counts.items())

    def without(self, index: int) -> 'IntervalFamily':
        return IntervalFamily(self.n, self.curves[:index] + self.curves[index + 1:])

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'components': [
                {'i': curve.i, 'j': curve.j, 'mult': mult}
                for curve, mult in self.multiplicities()
            ],
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> 'IntervalFamily':
        n = _field(data, 'n')
        components = _field(data, 'components')
        if not isinstance(components, list):
            raise MalformedInputError('"components" must be a list')
        curves: list[RelaxedCurve] = []
        for entry in components:
            mult = _require_int(entry.get('mult', 1) if isinstance(entry, dict) else None, 'mult')
            if mult < 1:
                raise MalformedInputError(f'multiplicity must be positive, got {mult}')
            curve = RelaxedCurve(n, _field(entry, 'i'), _field(entry, 'j'))
            curves.extend([curve] * mult)
        return cls(n, tuple(curves))


# ── Curve diagrams ────────────────────────────────────────────────────────────

class TransitKind(str, Enum):
    ABOVE = 'above'
    BELOW = 'below'
    LEFT_LOOP = 'left_loop'
    RIGHT_LOOP = 'right_loop'


LEFT_END = 'L'
RIGHT_END = 'R'


@dataclass(frozen=True)
class Transit:
    """One passage of a component through a region.

    ``strip`` is 1..n-2, or ``'L'``/``'R'`` for the end regions; ``lane`` is
    the 0-based position (from the top) on arc beta_``arc`` where the
    component enters the region.
    """

    strip: int | str
    kind: TransitKind
    lane: int
    arc: int

    @property
    def in_strip(self) -> bool:
        return isinstance(self.strip, int)

    def to_dict(self) -> dict:
        return {'strip': self.strip, 'kind': self.kind.value, 'lane': self.lane, 'arc': self.arc}


@dataclass(frozen=True)
class CurveDiagram:
    n: int
    beta: tuple[int, ...]
    components: tuple[tuple[Transit, ...], ...]

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'beta': list(self.beta),
            'components': [[t.to_dict() for t in comp] for comp in self.components],
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())
