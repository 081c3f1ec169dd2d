"""Exception hierarchy.

Library code raises these; only ``lamkit.cli`` turns them into exit codes.
"""


class LamkitError(Exception):
    exit_code = 1
    kind = 'error'


class MalformedInputError(LamkitError, ValueError):
    kind = 'malformed_input'


class DimensionMismatchError(MalformedInputError):
    kind = 'dimension_mismatch'


class ZeroLaminationError(MalformedInputError):
    kind = 'zero_vector'


class InvalidCurveError(MalformedInputError):
    kind = 'invalid_curve'


class NonLaminarFamilyError(MalformedInputError):
    kind = 'non_laminar_family'


class StripIndexError(MalformedInputError, IndexError):
    kind = 'strip_index'


class DiagramTooLargeError(MalformedInputError):
    kind = 'diagram_too_large'


class InvalidTriangleError(LamkitError, ValueError):
    """Triangle coordinates that are not the coordinates of any lamination."""

    exit_code = 2
    kind = 'invalid_triangle'

    def __init__(self, violations) -> None:
        self.violations = list(violations)
        summary = '; '.join(v.describe() for v in self.violations)
        super().__init__(f'invalid triangle coordinates: {summary}')


class CoordinateOverflowError(LamkitError, OverflowError):
    exit_code = 4
    kind = 'overflow'
