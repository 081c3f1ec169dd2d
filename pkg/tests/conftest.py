from hypothesis import strategies as st

from lamkit.models import DynnikovCoords, RelaxedCurve, TriangleCoords
from lamkit.services import coords, oracle


class StubConfig:
    LOG_LEVEL = 'WARNING'
    SEED = None
    FUZZ_BOUND = 50
    FUZZ_MAX_COMPONENTS = 4
    FUZZ_WORKERS = 2
    SVG_WIDTH = 400
    SVG_HEIGHT = 200
    MAX_DIAGRAM_CROSSINGS = 1000


# Worked example on D_5 used throughout the suite.
EXAMPLE_TRIANGLE = TriangleCoords(5, (2, 6, 3, 5, 4, 4), (4, 8, 8, 4))
EXAMPLE_DYNNIKOV = DynnikovCoords(5, (2, 1, 0), (-2, 0, 2))


# ── Hypothesis strategies ─────────────────────────────────────────────────────

def punctures(max_n: int = 9):
    return st.integers(min_value=3, max_value=max_n)


@st.composite
def dynnikov_vectors(draw, max_n: int = 9, bound: int = 30) -> DynnikovCoords:
    n = draw(punctures(max_n))
    entries = st.integers(min_value=-bound, max_value=bound)
    vector = draw(
        st.lists(entries, min_size=2 * n - 4, max_size=2 * n - 4).filter(any)
    )
    return DynnikovCoords(n, tuple(vector[: n - 2]), tuple(vector[n - 2:]))


def valid_triangles(max_n: int = 9, bound: int = 30):
    return dynnikov_vectors(max_n, bound).map(coords.triangle_from_dynnikov)


@st.composite
def relaxed_curves(draw, n: int | None = None) -> RelaxedCurve:
    n = n if n is not None else draw(punctures())
    return draw(st.sampled_from(oracle.relaxed_curves(n)))


@st.composite
def laminar_families(draw, max_n: int = 8, max_components: int = 5):
    n = draw(punctures(max_n))
    seed = draw(st.integers(min_value=0, max_value=2 ** 32))
    return oracle.random_family(n, max_components, seed)
