"""Self-check campaigns run by ``lamkit fuzz``.

Each suite draws random cases from a per-trial seed, checks one family of
properties and knows how to shrink a failing case.  Trials run on a thread
pool; when several fail, the lowest trial index wins so that a fixed seed
always reports the same counterexample.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime

from lamkit.errors import MalformedInputError
from lamkit.models import DynnikovCoords, IntervalFamily
from lamkit.services import coords, intersection, oracle

logger = logging.getLogger(__name__)

# Entry bound for laminations that get drawn explicitly; reconstruction is
# linear in the number of crossings.
_DIAGRAM_BOUND = 8
_D3_BOUND = 1000


@dataclass
class Counterexample:
    suite: str
    trial: int
    message: str
    witness: dict

    def to_dict(self) -> dict:
        return {
            'suite': self.suite,
            'trial': self.trial,
            'message': self.message,
            'witness': self.witness,
        }


@dataclass
class CampaignReport:
    seed: int
    trials: int
    n_max: int
    # Values: 'running', 'passed', 'failed'
    status: str = 'running'
    checked: dict[str, int] = field(default_factory=dict)
    counterexample: Counterexample | None = None
    started_at: datetime = field(default_factory=datetime.now)
    finished_at: datetime | None = None

    def to_dict(self) -> dict:
        payload = {
            'status': self.status,
            'seed': self.seed,
            'trials': self.trials,
            'n_max': self.n_max,
            'checked': dict(self.checked),
        }
        if self.counterexample is not None:
            payload['counterexample'] = self.counterexample.to_dict()
        return payload


# ── Random cases ──────────────────────────────────────────────────────────────

def random_dynnikov(rng: random.Random, n: int, bound: int) -> DynnikovCoords:
    """Uniform nonzero vector with entries in [-bound, bound]."""
    while True:
        vector = [rng.randint(-bound, bound) for _ in range(2 * n - 4)]
        if any(vector):
            return DynnikovCoords(n, tuple(vector[: n - 2]), tuple(vector[n - 2:]))


def _toward_zero(x: int) -> int:
    return x // 2 if x >= 0 else -(-x // 2)


def _halved(d: DynnikovCoords) -> list[DynnikovCoords]:
    """Candidates with one entry (or all entries) halved towards zero."""
    vector = d.as_vector()
    candidates = []
    shrunk = tuple(_toward_zero(x) for x in vector)
    if shrunk != vector and any(shrunk):
        candidates.append(shrunk)
    for pos, value in enumerate(vector):
        if value:
            single = vector[:pos] + (_toward_zero(value),) + vector[pos + 1:]
            if any(single):
                candidates.append(single)
    half = d.n - 2
    return [DynnikovCoords(d.n, v[:half], v[half:]) for v in candidates]


# ── Suites ────────────────────────────────────────────────────────────────────

class RoundTripSuite:
    """rho(tau(d)) = d for random nonzero d, and tau(d) is always valid."""

    name = 'round_trip'

    def __init__(self, bound: int) -> None:
        self.bound = bound

    def generate(self, rng: random.Random, n_max: int) -> DynnikovCoords:
        return random_dynnikov(rng, rng.randint(3, n_max), self.bound)

    def check(self, d: DynnikovCoords) -> str | None:
        t = coords.triangle_from_dynnikov(d)
        violations = coords.validate_triangle(t)
        if violations:
            return 'inverted triangle is invalid: ' + '; '.join(v.describe() for v in violations)
        back = coords.dynnikov_from_triangle(t)
        if back != d:
            return f'round trip returned {back.to_json()}'
        if coords.triangle_from_dynnikov(back) != t:
            return 'triangle -> dynnikov -> triangle is not the identity'
        if not coords.beta_recovery_holds(t):
            return 'beta_i != 2(|a_i| + max(b_i, 0) + m_i)'
        return None

    def shrink(self, d: DynnikovCoords) -> list[DynnikovCoords]:
        return _halved(d)

    def witness(self, d: DynnikovCoords) -> dict:
        return d.to_dict()


class OracleEquivalenceSuite:
    """The relaxed-curve formula agrees with the linking oracle on relaxed multicurves."""

    name = 'oracle_equivalence'

    def __init__(self, max_components: int) -> None:
        self.max_components = max_components

    def generate(self, rng: random.Random, n_max: int) -> IntervalFamily:
        n = rng.randint(3, min(n_max, 10))
        return oracle.random_family(n, self.max_components, rng.getrandbits(64))

    def check(self, f: IntervalFamily) -> str | None:
        t = oracle.family_triangle(f)
        for curve in oracle.relaxed_curves(f.n):
            expected = oracle.linking_intersection(f, curve)
            got = intersection.intersect_relaxed(t, curve)
            if got != expected:
                return f'i(L, C_{curve.i}{curve.j}) = {got}, linking oracle says {expected}'
            own = intersection.intersect_relaxed(coords.relaxed_curve_triangle(curve), curve)
            if own != 0:
                return f'i(C_{curve.i}{curve.j}, C_{curve.i}{curve.j}) = {own}'
        components = oracle.component_count(t)
        if components != len(f):
            return f'reconstruction found {components} components, family has {len(f)}'
        return None

    def shrink(self, f: IntervalFamily) -> list[IntervalFamily]:
        if len(f) < 2:
            return []
        return [f.without(idx) for idx in range(len(f))]

    def witness(self, f: IntervalFamily) -> dict:
        return f.to_dict()


class PathComponentSuite:
    """Reconstructed diagrams reproduce t and have (beta_i + beta_{j+1}) / 2 arcs in S_{i,j}."""

    name = 'path_components'

    def generate(self, rng: random.Random, n_max: int) -> DynnikovCoords:
        return random_dynnikov(rng, rng.randint(3, min(n_max, 10)), _DIAGRAM_BOUND)

    def check(self, d: DynnikovCoords) -> str | None:
        t = coords.triangle_from_dynnikov(d)
        diagram = oracle.reconstruct(t)
        drawn = oracle.crossing_counts(diagram)
        if drawn != t:
            return f'diagram crosses the arcs {drawn.to_json()} times'
        for i in t.strips:
            for j in range(i, t.n - 1):
                expected = (t.beta_at(i) + t.beta_at(j + 1)) // 2
                got = oracle.path_component_count(diagram, i, j)
                if got != expected:
                    return f'S_{i},{j} has {got} path components, expected {expected}'
        return None

    def shrink(self, d: DynnikovCoords) -> list[DynnikovCoords]:
        return _halved(d)

    def witness(self, d: DynnikovCoords) -> dict:
        return d.to_dict()


class ThreePunctureSuite:
    """On D_3 the general formula, the relaxed formula and symmetry all agree."""

    name = 'd3'

    def generate(self, rng: random.Random, n_max: int) -> tuple[DynnikovCoords, DynnikovCoords]:
        return random_dynnikov(rng, 3, _D3_BOUND), random_dynnikov(rng, 3, _D3_BOUND)

    def check(self, pair: tuple[DynnikovCoords, DynnikovCoords]) -> str | None:
        t1, t2 = (coords.triangle_from_dynnikov(d) for d in pair)
        c12, c23 = intersection.d3_relaxed_curves()
        for t in (t1, t2):
            if intersection.intersect_relaxed(t, c12) != t.beta_at(2):
                return f'i(L, C_12) != beta_2 for {t.to_json()}'
            if intersection.intersect_relaxed(t, c23) != t.beta_at(1):
                return f'i(L, C_23) != beta_1 for {t.to_json()}'
            for curve in (c12, c23):
                general = intersection.intersect_d3(t, coords.relaxed_curve_triangle(curve))
                if general != intersection.intersect_relaxed(t, curve):
                    return f'intersect_d3 and intersect_relaxed disagree on C_{curve.i}{curve.j}'
        forward = intersection.intersect_d3(t1, t2)
        backward = intersection.intersect_d3(t2, t1)
        if forward != backward:
            return f'intersect_d3 is not symmetric: {forward} != {backward}'
        return None

    def shrink(self, pair):
        first, second = pair
        return [(s, second) for s in _halved(first)] + [(first, s) for s in _halved(second)]

    def witness(self, pair) -> dict:
        return {'first': pair[0].to_dict(), 'second': pair[1].to_dict()}


def default_suites(config) -> list:
    return [
        RoundTripSuite(config.FUZZ_BOUND),
        OracleEquivalenceSuite(config.FUZZ_MAX_COMPONENTS),
        PathComponentSuite(),
        ThreePunctureSuite(),
    ]


# ── Running ───────────────────────────────────────────────────────────────────

def _failure(suite, case) -> str | None:
    try:
        return suite.check(case)
    except Exception as exc:  # noqa: BLE001
        logger.debug('Suite %s raised on %r', suite.name, case, exc_info=True)
        return f'{type(exc).__name__}: {exc}'


def _run_trial(suite, seed: int, n_max: int, trial: int):
    rng = random.Random(f'{seed}:{suite.name}:{trial}')
    case = suite.generate(rng, n_max)
    message = _failure(suite, case)
    return (case, message) if message else None


def shrink_case(suite, case, message: str):
    """Greedily replace ``case`` by smaller cases that still fail."""
    improved = True
    while improved:
        improved = False
        for smaller in suite.shrink(case):
            smaller_message = _failure(suite, smaller)
            if smaller_message:
                case, message = smaller, smaller_message
                improved = True
                break
    return case, message


def run_campaign(
    seed: int,
    trials: int,
    n_max: int,
    config,
    suites: list | None = None,
) -> CampaignReport:
    """Run every suite for ``trials`` trials; stop at the first failing suite."""
    if n_max < 3:
        raise MalformedInputError(f'n_max must be at least 3, got {n_max}')
    suites = suites if suites is not None else default_suites(config)
    report = CampaignReport(seed=seed, trials=trials, n_max=n_max)
    logger.info('Fuzz campaign started (seed=%d, trials=%d, n_max=%d)', seed, trials, n_max)

    workers = max(1, int(config.FUZZ_WORKERS))
    for suite in suites:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes = executor.map(
                lambda trial: _run_trial(suite, seed, n_max, trial), range(trials)
            )
            # map yields in trial order, so the first hit is the lowest index
            first = next(
                ((trial, hit) for trial, hit in enumerate(outcomes) if hit is not None),
                None,
            )
        report.checked[suite.name] = trials if first is None else first[0] + 1

        if first is not None:
            trial, (case, message) = first
            logger.warning('Suite %s failed at trial %d: %s', suite.name, trial, message)
            case, message = shrink_case(suite, case, message)
            report.counterexample = Counterexample(
                suite=suite.name,
                trial=trial,
                message=message,
                witness=suite.witness(case),
            )
            report.status = 'failed'
            break
        logger.info('Suite %s passed %d trial(s)', suite.name, trials)
    else:
        report.status = 'passed'

    report.finished_at = datetime.now()
    logger.info(
        'Fuzz campaign %s (seed=%d) in %.1fs',
        report.status,
        seed,
        (report.finished_at - report.started_at).total_seconds(),
    )
    return report
