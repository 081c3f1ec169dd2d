"""Command-line front-end.

Every command reads JSON from stdin (or files named by flags) and writes a
single line of JSON to stdout; ``render`` writes SVG.  Exit codes:
0 ok, 1 malformed input, 2 invalid triangle coordinates, 3 counterexample
found by ``fuzz``, 4 overflow.
"""

import argparse
import json
import logging
import sys

from config import Config
from lamkit import configure_logging
from lamkit.errors import InvalidTriangleError, LamkitError, MalformedInputError
from lamkit.models import (
    DynnikovCoords,
    IntervalFamily,
    RelaxedCurve,
    TriangleCoords,
    dumps,
    lamination_from_dict,
)
from lamkit.services import coords, fuzz, intersection, oracle, render

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; 2 means "invalid lamination" here
    def error(self, message: str):
        raise MalformedInputError(message)


def build_parser() -> _Parser:
    parser = _Parser(
        prog='lamkit',
        description='Exact coordinates and intersection numbers of integral laminations on D_n.',
    )
    commands = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')

    convert = commands.add_parser('convert', help='convert between triangle and Dynnikov coordinates')
    convert.add_argument('--to', choices=('dynnikov', 'triangle'), required=True)

    commands.add_parser('validate', help='check triangle coordinates, listing every violation')

    intersect = commands.add_parser('intersect', help='intersection with a relaxed curve or multicurve')
    target = intersect.add_mutually_exclusive_group(required=True)
    target.add_argument('--curve', metavar='I,J',
                        help='relaxed curve C_IJ, or its JSON form {"n":N,"i":I,"j":J}')
    target.add_argument('--family', metavar='FILE', help='JSON interval family')

    d3 = commands.add_parser('d3-intersect', help='intersection of two laminations on D_3')
    d3.add_argument('laminations', nargs='*', metavar='JSON',
                    help='two laminations; read from stdin (one per line) when omitted')
    d3.add_argument('--format', choices=('dynnikov', 'triangle'), default='dynnikov')

    gen = commands.add_parser('gen', help='random relaxed multicurve')
    gen.add_argument('--n', type=int, required=True)
    gen.add_argument('--components', type=int, default=3)
    gen.add_argument('--seed', type=int, default=0)

    draw = commands.add_parser('render', help='draw the lamination read from stdin as SVG')
    draw.add_argument('--out', metavar='FILE', help='write the SVG here instead of stdout')

    campaign = commands.add_parser('fuzz', help='run the self-check property suites')
    campaign.add_argument('--trials', type=int, default=1000)
    campaign.add_argument('--n-max', type=int, default=12)
    campaign.add_argument('--seed', type=int, default=0)

    return parser


# ── Input helpers ─────────────────────────────────────────────────────────────

def _parse_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f'{source} is not valid JSON: {exc}') from None


def _read_stdin_json():
    return _parse_json(sys.stdin.read(), 'stdin')


def _as_triangle(lamination: TriangleCoords | DynnikovCoords) -> TriangleCoords:
    if isinstance(lamination, DynnikovCoords):
        return coords.triangle_from_dynnikov(lamination)
    coords.ensure_valid(lamination)
    return lamination


def _parse_curve(text: str, n: int) -> RelaxedCurve:
    if text.lstrip().startswith('{'):
        return RelaxedCurve.from_dict(_parse_json(text, '--curve'))
    try:
        i, j = (int(part) for part in text.split(','))
    except ValueError:
        raise MalformedInputError(f'--curve expects I,J or a JSON curve, got {text!r}') from None
    return RelaxedCurve(n, i, j)


def _read_family(path: str) -> IntervalFamily:
    try:
        with open(path, encoding='utf-8') as handle:
            text = handle.read()
    except OSError as exc:
        raise MalformedInputError(f'cannot read family file: {exc}') from None
    return IntervalFamily.from_dict(_parse_json(text, path))


def _seed(args, config) -> int:
    if config.SEED is not None:
        logger.info('Seed %d taken from LAMKIT_SEED (overrides --seed %d)', config.SEED, args.seed)
        return config.SEED
    return args.seed


# ── Commands ──────────────────────────────────────────────────────────────────

def _cmd_convert(args, config) -> int:
    lamination = lamination_from_dict(_read_stdin_json())
    t = _as_triangle(lamination)
    result = coords.dynnikov_from_triangle(t) if args.to == 'dynnikov' else t
    print(result.to_json())
    return EXIT_OK


def _cmd_validate(args, config) -> int:
    lamination = lamination_from_dict(_read_stdin_json())
    try:
        _as_triangle(lamination)
    except InvalidTriangleError as exc:
        print(dumps({'ok': False, 'violations': [v.to_dict() for v in exc.violations]}))
        return exc.exit_code
    print(dumps({'ok': True}))
    return EXIT_OK


def _cmd_intersect(args, config) -> int:
    t = _as_triangle(lamination_from_dict(_read_stdin_json()))
    if args.curve is not None:
        value = intersection.intersect_relaxed(t, _parse_curve(args.curve, t.n))
    else:
        value = intersection.intersect_relaxed_family(t, _read_family(args.family))
    print(dumps(value))
    return EXIT_OK


def _cmd_d3_intersect(args, config) -> int:
    texts = args.laminations or [line for line in sys.stdin.read().splitlines() if line.strip()]
    if len(texts) != 2:
        raise MalformedInputError(f'd3-intersect needs exactly two laminations, got {len(texts)}')
    parse = TriangleCoords.from_dict if args.format == 'triangle' else DynnikovCoords.from_dict
    first, second = (
        _as_triangle(parse(_parse_json(text, f'lamination {pos}')))
        for pos, text in enumerate(texts, start=1)
    )
    print(dumps(intersection.intersect_d3(first, second)))
    return EXIT_OK


def _cmd_gen(args, config) -> int:
    family = oracle.random_family(args.n, args.components, _seed(args, config))
    print(family.to_json())
    return EXIT_OK


def _cmd_render(args, config) -> int:
    t = _as_triangle(lamination_from_dict(_read_stdin_json()))
    diagram = oracle.reconstruct(t, max_crossings=config.MAX_DIAGRAM_CROSSINGS)
    svg = render.render_svg(diagram, render.RenderOptions.from_config(config))
    if args.out is None:
        # stdout may not be UTF-8; character references keep the labels intact
        sys.stdout.write(svg.encode('ascii', 'xmlcharrefreplace').decode('ascii'))
        return EXIT_OK
    try:
        with open(args.out, 'w', encoding='utf-8') as handle:
            handle.write(svg)
    except OSError as exc:
        raise MalformedInputError(f'cannot write {args.out}: {exc}') from None
    print(dumps({'out': args.out, 'components': len(diagram.components)}))
    return EXIT_OK


def _cmd_fuzz(args, config) -> int:
    report = fuzz.run_campaign(_seed(args, config), args.trials, args.n_max, config)
    print(dumps(report.to_dict()))
    return EXIT_COUNTEREXAMPLE if report.status == 'failed' else EXIT_OK


_COMMANDS = {
    'convert': _cmd_convert,
    'validate': _cmd_validate,
    'intersect': _cmd_intersect,
    'd3-intersect': _cmd_d3_intersect,
    'gen': _cmd_gen,
    'render': _cmd_render,
    'fuzz': _cmd_fuzz,
}


def main(argv=None, config_class: type = Config) -> int:
    if argv is None:
        argv = sys.argv[1:]

    config = config_class()
    configure_logging(config.LOG_LEVEL)

    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, config)
    except LamkitError as exc:
        logger.debug('%s failed: %s', argv[:1], exc)
        print(dumps({'error': str(exc), 'kind': exc.kind}), file=sys.stderr)
        return exc.exit_code
    except SystemExit as exc:
        # --help / --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK
