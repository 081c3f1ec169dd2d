import os
from dotenv import load_dotenv

load_dotenv()


def _int_or_none(raw: str | None) -> int | None:
    if raw is None or not raw.strip():
        return None
    return int(raw)


class Config:
    # ── Logging ───────────────────────────────────────────────────────────────
    # Log records go to stderr; stdout is reserved for command output.
    LOG_LEVEL = os.environ.get('LAMKIT_LOG_LEVEL', 'WARNING').upper()

    # ── Seeds ─────────────────────────────────────────────────────────────────
    # When set, overrides --seed for `gen` and `fuzz`.
    SEED = _int_or_none(os.environ.get('LAMKIT_SEED'))

    # ── Fuzz campaigns ────────────────────────────────────────────────────────
    # B: Dynnikov entries of round-trip trials are drawn from [-B, B]
    FUZZ_BOUND = int(os.environ.get('LAMKIT_FUZZ_BOUND', '1000000'))
    FUZZ_MAX_COMPONENTS = int(os.environ.get('LAMKIT_FUZZ_MAX_COMPONENTS', '8'))
    # Trials are pure Python and the worker threads share the GIL, so raising
    # this does not make a campaign faster.
    FUZZ_WORKERS = int(os.environ.get('LAMKIT_FUZZ_WORKERS', '4'))

    # ── SVG rendering ─────────────────────────────────────────────────────────
    SVG_WIDTH = int(os.environ.get('LAMKIT_SVG_WIDTH', '800'))
    SVG_HEIGHT = int(os.environ.get('LAMKIT_SVG_HEIGHT', '400'))
    # Most beta crossings `render` will draw; diagram memory grows linearly with them.
    MAX_DIAGRAM_CROSSINGS = int(os.environ.get('LAMKIT_MAX_DIAGRAM_CROSSINGS', '50000'))
