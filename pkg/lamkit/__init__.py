import logging

from jinja2 import Environment, PackageLoader, select_autoescape

__version__ = '0.1.0'

# Shared template environment; the renderer imports it directly
# (e.g. `from lamkit import templates`).
templates = Environment(
    loader=PackageLoader('lamkit', 'templates'),
    autoescape=select_autoescape(default=True, default_for_string=True),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def configure_logging(level: str = 'WARNING') -> None:
    """Send log records to stderr; stdout carries command output only."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
