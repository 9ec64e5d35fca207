"""
core/log.py
===========

Timestamped log helper shared by all components.

Lines look like ``[12:03:44] [SEARCH] 🟢 250000 / 5308416 tuples`` and go to
standard error, so whatever a command prints on standard output stays
byte-for-byte reproducible.
"""

import sys
import time

_QUIET = False


def set_quiet(quiet: bool = True):
    global _QUIET
    _QUIET = quiet


def log(msg: str, tag: str | None = None):
    """Timestamped log utility for run output."""
    if _QUIET:
        return
    prefix = f"[{time.strftime('%H:%M:%S')}]"
    if tag:
        prefix += f" [{tag}]"
    print(f"{prefix} {msg}", file=sys.stderr)
