"""
core/settings.py
================

Caps and defaults shared by every component.

Everything here can be overridden per call (keyword arguments) or per run
(CLI flags). There is no environment-variable layer: a run is fully
described by its flags.
"""

# --------------------------------------------------------------------------- #
# Caps
# --------------------------------------------------------------------------- #

CLOSURE_CAP = 10_000           # max elements produced by close_group
TUPLE_SPACE_CAP = 10**7        # max |G|^arity accepted in exhaustive mode
CAYLEY_VALIDATION_CAP = 64     # Cayley tables above this order are refused
MAX_RESAMPLES = 1_000          # degenerate sphere samples tolerated per trial

# --------------------------------------------------------------------------- #
# Defaults
# --------------------------------------------------------------------------- #

DEFAULT_SEED = 0
DEFAULT_DENOM_BOUND = 50
DEFAULT_SAMPLE_COUNT = 1_000

REPORT_INTERVAL = 100          # trials between Monte Carlo progress lines
SEARCH_REPORT_INTERVAL = 250_000   # tuples between search progress lines

REPORT_FORMAT_VERSION = 1
DIGEST_LENGTH = 16             # hex digits kept from the configuration sha256
