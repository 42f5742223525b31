"""Clique-enumeration kernel: compiled core with pure-Python fallback.

The compiled extension is optional; when it is missing, or when the
environment variable CLIQUEHIT_PURE_PYTHON=1 is set, the pure-Python
twin is used. Both implement the same algorithm and return identical
results, so the choice only affects speed.
"""

import os

from . import bk_py

if os.environ.get("CLIQUEHIT_PURE_PYTHON") == "1":
    _impl = bk_py
else:
    try:
        from . import _bk_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = bk_py

BACKEND: str = _impl.NAME
enumerate_max_cliques = _impl.enumerate_max_cliques


def available_backends() -> dict:
    """Importable kernel modules keyed by name (for tests and benchmarks)."""
    found = {bk_py.NAME: bk_py}
    try:
        from . import _bk_cy

        found[_bk_cy.NAME] = _bk_cy
    except ImportError:
        pass
    return found
