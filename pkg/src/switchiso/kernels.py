"""Backend selection for the canonical-form kernels.

The compiled extension is optional; when the package was installed
without a C compiler the pure-Python twin takes over transparently.
Both export a CanonicalScanner class with the same contract, and the
benchmark drives them side by side through available_backends().
"""

from __future__ import annotations

from types import ModuleType
from typing import Sequence

from . import _kernels

try:
    from . import _speedups
except ImportError:
    _speedups = None

COMPILED_EDGE_LIMIT = 63

backend_name = _speedups.backend_name if _speedups is not None else _kernels.backend_name


def make_scanner(
    edge_perms: Sequence[Sequence[int]],
    pivots: Sequence[int],
    rows: Sequence[int],
    m: int,
):
    """Builds a scanner on the fastest backend that can hold m edge bits."""
    if _speedups is not None and m <= COMPILED_EDGE_LIMIT:
        return _speedups.CanonicalScanner(edge_perms, pivots, rows, m)
    return _kernels.CanonicalScanner(edge_perms, pivots, rows, m)


def available_backends() -> dict[str, ModuleType]:
    backends = {"python": _kernels}
    if _speedups is not None:
        backends["compiled"] = _speedups
    return backends
