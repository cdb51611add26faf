"""Backend selection for the enumeration kernels.

The compiled kernel is used when the extension module built from
``_ckernel.pyx`` is importable; otherwise the pure-Python fallback takes
over transparently.  Set ``CANONLAB_BACKEND=python`` to force the
fallback (useful for benchmarking and differential testing).
"""

from __future__ import annotations

import os

from canonlab import _pykernel

if os.environ.get("CANONLAB_BACKEND", "").lower() in ("py", "python", "pure"):
    _impl = _pykernel
    _BACKEND = "python"
else:
    try:
        from canonlab import _ckernel as _impl  # type: ignore[no-redef]

        _BACKEND = "cython"
    except ImportError:
        _impl = _pykernel
        _BACKEND = "python"


def backend() -> str:
    """Name of the active kernel backend ('cython' or 'python')."""
    return _BACKEND


def count_extensions(poset, prefix=()) -> int:
    return _impl.count_extensions(
        poset.element_count, sorted(poset.covers), tuple(prefix)
    )


def descent_histograms(poset, labelings, prefix=()) -> list[list[int]]:
    """For each labeling, the histogram of descent counts over all
    linear extensions of ``poset`` (optionally restricted to a prefix)."""
    rows = [getattr(lab, "values", lab) for lab in labelings]
    return _impl.descent_histograms(
        poset.element_count, sorted(poset.covers), rows, tuple(prefix)
    )
