"""Backend selection for the exhaustive-search kernels.

The compiled extension ``ringinv._ckernels`` is used when it was built; the
numpy implementation in ``ringinv._pykernels`` is the fallback.  Setting
``RINGINV_PURE=1`` in the environment forces the fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("RINGINV_PURE", "") not in ("", "0"):
        raise ImportError("pure backend forced")
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

mat_tables = _impl.mat_tables
along_table = _impl.along_table
along_search = _impl.along_search
group_table = _impl.group_table


def backend(name: str):
    """The kernel module for ``name`` (``"cython"`` or ``"python"``)."""
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
