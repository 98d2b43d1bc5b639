"""Import-time selection of the kernel backend.

The compiled Cython extension is preferred; the numpy fallback is used when
the extension is missing or when ``HYPERZETA_PURE_PYTHON`` is set (any
non-empty value), which is how the benchmark pins each side.
"""
import os

if os.environ.get("HYPERZETA_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND = kernels.BACKEND_NAME

sigma_lattice_sum = kernels.sigma_lattice_sum
rk4_trajectory = kernels.rk4_trajectory
