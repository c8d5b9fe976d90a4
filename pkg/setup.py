import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The extension is optional: when the toolchain is missing the package still
# installs and falls back to the pure-Python kernels at import time.
ext = Extension(
    "romanoff._native._speedups",
    ["src/romanoff/_native/_speedups.pyx"],
    include_dirs=[np.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    optional=True,
)

setup(ext_modules=cythonize([ext], language_level="3") if cythonize else [])
