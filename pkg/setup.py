"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so the extension is marked optional: a failed compile must
not break installation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "defourier._kernels",
                ["src/defourier/_kernels.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
