"""Builds the optional compiled correlation kernel.

If Cython or a C compiler is unavailable the build falls through and the
package runs on the pure-Python kernel twin instead.
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
                "projseq._corr_kernel",
                ["src/projseq/_corr_kernel.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
