"""Build the optional compiled kernels.

Without Cython or a C compiler the package still installs and falls back
to the pure-Python kernels.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("jumploci._kernels", ["src/jumploci/_kernels.pyx"])],
        compiler_directives={"language_level": 3},
        quiet=True,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
