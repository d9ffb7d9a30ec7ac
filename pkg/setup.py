"""Build script for the optional compiled enumeration kernels.

The package is fully functional without the extension: when the build (or
the import) of ``covercount._ckernels`` fails, the oracle falls back to the
pure-Python kernels in ``covercount._pykernels``.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    extension = Extension(
        "covercount._ckernels",
        sources=["src/covercount/_ckernels.pyx"],
        optional=True,
    )
    ext_modules = cythonize([extension], compiler_directives={"language_level": 3})

setup(ext_modules=ext_modules)
