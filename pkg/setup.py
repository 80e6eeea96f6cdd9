"""Build script: compiles the Garside kernel extension when possible.

The package works without the extension; braidfact._kernel falls back to
the pure-Python twin if the compiled module is absent.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "braidfact._kernel._garside",
                sources=["src/braidfact/_kernel/_garside.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
