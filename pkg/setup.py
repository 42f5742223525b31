import os

from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or with
# CLIQUEHIT_SKIP_EXT=1) the package installs pure-Python and selects the
# fallback kernel at import time.
ext_modules = []
if os.environ.get("CLIQUEHIT_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "cliquehit._kernel._bk_cy",
                    ["src/cliquehit/_kernel/_bk_cy.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
