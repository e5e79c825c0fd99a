import os

from setuptools import setup, Extension

ext_modules = []
if os.environ.get("AFFPBW_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("affpbw._kernel.poly_cy", ["src/affpbw/_kernel/poly_cy.pyx"])],
            language_level=3,
        )
    except ImportError:
        # pure-python kernel is selected at import time when the extension is absent
        ext_modules = []

setup(ext_modules=ext_modules)
