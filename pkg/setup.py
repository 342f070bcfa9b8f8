"""Build hook for the optional compiled kernel extension.

The package works without the extension: a pure-Python fallback with the
same interface is selected at import time when binforms._kernels_cy is
missing. Building therefore tolerates an absent Cython or compiler.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext = Extension("binforms._kernels_cy", sources=["src/binforms/_kernels_cy.pyx"])
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
