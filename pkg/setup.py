"""Build script: compiles the optional handle-reduction extension.

The package is pure Python except for one hot kernel
(``braidcert._reduction_c``).  If Cython or a C compiler is missing the
build silently falls back to the pure-Python kernel; the installed
package selects whichever is importable at runtime.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/braidcert/_reduction_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
