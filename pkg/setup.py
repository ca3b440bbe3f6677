"""Build hooks: compile the optional geometry extension when Cython and a
C toolchain are available; otherwise install pure-Python only (the kernel
selector falls back automatically)."""

from setuptools import setup


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    try:
        return cythonize(
            ["src/shieldtiles/_fastgeom.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception:
        return []


setup(ext_modules=_extensions())
