import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("QHAHN_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("qhahn._accel._polymul_c", ["src/qhahn/_accel/_polymul_c.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
