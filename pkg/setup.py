import os

from setuptools import setup

ext_modules = []
if not os.environ.get("QORBIT_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("qorbit.kernels._ca_ext",
                       ["src/qorbit/kernels/_ca_ext.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass  # pure-python fallback is selected at import time

setup(ext_modules=ext_modules)
