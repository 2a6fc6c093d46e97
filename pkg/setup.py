"""Build the optional compiled kernels; the package works without them."""

from __future__ import annotations

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("PACKLAB_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "packlab._kernels._ckernels",
                    ["src/packlab/_kernels/_ckernels.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )

setup(ext_modules=ext_modules)
