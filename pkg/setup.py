import os

from setuptools import Extension, setup


def get_extensions():
    if os.environ.get("RWHITNEY_PURE", "") not in ("", "0"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "rwhitney._kernels",
        ["src/rwhitney/_kernels.pyx"],
        language="c++",
        extra_compile_args=["-O3"],
        optional=True,
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=get_extensions())
