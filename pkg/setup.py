import os

from setuptools import Extension, setup


def ext_modules():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "smallmatroids._speedups",
        [os.path.join("src", "smallmatroids", "_speedups.pyx")],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=ext_modules())
