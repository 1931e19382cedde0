from setuptools import Extension, setup

# The compiled kernel core is optional: if Cython or a C compiler is
# missing the install still succeeds and simembed falls back to the
# numpy kernel implementations at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "simembed._kernels._fastcore",
                ["src/simembed/_kernels/_fastcore.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
