from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython at build time: ship pure Python, the package falls back
    # to the _ryser_py kernel at import.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "photonpurify._ryser",
                ["src/photonpurify/_ryser.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
