from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    USE_CYTHON = True
except ImportError:
    USE_CYTHON = False

if USE_CYTHON:
    extensions = cythonize(
        [Extension("unitprim._ckernels", ["src/unitprim/_ckernels.pyx"], extra_compile_args=["-O3"], optional=True)],
        compiler_directives={"language_level": "3"},
    )
else:
    # pure-Python kernels are used at import time
    extensions = []

setup(ext_modules=extensions)
