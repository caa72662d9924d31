from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("tricount._ckernels", ["src/tricount/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
else:
    # No Cython at build time: the package falls back to the pure-Python
    # kernels at import.
    ext_modules = []

setup(ext_modules=ext_modules)
