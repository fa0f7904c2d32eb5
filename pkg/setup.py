from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # no Cython: the package runs on its pure-Python kernels
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("corespan._kernels", ["src/corespan/_kernels.pyx"], optional=True)],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
