from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("mtour._cykernel", ["src/mtour/_cykernel.pyx"])],
        language_level=3,
    )
except ImportError:  # pure-Python install still works
    ext_modules = []

setup(ext_modules=ext_modules)
