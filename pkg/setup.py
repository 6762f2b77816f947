from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("powsym._kernel", ["src/powsym/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the pure-Python kernel is a full fallback; build without the extension
    ext_modules = []

setup(ext_modules=ext_modules)
