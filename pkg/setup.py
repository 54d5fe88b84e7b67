from setuptools import Extension, setup
from Cython.Build import cythonize

ext_modules = [
    Extension(
        "themex._kernels._chg",
        ["src/themex/_kernels/_chg.pyx"],
    )
]

setup(ext_modules=cythonize(ext_modules, language_level=3))
