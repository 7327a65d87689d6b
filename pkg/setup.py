from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# -ffp-contract=off keeps the extension bit-identical to the pure-Python
# backend (gcc otherwise fuses a*b+c into FMA and perturbs last bits).
extensions = [
    Extension(
        "spreadmax._native",
        ["src/spreadmax/_native.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(extensions, language_level="3") if cythonize else [],
)
