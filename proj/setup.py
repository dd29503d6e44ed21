import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "vrda._vrda",
    sorted(glob.glob("src/*.cpp")) + ["python/vrda/_vrda.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(
    name="vrda",
    version="0.1.0",
    description="Sparse online linear classification with voted dual averaging",
    python_requires=">=3.9",
    packages=["vrda"],
    package_dir={"vrda": "python/vrda"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
