"""Wheel build that drives the CMake project (the pybind11 module plus its
static core). scikit-build-core would do this declaratively, but it is not
available on every mirror, so the classic cmake-extension shim is used."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).resolve().parent
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        package_dir = ext_path.parent  # .../fockvolt
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={cfg}",
            "-DFOCKVOLT_BUILD_PYTHON=ON",
            "-DFOCKVOLT_BUILD_TESTS=OFF",
            "-DFOCKVOLT_BUILD_CLI=OFF",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(["cmake", "-S", str(source_dir), "-B", str(build_dir), *cmake_args],
                       check=True)
        subprocess.run(["cmake", "--build", str(build_dir), "--target", "_core",
                        f"-j{os.cpu_count() or 2}"], check=True)

        built = list((build_dir / "python" / "fockvolt").glob("_core*"))
        if not built:
            raise RuntimeError("CMake did not produce the _core extension")
        package_dir.mkdir(parents=True, exist_ok=True)
        self.copy_file(str(built[0]), str(ext_path))


setup(
    packages=["fockvolt"],
    package_dir={"fockvolt": "python/fockvolt"},
    ext_modules=[CMakeExtension("fockvolt._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
