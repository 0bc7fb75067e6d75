# setup.py
#
# Builds the _gfn extension with the project's own CMake configuration so the
# python module and the CLI share one compiled core.

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        # the extension must land inside the gfn package directory
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        package_dir = ext_path.parent
        package_dir.mkdir(parents=True, exist_ok=True)
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cmakedir = subprocess.check_output(
            [sys.executable, "-m", "pybind11", "--cmakedir"], text=True
        ).strip()
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DGFN_BUILD_PYTHON=ON",
                "-DGFN_BUILD_CLI=OFF",
                "-DGFN_BUILD_TESTS=OFF",
                f"-Dpybind11_DIR={cmakedir}",
                f"-DPython_EXECUTABLE={sys.executable}",
                f"-DPython3_EXECUTABLE={sys.executable}",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={package_dir}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_gfn", "-j"],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("gfn._gfn")],
    cmdclass={"build_ext": CMakeBuild},
)
