"""CMake bridge for the pybind11 extension.

The extension is built by the project's CMake tree (target _coamoeba)
and copied into the package; use `pip install -e . --no-build-isolation`.
"""

import shutil
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
        source = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_coamoeba", "-j"],
            check=True,
        )
        built = sorted(build_dir.glob("_coamoeba*.so")) or sorted(
            build_dir.glob("**/_coamoeba*.so")
        )
        if not built:
            raise RuntimeError("CMake did not produce the _coamoeba extension")
        target = Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], target)


setup(
    ext_modules=[CMakeExtension("coamoeba._coamoeba")],
    cmdclass={"build_ext": CMakeBuild},
)
