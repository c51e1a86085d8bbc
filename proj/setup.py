import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str) -> None:
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    """Builds the pybind11 module through the project's CMake tree."""

    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).parent.resolve()
        # get_ext_fullpath ends in .../sltrust/_core<suffix>.so
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={cfg}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DSLTRUST_BUILD_CLI_AND_TESTS=OFF",
            "-DSLTRUST_BUILD_PYTHON=ON",
        ]
        env_args = os.environ.get("SLTRUST_CMAKE_ARGS")
        if env_args:
            cmake_args += env_args.split()

        subprocess.run(
            ["cmake", str(source_dir), *cmake_args], cwd=build_dir, check=True
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "--parallel"],
            cwd=build_dir,
            check=True,
        )
        built = next(build_dir.rglob("_core*.so"), None)
        if built is None:
            raise RuntimeError("pybind11 module _core was not built")
        out_dir.mkdir(parents=True, exist_ok=True)
        self.copy_file(str(built), str(out_dir / built.name))


setup(
    packages=["sltrust"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("sltrust._core")],
    cmdclass={"build_ext": CMakeBuild},
)
