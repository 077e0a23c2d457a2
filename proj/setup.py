import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    """Drives the CMake build and drops the extension where setuptools
    expects it; the C++ sources are listed in CMakeLists.txt only."""

    def build_extension(self, ext):
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).parent.resolve()
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            [
                "cmake", "--build", str(build_dir),
                "--target", "dklein_py",
                "--parallel", str(os.cpu_count() or 2),
            ],
            check=True,
        )
        built = next((build_dir / "python" / "dklein").glob("_dklein*"))
        ext_path.parent.mkdir(parents=True, exist_ok=True)
        self.copy_file(str(built), str(ext_path))


setup(
    ext_modules=[CMakeExtension("dklein._dklein")],
    cmdclass={"build_ext": CMakeBuild},
)
