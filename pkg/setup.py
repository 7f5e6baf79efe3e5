"""Build script: compiles the optional F_p kernel extension when a toolchain is present.

The package is fully functional without the extension (pure-Python kernels are
selected at import time); set CYCLOMONO_NO_EXT=1 to skip the build explicitly.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from setuptools.errors import CCompilerError, ExecError, PlatformError
except ImportError:  # setuptools < 60
    from distutils.errors import (  # type: ignore[no-redef]
        CCompilerError,
        DistutilsExecError as ExecError,
        DistutilsPlatformError as PlatformError,
    )


class optional_build_ext(build_ext):
    """Treat extension build failures as a soft skip, not a fatal error."""

    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError) as exc:
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, ValueError) as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"WARNING: skipping compiled kernels ({exc}); pure-Python fallback will be used")


def extensions():
    if os.environ.get("CYCLOMONO_NO_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not available; pure-Python kernels will be used")
        return []
    return cythonize(
        [Extension("cyclomono._speedups", ["src/cyclomono/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
