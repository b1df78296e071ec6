"""Build script: compiles the optional bitmask-core extension.

The package is fully functional without the extension (pure-Python fallback
in ``pitvd._bitcore``); the build is therefore best-effort and any failure
here should not make the install fail.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("PITVD_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/pitvd/_bitcore_c.pyx"],
            language_level="3",
        )
    except Exception as exc:  # pragma: no cover - build-environment dependent
        print(f"pitvd: skipping compiled core ({exc!r}); pure-Python fallback will be used")
        ext_modules = []

setup(ext_modules=ext_modules)
