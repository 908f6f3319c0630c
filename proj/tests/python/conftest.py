import glob
import os
import sys

# The extension module is built by CMake; tests find it through the
# APATH_MODULE_DIR environment variable (set by ctest) or by scanning the
# usual build directories.


def _module_dirs():
    env = os.environ.get("APATH_MODULE_DIR")
    if env:
        yield env
    root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    for pattern in ("build", "build-*", "build/*"):
        for cand in glob.glob(os.path.join(root, pattern)):
            yield cand


def pytest_configure(config):
    for cand in _module_dirs():
        if glob.glob(os.path.join(cand, "apath_core_py*.so")):
            sys.path.insert(0, cand)
            return
