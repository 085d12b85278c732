import importlib
import os
import sys

# In-tree runs point these at the CMake build directory (for _core) and the
# package sources; an installed wheel needs neither.
core_dir = os.environ.get("GOLDILOCKS_CORE_DIR")
pkg_dir = os.environ.get("GOLDILOCKS_PKG_DIR")
if core_dir and pkg_dir:
    sys.path.insert(0, core_dir)
    sys.modules["goldilocks._core"] = importlib.import_module("_core")
    sys.path.insert(0, pkg_dir)
