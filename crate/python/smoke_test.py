"""Smoke test for the `hda` extension.

Build first:  cargo build --release -p hda-py --features extension-module
"""

import importlib.util
import os
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    candidates = [os.environ.get("HDA_PY_LIB")] + [
        str(ROOT / "target" / p / "libhda.so") for p in ("release", "debug")
    ]
    lib = next((c for c in candidates if c and os.path.exists(c)), None)
    if lib is None:
        sys.exit("libhda.so not found; build hda-py with --features extension-module")
    tmp = pathlib.Path(tempfile.mkdtemp())
    shutil.copy(lib, tmp / "hda.so")
    spec = importlib.util.spec_from_file_location("hda", tmp / "hda.so")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def main():
    hda = load()
    fork = (ROOT / "corpus" / "fork.pcs").read_text()
    broken = (ROOT / "corpus" / "broken.pcs").read_text()
    assert hda.validate(fork)
    assert not hda.validate(broken)
    assert hda.homology(fork, "br") == ["Z^2", "Z", "0"]
    assert hda.homology(fork, "mg", 1) == ["Z", "0"]
    code, out = hda.run(["validate", str(ROOT / "corpus" / "cube2.pcs")])
    assert code == 0 and '"hda-report/1"' in out, (code, out)
    print("ok")


if __name__ == "__main__":
    main()
