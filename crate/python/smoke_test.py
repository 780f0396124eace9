"""Smoke test for the Python extension. Build it first with
`maturin develop --release -m crates/braidfill-py/Cargo.toml`.

If SnapPy is importable, the exported script for the ν = 0 closure is also run
and its volume checked.
"""

import json
import sys

import braidfill


def main():
    assert braidfill.family_word("beta", "1/3") == "B5: 3 4 2 3 2 1"

    rep = json.loads(braidfill.verify_thm53(1))
    assert rep["passed"], rep["steps"][-1]
    assert rep["steps"][-1]["certificate"] is not None

    assert json.loads(braidfill.verify_thm42(0, 1, 2))["passed"]
    assert json.loads(braidfill.verify_magic())["link"]["braid"]["strands"] == 3

    t = braidfill.t_of_q(1, 3)
    assert abs(t - braidfill.dilatation(1, 3)) < 1e-9
    assert abs(t**4 - t**3 - t**2 - t + 1) < 1e-9

    link = json.loads(braidfill.export_link("Mhat", nu="0/1"))
    assert link["axis"] and len(link["components"]) == 2

    try:
        braidfill.family_word("beta", "1/2")
    except ValueError:
        pass
    else:
        raise AssertionError("q = 1/2 accepted")

    script = braidfill.snappy_script("Mhat", nu="0/1")
    try:
        import snappy  # noqa: F401
    except ImportError:
        print("snappy not installed, skipping volume check")
    else:
        import contextlib
        import io

        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            exec(script, {})
        vol = float(buf.getvalue().split("volume")[1].split()[0])
        assert abs(vol - 5.33349) < 1e-4, vol
        print("volume", vol)

    print("ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
