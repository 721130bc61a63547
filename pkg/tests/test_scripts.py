import csv
import importlib.util
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    sys.modules[name] = mod  # dataclasses resolve annotations through sys.modules
    spec.loader.exec_module(mod)
    return mod


def test_reproduce_figures_small(tmp_path):
    mod = load("reproduce_figures")
    mod.main(["--out", str(tmp_path), "--only", "vertex_M", "--x-res", "11", "--y-res", "10"])
    rows = list(csv.DictReader(open(tmp_path / "summary.csv")))
    assert [r["panel"] for r in rows] == [f"phi{p:g}" for p in mod.PHIS]
    assert rows[0]["blue_regions"] == "0"
    assert (tmp_path / "vertex_M" / "phi1.ppm").read_bytes().startswith(b"P6\n11 10\n255\n")


def test_links_surface(tmp_path, capsys):
    load("links_surface").main(["--n-res", "4", "--alpha-res", "3"])
    rows = list(csv.DictReader(capsys.readouterr().out.splitlines()))
    assert len(rows) == 6 * 4 * 3
    assert all(float(r["lower"]) <= float(r["M"]) <= float(r["upper"]) for r in rows)
