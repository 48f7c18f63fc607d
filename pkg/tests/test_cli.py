import json
import os
import subprocess
import sys

import pytest

from cwtight import __version__
from cwtight.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cohomology_of_sphere(tmp_path, capsys):
    p = tmp_path / "sphere.json"
    p.write_text('{"n": 3, "spheres": 0, "cells": [[]]}')
    code, out, _ = run(capsys, "cohomology", str(p))
    assert code == 0 and out.splitlines()[0] == "H^3 = Z"


def test_tight_on_example(example_paths, capsys):
    code, out, _ = run(capsys, "tight", example_paths[0])
    assert code == 0 and out.strip().endswith("n-tight: true")


def test_degree_and_deficient_on_example(example_paths, capsys):
    code, out, _ = run(capsys, "degree", *example_paths)
    assert code == 0 and "k_f = 3, A(f) = 6" in out
    code, out, _ = run(capsys, "deficient", *example_paths)
    assert code == 0
    assert "E_f = Pole(north) ∪ Pole(south) ∪ Equator" in out
    assert "dim E_f = 1" in out


def test_structured_output_is_exact_json(example_paths, capsys, tmp_path):
    big = tmp_path / "big.json"
    big.write_text('{"n": 2, "spheres": 1, "cells": [[123456789012345678901234567890]]}')
    code, out, _ = run(capsys, "cohomology", "--format", "structured", str(big))
    doc = json.loads(out)
    assert code == 0 and doc["result"]["topCohomology"]["torsion"] == [123456789012345678901234567890]
    assert "123456789012345678901234567890" in out
    code, out, _ = run(capsys, "deficient", "--format", "structured", *example_paths)
    doc = json.loads(out)["result"]
    assert doc["kf"] == 3 and doc["absoluteDegree"] == 6 and doc["efDimension"] == 1
    assert doc["ef"] == ["Pole(north)", "Pole(south)", "Equator"]


def test_out_file_and_no_partial_output(example_paths, capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _, _ = run(capsys, "tight", "--format", "structured", "--out", str(target), example_paths[0])
    assert code == 0 and json.loads(target.read_text())["result"]["tight"] is True
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "spheres": 1, "cells": [[2], [3]]')
    failed = tmp_path / "never.json"
    code, _, err = run(capsys, "tight", "--out", str(failed), str(bad))
    assert code == 2 and "line 1" in err
    assert not failed.exists() and sorted(os.listdir(tmp_path)) == ["bad.json", "report.json"]


def test_exit_codes(tmp_path, capsys, example_paths):
    code, _, err = run(capsys, "tight", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err
    wedge = tmp_path / "wedge.json"
    wedge.write_text('{"n": 2, "spheres": 2, "cells": [[2, 0], [0, 2]]}')
    m = tmp_path / "m.json"
    m.write_text('{"target": "two-hemispheres", "cellDegrees": [{"cell": 1, "targetCell": "north", "degree": 0},'
                 ' {"cell": 2, "targetCell": "north", "degree": 0}], "skeletonDegrees": [0, 0]}')
    code, _, err = run(capsys, "degree", str(wedge), str(m))
    assert code == 3 and "NonCyclicTopCohomology" in err
    broken = tmp_path / "broken.json"
    broken.write_text('{"target": "two-hemispheres", "cellDegrees": [{"cell": 1, "targetCell": "north", "degree": 5},'
                      ' {"cell": 2, "targetCell": "south", "degree": 3}], "skeletonDegrees": [1]}')
    code, _, err = run(capsys, "degree", example_paths[0], str(broken))
    assert code == 3 and "ChainMapError" in err
    code, _, err = run(capsys, "orevkov", "--scale", "0.5", "--angle", "0", "--depth", "2")
    assert code == 3 and "EmbeddingViolation" in err
    code, _, _ = run(capsys, "orevkov", "--samples", "0")
    assert code == 2


def test_sampler_outputs(tmp_path, capsys):
    csv_path, svg_path = tmp_path / "cloud.csv", tmp_path / "tree.svg"
    code, out, _ = run(capsys, "orevkov", "--depth", "5", "--samples", "300", "--format", "structured",
                       "--out", str(csv_path), "--svg", str(svg_path))
    assert code == 0
    doc = json.loads(out)["result"]
    fracs = [s["injectiveFraction"] for s in doc["stages"]]
    assert fracs[0] == 0.0 and fracs == sorted(fracs)
    assert len(csv_path.read_text().splitlines()) == 301
    assert svg_path.read_text().startswith("<svg")
    code, _, err = run(capsys, "orevkov", "--dim", "3", "--svg", str(tmp_path / "x.svg"))
    assert code == 2 and not (tmp_path / "x.svg").exists()
    code, alias_out, _ = run(capsys, "sample", "--depth", "5", "--samples", "300", "--format", "structured")
    assert code == 0 and alias_out == out


def test_version_and_module_entry():
    out = subprocess.run([sys.executable, "-m", "cwtight", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == f"cwtight {__version__}"
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
