import json
import math
import subprocess
import sys

import pytest

from twodisc.cli import bench, main
from twodisc.polygon import parse_vertices, validate, write_vertices
from twodisc.stream import CoverSolution

REPORT_FIELDS = {
    "r_stream", "r_batch", "rho", "certified_ratio_stream", "certified_ratio_batch",
    "oracle_radius", "empirical_ratio_stream", "empirical_ratio_batch", "m",
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def eqtri_csv(tmp_path):
    path = tmp_path / "eqtri.csv"
    path.write_text(write_vertices([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)]))
    return str(path)


@pytest.fixture
def square_csv(tmp_path):
    path = tmp_path / "square.csv"
    path.write_text("# unit square\n0,0\n1,0\n1,1\n0,1\n")
    return str(path)


def test_gen_regular_piped_into_cover():
    gen = subprocess.run(
        [sys.executable, "-m", "twodisc", "gen", "--kind", "regular", "--n", "4", "--seed", "0"],
        capture_output=True, check=True,
    )
    cover = subprocess.run(
        [sys.executable, "-m", "twodisc", "cover", "--mode", "stream"],
        input=gen.stdout, capture_output=True, check=True,
    )
    doc = json.loads(cover.stdout)
    # vertices at angles 0, 90, 180, 270 degrees span a 2 x 2 box
    assert doc["radius"] == pytest.approx(math.sqrt(2**2 + 4 * 2**2) / 4, abs=1e-12)


def test_cover_axis_aligned_sqrt2_square(capsys, tmp_path):
    s = math.sqrt(2)
    path = tmp_path / "sq.csv"
    path.write_text(write_vertices([(0, 0), (s, 0), (s, s), (0, s)]))
    code, out, _ = run(capsys, "cover", "--mode", "stream", "--in", str(path))
    assert code == 0
    assert json.loads(out)["radius"] == pytest.approx(0.7905694150, abs=1e-10)


def test_cover_batch_eqtri(capsys, eqtri_csv):
    code, out, _ = run(capsys, "cover", "--mode", "batch", "--in", eqtri_csv)
    assert code == 0
    doc = json.loads(out)
    assert doc["radius"] == pytest.approx(0.5, abs=1e-12)
    assert doc["method"] == "batch"
    assert set(doc) == {"method", "radius", "disks", "rect"}


def test_cover_json_input(capsys, tmp_path):
    path = tmp_path / "sq.json"
    path.write_text(write_vertices([(0, 0), (1, 0), (1, 1), (0, 1)], "json"))
    code, out, _ = run(capsys, "cover", "--in", str(path))
    assert code == 0
    assert json.loads(out)["radius"] == pytest.approx(math.sqrt(5) / 4)


def test_cover_then_verify_round_trip(capsys, tmp_path, square_csv):
    sol_path = tmp_path / "sol.json"
    assert run(capsys, "cover", "--mode", "batch", "--in", square_csv, "--out", str(sol_path))[0] == 0
    code, out, _ = run(capsys, "verify", "--in", square_csv, "--solution", str(sol_path))
    assert code == 0
    assert json.loads(out) == {"covered": True, "witness": None}


def test_verify_shrunk_solution_fails(capsys, tmp_path, square_csv):
    sol_path = tmp_path / "sol.json"
    run(capsys, "cover", "--mode", "stream", "--in", square_csv, "--out", str(sol_path))
    doc = json.loads(sol_path.read_text())
    for d in doc["disks"]:
        d["radius"] *= 0.9
    doc["radius"] *= 0.9
    sol_path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--in", square_csv, "--solution", str(sol_path))
    assert code == 2
    result = json.loads(out)
    assert result["covered"] is False
    assert len(result["witness"]) == 2


def test_solution_json_is_bit_exact(capsys, tmp_path):
    path = tmp_path / "r.csv"
    path.write_text(write_vertices([(0.1, 0.2), (0.93, 0.17), (0.7, 0.88), (0.05, 0.61)]))
    code, out, _ = run(capsys, "cover", "--mode", "batch", "--in", str(path))
    sol = CoverSolution.from_dict(json.loads(out))
    assert json.loads(json.dumps(sol.to_dict())) == json.loads(out)


def test_ratio_report(capsys, square_csv):
    code, out, _ = run(capsys, "ratio", "--in", square_csv, "--m", "64")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == REPORT_FIELDS
    assert doc["m"] == 64
    assert doc["r_stream"] == pytest.approx(math.sqrt(5) / 4)
    assert doc["r_batch"] == pytest.approx(math.sqrt(10) / 4)
    assert doc["rho"] == 0.5
    assert doc["certified_ratio_stream"] == pytest.approx(math.sqrt(5) / 2)
    assert doc["empirical_ratio_batch"] == pytest.approx(math.sqrt(2), abs=0.03)


def test_gen_random_and_diamond(capsys):
    code, out, _ = run(capsys, "gen", "--kind", "random", "--n", "17", "--seed", "3")
    assert code == 0
    assert validate(parse_vertices(out)).n == 17
    code, out, _ = run(capsys, "gen", "--kind", "square-diamond", "--n", "4", "--seed", "4")
    pts = parse_vertices(out)
    assert pts[1].x == math.sqrt(3) / 2
    code, out, _ = run(capsys, "gen", "--kind", "square-diamond", "--n", "4", "--seed", "0")
    assert parse_vertices(out)[1].x == 0.5


def test_render_svg(capsys, tmp_path, square_csv):
    sol_path = tmp_path / "sol.json"
    svg_path = tmp_path / "out.svg"
    run(capsys, "cover", "--in", square_csv, "--out", str(sol_path))
    code, _, _ = run(capsys, "render", "--in", square_csv, "--solution", str(sol_path), "--out", str(svg_path))
    assert code == 0
    text = svg_path.read_text()
    assert text.startswith("<svg") and text.count("<circle") == 4


@pytest.mark.parametrize(
    "content, needle",
    [("0,0\n1,abc\n", "line 2"), ("0,0\n2,0\n1,0.5\n2,2\n0,2\n", "reflex"), ("0,0\n1,1\n", "at least 3")],
)
def test_input_errors_exit_1(capsys, tmp_path, content, needle):
    path = tmp_path / "bad.csv"
    path.write_text(content)
    code, out, err = run(capsys, "cover", "--in", str(path))
    assert code == 1
    assert needle in err
    assert out == ""


def test_missing_file_exit_1(capsys, tmp_path):
    code, _, err = run(capsys, "cover", "--in", str(tmp_path / "nope.csv"))
    assert code == 1 and "error" in err


def test_bad_solution_exit_1(capsys, tmp_path, square_csv):
    path = tmp_path / "sol.json"
    path.write_text('{"disks": []}')
    code, _, err = run(capsys, "verify", "--in", square_csv, "--solution", str(path))
    assert code == 1


def test_bench_output(capsys):
    code, out, _ = run(capsys, "bench", "--n-list", "1e3,2e3", "--seed", "1")
    assert code == 0
    doc = json.loads(out)
    assert [r["n"] for r in doc["results"]] == [1000, 2000]
    assert len({r["state_bytes"] for r in doc["results"]}) == 1


def test_bench_function_state_size_constant():
    res = bench([10, 1000, 100000], seed=0, repeats=1)["results"]
    assert len({r["state_bytes"] for r in res}) == 1
