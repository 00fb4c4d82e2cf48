import csv
import io
import json
import os

import numpy as np
import pytest

from qrdynamics.cli import main
from qrdynamics.config import RunConfig, write_atomic
from qrdynamics.dynamics import GridSpec, Label, classify_grid
from qrdynamics.maps import MapSpec
from qrdynamics.render import Palette, construction_overlays, render_image, stroke

E, C, U = int(Label.ESCAPED), int(Label.CONVERGED), int(Label.UNDECIDED)


class TestPPM:
    def test_single_converged_pixel(self):
        assert render_image(np.array([[C]])) == b"P6\n1 1\n255\n\x00\x00\x00"

    def test_escaped_then_undecided(self):
        data = render_image(np.array([[E, U]]), np.array([[1, 0]]))
        level = round(255 * (1 - 1 / 32))
        assert data == b"P6\n2 1\n255\n" + bytes([level, level, 255, 255, 0, 0])

    def test_ramp_ends(self):
        pal = Palette()
        assert pal.escaped(np.array([0])).tolist() == [[255, 255, 255]]
        assert pal.escaped(np.array([500])).tolist() == [[0, 0, 255]]

    @pytest.mark.parametrize("bad", [np.zeros((0, 3), dtype=np.int8), np.zeros(4, dtype=np.int8)])
    def test_empty_rejected(self, bad):
        with pytest.raises(ValueError):
            render_image(bad)

    def test_grid_render_deterministic(self, p_demo):
        g = GridSpec(-1.5, -1.5, 1.5, 1.5, 64, 48)
        a = render_image(classify_grid(p_demo, g))
        b = render_image(classify_grid(p_demo, g, workers=2))
        assert a == b
        assert a.startswith(b"P6\n64 48\n255\n") and len(a) == len(b"P6\n64 48\n255\n") + 64 * 48 * 3

    def test_overlays(self, p_demo):
        g = GridSpec(-1.5, -1.5, 1.5, 1.5, 64, 64)
        lg = classify_grid(p_demo, g)
        plain = render_image(lg)
        marked = render_image(lg, overlays=construction_overlays(g))
        assert plain != marked and len(plain) == len(marked)

    def test_stroke_accepts_real_and_complex(self):
        g = GridSpec(0, 0, 1, 1, 10, 10)
        assert stroke(g, [0.05, 0.95]).sum() == stroke(g, [0.05 + 0j, 0.95 + 0j]).sum() > 0


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCLI:
    def test_degree(self, capsys):
        code, out, _ = run(capsys, "degree", "--map", "g", "--d", "5", "--delta", "0.01")
        assert code == 0 and out == "5\n"

    def test_degree_target_on_curve_exit_one(self, capsys):
        code, _, err = run(capsys, "degree", "--map", "g", "--radius", "0.5", "--target", "0.5,0")
        assert code == 1 and "image curve" in err

    def test_orbit_halving(self, capsys):
        code, out, _ = run(capsys, "orbit", "--map", "p", "--mode", "demo",
                           "--point", "0,0.75", "-n", "10")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 11
        for row in rows:
            assert float(row["|z|"]) == pytest.approx(0.75 * 2.0 ** -int(row["n"]), abs=1e-12)

    def test_negative_coordinates(self, capsys):
        code, out, _ = run(capsys, "orbit", "--point", "-0.3,-0.5", "--map", "f", "-n", "1")
        assert code == 0
        last = out.strip().splitlines()[-1].split(",")
        assert (float(last[1]), float(last[2])) == (-0.6, -0.25)

    def test_classify_csv(self, capsys):
        code, out, _ = run(capsys, "classify", "--grid", "-1,-1,1,1,1x1")
        assert code == 0
        assert out == "x,y,label,iters\n0.0,0.0,ConvergedToZero,0\n"

    def test_classify_labels(self, capsys):
        code, out, _ = run(capsys, "classify", "--grid", "-1.5,-1.5,1.5,1.5,6x6")
        labels = {row["label"] for row in csv.DictReader(io.StringIO(out))}
        assert code == 0 and labels <= {"Escaped", "ConvergedToZero", "Undecided"}
        assert "Escaped" in labels

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "--map", "p", "--mode", "demo")
        assert code == 0
        names = [line.split()[0] for line in out.splitlines()]
        for name in ("diamond-step", "lemma", "symmetry", "boundary-escape"):
            assert name in names
        assert "FAIL" not in out

    def test_verify_subset(self, capsys):
        code, out, _ = run(capsys, "verify", "--checks", "symmetry", "growth")
        assert code == 0 and len(out.splitlines()) == 2

    def test_estimate_k_json(self, capsys):
        code, out, _ = run(capsys, "estimate-k", "--map", "f", "--region", "lower-box",
                           "--samples", "1000")
        rep = json.loads(out)
        assert code == 0 and rep["sup_local_K"] == pytest.approx(4, rel=1e-6)

    def test_render_writes_ppm(self, capsys, tmp_path):
        out = tmp_path / "p.ppm"
        code, _, err = run(capsys, "render", "--grid", "-1.5,-1.5,1.5,1.5,32x32",
                           "--out", str(out), "--overlay")
        assert code == 0 and out.read_bytes().startswith(b"P6\n32 32\n255\n")
        assert "converged=" in err

    def test_render_needs_out(self, capsys):
        code, _, err = run(capsys, "render", "--grid", "0,0,1,1,2x2")
        assert code == 2 and "--out" in err

    @pytest.mark.parametrize("argv", [
        ("degree", "--map", "g", "--d", "4"),
        ("degree", "--delta", "-1"),
        ("classify", "--grid", "0,0,1"),
        ("verify", "--eps", "0.5"),
    ])
    def test_invalid_invariants_exit_two(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2 and "usage" in err

    def test_unknown_flag_exit_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["degree", "--bogus"])
        assert exc.value.code == 2

    def test_config_file_and_override(self, capsys, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(RunConfig(map="g", d=7).to_json())
        code, out, _ = run(capsys, "degree", "--config", str(path), "--radius", "20")
        assert code == 0 and out == "7\n"
        code, out, _ = run(capsys, "degree", "--config", str(path), "--d", "5")
        assert code == 0 and out == "5\n"

    def test_output_file(self, capsys, tmp_path):
        out = tmp_path / "deg.txt"
        code, stdout, _ = run(capsys, "degree", "--map", "g", "--out", str(out))
        assert code == 0 and stdout == "" and out.read_text() == "5\n"


class TestConfig:
    def test_round_trip(self):
        cfg = RunConfig(map="ftilde", eps=0.05, checks=["growth"], workers=2)
        assert RunConfig.from_json(cfg.to_json()) == cfg

    def test_unknown_key(self):
        with pytest.raises(ValueError):
            RunConfig.from_dict({"colour": "blue"})

    def test_demo_defaults(self):
        assert RunConfig().map_spec() == MapSpec.demo("p")
        assert RunConfig(map="ftilde").map_spec() == MapSpec.demo("ftilde")

    def test_faithful(self):
        spec = RunConfig(mode="faithful").map_spec()
        assert spec == MapSpec.faithful("p")

    def test_atomic_write_leaves_no_temp(self, tmp_path):
        target = tmp_path / "x.bin"
        write_atomic(target, b"abc")
        write_atomic(target, "def")
        assert target.read_bytes() == b"def"
        assert os.listdir(tmp_path) == ["x.bin"]
