import json

import pytest

from hct.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    code, out, _ = invoke(capsys, "classify", "49")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "n": 49,
        "case": "Case3",
        "representations": [[7, 0], [5, 3]],
        "ground_states": 147,
    }


def test_classify_domain_error(capsys):
    code, _, err = invoke(capsys, "classify", "2")
    assert code == 1
    assert "error" in err


def test_usage_error(capsys):
    assert run(["classify"]) == 2
    capsys.readouterr()
    assert run(["nonsense"]) == 2
    capsys.readouterr()


def test_reps(capsys):
    code, out, _ = invoke(capsys, "reps", "169")
    assert code == 0
    assert json.loads(out)["representations"] == [[13, 0], [8, 7]]


def test_ground_states(capsys):
    code, out, _ = invoke(capsys, "ground-states", "49")
    data = json.loads(out)
    assert code == 0 and data["count"] == 147
    assert data["by_class"] == {"7,0": 49, "5,3": 98}


def test_defects(capsys):
    code, out, _ = invoke(capsys, "defects", "8", "7")
    assert code == 0
    assert json.loads(out) == {"pairs": 113, "triples": 61, "quadruples": 39}


def test_forces_min_delta(capsys):
    code, out, _ = invoke(
        capsys, "forces", "min-delta", "--family", "d147", "--sublattice", "11,2"
    )
    assert code == 0
    assert out.strip() == "1/2 (f[37], f[100])"


def test_forces_verify(capsys):
    code, out, _ = invoke(
        capsys, "forces", "verify", "--family", "d7", "--sublattice", "7,0"
    )
    data = json.loads(out)
    assert code == 0
    assert data["triangle_types_proper"] and data["lens_types_proper"]


def test_forces_verify_removed_types(capsys):
    code, out, _ = invoke(
        capsys, "forces", "verify", "--family", "d7", "--removed-types"
    )
    data = json.loads(out)
    assert code == 0
    assert data["removed_types"]["proper"] is True
    assert data["removed_types"]["minimalTypes"] == 36


def test_forces_family_file(tmp_path, capsys):
    path = tmp_path / "fam.txt"
    path.write_text("d2 49\n1 44/56\n")
    code, out, _ = invoke(
        capsys, "forces", "verify", "--family", str(path), "--sublattice", "7,0"
    )
    data = json.loads(out)
    assert code == 0
    assert data["triangle_types_proper"] is False


def test_scan_csv_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert run(["scan", "--max-n", "200", "--out", str(out1), "--jobs", "1"]) == 0
    assert run(["scan", "--max-n", "200", "--out", str(out2), "--jobs", "2"]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().strip().split("\n")
    row49 = next(line for line in lines if line.startswith("49,"))
    assert row49 == "49,Case3,2,7:0;5:3,7;6,7:0,true,7:0,3,true"


def test_contours(tmp_path, capsys):
    from hct.configurations import emit_configuration, from_ground_state
    from hct.lattice import GroundStateDescriptor, Sublattice

    gs = GroundStateDescriptor(Sublattice(7, 0), False, (0, 0))
    c = from_ground_state(gs, (-3, 4, -3, 4), 49)
    occupied = set(c.occupied) - {(0, 0)}
    text = "d2 49\n" + "".join(f"{m} {n}\n" for m, n in sorted(occupied))
    path = tmp_path / "config.txt"
    path.write_text(text)
    code, out, _ = invoke(capsys, "contours", "--config", str(path))
    data = json.loads(out)
    assert code == 0
    assert data["admissible"] is True
    assert len(data["supports"]) == 1
    assert len(data["supports"][0]["parallelograms"]) == 9


def test_render_sublattice_byte_stable(tmp_path, capsys):
    code, out1, _ = invoke(
        capsys, "render", "--mode", "sublattice", "--sublattice", "7,0",
        "--viewport", "0,10,0,10",
    )
    code2, out2, _ = invoke(
        capsys, "render", "--mode", "sublattice", "--sublattice", "7,0",
        "--viewport", "0,10,0,10",
    )
    assert code == 0 and code2 == 0
    assert out1 == out2
    assert out1.startswith("<svg") and out1.rstrip().endswith("</svg>")


def test_render_defect_geometry_counts(capsys):
    code, out, _ = invoke(
        capsys, "render", "--mode", "defect-geometry", "--sublattice", "5,3"
    )
    assert code == 0
    # 12 insertable sites per triangle stack, both stacks drawn
    assert out.count('fill="#2e8540"') == 24


def test_render_invalid_viewport(capsys):
    code, _, err = invoke(
        capsys, "render", "--mode", "sublattice", "--sublattice", "7,0",
        "--viewport", "5,5,0,10",
    )
    assert code == 1
    assert "error" in err
