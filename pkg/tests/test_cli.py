import json

import pytest

from duckwords.cli import main

FIG5_JSON = '{"perm":[3,2,4,1,7,8,6,9,10,11,5,12],"hooks":[[1,9],[3,5],[6,8],[10,12]]}'
FIG7_JSON = '{"perm":[3,2,1,5,6,4,8,9,7,10],"hooks":[[1,8],[2,4],[5,7],[8,10]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_triangle_duck_csv(capsys):
    code, out = run(capsys, "triangle", "duck", "--kmax", "3")
    assert code == 0
    assert out.strip().splitlines() == ["1", "2,3", "5,23,14"]


def test_triangle_redvhc_display_order(capsys):
    code, out = run(capsys, "triangle", "redvhc", "--kmax", "2")
    assert code == 0
    assert out.strip().splitlines() == ["1", "3,5"]


def test_triangle_kmax_zero(capsys):
    code, out = run(capsys, "triangle", "duck", "--kmax", "0")
    assert code == 0
    assert out.strip() == ""


def test_triangle_json(capsys):
    code, out = run(capsys, "triangle", "underlined", "--kmax", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"kind": "underlined", "rows": [[1], [5, 3]]}


def test_triangle_cache_hit(capsys, tmp_path):
    args = ("triangle", "duck", "--kmax", "4", "--cache-dir", str(tmp_path))
    _, first = run(capsys, *args)
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    # poison the cached payload to prove the second run reads the cache
    blob = json.loads(files[0].read_text())
    blob["payload"] = [[99]]
    files[0].write_text(json.dumps(blob))
    _, second = run(capsys, *args)
    assert second.strip() == "99"


def test_map_phi_inverse(capsys):
    code, out = run(capsys, "map", "phi-inv", "XXYYXXZYZZYZ")
    assert code == 0
    assert json.loads(out) == json.loads(FIG5_JSON)


def test_map_phi_roundtrip_flag(capsys):
    code, out = run(capsys, "map", "phi", FIG5_JSON, "--roundtrip")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "XXYYXXZYZZYZ"
    assert json.loads(lines[1]) == json.loads(FIG5_JSON)


def test_map_phi_prime(capsys):
    code, out = run(capsys, "map", "phi-prime", FIG7_JSON)
    assert code == 0
    assert out.strip() == "XXYyXZYXZZyZ"


def test_map_phi_prime_inverse(capsys):
    code, out = run(capsys, "map", "phi-prime-inv", "XXYyXZYXZZyZ")
    assert code == 0
    assert json.loads(out) == json.loads(FIG7_JSON)


def test_map_malformed_input_exit_2(capsys):
    assert main(["map", "phi-inv", "XZY"]) == 2
    assert main(["map", "phi", "not json"]) == 2


def test_render_svg_structure(capsys):
    config = '{"perm":[3,2,1,5,6,4,7],"hooks":[[1,5],[2,4],[5,7]]}'
    code, out = run(capsys, "render", config)
    assert code == 0
    assert out.count("<circle") == 7
    assert out.count("<polyline") == 3


def test_render_tikz_deterministic(capsys):
    _, first = run(capsys, "render", FIG5_JSON, "--format", "tikz", "--labels")
    _, second = run(capsys, "render", FIG5_JSON, "--format", "tikz", "--labels")
    assert first == second
    assert "\\begin{tikzpicture}" in first


def test_render_empty_config(capsys):
    code, out = run(capsys, "render", '{"perm":[],"hooks":[]}')
    assert code == 0
    assert out.startswith("<svg")


def test_enumerate_and_count(capsys):
    code, out = run(capsys, "enumerate", "dyck", "--k", "2")
    assert code == 0
    assert out.strip().splitlines() == ["UDUD", "UUDD"]
    code, out = run(capsys, "count", "av312", "--n", "5")
    assert (code, out.strip()) == (0, "42")
    code, out = run(capsys, "count", "redvhc", "--k", "2", "--n", "5")
    assert (code, out.strip()) == (0, "3")


def test_count_missing_flag_exit_2(capsys):
    assert main(["count", "dyck"]) == 2


def test_resource_limit_exit_3(capsys):
    assert main(["triangle", "duck", "--kmax", "9"]) == 3


def test_verify_small(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code = main([
        "verify", "--kmax", "2", "--eq1-max", "4",
        "--roundtrip-max", "2", "--out", str(out_file),
    ])
    assert code == 0
    report = json.loads(out_file.read_text())
    assert report["all_pass"]


def test_verify_corrupted_golden_exit_1(capsys, tmp_path):
    from duckwords.counts import load_golden_triangle
    good_duck = load_golden_triangle("duck").to_csv()
    good_red = load_golden_triangle("redvhc").to_csv()
    (tmp_path / "duck_triangle.csv").write_text(good_duck)
    corrupted = good_red.replace("5,3", "5,4")
    assert corrupted != good_red
    (tmp_path / "redvhc_triangle.csv").write_text(corrupted)
    code = main(["verify", "--kmax", "2", "--eq1-max", "2",
                 "--roundtrip-max", "1", "--golden-dir", str(tmp_path)])
    captured = capsys.readouterr()
    assert code == 1
    assert "golden" in captured.err


def test_usage_error_unknown_flag():
    with pytest.raises(SystemExit) as exc:
        main(["triangle", "duck", "--bogus"])
    assert exc.value.code == 2
