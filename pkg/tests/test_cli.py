import json

from idfa.automata import is_isomorphic, minimize
from idfa.cli import main
from idfa.model_io import parse_dfa, read_dfa


def test_gen_union_writes_two_files(tmp_path, capsys):
    assert main(["gen", "union", "3", "3", "--out-dir", str(tmp_path)]) == 0
    a = read_dfa(tmp_path / "union-3-3-A.dfa")
    b = read_dfa(tmp_path / "union-3-3-B.dfa")
    assert a.alphabet == b.alphabet == ("b", "c", "a_1_1", "a_1_2", "a_2_1")


def test_gen_star_writes_one_file(tmp_path):
    assert main(["gen", "star", "4", "--out-dir", str(tmp_path)]) == 0
    assert [p.name for p in tmp_path.iterdir()] == ["star-4-A.dfa"]


def test_gen_rejects_bad_parameters(tmp_path, capsys):
    assert main(["gen", "concat-case2", "4", "3", "--out-dir", str(tmp_path)]) == 2
    assert "n > m + 1" in capsys.readouterr().err
    assert main(["gen", "union", "3", "--out-dir", str(tmp_path)]) == 2


def test_apply_concat_minimized(tmp_path, capsys):
    main(["gen", "concat-case1", "3", "5", "--out-dir", str(tmp_path)])
    capsys.readouterr()
    a, b = tmp_path / "concat-case1-3-5-A.dfa", tmp_path / "concat-case1-3-5-B.dfa"
    assert main(["apply", "concat", str(a), str(b), "--minimize"]) == 0
    assert parse_dfa(capsys.readouterr().out).n == 18
    assert main(["apply", "concat", str(a), str(b), "--complete-inputs", "--minimize"]) == 0
    # the minimal complete DFA, with its sink
    assert parse_dfa(capsys.readouterr().out).n == 19


def test_apply_complement_is_complete(tmp_path, capsys):
    main(["gen", "complement", "3", "--out-dir", str(tmp_path)])
    capsys.readouterr()
    out = tmp_path / "c.dfa"
    assert main(["apply", "complement", str(tmp_path / "complement-3-A.dfa"), "--out", str(out)]) == 0
    assert read_dfa(out).is_complete()


def test_apply_union_with_itself(tmp_path, capsys):
    main(["gen", "union", "3", "4", "--out-dir", str(tmp_path)])
    capsys.readouterr()
    a = tmp_path / "union-3-4-A.dfa"
    assert main(["apply", "union", str(a), str(a), "--minimize"]) == 0
    assert is_isomorphic(parse_dfa(capsys.readouterr().out), minimize(read_dfa(a)))


def test_apply_refuses_cyclic_operand(tmp_path, capsys):
    loop = tmp_path / "loop.dfa"
    loop.write_text("alphabet: b\nstates: 1\ninitial: 0\nfinals: 0\ntrans:\n0 b 0\n")
    assert main(["apply", "star", str(loop)]) == 2
    assert main(["apply", "union", str(loop)]) == 2


def test_parse_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.dfa"
    bad.write_text("alphabet: b\nstates: 2\ninitial: 0\nfinals: 1\ntrans:\n0 b 1\n0 b 0\n")
    assert main(["minimize", str(bad)]) == 2
    assert "line 7" in capsys.readouterr().err


def test_measure_json(tmp_path, capsys):
    main(["gen", "star", "6", "--out-dir", str(tmp_path)])
    capsys.readouterr()
    assert main(["measure", str(tmp_path / "star-6-A.dfa")]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["isc"] == 6 and data["f"] == 2
    assert data["per_symbol"]["c"]["e"] == 1


def test_verify_union_all_tight(capsys):
    assert main(["verify", "union", "2..5", "2..5", "--no-timing"]) == 0
    rows = capsys.readouterr().out.splitlines()[1:]
    assert len(rows) == 16
    assert all(r.endswith(",TIGHT,TIGHT,") for r in rows)


def test_verify_star_reports_rule(capsys):
    assert main(["verify", "star", "4..6", "--format", "md"]) == 0
    captured = capsys.readouterr()
    assert "star transition exponent" in captured.err
    assert captured.out.startswith("| op |")


def test_verify_exits_1_on_violation(capsys):
    # the transition bound as printed undercounts this witness
    assert main(["verify", "concat-case1", "3", "3"]) == 1
    assert main(["verify", "concat-case1", "3", "3", "--corrected"]) == 0


def test_verify_out_of_scale_exits_2(capsys):
    assert main(["verify", "star", "4..40"]) == 2


def test_verify_random_mode(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code = main(["verify", "random", "--seed", "3", "--count", "20", "--corrected", "--out", str(out)])
    assert code in (0, 1)
    assert out.read_text().startswith("op,m,n,k,")
