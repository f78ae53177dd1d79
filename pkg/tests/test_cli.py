import json

import pytest

from subpack.cli import (
    EXIT_CAP,
    EXIT_INVALID,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def test_bound_human(capsys):
    assert main(["bound", "2", "6", "4", "3", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "lower 121  upper 126" in out
    assert "quadratic=126" in out


def test_bound_json_schema(capsys):
    assert main(["bound", "2", "9", "4", "2", "1", "--json"]) == EXIT_OK
    body = json.loads(capsys.readouterr().out)
    assert body["upper"] == 1156
    assert {"q", "n", "k", "t", "lambda", "lower", "upper", "methods"} <= set(body)


def test_bound_paper_free(capsys):
    assert main(["bound", "2", "9", "4", "2", "1", "--paper-free", "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["upper"] > 1156


def test_usage_errors(capsys):
    assert main(["bound", "2", "6"]) == EXIT_USAGE
    capsys.readouterr()
    assert main(["bound", "6", "6", "4", "3", "2"]) == EXIT_USAGE  # q not a prime power
    assert main(["nope"]) == EXIT_USAGE


def test_construct_verify_flow(tmp_path, capsys):
    path = tmp_path / "code.txt"
    rc = main(["construct", "lifted-mrd", "--q", "2", "--n", "4", "--k", "2",
               "--delta", "2", "--alpha", "2", "-o", str(path)])
    assert rc == EXIT_OK
    out = capsys.readouterr().out
    assert "4 blocks" in out and "valid" in out
    rc = main(["verify", str(path), "--covering", "--delta", "2", "--alpha", "2"])
    assert rc == EXIT_OK
    out = capsys.readouterr().out
    assert "valid: yes" in out
    # packing check that fails: the 4 lifted blocks pairwise meet trivially,
    # but asking t=2 and lam=1 counts each block's own plane once -> valid;
    # use a conflicting file instead
    text = path.read_text()
    assert main(["verify", str(path), "--t", "1", "--lam", "1"]) == EXIT_OK


def test_verify_duplicate_block_rejected(tmp_path, capsys):
    path = tmp_path / "dup.txt"
    path.write_text("2 4 2 2\n\n1000\n0100\n\n1000\n0100\n")
    rc = main(["verify", str(path), "--t", "1", "--lam", "1"])
    assert rc == EXIT_INVALID
    assert "duplicate" in capsys.readouterr().err


def test_verify_failing_packing(tmp_path, capsys):
    # two planes of F_2^4 sharing a line: at t=1,lam=1 the shared points conflict
    path = tmp_path / "bad.txt"
    path.write_text("2 4 2 2\n\n1000\n0100\n\n1000\n0010\n")
    rc = main(["verify", str(path), "--t", "1", "--lam", "1"])
    assert rc == EXIT_INVALID
    assert "valid: no" in capsys.readouterr().out


def test_all_points_packing(tmp_path):
    # all 1-subspaces as blocks: valid at k=1, t=1, lam=1
    from subpack.codefile import dumps
    from subpack.constructions import PackingCode
    from subpack.gf import enumerate_subspaces

    blocks = tuple(enumerate_subspaces(6, 1, 2))
    path = tmp_path / "points.txt"
    path.write_text(dumps(PackingCode(2, 6, 1, blocks, {})))
    assert main(["verify", str(path), "--t", "1", "--lam", "1"]) == EXIT_OK


def test_table_command(capsys):
    assert main(["table", "2", "6", "2", "--compare"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "32" in out and "consistent" in out and "CONTRADICTION" not in out


def test_table_json(capsys):
    assert main(["table", "2", "7", "2", "--json"]) == EXIT_OK
    body = json.loads(capsys.readouterr().out)
    cells = {(c["k"], c["t"]): c for c in body["cells"]}
    assert cells[(2, 2)]["upper"] == 2667


def test_ilp_command(tmp_path, capsys):
    out_path = tmp_path / "model.lp"
    rc = main(["ilp", "2", "4", "2", "1", "1", "--format", "lp", "-o", str(out_path)])
    assert rc == EXIT_OK
    assert "35 variables, 15 rows" in capsys.readouterr().out
    assert out_path.read_text().startswith("\\ packing model")
    assert (tmp_path / "model.lp.index").exists()


def test_ilp_size_cap(capsys):
    assert main(["ilp", "2", "8", "4", "2", "1"]) == EXIT_CAP
    err = capsys.readouterr().err
    assert "variables=200787" in err


def test_search_command(tmp_path, capsys):
    out_path = tmp_path / "witness.txt"
    rc = main(["search", "2", "4", "2", "1", "1", "-o", str(out_path)])
    assert rc == EXIT_OK
    assert "5 blocks [exact]" in capsys.readouterr().out
    assert main(["verify", str(out_path), "--t", "1", "--lam", "1"]) == EXIT_OK


def test_search_greedy(capsys):
    rc = main(["search", "2", "5", "2", "1", "2", "--mode", "greedy", "--passes", "3"])
    assert rc == EXIT_OK
    assert "blocks" in capsys.readouterr().out


def test_search_block_cap(capsys):
    assert main(["search", "2", "7", "3", "2", "2"]) == EXIT_CAP
