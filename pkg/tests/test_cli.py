import json

import pytest

from instances import trivial_web
from webextract.cli import INCONCLUSIVE, INPUT_ERROR, OK, VERIFY_FAILED, main, parse_lengths
from webextract.graph_core import to_edge_list


@pytest.fixture
def planted(tmp_path):
    graph, web = tmp_path / "g.txt", tmp_path / "w.json"
    assert main(["gen", "-k", "10", "-len", "2", "-noise", "0", "-seed", "1",
                 "--graph-out", str(graph), "--web-out", str(web)]) == OK
    return graph, web


def test_parse_lengths():
    assert parse_lengths("2") == 2
    assert parse_lengths("1-3") == (1, 3)
    for bad in ("0", "3-1", "x", "1-"):
        with pytest.raises(ValueError):
            parse_lengths(bad)


def test_gen_is_deterministic(tmp_path):
    outs = []
    for d in ("a", "b"):
        (tmp_path / d).mkdir()
        g, w = tmp_path / d / "g.txt", tmp_path / d / "w.json"
        assert main(["gen", "-k", "6", "-len", "1-3", "-noise", "0.2", "-seed", "9",
                     "--graph-out", str(g), "--web-out", str(w)]) == OK
        outs.append((g.read_bytes(), w.read_bytes()))
    assert outs[0] == outs[1]
    assert outs[0][0].endswith(b"\n") and outs[0][1].endswith(b"\n")


def test_gen_single_vertex(tmp_path):
    g, w = tmp_path / "g.txt", tmp_path / "w.json"
    assert main(["gen", "-k", "1", "--graph-out", str(g), "--web-out", str(w), "--format", "graph6"]) == OK
    assert json.loads(w.read_text())["branch"] == [0]
    assert g.read_text() == "@\n"


def test_gen_bad_spec(tmp_path):
    assert main(["gen", "-k", "4", "-len", "zero", "--graph-out", str(tmp_path / "g")]) == INPUT_ERROR
    assert main(["gen", "-k", "4", "-noise", "2", "--graph-out", str(tmp_path / "g")]) == INPUT_ERROR


def test_extract_verify_round_trip(planted, tmp_path):
    graph, web = planted
    cert = tmp_path / "c.json"
    assert main(["extract", str(graph), str(web), "-r", "1", "-s", "4", "-t", "3", "--out", str(cert)]) == OK
    body = json.loads(cert.read_text())
    assert body["kind"] == "clean_set" and body["params"]["s"] == 4
    assert main(["verify", str(graph), str(web), str(cert)]) == OK

    body["evidence"]["S"][0] = body["evidence"]["S"][1]
    cert.write_text(json.dumps(body))
    assert main(["verify", str(graph), str(web), str(cert)]) == VERIFY_FAILED


def test_extract_clique(tmp_path, capsys):
    g, w = trivial_web(10)
    gp, wp = tmp_path / "g.txt", tmp_path / "w.json"
    gp.write_text(to_edge_list(g))
    wp.write_text(w.dumps())
    assert main(["extract", str(gp), str(wp), "-r", "0", "-s", "3", "-t", "3"]) == OK
    assert json.loads(capsys.readouterr().out)["kind"] == "clique"


def test_extract_inconclusive(tmp_path):
    g, w = tmp_path / "g.txt", tmp_path / "w.json"
    main(["gen", "-k", "2", "--graph-out", str(g), "--web-out", str(w)])
    assert main(["extract", str(g), str(w), "-r", "1", "-s", "3", "-t", "3", "--out", str(tmp_path / "c")]) == INCONCLUSIVE


def test_extract_corrupted_web(planted, capsys):
    graph, web = planted
    body = json.loads(web.read_text())
    body["paths"][0]["seq"] = body["paths"][0]["seq"][::2]
    web.write_text(json.dumps(body))
    assert main(["extract", str(graph), str(web), "-r", "1", "-s", "4", "-t", "3"]) == INPUT_ERROR
    assert "invalid web" in capsys.readouterr().err


def test_verify_wrong_graph(planted, tmp_path):
    graph, web = planted
    cert = tmp_path / "c.json"
    main(["extract", str(graph), str(web), "-r", "1", "-s", "4", "-t", "3", "--out", str(cert)])
    other = tmp_path / "other.txt"
    other.write_text("3 0\n")
    assert main(["verify", str(other), str(web), str(cert)]) in (VERIFY_FAILED, INPUT_ERROR)
    assert main(["verify", str(graph), str(web), str(tmp_path / "missing.json")]) == INPUT_ERROR


def test_bounds(capsys):
    assert main(["bounds", "-r", "3", "-s", "2", "-t", "2"]) == OK
    first = capsys.readouterr().out
    out = json.loads(first)
    for key in ("xi", "sigma", "tau", "theta", "omega"):
        assert "bound" in out[key]
    assert out["xi"]["width"] == 6
    main(["bounds", "-r", "3", "-s", "2", "-t", "2"])
    assert capsys.readouterr().out == first


def test_find_web(planted, capsys):
    graph, _ = planted
    assert main(["find-web", str(graph), "-r", "1", "-w", "4"]) == OK
    assert len(json.loads(capsys.readouterr().out)["branch"]) == 4
    assert main(["find-web", str(graph), "-r", "0", "-w", "3"]) == INCONCLUSIVE


def test_oracle_hidden(capsys):
    assert main(["oracle", "ramsey", "-f", "2", "-g", "2", "-n", "3"]) == OK
    assert json.loads(capsys.readouterr().out)["min_ground"] == 6
    assert main(["--help"]) == OK
    assert "oracle" not in capsys.readouterr().out


def test_unknown_command():
    assert main(["frobnicate"]) == INPUT_ERROR
