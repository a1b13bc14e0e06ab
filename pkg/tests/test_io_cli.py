import json

import pytest

from circsep.cli import main
from circsep.errors import InputError
from circsep.generators import random_two_outerplanar
from circsep.io import EmbeddingFile, FamilyFile, GraphFile, Labels
from circsep.graph import SeparationFamily

K4_TEXT = "# K4\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
K4_EMB = "orientation: ccw\nlayer2: 0 1 2\nrot 0: 1 3 2\nrot 1: 2 3 0\nrot 2: 0 3 1\nrot 3: 0 1 2\n"


def test_graph_round_trip():
    gf = GraphFile.parse(K4_TEXT)
    assert gf.graph.m == 6
    assert GraphFile.parse(gf.format()).graph == gf.graph


def test_named_graph():
    gf = GraphFile.parse("labels: a b c\n3 2\nb c\na b\n", named=True)
    assert gf.labels.names == ["a", "b", "c"]
    again = GraphFile.parse(gf.format(), named=True)
    assert again.graph == gf.graph and again.labels.names == gf.labels.names


@pytest.mark.parametrize("text", ["", "4\n", "3 1\n0 1\n0 2\n", "3 1\n0 5\n", "3 1\n1 1\n", "3 2\n0 1\n1 0\n", "3 1\nx y\n"])
def test_graph_errors(text):
    with pytest.raises(InputError):
        GraphFile.parse(text)


def test_embedding_round_trip():
    for seed in range(10):
        emb = random_two_outerplanar(15, seed)
        gf = GraphFile(emb.g, Labels.identity(emb.g.n))
        text = EmbeddingFile(emb).format()
        assert EmbeddingFile.parse(text, gf).embedding == emb
        assert EmbeddingFile(EmbeddingFile.parse(text, gf).embedding).format() == text


def test_embedding_errors():
    gf = GraphFile.parse(K4_TEXT)
    with pytest.raises(InputError):
        EmbeddingFile.parse(K4_EMB.replace("layer2: 0 1 2\n", ""), gf)
    with pytest.raises(InputError):
        EmbeddingFile.parse(K4_EMB.replace("rot 3: 0 1 2\n", ""), gf)
    with pytest.raises(InputError):
        EmbeddingFile.parse(K4_EMB + "colour: red\n", gf)


def test_family_round_trip():
    labels = Labels.identity(4)
    fam = SeparationFamily([[0, 1, 2, 3], [0, 2, 1, 3]])
    assert FamilyFile.parse(FamilyFile(fam).format(labels), labels).family == fam
    with pytest.raises(InputError):
        FamilyFile.parse("0 1 2\n", labels)


@pytest.fixture
def files(tmp_path):
    (tmp_path / "k4.graph").write_text(K4_TEXT)
    (tmp_path / "k4.emb").write_text(K4_EMB)
    (tmp_path / "k4.family").write_text("0 1 2 3\n0 2 1 3\n")
    (tmp_path / "one.family").write_text("0 1 2 3\n")
    return tmp_path


def test_cli_verify(files, capsys):
    assert main(["verify", str(files / "k4.graph"), str(files / "k4.family")]) == 0
    assert main(["verify", "--json", str(files / "k4.graph"), str(files / "one.family")]) == 1
    out = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert out["ok"] is False and out["k"] == 1 and out["violations"] == [[["0", "2"], ["1", "3"]]]


def test_cli_verify_all(files):
    assert main(["verify", "--all", str(files)]) == 0


def test_cli_construct(files, capsys):
    out = files / "made.family"
    assert main(["construct", str(files / "k4.graph"), str(files / "k4.emb"), "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 2
    assert main(["verify", str(files / "k4.graph"), str(out)]) == 0


def test_cli_construct_is_deterministic(files, capsys):
    main(["construct", str(files / "k4.graph"), str(files / "k4.emb")])
    first = capsys.readouterr().out
    main(["construct", str(files / "k4.graph"), str(files / "k4.emb")])
    assert capsys.readouterr().out == first


def test_cli_sp(files, tmp_path, capsys):
    assert main(["construct", "--sp", str(files / "k4.graph")]) == 2
    assert "not series-parallel" in capsys.readouterr().err
    (tmp_path / "k23.graph").write_text("labels: a b x y z\n5 6\na x\na y\na z\nb x\nb y\nb z\n")
    assert main(["construct", "--sp", "--labels", "--json", str(tmp_path / "k23.graph")]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["ok"] and body["k"] == 2 and all(set(r.split()) == set("abxyz") for r in body["family"])


def test_cli_exact(files, tmp_path, capsys):
    assert main(["exact", str(files / "k4.graph")]) == 0
    assert capsys.readouterr().out.strip() == "2"
    (tmp_path / "oct.graph").write_text("6 12\n0 1\n0 2\n0 4\n0 5\n1 2\n1 3\n1 5\n2 3\n2 4\n3 4\n3 5\n4 5\n")
    assert main(["exact", str(tmp_path / "oct.graph")]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["exact", "--kmax", "1", str(files / "k4.graph")]) == 0
    assert capsys.readouterr().out.strip() == "exceeds 1"


def test_cli_bad_input(tmp_path, capsys):
    (tmp_path / "bad.graph").write_text("3 x\n")
    assert main(["exact", str(tmp_path / "bad.graph")]) == 2
    assert main(["exact", str(tmp_path / "missing.graph")]) == 2


def test_cli_gen(tmp_path):
    prefix = str(tmp_path / "g")
    assert main(["gen", "two-outerplanar", "14", "--seed", "3", "--out", prefix]) == 0
    assert main(["construct", prefix + ".graph", prefix + ".emb", "--out", prefix + ".family"]) == 0
    assert main(["verify", prefix + ".graph", prefix + ".family"]) == 0
