import json

import pytest

from ia_nilpotent.cli import main
from ia_nilpotent.exceptions import ParseError
from ia_nilpotent.groups.corpus import default_corpus, load_corpus
from ia_nilpotent.groups.group_file import load_group


@pytest.fixture
def q8_file(tmp_path):
    path = tmp_path / "Q8.json"
    assert main(["--out", str(path), "construct", "--family", "quaternion", "--order", "8"]) == 0
    return path


def test_construct_family(tmp_path):
    out = tmp_path / "g.json"
    assert main(["--out", str(out), "construct", "--family", "paper-example-32"]) == 0
    G = load_group(out)
    assert G.order == 32
    assert G.family == "paper-example-32"


def test_construct_trivial_group(tmp_path):
    out = tmp_path / "c1.json"
    assert main(["--out", str(out), "construct", "--family", "cyclic", "--n", "1"]) == 0
    assert load_group(out).order == 1


def test_construct_from_presentation(tmp_path, fixture_dir):
    out = tmp_path / "q8.json"
    assert main(["--out", str(out), "construct", "--presentation", str(fixture_dir / "q8.pc")]) == 0
    G = load_group(out)
    assert G.order == 8
    assert G.name == "q8"


def test_construct_needs_family_parameters():
    with pytest.raises(SystemExit):
        main(["construct", "--family", "dihedral"])


def test_analyze(q8_file, capsys):
    assert main(["--format", "json", "analyze", str(q8_file)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["order"] == 8
    assert report["nilpotency_class"] == 2
    assert report["center_quotient"] == "C_2 x C_2"


def test_autos(q8_file, capsys):
    assert main(["--format", "json", "autos", str(q8_file), "--which", "inner"]) == 0
    export = json.loads(capsys.readouterr().out)
    assert export["order"] == 4
    assert len(export["permutations"]) == 4


def test_hom(capsys):
    assert main(["hom", "C_4 x C_2", "C_4"]) == 0
    assert capsys.readouterr().out.strip() == "C_4 x C_2"


def test_classify_triple(capsys):
    assert main(["--format", "json", "classify", "--triple", "C_2xC_2 | C_2xC_2 | C_2"]) == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["predicate_holds"] is True
    assert verdict["consistent"] is True


def test_classify_group(q8_file, capsys):
    assert main(["--format", "json", "classify", str(q8_file), "--star"]) == 0
    assert json.loads(capsys.readouterr().out)["case"] == "iii"


def test_invalid_input_exits_with_2(capsys):
    assert main(["hom", "C_4 y C_2", "C_4"]) == 2
    assert "column 5" in capsys.readouterr().err
    assert main(["classify", "--triple", "C_3 | C_2 | C_3"]) == 2


def test_verify_corpus(corpus_dir, tmp_path):
    out = tmp_path / "report.json"
    code = main(["--format", "json", "--out", str(out), "verify", "--corpus", str(corpus_dir), "--no-progress"])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["ok"]
    assert report["groups"] == 1
    assert {r["group"] for r in report["records"]} == {"q8"}


def test_verify_missing_corpus(tmp_path):
    assert main(["verify", "--corpus", str(tmp_path / "missing"), "--no-progress"]) == 2


def test_load_corpus(corpus_dir):
    (group,) = load_corpus(corpus_dir)
    assert group.name == "q8"
    assert group.order == 8
    (corpus_dir / "broken.pc").write_text("generators: x\norders: 2\npowers:\n  x^3 = 1\n")
    with pytest.raises(ParseError) as e:
        load_corpus(corpus_dir)
    assert "broken.pc" in str(e.value)


@pytest.mark.slow
def test_default_corpus():
    corpus = default_corpus()
    assert len({G.name for G in corpus}) == len(corpus)
    assert main(["verify", "--builtin", "--select", "exponents", "--no-progress"]) == 0
