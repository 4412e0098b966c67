import json

import pytest

from gobs import InconsistencyError
from gobs import cli
from gobs.freemod import ModuleElement, image_of
from gobs.obstruct import format_betti
from gobs.textio import parse_module_element, parse_module_monomial, parse_polynomial
from golden import CUBICS_GRLEX_APPENDED, CUBICS_GRLEX_BETTI, SYSTEMS, load


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json", "-")
    assert code == 0, err
    return json.loads(out)


def test_sba_human_output_cubics_grlex(capsys):
    code, out, _ = run(capsys, "sba", SYSTEMS / "cubics_grlex.txt", "--betti", "--trace")
    assert code == 0
    rows = [l for l in out.splitlines() if l.startswith("G_obs[")]
    assert len(rows) == 9
    for k, (row, ranks) in enumerate(zip(rows, CUBICS_GRLEX_BETTI)):
        assert row.startswith(f"G_obs[F_{k + 3}] <- {format_betti(ranks)},  <LM(F_{k + 3})> = ")
    assert rows[-1].endswith("= <y^3, y^2*z, y*z^2, z^3, x*y, x*z>")
    gets = [l.strip() for l in out.splitlines() if l.strip().startswith("get f_")]
    for k, (line, (poly, sig, pair)) in enumerate(zip(gets, CUBICS_GRLEX_APPENDED)):
        assert line == f"get f_{k + 4} = {poly} from Spoly({pair[0]}, {pair[1]}), signature {sig}"
    assert out.endswith("reduced GB:\n  x*z - 1/2*y*z\n  x*y - 1/2*y^2\n  z^3 - 2*y^2\n"
                        "  y*z^2 - 4*z\n  y^2*z - 4*y\n  y^3 - 2*z^2\n")


def test_sba_json_golden(capsys):
    rep = run_json(capsys, "sba", SYSTEMS / "cubics_grlex.txt", "--betti")
    assert rep["schema"] == 1
    assert rep["command"] == {"name": "sba", "file": str(SYSTEMS / "cubics_grlex.txt"),
                              "flags": {"trace": False, "betti": True}}
    assert [s["appended"] for s in rep["steps"]] == [p for p, _, _ in CUBICS_GRLEX_APPENDED]
    assert [s["signature"] for s in rep["steps"]] == [s for _, s, _ in CUBICS_GRLEX_APPENDED]
    assert [s["betti"] for s in rep["steps"]] + [rep["final"]["betti"]] == CUBICS_GRLEX_BETTI
    assert rep["steps"][0]["guessed_signatures"] == ["z*e_3", "x^2*e_2", "x^2*e_3"]


def _strip_timing(rep):
    rep = dict(rep)
    assert rep.pop("timing")["seconds"] >= 0
    return rep


@pytest.mark.parametrize("argv", [
    ("sba", "quadrics_lex.txt", "--betti"),
    ("analyze", "gf5_deglex.txt"),
    ("degen", "cubics_grlex.txt"),
])
def test_json_is_deterministic(capsys, monkeypatch, argv):
    path = SYSTEMS / argv[1]
    args = (argv[0], path) + argv[2:]
    a = _strip_timing(run_json(capsys, *args))
    monkeypatch.setenv("GOBS_THREADS", "4")
    b = _strip_timing(run_json(capsys, *args))
    assert a == b


def test_json_strings_reparse(capsys):
    S = load("cubics_grlex")
    R = S.ring
    rep = run_json(capsys, "sba", SYSTEMS / "cubics_grlex.txt")
    for s in rep["steps"]:
        assert parse_polynomial(s["appended"], R) is not None
        for g in s["guessed_signatures"] + s["pair"] + [s["signature"]]:
            assert parse_module_monomial(g, R)
        for f in s["lm_ideal"]:
            assert len(parse_polynomial(f, R).terms) == 1
    for f in rep["final_tuple"] + rep["reduced_gb"] + rep["input"]:
        assert parse_polynomial(f, R).terms
    S3 = load("quadrics_lex")
    rep = run_json(capsys, "analyze", SYSTEMS / "quadrics_lex.txt")
    obs = rep["min_obstruction"]
    u = ModuleElement(S3.ring, 3, parse_module_element(obs["preimage"], S3.ring))
    r = image_of(u, S3.polys)
    assert r.monic() == parse_polynomial(obs["remainder"], S3.ring)
    assert parse_polynomial(obs["remainder_lm"], S3.ring).lm == r.lm
    for key in ("numerator", "nonzero_generators", "denominator"):
        for g in rep["gobs"][key]:
            parse_module_monomial(g, S3.ring)


def test_analyze_human(capsys):
    code, out, _ = run(capsys, "analyze", SYSTEMS / "quadrics_lex.txt")
    assert code == 0
    assert "surviving generators: <y*e_2>" in out
    assert "resolution: G_obs <- R^1 <- R^2 <- R^1 <- 0" in out
    assert "is Groebner basis: false (witness y*e_2)" in out
    assert "minimal obstruction: signature y*e_2, pair (x*e_1, y*e_2), remainder x*w^2" in out


def test_analyze_single_selection(capsys):
    rep = run_json(capsys, "analyze", SYSTEMS / "single.txt", "--is-gb")
    assert rep["is_groebner"] == {"value": True, "witness": None}
    assert "gobs" not in rep and "min_obstruction" not in rep


def test_degen_human_and_json(capsys):
    code, out, _ = run(capsys, "degen", SYSTEMS / "quadrics_lex.txt")
    assert code == 0
    assert "flat: false" in out and "N <- R^1 <- R^2 <- R^1 <- 0" in out and "M <- 0" in out
    rep = run_json(capsys, "degen", SYSTEMS / "quadrics_lex.txt")
    assert rep["flat"] is False and rep["chain_holds"] and rep["routes_agree"]
    assert rep["M_betti"] == [] and rep["N_betti"] == [1, 2, 1]


def test_json_to_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "degen", SYSTEMS / "single.txt", "--json", target)
    assert code == 0 and "flat: true" in out
    assert json.loads(target.read_text())["flat"] is True


def test_exit_codes(capsys, tmp_path, monkeypatch):
    assert run(capsys, "sba", tmp_path / "missing.txt")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "sba")[0] == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("field: QQ\nvars: x, y\norder: lex\npolys:\n  x^2 +* y\n")
    code, _, err = run(capsys, "sba", bad)
    assert code == 1 and "parse error" in err
    code, _, err = run(capsys, "degen", SYSTEMS / "cubics_grlex.txt", "--weight", "1,1,1")
    assert code == 1 and "z < y" in err
    assert run(capsys, "degen", SYSTEMS / "cubics_grlex.txt", "--weight", "1,0,1")[0] == 1
    assert run(capsys, "degen", SYSTEMS / "cubics_grlex.txt", "--weight", "a,b")[0] == 1

    def boom(*a, **k):
        raise InconsistencyError("forced")

    monkeypatch.setattr(cli, "run_sba", boom)
    code, _, err = run(capsys, "sba", SYSTEMS / "single.txt")
    assert code == 2 and "forced" in err
