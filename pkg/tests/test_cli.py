import json
import re

import pytest

from gzonotope import IntPolynomial as P, make_graph
from gzonotope.cli import main, run_twist_demo, verify_report
from gzonotope.io import ParseError, format_graph_text, parse_graph, parse_graph_json, parse_graph_text
from gzonotope.graph import family

EXAMPLE_TEXT = "4 4\n1 2\n1 3\n2 3\n3 4\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_poly_text(s):
    """Inverse of IntPolynomial.__str__ for round-trip checks."""
    coeffs = {}
    for sign, mag, var, power in re.findall(r"([+-]?)\s*(\d*)(q?)(?:\^(\d+))?", s.replace(" ", "")):
        if not (mag or var):
            continue
        k = int(power) if power else (1 if var else 0)
        coeffs[k] = (-1 if sign == "-" else 1) * (int(mag) if mag else 1)
    return P([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])


def test_parse_graph_text():
    assert parse_graph_text(EXAMPLE_TEXT) == make_graph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
    assert parse_graph_text("1 0\n") == make_graph(1)
    assert parse_graph(format_graph_text(family("cycle", 5))) == family("cycle", 5)


@pytest.mark.parametrize(
    "text,pattern",
    [
        ("4\n1 2\n", "line 1"),
        ("3 2\n1 2\n2 x\n", "line 3"),
        ("3 2\n1 2\n", "announces 2 edges"),
        ("", "empty"),
    ],
)
def test_parse_errors(text, pattern):
    with pytest.raises(ParseError, match=pattern):
        parse_graph_text(text)


def test_parse_json():
    g = parse_graph('{"n": 3, "edges": [[1, 2], [2, 3]]}')
    assert g == family("path", 3)
    assert parse_graph_json(g.to_json()) == g
    with pytest.raises(ParseError):
        parse_graph_json('{"edges": []}')


def test_fpoly_text_and_json_agree(capsys):
    for route in ("flats", "main"):
        code, text, _ = run(capsys, "fpoly", "--edges", "1-2,1-3,2-3,3-4", "--n", "4", "--route", route)
        assert code == 0 and text.strip() == "12 + 18q + 8q^2 + q^3"
        code, js, _ = run(capsys, "fpoly", "--edges", "1-2 1-3 2-3 3-4", "--n", "4", "--route", route, "--json")
        payload = json.loads(js)
        assert payload["f"] == ["12", "18", "8", "1"]
        assert P.from_json(payload["f"]) == parse_poly_text(text)


def test_file_and_stdin_input(capsys, tmp_path, monkeypatch):
    path = tmp_path / "g.txt"
    path.write_text(EXAMPLE_TEXT)
    assert run(capsys, "fvector", "--file", str(path))[1].split() == ["12", "18", "8", "1"]
    jpath = tmp_path / "g.json"
    jpath.write_text(json.dumps(family("cycle", 4).to_json()))
    assert run(capsys, "fvector", "-f", str(jpath))[1].split() == ["14", "24", "12", "1"]
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("1 0\n"))
    assert run(capsys, "fpoly", "-f", "-")[1].strip() == "1"


def test_input_errors(capsys):
    assert run(capsys, "fpoly", "--edges", "1-5", "--n", "4")[0] == 2
    assert run(capsys, "fpoly", "--family", "cycle", "--n", "4", "--edges", "1-2")[0] == 2
    assert run(capsys, "fpoly", "--family", "cycle")[0] == 2
    assert run(capsys, "fpoly", "--file", "/nonexistent/graph")[0] == 2


def test_budget_exit_and_override(capsys):
    code, _, err = run(capsys, "oracle", "--family", "path", "--n", "8")
    assert code == 3 and "budget" in err
    code, out, err = run(capsys, "oracle", "--family", "path", "--n", "8", "--budget", "8")
    assert code == 0 and "ordered set partitions" in err
    assert out.split()[:8] == ["128", "448", "672", "560", "280", "84", "14", "1"]
    assert run(capsys, "psiq", "--family", "path", "--n", "9")[0] == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--family", "cycle", "--n", "4", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["agree"] is True
    assert rep["f_flats"] == rep["f_main"] == rep["f_oracle"] == ["14", "24", "12", "1"]
    code, out, _ = run(capsys, "verify", "--edges", "", "--n", "1", "--json")
    assert code == 0 and json.loads(out)["f_oracle"] == ["1"]


def test_verify_oracle_skipped_over_budget(capsys):
    code, out, _ = run(capsys, "verify", "--family", "complete", "--n", "8", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["oracle_skipped"] and rep["agree"]


def test_verify_random_seeded(capsys):
    code, out, _ = run(capsys, "verify", "--random", "--count", "5", "--n", "6", "--seed", "7", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["agree"] and len(rep["reports"]) == 5
    _, again, _ = run(capsys, "verify", "--random", "--count", "5", "--n", "6", "--seed", "7", "--json")
    assert again == out


def test_verify_report_disagreement_flag(monkeypatch):
    import gzonotope.cli as cli

    monkeypatch.setattr(cli, "f_poly_main", lambda g, b=None: P([0]))
    assert verify_report(family("cycle", 4))["agree"] is False


def test_psiq_and_chromatic(capsys):
    out = run(capsys, "psiq", "--family", "complete", "--n", "2")[1]
    assert out.strip() == "2*m[1,1] + q*m[2]"
    js = json.loads(run(capsys, "psiq", "--family", "complete", "--n", "2", "--json")[1])
    assert js["psi_q"] == {"1,1": ["2"], "2": ["0", "1"]}
    js = json.loads(run(capsys, "chromatic", "--family", "complete", "--n", "3", "--json")[1])
    assert js["chromatic"] == ["0", "2", "-3", "1"]


def test_acyclic_and_antipode(capsys):
    code, out, _ = run(capsys, "acyclic", "--family", "cycle", "--n", "5", "--brute")
    assert code == 0 and out.startswith("30")
    js = json.loads(run(capsys, "antipode", "--family", "complete", "--n", "2", "--json")[1])
    assert sorted((t["coefficient"], t["flat"]) for t in js["terms"]) == [("-1", [[1, 2]]), ("2", [])]


def test_oracle_dump(capsys):
    out = run(capsys, "oracle", "--family", "complete", "--n", "2", "--dump-covectors")[1]
    assert out.split() == ["+", "-", "0"]


def test_family_command(capsys):
    assert run(capsys, "family", "--family", "cycle", "--n", "4")[1] == "4 4\n1 2\n1 4\n2 3\n3 4\n"


def test_twist_command(capsys):
    code, out, _ = run(capsys, "twist", "--family", "cycle", "--n", "4", "--u", "1", "--v", "3", "--side", "2", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["f_match"] and rep["f_graph"] == ["14", "24", "12", "1"]
    assert rep["hook_graph"] == rep["hook_twisted"]
    assert run(capsys, "twist", "--family", "complete", "--n", "4", "--u", "1", "--v", "2", "--side", "3")[0] == 2


def test_twist_demo_function():
    rep = run_twist_demo(family("cycle", 4), 1, 3, [2])
    assert rep["f_match"]
