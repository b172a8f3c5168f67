import json
from fractions import Fraction as F

import pytest

from fracbound import families as fam
from fracbound.cli import main
from fracbound.colorers import color
from fracbound.errors import GraphParseError
from fracbound.graph import WeightedGraph
from fracbound.io import (
    coloring_from_json,
    coloring_to_json,
    format_graph,
    format_weights,
    parse_graph,
    parse_weights,
)


class TestParse:
    def test_round_trip(self):
        g = fam.hypercube(3)
        assert parse_graph(format_graph(g)) == g
        x = (F(1, 2), F(0), F(3))
        assert parse_weights(format_weights(x), 3) == x

    def test_comments_and_blank_lines(self):
        g = parse_graph("# triangle\n\nn 3\n0 1  # first\n1 2\n0 2\n")
        assert g == fam.complete(3)

    @pytest.mark.parametrize("text,line", [
        ("n 3\n0 0\n", 2),
        ("n 3\n0 1\n1 0\n", 3),
        ("n 3\n0 5\n", 2),
        ("n x\n", 1),
        ("3\n", 1),
        ("n 3\n0 1 2\n", 2),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(GraphParseError) as exc:
            parse_graph(text)
        assert exc.value.line == line and str(exc.value).startswith(f"line {line}:")

    def test_missing_header(self):
        with pytest.raises(GraphParseError):
            parse_graph("# nothing\n")

    @pytest.mark.parametrize("text", ["0 -1\n", "0 1\n0 2\n", "7 1\n", "0 0.5\n"])
    def test_bad_weights(self, text):
        with pytest.raises(GraphParseError):
            parse_weights(text, 3)

    def test_unlisted_weights_are_zero(self):
        assert parse_weights("1 2/3\n", 3) == (F(0), F(2, 3), F(0))

    def test_coloring_json_round_trip(self):
        gx = WeightedGraph(fam.cycle(6), (F(1, 2), F(1), F(1), F(2), F(0), F(1)))
        c = color(gx, "b3")
        assert coloring_from_json(json.loads(json.dumps(coloring_to_json(c)))) == c


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    gpath = tmp_path / "g.txt"
    gpath.write_text("n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    wpath = tmp_path / "w.txt"
    wpath.write_text("0 1\n1 1\n2 1\n3 1\n4 1\n")
    return tmp_path, str(gpath), str(wpath)


class TestCli:
    def test_chif(self, capsys, files):
        tmp, g, w = files
        fig = tmp / "c5.png"
        code, out, _ = run(capsys, "chif", g, w, "--figure", str(fig))
        data = json.loads(out)
        assert code == 0 and data["chi_f"] == "5/2" and data["verified"]
        assert fig.exists() and fig.stat().st_size > 0

    def test_bounds(self, capsys):
        code, out, _ = run(capsys, "bounds", "--family", "star:3", "--v1", "1")
        data = json.loads(out)
        assert code == 0 and data["b1"] == "4" and data["b2"] == "3" and data["chi_f"] == "2"

    def test_color_and_verify(self, capsys, files):
        tmp, g, w = files
        code, out, _ = run(capsys, "color", g, w, "--bound", "b1")
        data = json.loads(out)
        assert code == 0 and data["span"] == "3" and data["verified"]
        cpath = tmp / "c.json"
        cpath.write_text(json.dumps(data["coloring"]))
        code, out, _ = run(capsys, "verify", g, w, str(cpath))
        assert code == 0 and json.loads(out)["verified"]

        tampered = dict(data["coloring"])
        tampered["assignment"] = list(tampered["assignment"])
        tampered["assignment"][1] = tampered["assignment"][0]
        cpath.write_text(json.dumps(tampered))
        code, out, _ = run(capsys, "verify", g, w, str(cpath))
        verdict = json.loads(out)
        assert code == 0 and not verdict["verified"] and verdict["violations"]

    def test_verify_with_family(self, capsys, tmp_path):
        c = tmp_path / "c.json"
        c.write_text(json.dumps({"span": "2", "assignment": ["[0,1)", "[1,2)"]}))
        code, out, _ = run(capsys, "verify", "--family", "path:2", str(c))
        assert code == 0 and json.loads(out)["verified"]

    def test_invariants(self, capsys):
        code, out, _ = run(capsys, "invariants", "--family", "complete-minus-edge:4")
        data = json.loads(out)
        assert code == 0
        assert data["sigma"] == 2 and data["beta5"] == {"lo": "3/2", "hi": "2"}
        code, out, _ = run(capsys, "invariants", "--family", "cycle:5")
        data = json.loads(out)
        assert data["beta3"] is None and data["beta3_note"]

    def test_beta_search(self, capsys):
        code, out, _ = run(capsys, "beta-search", "--family", "star:3", "--bound", "b4",
                           "--denominator", "3", "--support", "3")
        data = json.loads(out)
        assert code == 0 and data["ratio"] == "4" and data["rechecked"]

    def test_domain_error_exit_1(self, capsys):
        code, _, err = run(capsys, "color", "--family", "cycle:5", "--bound", "b3")
        assert code == 1 and json.loads(err)["error"] == "PreconditionError"

    def test_parse_error_exit_1(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("n 2\n0 0\n")
        code, _, err = run(capsys, "chif", str(bad))
        assert code == 1 and "line 2" in json.loads(err)["message"]

    def test_missing_file_exit_1(self, capsys, tmp_path):
        code, _, _ = run(capsys, "chif", str(tmp_path / "nope.txt"))
        assert code == 1

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["color", "--family", "cycle:4", "--bound", "b7"])
        assert exc.value.code == 2

    def test_selftest(self, capsys):
        code, out, _ = run(capsys, "selftest")
        assert code == 0 and "FAIL" not in out
