import io
import json
from pathlib import Path

import pytest

from nc_hopf.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def golden(name):
    return (GOLDEN / name).read_text()


class TestEnumerate:
    def test_count_nc(self):
        code, out = run("enumerate", "nc", "--n", "4", "--count")
        assert code == 0 and out == "14\n"

    def test_count_set(self):
        code, out = run("enumerate", "set", "--n", "5", "--count")
        assert code == 0 and out == "52\n"

    def test_listing(self):
        code, out = run("enumerate", "nc", "--n", "3")
        lines = out.strip().split("\n")
        assert code == 0 and len(lines) == 5
        assert "{1,2,3}" in lines and "{1,3}{2}" in lines

    def test_json(self):
        code, out = run("enumerate", "nc", "--n", "2", "--json")
        assert code == 0
        assert json.loads(out) == [{"blocks": [[1, 2]]},
                                   {"blocks": [[1], [2]]}]

    def test_cap_is_domain_error(self):
        code, _ = run("enumerate", "nc", "--n", "99", "--count")
        assert code == 1


class TestCoproduct:
    @pytest.mark.parametrize("subject,filename", [
        ("{1,4}{2,3}", "coproduct_nested_pair.txt"),
        ("{1,5}{2}{3,4}", "coproduct_five_elements.txt"),
        ("{1,2}{3}{4}", "coproduct_bar_term.txt"),
    ])
    def test_nc_golden(self, subject, filename):
        code, out = run("coproduct", "nc", subject)
        assert code == 0 and out == golden(filename)

    def test_word(self):
        code, out = run("coproduct", "word", "a.b")
        assert code == 0
        assert "a.b ⊗ 1" in out and "1 ⊗ a.b" in out
        assert "a ⊗ b" in out and "b ⊗ a" in out

    def test_tree(self):
        code, out = run("coproduct", "tree", "(()()())")
        assert code == 0
        assert "3·(()()) ⊗ (())" in out

    def test_json_terms_carry_coefficients(self):
        code, out = run("coproduct", "nc", "{1,2}{3}{4}", "--json")
        data = json.loads(out)
        assert code == 0
        assert {"coefficient": "2", "left": "{1,2}{3}", "right": "{1}"} in data

    def test_crossing_is_domain_error(self):
        code, _ = run("coproduct", "nc", "{1,3}{2,4}")
        assert code == 1


class TestMoebius:
    def test_nc_full_interval(self):
        code, out = run("moebius", "nc", "{1}{2}{3}{4}", "{1,2,3,4}")
        assert code == 0 and out == "-5\n"

    def test_set_full_interval(self):
        code, out = run("moebius", "set", "{1}{2}{3}{4}", "{1,2,3,4}")
        assert code == 0 and out == "-6\n"

    def test_not_comparable(self):
        code, _ = run("moebius", "set", "{1,2}{3}", "{1,3}{2}")
        assert code == 1


class TestTransform:
    def test_free_symbolic_golden(self):
        code, out = run("transform", "free", "--direction", "k2m",
                        "--symbolic", "--n", "4")
        assert code == 0 and out == golden("free_moments_symbolic.txt")
        assert out.strip().split("\n")[-1] == \
            "m_4 = k1^4 + 6*k1^2*k2 + 2*k2^2 + 4*k1*k3 + k4"

    def test_classical_symbolic_golden(self):
        code, out = run("transform", "classical", "--direction", "c2m",
                        "--symbolic", "--n", "5")
        assert code == 0 and out == golden("bell_polynomials_symbolic.txt")

    def test_numeric_round_trip_via_files(self, tmp_path):
        seq = {"values": ["1", "1/2", "-3", "2"]}
        f = tmp_path / "moments.json"
        f.write_text(json.dumps(seq))
        code, out = run("transform", "free", "--direction", "m2k",
                        "--in", str(f), "--json")
        assert code == 0
        k = json.loads(out)
        g = tmp_path / "cumulants.json"
        g.write_text(json.dumps(k))
        code, out = run("transform", "free", "--direction", "k2m",
                        "--in", str(g), "--json")
        assert code == 0
        assert json.loads(out)["values"] == ["1/2", "-3", "2"]

    def test_multivariate_table(self, tmp_path):
        table = {"alphabet": ["a", "b"],
                 "values": {"a": "1", "b": "2", "a.a": "3", "a.b": "4",
                            "b.a": "5", "b.b": "6"}}
        f = tmp_path / "table.json"
        f.write_text(json.dumps(table))
        code, out = run("transform", "free", "--direction", "multi-m2k",
                        "--in", str(f))
        assert code == 0
        lines = dict(line.split(" = ") for line in out.strip().split("\n"))
        assert lines["R[a]"] == "1"
        assert lines["R[a.b]"] == "2"   # 4 - 1*2

    def test_flavor_direction_mismatch(self):
        code, _ = run("transform", "free", "--direction", "c2m", "--symbolic",
                      "--n", "3")
        assert code == 1

    def test_missing_input_is_domain_error(self):
        code, _ = run("transform", "free", "--direction", "k2m", "--n", "3")
        assert code == 1


class TestSplitAndTree:
    def test_split_listing(self):
        code, out = run("split", "{1,4}{2,3}")
        assert code == 0
        lines = out.strip().split("\n")
        assert "{} | {1,4}{2,3}" in lines
        assert "{1,4}{2,3} | {}" in lines
        assert "{1,4} | {2,3}" in lines
        assert "{2,3} | {1,4}" not in lines  # inadmissible selection

    def test_tree_text(self):
        code, out = run("tree", "{1,4}{2,3}{5,6,7}")
        assert code == 0 and out == "((())())\n"

    def test_tree_coproduct_golden(self):
        code, out = run("tree", "{1,2}{3,4}{5,6}", "--coproduct")
        assert code == 0 and out == golden("tree_coproduct_crown.txt")
        code, out = run("tree", "{1,3}{2}{4,5}", "--coproduct")
        assert code == 0 and out == golden("tree_coproduct_nested.txt")


class TestVerify:
    def test_pass_suite(self):
        code, out = run("verify", "moebius", "--max-degree", "5")
        assert code == 0 and "PASS" in out

    def test_alias(self):
        code, out = run("verify", "coassoc", "--max-degree", "3")
        assert code == 0 and "coassociativity: PASS" in out

    def test_json_report(self):
        code, out = run("verify", "counting", "--max-degree", "6")
        assert code == 0
        code, out = run("verify", "counting", "--max-degree", "6", "--json")
        data = json.loads(out)
        assert data[0]["passed"] is True

    def test_unknown_suite(self):
        code, _ = run("verify", "bogus")
        assert code == 1

    def test_known_failure_surfaces_nonzero(self):
        # the hierarchy map forgets gap positions, so the tree transport
        # check has documented failures at n >= 5
        code, out = run("verify", "tree-consistency", "--max-degree", "5")
        assert code == 1 and "FAIL" in out
        code, out = run("verify", "tree-consistency", "--max-degree", "4")
        assert code == 0


class TestUsage:
    def test_unknown_command_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["bogus"])
        assert exc.value.code == 2

    def test_missing_required_flag_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "nc"])
        assert exc.value.code == 2

    def test_byte_identical_reruns(self):
        a = run("coproduct", "nc", "{1,2}{3}{4}")
        b = run("coproduct", "nc", "{1,2}{3}{4}")
        assert a == b
