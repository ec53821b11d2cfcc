import json
import subprocess
import sys

import pytest

from skewchar import Partition, SkewDiagram, render, render_labels, render_plain
from skewchar import cli
from skewchar.cli import (
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_STRUCTURAL,
    EXIT_TOO_LARGE,
    EXIT_UNEQUAL,
    EXIT_USAGE,
    EXIT_VERIFY,
    UsageError,
    parse_args,
    run,
)

from helpers import P, SD

EXAMPLE_GRID_A = (
    ":::::11111\n"
    ":::::12222\n"
    ":::::123\n"
    ":::::123\n"
    "11111123\n"
    "12222223\n"
    "12333\n"
    "12344\n"
)


class TestRender:
    def test_plain_goldens(self):
        assert render_plain(SD((2, 2), (1,))) == ":#\n##\n"
        assert render_plain(SD((3, 1), (1,))) == ":##\n#\n"

    def test_labels_golden(self):
        assert render_labels(SD((10, 10, 8, 8, 8, 8, 5, 5), (5, 5, 5, 5))) == EXAMPLE_GRID_A

    def test_legend_for_two_digit_labels(self):
        text = render_labels(SkewDiagram(Partition([10] * 10)))
        assert "a = 10" in text
        assert text.splitlines()[9].endswith("a")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            render(SD((1,)), "fancy")


class TestParse:
    def test_maxhook_example(self):
        cmd = parse_args(["maxhook", "8^2,7,4,3^2 / 4,3,2"])
        assert cmd.verb == "maxhook"
        assert cmd.diagrams[0] == SD((8, 8, 7, 4, 3, 3), (4, 3, 2))

    def test_schubert_box(self):
        cmd = parse_args(["schubert", "1", "1", "--box", "1,2"])
        assert cmd.partitions == [P(1), P(1)] and cmd.box == (1, 2)

    def test_bad_verb(self):
        with pytest.raises(UsageError):
            parse_args(["frobnicate", "1"])

    def test_bad_box(self):
        with pytest.raises(UsageError):
            parse_args(["schubert", "1", "1", "--box", "1;2"])

    def test_bad_token_is_usage(self):
        with pytest.raises(UsageError):
            parse_args(["decompose", "2,x"])

    def test_domain_error_is_not_usage(self):
        with pytest.raises(ValueError) as err:
            parse_args(["decompose", "2,2 / 3"])
        assert not isinstance(err.value, UsageError)
        assert "inner not contained in outer" in str(err.value)


class TestRun:
    def test_decompose_json(self):
        code, text = run(parse_args(["decompose", "2,2/1", "--json"]))
        assert code == EXIT_OK
        assert json.loads(text) == {
            "weight": 3,
            "terms": [{"partition": [2, 1], "mult": 1}],
        }

    def test_ribbons_output(self):
        code, text = run(parse_args(["ribbons", "10^2,8^4,5^2 / 5^4"]))
        assert code == EXIT_OK
        assert text.startswith(EXAMPLE_GRID_A)
        assert "pi_nw = 17,15,8,2" in text

    def test_ribbons_strip(self):
        code, text = run(parse_args(["ribbons", "8^2,7,4,3^2/4,3,2", "--strip", "1"]))
        assert code == EXIT_OK
        assert "pi_nw = 9,2" in text

    def test_maxhook_json_witnesses(self):
        code, text = run(parse_args(["maxhook", "8^2,7,4,3^2 / 4,3,2", "--json"]))
        assert code == EXIT_OK
        payload = json.loads(text)
        assert payload["hl"] == [13, 9, 2]
        assert payload["gamma"] == [8, 6, 3, 2, 1, 1]
        assert [w["mult"] for w in payload["witnesses"]] == [1, 1, 2, 2, 1, 1]
        assert payload["distinct"] == 6

    def test_maxhook_verify_ok(self):
        code, _ = run(parse_args(["maxhook", "8^2,7,4,3^2 / 4,3,2", "--verify"]))
        assert code == EXIT_OK

    def test_verify_guard(self):
        code, text = run(parse_args(["maxhook", "10^2,8^4,5^2 / 5^4", "--verify"]))
        assert code == EXIT_TOO_LARGE
        code, _ = run(
            parse_args(["maxhook", "10^2,8^4,5^2 / 5^4", "--verify", "--max-boxes", "50"])
        )
        assert code == EXIT_OK

    def test_verify_mismatch_exit(self, monkeypatch):
        from skewchar import extremal

        cmd = parse_args(["maxhook", "2,1", "--verify"])
        broken = extremal.OracleExtremes(
            decomposition=None,
            hl=P(1),
            max_hl_terms=(),
            min_durfee=0,
            max_durfee=0,
            lex_min=P(1),
            lex_max=P(1),
        )
        monkeypatch.setattr(cli, "oracle_extremes", lambda a: broken)
        code, text = run(cmd)
        assert code == EXIT_VERIFY
        assert "verification failed" in text

    def test_durfee_product_golden(self):
        code, text = run(parse_args(["durfee-product", "5^2,3^2,2", "4,3,1^2", "--json"]))
        assert code == EXIT_OK
        payload = json.loads(text)
        assert payload["m"] == 9 and payload["max_durfee"] == 4
        assert payload["witnesses"] == [
            {"nu_inverse": [6, 6, 6, 5, 4], "mult": 1},
            {"nu_inverse": [6, 6, 5, 5, 4, 1], "mult": 3},
            {"nu_inverse": [6, 5, 5, 5, 4, 2], "mult": 3},
            {"nu_inverse": [5, 5, 5, 5, 4, 3], "mult": 1},
        ]
        assert payload["exhaustive"] is False

    def test_durfee_special_verify(self):
        code, _ = run(parse_args(["durfee", "3,3,2/1,1", "--verify"]))
        assert code == EXIT_OK

    def test_durfee_exhaustive(self):
        code, text = run(parse_args(["durfee", "3,3,2/1,1", "--exhaustive", "--json"]))
        assert code == EXIT_OK
        payload = json.loads(text)
        assert payload["exhaustive"] is True
        assert all(w["mult"] >= 1 for w in payload["witnesses"])

    def test_maxhook_strip(self):
        code, text = run(parse_args(["maxhook", "8^2,7,4,3^2/4,3,2", "--strip", "1", "--json"]))
        assert code == EXIT_OK
        assert json.loads(text)["hl"] == [9, 2]

    def test_durfee_precondition(self):
        code, text = run(parse_args(["durfee", "3,3/1"]))
        assert code == EXIT_PRECONDITION
        assert "outer width" in text

    def test_eqcheck_exit_codes(self):
        a, b = "10^2,8^4,5^2 / 5^4", "10^4,8^2,3^2 / 5^4"
        code, text = run(parse_args(["eqcheck", a, b]))
        assert code == EXIT_OK and "structural: pass" in text
        code, text = run(parse_args(["eqcheck", a, b, "--full"]))
        assert code == EXIT_UNEQUAL
        assert "first discrepancy: [10^2,8,7,4,3]  A 0  B 1" in text
        code, text = run(parse_args(["eqcheck", "2", "1,1"]))
        assert code == EXIT_STRUCTURAL
        code, text = run(parse_args(["eqcheck", "2,1", "2,1", "--full"]))
        assert code == EXIT_OK and "full: equal" in text

    def test_render_modes(self):
        code, text = run(parse_args(["render", "3,1/1"]))
        assert (code, text) == (EXIT_OK, ":##\n#\n")
        code, text = run(parse_args(["render", "2,2/1", "--labels"]))
        assert (code, text) == (EXIT_OK, ":1\n11\n")

    def test_product_and_schubert(self):
        code, text = run(parse_args(["product", "1", "2,2", "--verify"]))
        assert code == EXIT_OK
        assert "[3,2]  1" in text and "[2^2,1]  1" in text
        code, text = run(parse_args(["schubert", "2", "2", "--box", "2,2", "--json"]))
        assert code == EXIT_OK
        assert json.loads(text)["terms"] == [{"partition": [2, 2], "mult": 1}]

    def test_byte_determinism(self):
        for argv in (
            ["decompose", "4^2,2^2,1^2 / 1^4", "--json"],
            ["maxhook", "8^2,7,4,3^2/4,3,2"],
            ["eqcheck", "10^2,8^4,5^2 / 5^4", "10^4,8^2,3^2 / 5^4", "--full", "--json"],
        ):
            first = run(parse_args(argv))
            second = run(parse_args(argv))
            assert first == second


class TestMainEntry:
    def test_subprocess_smoke(self):
        proc = subprocess.run(
            [sys.executable, "-m", "skewchar", "decompose", "2,2/1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "[2,1]  1" in proc.stdout

    def test_usage_exit(self):
        proc = subprocess.run(
            [sys.executable, "-m", "skewchar", "nonsense"], capture_output=True, text=True
        )
        assert proc.returncode == EXIT_USAGE

    def test_precondition_exit(self):
        proc = subprocess.run(
            [sys.executable, "-m", "skewchar", "decompose", "2,2 / 3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == EXIT_PRECONDITION
        assert "inner not contained in outer" in proc.stderr
