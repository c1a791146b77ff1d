import json

import pytest

from sexticlab.cli import run

SCHEMA_KEYS = [
    "family",
    "params",
    "irreducible",
    "galois",
    "monogenic",
    "witness",
    "disc_sign",
    "disc_factors",
    "ms",
]


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDisc:
    def test_golden_first(self, capsys):
        code, out, _ = invoke(capsys, "disc", "x^6-6x^4+9x^2-3")
        assert code == 0
        assert "disc: 1259712" in out
        assert "2^6 * 3^9" in out

    def test_negative_disc(self, capsys):
        code, out, _ = invoke(capsys, "disc", "x^6+5x^4+6x^2+1")
        assert code == 0
        assert "disc: -153664" in out
        assert "-2^6 * 7^4" in out

    def test_coefficient_list_input(self, capsys):
        code, out, _ = invoke(capsys, "disc", "--", "-3,0,9,0,-6,0,1")
        assert code == 0
        assert "disc: 1259712" in out

    def test_parse_error_exits_2(self, capsys):
        code, _, err = invoke(capsys, "disc", "x^^2")
        assert code == 2
        assert "error" in err

    def test_low_degree_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "disc", "x-1")
        assert code == 2


class TestClassify:
    def test_c6(self, capsys):
        code, out, _ = invoke(capsys, "classify", "x^6+5x^4+6x^2+1")
        assert code == 0
        assert "galois: C6" in out
        assert "minus_c_is_square: False" in out
        assert "resolvent_disc_is_square: True" in out
        assert "aux_sextic_reducible: True" in out

    def test_a4(self, capsys):
        code, out, _ = invoke(capsys, "classify", "x^6+4x^4+x^2-1")
        assert code == 0
        assert "galois: A4" in out

    def test_other(self, capsys):
        code, out, _ = invoke(capsys, "classify", "x^6+2")
        assert code == 0
        assert "galois: Other" in out

    def test_reducible_exits_2(self, capsys):
        code, _, err = invoke(capsys, "classify", "x^6+2x^4+x^2-1")
        assert code == 2
        assert "reducible" in err

    def test_odd_coefficient_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "classify", "x^6+x^3+1")
        assert code == 2


class TestMonogenic:
    def test_generic_default(self, capsys):
        code, out, _ = invoke(capsys, "monogenic", "x^6-7x^4+14x^2-7")
        assert code == 0
        assert "status: Monogenic" in out

    def test_not_monogenic_witness(self, capsys):
        code, out, _ = invoke(capsys, "monogenic", "x^6+9x^4+14x^2+1")
        assert code == 0
        assert "status: NotMonogenic" in out
        assert "witness_prime: 5" in out

    def test_jly_with_cross_check(self, capsys):
        code, out, _ = invoke(
            capsys, "monogenic", "x^6-6x^4+9x^2-3", "--method", "jly", "--cross-check"
        )
        assert code == 0
        assert "method: jly" in out
        assert "cross_check: agree" in out

    def test_jkk_shape(self, capsys):
        code, out, _ = invoke(capsys, "monogenic", "x^6+9x^4+6x^2+1", "--method", "jkk")
        assert code == 0
        assert "status: Monogenic" in out

    def test_wrong_shape_exits_2(self, capsys):
        code, _, err = invoke(capsys, "monogenic", "x^6+x^4+1", "--method", "jly")
        assert code == 2
        assert "shape" in err

    def test_reducible_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "monogenic", "x^6+2x^4+x^2-1")
        assert code == 2


class TestScan:
    def test_schema_and_content(self, capsys):
        code, out, _ = invoke(capsys, "scan", "--family", "f3", "--min", "-2", "--max", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        for line in lines:
            rec = json.loads(line)
            assert list(rec.keys()) == SCHEMA_KEYS
        recs = [json.loads(line) for line in lines]
        assert [r["params"]["n"] for r in recs] == [-2, -1, 0, 1, 2]
        assert all(r["galois"] == "C6" for r in recs)
        verdicts = {r["params"]["n"]: r["monogenic"] for r in recs}
        assert verdicts == {
            -2: "Monogenic",
            -1: "Monogenic",
            0: "Monogenic",
            1: "Monogenic",
            2: "NotMonogenic",
        }

    def test_f1_grid_cells(self, capsys):
        code, out, _ = invoke(capsys, "scan", "--family", "f1", "--min", "-3", "--max", "3")
        assert code == 0
        recs = [json.loads(line) for line in out.strip().splitlines()]
        assert len(recs) == 49
        golden = [r for r in recs if r["params"] == {"a": -3, "b": -3}]
        assert golden[0]["galois"] == "C6"
        assert golden[0]["monogenic"] == "Monogenic"
        assert golden[0]["disc_sign"] == 1
        assert golden[0]["disc_factors"] == [[2, 6], [3, 9]]

    def test_jobs_deterministic_modulo_ms(self, capsys):
        code, out1, _ = invoke(capsys, "scan", "--family", "a4", "--min", "-5", "--max", "5")
        assert code == 0
        code, out2, _ = invoke(
            capsys, "scan", "--family", "a4", "--min", "-5", "--max", "5", "--jobs", "2"
        )
        assert code == 0

        def strip_ms(text):
            return [
                {k: v for k, v in json.loads(line).items() if k != "ms"}
                for line in text.strip().splitlines()
            ]

        assert strip_ms(out1) == strip_ms(out2)

    def test_bad_range_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "scan", "--family", "f3", "--min", "5", "--max", "1")
        assert code == 2

    def test_reducible_cells_have_null_verdicts(self, capsys):
        code, out, _ = invoke(capsys, "scan", "--family", "f1", "--min", "-1", "--max", "0")
        assert code == 0
        recs = [json.loads(line) for line in out.strip().splitlines()]
        red = [r for r in recs if not r["irreducible"]]
        assert red, "expected reducible cells in this window"
        assert all(r["galois"] is None and r["monogenic"] is None for r in red)


class TestHjms:
    def test_witness(self, capsys):
        code, out, _ = invoke(
            capsys, "hjms", "--A", "3", "--B", "2", "--C", "1", "--bound", "5"
        )
        assert code == 0
        assert "witness: m=1 n=2" in out
        assert "cofactors:" in out

    def test_none_reports_bound(self, capsys):
        code, out, _ = invoke(capsys, "hjms", "--A", "0", "--B", "1", "--C", "1")
        assert code == 0
        assert "witness: none (bound 40)" in out

    def test_reducible_g_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "hjms", "--A", "0", "--B", "0", "--C", "1")
        assert code == 2


class TestVerify:
    def test_small_range_passes(self, capsys):
        code, out, _ = invoke(capsys, "verify", "paper", "--range", "8")
        assert code == 0
        assert "overall: PASS" in out
        assert out.count("PASS") >= 9

    def test_seed_accepted_after_subcommand(self, capsys):
        code, out, _ = invoke(
            capsys, "scan", "--family", "f3", "--min", "0", "--max", "1", "--seed", "7"
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 2

    def test_budget_flags_after_subcommand(self, capsys):
        m = 1000003 * 1000033
        code, out, _ = invoke(
            capsys,
            "monogenic",
            f"x^2+{m * m}",
            "--trial-bound", "10000",
            "--rho-budget", "0",
        )
        assert code == 0
        assert "status: Unknown" in out
        assert "unfactored_cofactor:" in out

    def test_seed_flag_does_not_change_verdicts(self, capsys):
        _, out1, _ = invoke(capsys, "scan", "--family", "f3", "--min", "0", "--max", "3")
        _, out2, _ = invoke(
            capsys, "--seed", "12345", "scan", "--family", "f3", "--min", "0", "--max", "3"
        )

        def strip_ms(text):
            return [
                {k: v for k, v in json.loads(line).items() if k != "ms"}
                for line in text.strip().splitlines()
            ]

        assert strip_ms(out1) == strip_ms(out2)


class TestUsage:
    def test_no_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run([])
        assert exc.value.code == 2

    def test_unknown_family_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["scan", "--family", "nope", "--min", "0", "--max", "1"])
        assert exc.value.code == 2
