import json
from fractions import Fraction
from pathlib import Path

import pytest

from cyclohecke.cli import (
    UsageError,
    build_domain_and_values,
    main,
    parse_scalar,
)

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "testdata" / "tables"


class TestScalarLiterals:
    def test_rationals(self):
        assert parse_scalar("3/2") == ("rational", Fraction(3, 2))
        assert parse_scalar("-1") == ("rational", Fraction(-1))
        assert parse_scalar("2") == ("rational", Fraction(2))

    def test_zeta(self):
        assert parse_scalar("zeta_6^2") == ("zeta", 6, 2)
        assert parse_scalar("zeta_3") == ("zeta", 3, 1)

    def test_generic(self):
        assert parse_scalar("generic") == ("generic",)

    def test_malformed(self):
        with pytest.raises(UsageError):
            parse_scalar("q+1")
        with pytest.raises(UsageError):
            parse_scalar("1/0")

    def test_mixed_orders_rejected(self):
        with pytest.raises(UsageError):
            build_domain_and_values(("zeta", 3, 1), [("zeta", 4, 1)])

    def test_rationals_embed_alongside_zeta(self):
        domain, q_val, Q_vals = build_domain_and_values(
            ("zeta", 3, 1), [("rational", Fraction(1))])
        assert domain.order == 3
        assert Q_vals == [domain.one]


class TestCommands:
    def test_verify_main_single_pair(self, capsys):
        code = main(["verify-main", "--n", "3", "--r", "2"])
        out = capsys.readouterr().out
        assert code == 0
        report = json.loads(out.strip())
        assert report["status"] == "pass"
        assert report["params"]["rows"] == 10

    def test_blocks_command(self, capsys):
        code = main(["blocks", "--n", "3", "--r", "1", "--ell", "2",
                     "--charge", "0"])
        out = capsys.readouterr().out
        assert code == 0
        report = json.loads(out.strip())
        assert report["params"]["blocks"] == 2

    def test_center_command(self, capsys):
        code = main(["center", "--n", "2", "--r", "1",
                     "--q", "-1", "--Q", "1"])
        out = capsys.readouterr().out
        assert code == 0
        report = json.loads(out.strip())
        assert report["params"]["results"][0]["dim_center"] == 2

    def test_q1_gap_command(self, capsys):
        code = main(["q1-gap", "--n", "2", "--r", "2", "--Q", "2,5"])
        out = capsys.readouterr().out
        assert code == 0
        report = json.loads(out.strip())
        assert report["params"]["invariant_dim"] == 3

    def test_hilb_command(self, capsys):
        code = main(["hilb", "--n", "2", "--q-values", "2,-1"])
        assert code == 0
        report = json.loads(capsys.readouterr().out.strip())
        assert report["status"] == "pass"

    def test_dims_command(self, capsys):
        code = main(["dims", "--n", "2", "--r", "2"])
        assert code == 0
        report = json.loads(capsys.readouterr().out.strip())
        assert report["params"]["expected"] == 8
        assert report["params"]["multipartitions"] == 5

    def test_table_csv_matches_golden(self, capsys):
        code = main(["--format", "csv", "table", "--n", "2", "--r", "2"])
        out = capsys.readouterr().out
        assert code == 0
        golden = (GOLDEN_DIR / "restriction-n2-r2.csv").read_text()
        assert out == golden

    def test_table_to_file(self, tmp_path, capsys):
        target = tmp_path / "table.csv"
        code = main(["--format", "csv", "table", "--n", "1", "--r", "1",
                     "--out", str(target)])
        assert code == 0
        assert target.read_text().startswith("multipartition,e1,det_inv")

    def test_pairing_command(self, capsys):
        code = main(["--samples", "1", "--trials", "20",
                     "pairing", "--n", "2", "--r", "1"])
        assert code == 0


class TestExitCodes:
    def test_missing_command_is_usage_error(self, capsys):
        assert main([]) == 2

    def test_unknown_command_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_literal_is_usage_error(self, capsys):
        code = main(["center", "--n", "2", "--r", "1",
                     "--q", "nope", "--Q", "1"])
        assert code == 2

    def test_bad_charge_length(self, capsys):
        code = main(["blocks", "--n", "2", "--r", "2", "--ell", "2",
                     "--charge", "0"])
        assert code == 2

    def test_ell_below_two(self, capsys):
        code = main(["blocks", "--n", "2", "--r", "1", "--ell", "1",
                     "--charge", "0"])
        assert code == 2

    def test_hilb_rejects_q_one(self, capsys):
        code = main(["hilb", "--n", "2", "--q-values", "1"])
        assert code == 2


class TestDeterminism:
    def test_identical_invocations_identical_bytes(self, capsys):
        args = ["--seed", "7", "--samples", "1", "--trials", "50",
                "pairing", "--n", "2", "--r", "1"]
        main(args)
        first = capsys.readouterr().out
        main(args)
        second = capsys.readouterr().out
        assert first == second

    def test_no_cache_reproduces_cached_results(self, tmp_path, capsys):
        args = ["blocks", "--n", "2", "--r", "1", "--ell", "2",
                "--charge", "0"]
        main(["--cache-dir", str(tmp_path)] + args)
        cached = capsys.readouterr().out
        assert list(tmp_path.glob("*.json"))
        main(["--no-cache"] + args)
        rebuilt = capsys.readouterr().out
        assert cached == rebuilt

    def test_env_var_cache_dir(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("CYCLOHECKE_CACHE", str(tmp_path))
        main(["center", "--n", "2", "--r", "1", "--q", "2", "--Q", "1"])
        capsys.readouterr()
        assert list(tmp_path.glob("ak-n2-r1-*.json"))

    def test_table_format_output(self, capsys):
        code = main(["--format", "table", "verify-main", "--n", "2",
                     "--r", "1"])
        out = capsys.readouterr().out
        assert code == 0
        assert "[PASS]" in out
        assert "1 passed, 0 failed, 0 skipped" in out

    def test_parallel_jobs_match_sequential(self, capsys):
        main(["verify-main", "--budget", "24"])
        sequential = capsys.readouterr().out
        code = main(["--jobs", "2", "verify-main", "--budget", "24"])
        parallel = capsys.readouterr().out
        assert code == 0
        assert parallel == sequential
