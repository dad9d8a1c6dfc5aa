import csv
import io
import json
import os
import subprocess
import sys

import pytest

from qpart.cli import main
from qpart.partitions import enumerate_D, parse_colored, parse_overpartition


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_process(*argv, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    proc = subprocess.run([sys.executable, "-m", "qpart", *argv],
                          capture_output=True, text=True, env=full_env)
    return proc.returncode, proc.stdout, proc.stderr


class TestCount:
    def test_family_r(self):
        code, out, _ = run("count", "--family", "R", "--n-max", "6")
        assert code == 0
        assert out.splitlines()[-1] == "6\t12"

    def test_family_r2_csv(self):
        code, out, _ = run("count", "--family", "R2", "--n-max", "10", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["n", "count"]
        assert [int(c) for _, c in rows[1:]] == [1, 0, 2, 2, 2, 4, 6, 8, 10, 14, 18]

    def test_family_d(self):
        code, out, _ = run("count", "--family", "D", "--k", "2", "--a", "2", "--n-max", "3")
        assert code == 0
        assert out.splitlines()[-1] == "3\t4"

    def test_family_c_json(self):
        code, out, _ = run("count", "--family", "C", "--k", "2", "--i", "1",
                           "--n-max", "5", "--format", "json")
        data = json.loads(out)
        assert data["rows"][3] == {"n": 3, "count": 3}

    def test_family_r3(self):
        _, out, _ = run("count", "--family", "R3", "--n-max", "3")
        assert out.splitlines()[-1] == "3\t3"

    @pytest.mark.parametrize("argv", [
        ("count", "--family", "X", "--n-max", "3"),
        ("count", "--family", "D", "--n-max", "3"),
        ("count", "--family", "D", "--k", "1", "--a", "2", "--n-max", "3"),
        ("count", "--family", "C", "--k", "2", "--n-max", "3"),
        ("count", "--family", "R"),
        ("count", "--family", "R", "--n-max", "-1"),
    ])
    def test_usage_errors(self, argv):
        assert run(*argv)[0] == 2

    def test_deterministic(self):
        assert run("count", "--family", "R", "--n-max", "40") == run(
            "count", "--family", "R", "--n-max", "40")


class TestVerify:
    def test_thm13_pass(self):
        code, out, _ = run("verify", "--identity", "thm13", "--order", "100")
        assert code == 0
        assert "pass" in out

    def test_funceq_json(self):
        code, out, _ = run("verify", "--identity", "funceq", "--m", "8", "--order", "30",
                           "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["status"] == "pass" and report["first_mismatch"] is None
        assert {"identity", "order", "status", "first_mismatch", "elapsed_ms"} <= set(report)

    def test_vacuous_warning(self):
        code, out, err = run("verify", "--identity", "thm13", "--order", "0")
        assert code == 0
        assert "vacuous" in err

    def test_csv_header(self):
        code, out, _ = run("verify", "--identity", "jtp", "--order", "50", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["identity", "order", "status", "mismatch_index", "lhs", "rhs"]
        assert len(rows) == 5 and all(r[2] == "pass" for r in rows[1:])

    @pytest.mark.parametrize("tag", ["thm32", "sumsides", "cd-equal"])
    def test_other_tags(self, tag):
        assert run("verify", "--identity", tag, "--order", "12")[0] == 0

    def test_failure_exit_code(self, monkeypatch):
        from qpart import identities

        def broken(order):
            return identities.verify_functional_equations(
                4, 12, r1=identities.P.build_xq_table(1, 4, 12).replace(1, 5, 99))

        monkeypatch.setattr(identities, "verify_thm13", broken)
        code, out, _ = run("verify", "--identity", "thm13", "--format", "csv")
        assert code == 1
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[1][2] == "fail" and rows[1][3] == "1:6"

    @pytest.mark.parametrize("argv", [
        ("verify", "--identity", "nope"),
        ("verify", "--identity", "funceq", "--m", "9", "--order", "5"),
        ("verify", "--identity", "cd-equal", "--k", "1", "--i", "2"),
        ("verify", "--identity", "thm13", "--order", "5000"),
    ])
    def test_usage_errors(self, argv):
        assert run(*argv)[0] == 2


class TestBijection:
    def test_empty(self):
        code, out, _ = run("bijection", "--n", "0")
        assert code == 0
        assert out == "empty\tempty\n"

    def test_six(self):
        _, out, _ = run("bijection", "--n", "6")
        assert len(out.splitlines()) == 12

    def test_three_images(self):
        _, out, _ = run("bijection", "--n", "3", "--ascii")
        images = {parse_overpartition(line.split("\t")[1]) for line in out.splitlines()}
        assert images == set(enumerate_D(2, 2, 3))
        assert "3~" in out

    def test_unicode_default(self):
        _, out, _ = run("bijection", "--n", "3")
        assert "3̅" in out
        for line in out.splitlines():
            parse_colored(line.split("\t")[0])

    def test_over_cap(self):
        assert run("bijection", "--n", "31")[0] == 2


class TestProcess:
    def test_exit_codes(self):
        assert run_process("count", "--family", "R", "--n-max", "6")[0] == 0
        assert run_process("count", "--family", "Q", "--n-max", "6")[0] == 2
        assert run_process("verify", "--identity", "thm13", "--order", "20")[0] == 0

    def test_env_cap(self):
        code, _, err = run_process("verify", "--identity", "thm13", "--order", "60",
                                   env={"QPART_MAX_ORDER": "50"})
        assert code == 2
        assert "cap" in err

    def test_pure_python_backend(self):
        code, out, _ = run_process("count", "--family", "R", "--n-max", "6",
                                   env={"QPART_PURE_PYTHON": "1"})
        assert code == 0 and out.splitlines()[-1] == "6\t12"
